// Copyright 2026 The owltext Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "owltext/selection.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace owltext {

UserModel parse_user_model(const std::string& text, const std::string& user_id) {
  UserModel model;
  model.user_id = user_id;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos) continue;
    int count = std::atoi(line.substr(0, tab).c_str());
    if (count > 0) model.counts[line.substr(tab + 1)] = count;
  }
  return model;
}

std::string serialize_user_model(const UserModel& model) {
  std::ostringstream out;
  for (const auto& [key, count] : model.counts) {
    out << count << '\t' << key << '\n';
  }
  return out.str();
}

UserModel load_user_model(const std::string& path, const std::string& user_id) {
  std::ifstream in(path);
  if (!in.good()) {
    UserModel model;
    model.user_id = user_id;
    return model;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_user_model(buffer.str(), user_id);
}

void save_user_model(const UserModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out.good()) {
    throw GenerationError("cannot write user model to " + path);
  }
  out << serialize_user_model(model);
  if (!out.good()) {
    throw GenerationError("failed writing user model to " + path);
  }
}

void record_conveyed(UserModel* user_model, const std::vector<std::string>& keys) {
  for (const std::string& key : keys) ++user_model->counts[key];
}

namespace {

// Scope match ranks, lower is more specific. Class scopes rank by the class's
// position in the subject's breadth-first specificity order.
constexpr int kEntityRank = -2;
constexpr int kPropertyRank = 1 << 20;

std::optional<int> match_rank(const InterestAssignment& assignment,
                              const MessageTriple& triple,
                              const OntologyModel& model,
                              const std::string& user_type) {
  if (!assignment.user_type.empty() && assignment.user_type != user_type) {
    return std::nullopt;
  }
  if (assignment.property != triple.predicate.scope_key()) return std::nullopt;
  if (!assignment.entity.empty()) {
    if (assignment.entity != triple.subject.value) return std::nullopt;
    return kEntityRank;
  }
  if (!assignment.cls.empty()) {
    std::vector<Iri> order = model.specificity_order(triple.subject);
    for (size_t i = 0; i < order.size(); ++i) {
      if (order[i].value == assignment.cls) return static_cast<int>(i);
    }
    return std::nullopt;
  }
  return kPropertyRank;
}

ResolvedInterest resolve_message_interest(
    const std::vector<InterestAssignment>& assignments, const Message& message,
    const OntologyModel& model, const std::string& user_type,
    const SelectionConfig& config) {
  return resolve_interest(assignments, message.first(), model, user_type, config);
}

}  // namespace

ResolvedInterest resolve_interest(
    const std::vector<InterestAssignment>& assignments,
    const MessageTriple& triple, const OntologyModel& model,
    const std::string& user_type, const SelectionConfig& config) {
  const InterestAssignment* best = nullptr;
  int best_rank = 0;
  for (const InterestAssignment& assignment : assignments) {
    std::optional<int> rank = match_rank(assignment, triple, model, user_type);
    if (!rank) continue;
    if (best == nullptr || *rank < best_rank) {
      best = &assignment;
      best_rank = *rank;
    }
  }
  ResolvedInterest resolved;
  resolved.score = best ? best->score : config.default_score;
  resolved.threshold =
      best && best->threshold ? best->threshold : config.default_threshold;
  return resolved;
}

FactPlan select_content(const FactPlan& plan,
                        const std::vector<InterestAssignment>& assignments,
                        const UserModel& user_model, const SelectionConfig& config,
                        const OntologyModel& model) {
  struct Candidate {
    const Message* message;
    int group = -1;  // -1: primary
    int index;       // global position, for stable ties
    int score;
    bool selected = false;
  };
  std::vector<Candidate> candidates;
  int position = 0;
  auto admit = [&](const Message& message, int group) {
    ResolvedInterest interest = resolve_message_interest(
        assignments, message, model, config.user_type, config);
    ++position;
    if (interest.score <= 0) return;  // zero score blocks the triple
    if (interest.threshold &&
        user_model.count(message.key()) >= *interest.threshold) {
      return;  // assimilated
    }
    candidates.push_back({&message, group, position, interest.score});
  };
  for (const Message& message : plan.primary) admit(message, -1);
  for (size_t g = 0; g < plan.groups.size(); ++g) {
    for (const Message& message : plan.groups[g].messages) {
      admit(message, static_cast<int>(g));
    }
  }

  // Greedy: repeatedly take the highest-scored eligible candidate. A
  // second-level message is eligible once a selected primary message
  // introduces its entity.
  std::vector<const Message*> selected_primary;
  auto introduced = [&](const Iri& entity) {
    return std::any_of(selected_primary.begin(), selected_primary.end(),
                       [&](const Message* m) { return m->filler_contains(entity); });
  };
  int remaining = config.max_messages_per_page;
  std::vector<bool> taken(candidates.size(), false);
  while (remaining > 0) {
    int best = -1;
    for (size_t i = 0; i < candidates.size(); ++i) {
      if (taken[i]) continue;
      const Candidate& c = candidates[i];
      if (c.group >= 0 && !introduced(plan.groups[c.group].entity)) continue;
      if (best < 0 || c.score > candidates[best].score ||
          (c.score == candidates[best].score && c.index < candidates[best].index)) {
        best = static_cast<int>(i);
      }
    }
    if (best < 0) break;
    taken[best] = true;
    candidates[best].selected = true;
    if (candidates[best].group < 0) {
      selected_primary.push_back(candidates[best].message);
    }
    --remaining;
  }

  FactPlan out;
  out.target = plan.target;
  out.target_is_class = plan.target_is_class;
  for (const Message& message : plan.primary) {
    for (const Candidate& c : candidates) {
      if (c.message == &message && c.selected) {
        out.primary.push_back(message);
        break;
      }
    }
  }
  for (size_t g = 0; g < plan.groups.size(); ++g) {
    FactPlan::Group group;
    group.entity = plan.groups[g].entity;
    for (const Message& message : plan.groups[g].messages) {
      for (const Candidate& c : candidates) {
        if (c.message == &message && c.selected) {
          group.messages.push_back(message);
          break;
        }
      }
    }
    if (!group.messages.empty()) out.groups.push_back(std::move(group));
  }
  return out;
}

}  // namespace owltext
