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

#include "owltext/planner.hpp"

#include <algorithm>
#include <set>

namespace owltext {

namespace {

constexpr int kUnranked = 1 << 20;
constexpr int kFrontRank = -1;  // domain-independent default position

struct SortKey {
  int section_tier;  // 0 ordered, 1 declared-unordered, 2 implicit
  int section_rank;
  int property_rank;
  size_t input_index;

  bool operator<(const SortKey& other) const {
    if (section_tier != other.section_tier) return section_tier < other.section_tier;
    if (section_rank != other.section_rank) return section_rank < other.section_rank;
    if (property_rank != other.property_rank) {
      return property_rank < other.property_rank;
    }
    return input_index < other.input_index;
  }
};

std::string first_section(const SectionConfig& config) {
  if (config.sections.empty()) return "";
  std::string best;
  SortKey best_key{3, 0, 0, 0};
  for (const Section& section : config.sections) {
    SortKey key{1, config.section_declaration_index(section.name), 0, 0};
    if (auto rank = config.section_rank(section.name)) key = {0, *rank, 0, 0};
    if (best.empty() || key < best_key) {
      best = section.name;
      best_key = key;
    }
  }
  return best;
}

struct Placed {
  std::string section;
  SortKey key;
};

Placed place(const Message& message, const SectionConfig& config,
             const std::string& front_section, size_t index) {
  const PredicateSpec& predicate = message.first().predicate;
  std::string scope = predicate.scope_key();
  auto section = config.section_of(scope);
  std::string name;
  int property_rank = kUnranked;
  if (section) {
    name = *section;
    if (auto rank = config.property_rank(name, scope)) property_rank = *rank;
  } else if (predicate.is_builtin() ||
             (predicate.is_modified() &&
              predicate.inner == PredicateSpec::Inner::Builtin)) {
    // Unassigned domain-independent predicates lead the first section.
    name = front_section;
    property_rank = kFrontRank;
  } else {
    name = "";
    SortKey key{2, 0, kUnranked, index};
    return {name, key};
  }
  SortKey key{1, config.section_declaration_index(name), property_rank, index};
  if (auto rank = config.section_rank(name)) {
    key.section_tier = 0;
    key.section_rank = *rank;
  }
  if (name.empty()) key = SortKey{2, 0, property_rank, index};
  return {name, key};
}

}  // namespace

std::vector<OrderedMessage> order_single_target(
    const std::vector<Message>& messages, const SectionConfig& config) {
  std::string front = first_section(config);
  struct Item {
    Placed placed;
    const Message* message;
  };
  std::vector<Item> items;
  items.reserve(messages.size());
  for (size_t i = 0; i < messages.size(); ++i) {
    items.push_back({place(messages[i], config, front, i), &messages[i]});
  }
  std::stable_sort(items.begin(), items.end(),
                   [](const Item& a, const Item& b) {
                     return a.placed.key < b.placed.key;
                   });
  std::vector<OrderedMessage> out;
  out.reserve(items.size());
  for (const Item& item : items) {
    out.push_back({*item.message, item.placed.section, false});
  }
  return out;
}

std::vector<OrderedMessage> order_messages(const FactPlan& plan,
                                           const SectionConfig& config,
                                           const PlannerOptions& options) {
  std::vector<OrderedMessage> primary;
  std::vector<std::vector<OrderedMessage>> groups(plan.groups.size());
  if (options.ordering_enabled) {
    primary = order_single_target(plan.primary, config);
    for (size_t g = 0; g < plan.groups.size(); ++g) {
      groups[g] = order_single_target(plan.groups[g].messages, config);
    }
  } else {
    for (const Message& m : plan.primary) primary.push_back({m, "", false});
    for (size_t g = 0; g < plan.groups.size(); ++g) {
      for (const Message& m : plan.groups[g].messages) {
        groups[g].push_back({m, "", false});
      }
    }
  }

  // Entities mentioned by a message's fillers, in filler order.
  auto mentioned = [](const Message& message) {
    std::vector<Iri> out;
    for (const MessageTriple& triple : message.triples) {
      const Filler& filler = triple.filler;
      if (filler.kind == Filler::Kind::Individual ||
          filler.kind == Filler::Kind::Class) {
        out.push_back(filler.entity);
      } else if (filler.is_compound()) {
        for (const Filler& member : filler.members) {
          if (member.kind == Filler::Kind::Individual ||
              member.kind == Filler::Kind::Class) {
            out.push_back(member.entity);
          }
        }
      }
    }
    return out;
  };

  std::vector<OrderedMessage> out;
  std::set<size_t> spliced;
  for (const OrderedMessage& om : primary) {
    out.push_back(om);
    bool completed_group = false;
    for (const Iri& entity : mentioned(om.message)) {
      for (size_t g = 0; g < plan.groups.size(); ++g) {
        if (spliced.count(g) > 0 || plan.groups[g].entity != entity) continue;
        spliced.insert(g);
        for (OrderedMessage gm : groups[g]) {
          gm.second_level = true;
          out.push_back(std::move(gm));
        }
        completed_group = true;
      }
    }
    if (completed_group && options.stop_after_first_group) break;
  }
  return out;
}

}  // namespace owltext
