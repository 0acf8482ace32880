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
//
// Content selection: interest scores resolved at three scope levels
// (entity+property > class+property > property), per-user assimilation
// tracking, and the page-cap selection over a retrieved fact plan.

#ifndef OWLTEXT_SELECTION_HPP_
#define OWLTEXT_SELECTION_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "owltext/resources.hpp"
#include "owltext/triples.hpp"

namespace owltext {

// Per-user counts of conveyed message triples, keyed by the canonical
// <S, P, O> text of each message.
struct UserModel {
  std::string user_id;
  std::map<std::string, int> counts;

  int count(const std::string& key) const {
    auto it = counts.find(key);
    return it == counts.end() ? 0 : it->second;
  }
};

UserModel load_user_model(const std::string& path, const std::string& user_id);
void save_user_model(const UserModel& model, const std::string& path);
std::string serialize_user_model(const UserModel& model);
UserModel parse_user_model(const std::string& text, const std::string& user_id);

struct SelectionConfig {
  std::string user_type = "default";
  int max_messages_per_page = 50;
  int default_score = 1;
  std::optional<int> default_threshold;  // absent: never assimilated
};

struct ResolvedInterest {
  int score = 1;
  std::optional<int> threshold;
};

// Most specific matching scope wins: entity+property beats class+property
// beats property; among class scopes the class closest to the subject in the
// told hierarchy wins. Assignments for other user types are skipped
// (assignments with an empty user type apply to everyone).
ResolvedInterest resolve_interest(const std::vector<InterestAssignment>& assignments,
                                  const MessageTriple& triple,
                                  const OntologyModel& model,
                                  const std::string& user_type,
                                  const SelectionConfig& config);

// Drops zero-score and assimilated messages, keeps second-level messages only
// while some selected primary message introduces their entity, and keeps at
// most max_messages_per_page messages by decreasing score (stable by original
// position). A disjunctive message counts as one.
FactPlan select_content(const FactPlan& plan,
                        const std::vector<InterestAssignment>& assignments,
                        const UserModel& user_model, const SelectionConfig& config,
                        const OntologyModel& model);

void record_conveyed(UserModel* user_model, const std::vector<std::string>& keys);

}  // namespace owltext

#endif  // OWLTEXT_SELECTION_HPP_
