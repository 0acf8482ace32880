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
// Text planning: group message triples into topical sections, order sections
// and the properties inside them, then splice each second-level group
// immediately after the first primary message that introduces its entity.

#ifndef OWLTEXT_PLANNER_HPP_
#define OWLTEXT_PLANNER_HPP_

#include <string>
#include <vector>

#include "owltext/resources.hpp"
#include "owltext/triples.hpp"

namespace owltext {

struct OrderedMessage {
  Message message;
  std::string section;  // empty: the implicit unassigned section
  bool second_level = false;
};

struct PlannerOptions {
  bool ordering_enabled = true;
  // Ends the plan right after the first completed second-level group and
  // leaves the remaining messages for a later request.
  bool stop_after_first_group = false;
};

// Orders messages that share one subject by (section, property rank, input
// position). Domain-independent predicates without an explicit section
// assignment go to the front of the first section.
std::vector<OrderedMessage> order_single_target(
    const std::vector<Message>& messages, const SectionConfig& config);

std::vector<OrderedMessage> order_messages(const FactPlan& plan,
                                           const SectionConfig& config,
                                           const PlannerOptions& options = {});

}  // namespace owltext

#endif  // OWLTEXT_PLANNER_HPP_
