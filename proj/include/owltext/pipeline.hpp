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
// The full generation pipeline for one target: retrieve, convert, merge,
// select, order, lexicalize, aggregate, resolve references, realize.

#ifndef OWLTEXT_PIPELINE_HPP_
#define OWLTEXT_PIPELINE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "owltext/realizer.hpp"
#include "owltext/resources.hpp"
#include "owltext/selection.hpp"

namespace owltext {

struct PipelineOptions {
  std::string language = "en";
  std::string user_type = "default";
  int distance = 0;  // 0: take the resource parameter
  OutputFormat format = OutputFormat::Plain;
  // Ablation switches.
  bool no_interest = false;
  bool no_refexpr = false;
  bool no_nlnames = false;
  bool no_aggregation = false;
  bool no_sentence_plans = false;
  bool no_ordering = false;
  bool stop_after_first_group = false;
  bool dump_triples = false;  // replaces the text with the fact-plan dump
};

struct PipelineResult {
  std::string text;
  std::vector<std::string> conveyed;  // message keys actually rendered
  std::vector<std::string> warnings;
};

// Resolves a prefixed or absolute IRI against the model's prefix table.
Iri resolve_entity(const OntologyModel& model, const std::string& text);

PipelineResult describe(const OntologyModel& model, const ResourceSet& resources,
                        const std::string& target, const PipelineOptions& options,
                        const UserModel* user_model = nullptr);

}  // namespace owltext

#endif  // OWLTEXT_PIPELINE_HPP_
