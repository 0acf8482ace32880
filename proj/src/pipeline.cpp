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

#include "owltext/pipeline.hpp"

#include "owltext/aggregator.hpp"
#include "owltext/lexicalizer.hpp"
#include "owltext/planner.hpp"
#include "owltext/refgen.hpp"
#include "owltext/triples.hpp"

namespace owltext {

Iri resolve_entity(const OntologyModel& model, const std::string& text) {
  std::string spec = text;
  if (!spec.empty() && spec.front() == '<' && spec.back() == '>') {
    spec = spec.substr(1, spec.size() - 2);
    return Iri{spec, text};
  }
  if (spec.find("://") != std::string::npos || spec.rfind("urn:", 0) == 0) {
    return Iri{spec, spec};
  }
  size_t colon = spec.find(':');
  if (colon == std::string::npos) {
    throw GenerationError("cannot resolve entity reference '" + text + "'");
  }
  std::string prefix = spec.substr(0, colon);
  std::string local = spec.substr(colon + 1);
  for (const auto& [name, expansion] : model.prefixes()) {
    if (name == prefix) return Iri{expansion + local, spec};
  }
  throw GenerationError("unknown prefix '" + prefix + ":' in target '" + text +
                        "'");
}

PipelineResult describe(const OntologyModel& model, const ResourceSet& resources,
                        const std::string& target, const PipelineOptions& options,
                        const UserModel* user_model) {
  Iri entity = resolve_entity(model, target);
  if (!model.is_known(entity)) {
    throw GenerationError("unknown target " + target);
  }
  bool target_is_class = model.is_class(entity) && !model.is_individual(entity);

  // An explicit distance-2 request for a class target is an error; a global
  // resource default quietly degrades to 1, since second-level targets exist
  // only for individuals.
  int distance = options.distance;
  if (distance == 0) {
    distance = resources.params.max_fact_distance;
    if (target_is_class) distance = std::min(distance, 1);
  }

  FactPlan plan = merge_fact_plan(
      retrieve_messages(model, entity, target_is_class, distance));

  SelectionConfig config;
  config.user_type = options.user_type;
  config.max_messages_per_page = resources.params.page_cap(options.user_type);
  config.default_score = resources.params.default_interest_score;
  config.default_threshold = resources.params.default_assimilation_threshold;
  UserModel empty_model;
  const UserModel& seen = user_model ? *user_model : empty_model;
  if (options.no_interest) {
    // Truncation still applies; scoring and assimilation do not.
    SelectionConfig plain = config;
    plain.default_score = 1;
    plain.default_threshold.reset();
    plan = select_content(plan, {}, empty_model, plain, model);
  } else {
    plan = select_content(plan, resources.interest, seen, config, model);
  }

  PlannerOptions planner_options;
  planner_options.ordering_enabled = !options.no_ordering;
  planner_options.stop_after_first_group = options.stop_after_first_group;
  std::vector<OrderedMessage> ordered =
      order_messages(plan, resources.sections, planner_options);

  PipelineResult result;
  if (options.dump_triples) {
    for (const OrderedMessage& om : ordered) result.text += om.message.key() + "\n";
    return result;
  }

  LexContext lex;
  lex.resources = &resources;
  lex.model = &model;
  lex.language = options.language;
  lex.user_type = options.user_type;
  lex.use_authored_plans = !options.no_sentence_plans;
  lex.use_nl_names = !options.no_nlnames;

  std::vector<SentenceSpec> sentences;
  sentences.reserve(ordered.size());
  for (const OrderedMessage& om : ordered) {
    SentenceSpec spec = instantiate(om.message, lex);
    spec.section = om.section;
    spec.second_level = om.second_level;
    sentences.push_back(std::move(spec));
  }

  if (!options.no_aggregation) {
    AggregationContext aggregation;
    aggregation.resources = &resources;
    aggregation.language = options.language;
    aggregation.max_messages_per_sentence =
        resources.params.sentence_cap(options.user_type);
    sentences = aggregate(std::move(sentences), aggregation);
  }

  RefgenContext refgen;
  refgen.lex = lex;
  refgen.primary_target = entity;
  refgen.refexpr_enabled = !options.no_refexpr;
  refgen.warnings = &result.warnings;
  resolve_references(&sentences, refgen);

  RealizerContext realizer;
  realizer.params = &resources.params;
  realizer.language = options.language;
  RenderOptions render_options;
  render_options.format = options.format;
  result.text = render_text(sentences, realizer, render_options,
                            resources.sections);
  for (const SentenceSpec& spec : sentences) {
    for (const std::string& key : spec.source_keys) {
      result.conveyed.push_back(key);
    }
  }
  return result;
}

}  // namespace owltext
