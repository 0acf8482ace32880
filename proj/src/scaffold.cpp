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

#include "owltext/scaffold.hpp"

#include "owltext/model.hpp"

namespace owltext {

namespace {

std::string seed_text(const OntologyModel& model, const Iri& entity,
                      const std::string& language) {
  auto label = model.lookup_label(entity, language);
  if (label) return *label;
  return tokenize_identifier_text(entity.local_name());
}

void add_entity_stub(ResourceSet* set, const OntologyModel& model,
                     const Iri& entity, const std::string& language) {
  std::string local = entity.local_name();
  LexiconEntry lexeme;
  lexeme.id = "auto_lex_" + local;
  lexeme.pos = LexiconEntry::Pos::Noun;
  std::string text = seed_text(model, entity, language);
  lexeme.forms[language]["sg"] = text;
  lexeme.forms[language]["pl"] = text + "s";
  set->lexicon.push_back(std::move(lexeme));

  NlName name;
  name.id = "auto_name_" + local;
  name.entity = entity.value;
  name.language = language;
  NameSlot head;
  head.kind = NameSlot::Kind::Head;
  head.lexeme = "auto_lex_" + local;
  head.pos = LexiconEntry::Pos::Noun;
  name.slots.push_back(std::move(head));
  set->names.push_back(std::move(name));
}

void add_property_stub(ResourceSet* set, const OntologyModel& model,
                       const Iri& property, const std::string& language) {
  SentencePlan plan;
  plan.id = "auto_plan_" + property.local_name();
  plan.property = property.value;
  plan.language = language;
  PlanSlot owner;
  owner.kind = PlanSlot::Kind::Owner;
  owner.grammatical_case = "nom";
  plan.slots.push_back(std::move(owner));
  PlanSlot text;
  text.kind = PlanSlot::Kind::Text;
  text.text = seed_text(model, property, language);
  plan.slots.push_back(std::move(text));
  PlanSlot filler;
  filler.kind = PlanSlot::Kind::Filler;
  filler.grammatical_case = "acc";
  plan.slots.push_back(std::move(filler));
  set->plans.push_back(std::move(plan));
}

}  // namespace

ResourceSet scaffold_resources(const OntologyModel& model,
                               const std::string& language) {
  ResourceSet set;
  for (const auto& [name, expansion] : model.prefixes()) {
    set.prefixes[name] = expansion;
  }
  for (const Iri& cls : model.all_classes()) {
    add_entity_stub(&set, model, cls, language);
  }
  for (const Iri& individual : model.all_individuals()) {
    add_entity_stub(&set, model, individual, language);
  }
  for (const Iri& property : model.all_object_properties()) {
    add_property_stub(&set, model, property, language);
  }
  for (const Iri& property : model.all_data_properties()) {
    add_property_stub(&set, model, property, language);
  }
  return set;
}

}  // namespace owltext
