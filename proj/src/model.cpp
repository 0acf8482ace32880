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

#include "owltext/model.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>

namespace owltext {

const char kRdfsLabel[] = "http://www.w3.org/2000/01/rdf-schema#label";
const char kXsdString[] = "http://www.w3.org/2001/XMLSchema#string";
const char kXsdBoolean[] = "http://www.w3.org/2001/XMLSchema#boolean";

std::string Iri::local_name() const {
  size_t pos = value.find_last_of("#/");
  if (pos == std::string::npos) return value;
  return value.substr(pos + 1);
}

bool Literal::is_boolean() const { return datatype.value == kXsdBoolean; }

bool Literal::is_numeric() const {
  const std::string& dt = datatype.value;
  if (dt.empty()) return false;
  size_t pos = dt.find('#');
  std::string local = pos == std::string::npos ? dt : dt.substr(pos + 1);
  static const char* kNumeric[] = {"integer",
                                   "int",
                                   "long",
                                   "short",
                                   "byte",
                                   "decimal",
                                   "float",
                                   "double",
                                   "nonNegativeInteger",
                                   "positiveInteger",
                                   "nonPositiveInteger",
                                   "negativeInteger",
                                   "unsignedInt",
                                   "unsignedLong"};
  for (const char* name : kNumeric) {
    if (local == name) return true;
  }
  return false;
}

bool operator==(const ClassExpression& a, const ClassExpression& b) {
  return a.kind == b.kind && a.cls == b.cls && a.property == b.property &&
         a.individual == b.individual && a.value == b.value &&
         a.cardinality == b.cardinality && a.qualified == b.qualified &&
         a.individuals == b.individuals && a.operands == b.operands;
}

bool operator==(const Axiom& a, const Axiom& b) {
  return a.kind == b.kind && a.lhs == b.lhs && a.rhs == b.rhs &&
         a.subject == b.subject && a.object == b.object &&
         a.property == b.property && a.value == b.value &&
         a.declaration == b.declaration;
}

std::vector<std::string> tokenize_identifier(const std::string& local_name) {
  std::vector<std::string> words;
  std::string current;
  auto flush = [&]() {
    if (!current.empty()) {
      words.push_back(current);
      current.clear();
    }
  };
  char prev = '\0';
  for (char c : local_name) {
    if (c == '_' || c == ' ') {
      flush();
      prev = '\0';
      continue;
    }
    // New word starts at an uppercase letter following a lowercase letter or
    // digit; digit runs stay attached to the word they follow.
    if (std::isupper(static_cast<unsigned char>(c)) && prev != '\0' &&
        !std::isupper(static_cast<unsigned char>(prev))) {
      flush();
    }
    current.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    prev = c;
  }
  flush();
  if (words.empty()) words.push_back(local_name);
  return words;
}

std::string tokenize_identifier_text(const std::string& local_name) {
  std::string out;
  for (const std::string& word : tokenize_identifier(local_name)) {
    if (!out.empty()) out.push_back(' ');
    out += word;
  }
  return out;
}

void OntologyModel::add_prefix(const std::string& name,
                               const std::string& expansion) {
  for (auto& entry : prefixes_) {
    if (entry.first == name) {
      entry.second = expansion;
      return;
    }
  }
  prefixes_.emplace_back(name, expansion);
}

void OntologyModel::add_axiom(Axiom axiom) { axioms_.push_back(std::move(axiom)); }

void OntologyModel::add_ignored(IgnoredAxiom ignored) {
  ignored_.push_back(std::move(ignored));
}

void OntologyModel::note_class(const Iri& iri) {
  if (iri.empty()) return;
  if (classes_.insert(iri.value).second) class_order_.push_back(iri);
}

void OntologyModel::note_individual(const Iri& iri) {
  if (iri.empty()) return;
  if (individuals_.insert(iri.value).second) individual_order_.push_back(iri);
}

void OntologyModel::note_object_property(const Iri& iri) {
  if (iri.empty()) return;
  if (obj_props_.insert(iri.value).second) obj_prop_order_.push_back(iri);
}

void OntologyModel::note_data_property(const Iri& iri) {
  if (iri.empty()) return;
  if (data_props_.insert(iri.value).second) data_prop_order_.push_back(iri);
}

void OntologyModel::note_expression(const ClassExpression& expr) {
  switch (expr.kind) {
    case ClassExprKind::Named:
      note_class(expr.cls);
      break;
    case ClassExprKind::ComplementOf:
      note_class(expr.cls);
      break;
    case ClassExprKind::OneOf:
      for (const Iri& i : expr.individuals) note_individual(i);
      break;
    case ClassExprKind::ObjectHasValue:
      note_object_property(expr.property);
      note_individual(expr.individual);
      break;
    case ClassExprKind::DataHasValue:
      note_data_property(expr.property);
      break;
    case ClassExprKind::HasSelf:
      note_object_property(expr.property);
      break;
    case ClassExprKind::MaxCardinality:
    case ClassExprKind::MinCardinality:
    case ClassExprKind::ExactCardinality:
      if (expr.qualified) note_class(expr.cls);
      break;
    case ClassExprKind::SomeValuesFrom:
    case ClassExprKind::AllValuesFrom:
      note_object_property(expr.property);
      note_class(expr.cls);
      break;
    case ClassExprKind::IntersectionOf:
    case ClassExprKind::UnionOf:
      for (const ClassExpression& member : expr.operands) note_expression(member);
      break;
  }
}

void OntologyModel::build_indexes() {
  for (const Axiom& axiom : axioms_) {
    switch (axiom.kind) {
      case AxiomKind::ClassAssertion:
        note_individual(axiom.subject);
        note_expression(axiom.lhs);
        if (axiom.lhs.is_named()) {
          asserted_classes_[axiom.subject.value].push_back(axiom.lhs.cls);
        } else if (axiom.lhs.kind == ClassExprKind::IntersectionOf) {
          for (const ClassExpression& member : axiom.lhs.operands) {
            if (member.is_named()) {
              asserted_classes_[axiom.subject.value].push_back(member.cls);
            }
          }
        }
        break;
      case AxiomKind::ObjectPropertyAssertion:
      case AxiomKind::NegativeObjectPropertyAssertion:
        note_individual(axiom.subject);
        note_individual(axiom.object);
        note_object_property(axiom.property);
        break;
      case AxiomKind::DataPropertyAssertion:
      case AxiomKind::NegativeDataPropertyAssertion:
        note_individual(axiom.subject);
        note_data_property(axiom.property);
        break;
      case AxiomKind::DifferentIndividuals:
      case AxiomKind::SameIndividual:
        note_individual(axiom.subject);
        note_individual(axiom.object);
        break;
      case AxiomKind::SubClassOf:
        note_expression(axiom.lhs);
        note_expression(axiom.rhs);
        if (axiom.lhs.is_named() && axiom.rhs.is_named()) {
          super_classes_[axiom.lhs.cls.value].push_back(axiom.rhs.cls);
        }
        break;
      case AxiomKind::EquivalentClasses:
      case AxiomKind::DisjointClasses:
        note_expression(axiom.lhs);
        note_expression(axiom.rhs);
        break;
      case AxiomKind::AnnotationAssertion: {
        auto key = std::make_pair(axiom.subject.value, axiom.value.lang);
        labels_.emplace(key, axiom.value.lexical);  // first declaration wins
        break;
      }
      case AxiomKind::Declaration:
        switch (axiom.declaration) {
          case DeclarationKind::Class: note_class(axiom.subject); break;
          case DeclarationKind::NamedIndividual: note_individual(axiom.subject); break;
          case DeclarationKind::ObjectProperty: note_object_property(axiom.subject); break;
          case DeclarationKind::DataProperty: note_data_property(axiom.subject); break;
          default: break;
        }
        break;
    }
  }
}

std::optional<std::string> OntologyModel::lookup_label(
    const Iri& entity, const std::string& language) const {
  auto it = labels_.find(std::make_pair(entity.value, language));
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

std::vector<Iri> OntologyModel::told_ancestors(const Iri& cls) const {
  std::vector<Iri> result;
  std::set<std::string> seen;
  seen.insert(cls.value);
  std::deque<Iri> frontier;
  frontier.push_back(cls);
  while (!frontier.empty()) {
    Iri current = frontier.front();
    frontier.pop_front();
    auto it = super_classes_.find(current.value);
    if (it == super_classes_.end()) continue;
    for (const Iri& super : it->second) {
      if (super == cls) {
        throw GenerationError("cycle in told class hierarchy through " +
                              cls.display());
      }
      if (seen.insert(super.value).second) {
        result.push_back(super);
        frontier.push_back(super);
      }
    }
  }
  return result;
}

const std::vector<Iri>& OntologyModel::asserted_classes(
    const Iri& individual) const {
  static const std::vector<Iri> kEmpty;
  auto it = asserted_classes_.find(individual.value);
  return it == asserted_classes_.end() ? kEmpty : it->second;
}

std::vector<Iri> OntologyModel::specificity_order(const Iri& subject) const {
  std::vector<Iri> order;
  std::set<std::string> seen;
  std::deque<Iri> frontier;
  auto push = [&](const Iri& c) {
    if (seen.insert(c.value).second) {
      order.push_back(c);
      frontier.push_back(c);
    }
  };
  if (is_class(subject)) {
    push(subject);
  } else {
    for (const Iri& c : asserted_classes(subject)) push(c);
  }
  while (!frontier.empty()) {
    Iri current = frontier.front();
    frontier.pop_front();
    auto it = super_classes_.find(current.value);
    if (it == super_classes_.end()) continue;
    for (const Iri& super : it->second) push(super);
  }
  return order;
}

bool OntologyModel::is_known(const Iri& iri) const {
  return classes_.count(iri.value) > 0 || individuals_.count(iri.value) > 0 ||
         obj_props_.count(iri.value) > 0 || data_props_.count(iri.value) > 0;
}

}  // namespace owltext
