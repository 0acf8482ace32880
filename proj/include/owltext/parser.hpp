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
// Parser for the OWL 2 functional-style syntax subset the generator consumes:
// assertions, SubClassOf / EquivalentClasses / DisjointClasses over a
// restricted class-expression grammar, Declaration, and
// AnnotationAssertion(rdfs:label ...). Statement kinds outside that subset are
// kept in an "ignored" list with their source spans rather than dropped.

#ifndef OWLTEXT_PARSER_HPP_
#define OWLTEXT_PARSER_HPP_

#include <string>
#include <vector>

#include "owltext/model.hpp"

namespace owltext {

struct Diagnostic {
  int line = 0;
  int column = 0;
  std::string message;

  std::string str() const;
};

struct ParseResult {
  OntologyModel model;
  std::vector<Diagnostic> errors;

  bool ok() const { return errors.empty(); }
};

ParseResult parse_ontology(const std::string& document);

// Serializes the supported axioms of a model back to functional-style syntax.
// parse(serialize(m)) reproduces the axioms and prefixes of m.
std::string serialize_ontology(const OntologyModel& model);
std::string serialize_axiom(const Axiom& axiom);

}  // namespace owltext

#endif  // OWLTEXT_PARSER_HPP_
