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

#ifndef OWLTEXT_MODEL_HPP_
#define OWLTEXT_MODEL_HPP_

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "owltext/ast.hpp"

namespace owltext {

class GenerationError : public std::runtime_error {
 public:
  explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

// A statement that parsed syntactically but uses a construct outside the
// supported subset (property axioms, domain/range, unnamed classes where a
// named one is required, annotations other than rdfs:label, ...).
struct IgnoredAxiom {
  int line = 0;
  int column = 0;
  std::string text;    // source slice
  std::string reason;
};

// Splits an OWL identifier on lowercase-to-uppercase boundaries and on
// underscores; words come out lowercased, digits stay attached to their run.
std::vector<std::string> tokenize_identifier(const std::string& local_name);
std::string tokenize_identifier_text(const std::string& local_name);

// Immutable after construction; safe to share across concurrent readers.
class OntologyModel {
 public:
  void add_prefix(const std::string& name, const std::string& expansion);
  void add_axiom(Axiom axiom);
  void add_ignored(IgnoredAxiom ignored);
  // Builds the label / hierarchy / entity indexes. Call once, after parsing.
  void build_indexes();

  const std::vector<std::pair<std::string, std::string>>& prefixes() const {
    return prefixes_;
  }
  const std::vector<Axiom>& axioms() const { return axioms_; }
  const std::vector<IgnoredAxiom>& ignored() const { return ignored_; }

  // rdfs:label for the entity in the given language, if declared. The first
  // declaration for an (entity, language) pair wins.
  std::optional<std::string> lookup_label(const Iri& entity,
                                          const std::string& language) const;

  // Transitive told superclasses, most specific first (breadth first from the
  // class, ties broken by document order). Throws GenerationError on a cycle.
  std::vector<Iri> told_ancestors(const Iri& cls) const;

  // Directly asserted named classes of an individual, in document order.
  const std::vector<Iri>& asserted_classes(const Iri& individual) const;

  // Breadth-first class order used for scope specificity: for a class, the
  // class itself then its told ancestors; for an individual, its asserted
  // classes then their ancestors.
  std::vector<Iri> specificity_order(const Iri& subject) const;

  bool is_class(const Iri& iri) const { return classes_.count(iri.value) > 0; }
  bool is_individual(const Iri& iri) const {
    return individuals_.count(iri.value) > 0;
  }
  bool is_known(const Iri& iri) const;

  // Declared or mentioned entities by kind, in first-mention document order.
  const std::vector<Iri>& all_individuals() const { return individual_order_; }
  const std::vector<Iri>& all_classes() const { return class_order_; }
  const std::vector<Iri>& all_object_properties() const { return obj_prop_order_; }
  const std::vector<Iri>& all_data_properties() const { return data_prop_order_; }

 private:
  void note_class(const Iri& iri);
  void note_individual(const Iri& iri);
  void note_object_property(const Iri& iri);
  void note_data_property(const Iri& iri);
  void note_expression(const ClassExpression& expr);

  std::vector<std::pair<std::string, std::string>> prefixes_;
  std::vector<Axiom> axioms_;
  std::vector<IgnoredAxiom> ignored_;

  std::map<std::pair<std::string, std::string>, std::string> labels_;
  std::map<std::string, std::vector<Iri>> super_classes_;
  std::map<std::string, std::vector<Iri>> asserted_classes_;
  std::set<std::string> classes_;
  std::set<std::string> individuals_;
  std::set<std::string> obj_props_;
  std::set<std::string> data_props_;
  std::vector<Iri> individual_order_;
  std::vector<Iri> class_order_;
  std::vector<Iri> obj_prop_order_;
  std::vector<Iri> data_prop_order_;
};

}  // namespace owltext

#endif  // OWLTEXT_MODEL_HPP_
