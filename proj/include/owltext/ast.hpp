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

#ifndef OWLTEXT_AST_HPP_
#define OWLTEXT_AST_HPP_

#include <optional>
#include <string>
#include <vector>

namespace owltext {

// An absolute IRI. `value` is the resolved absolute form used for identity;
// `written` preserves the form that appeared in the source document
// (prefixed name or <...>), so serialization and triple keys stay stable.
struct Iri {
  std::string value;
  std::string written;

  bool empty() const { return value.empty(); }
  // Local part after the last '#' or '/' of the absolute form.
  std::string local_name() const;
  // Prefixed form when available, else <value>.
  const std::string& display() const { return written.empty() ? value : written; }

  friend bool operator==(const Iri& a, const Iri& b) { return a.value == b.value; }
  friend bool operator!=(const Iri& a, const Iri& b) { return !(a == b); }
  friend bool operator<(const Iri& a, const Iri& b) { return a.value < b.value; }
};

// A typed literal such as "850"^^xsd:nonNegativeInteger or "vase"@en.
struct Literal {
  std::string lexical;
  Iri datatype;     // empty means xsd:string
  std::string lang; // only for plain strings

  bool is_boolean() const;
  bool is_numeric() const;

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.lexical == b.lexical && a.datatype == b.datatype && a.lang == b.lang;
  }
  friend bool operator!=(const Literal& a, const Literal& b) { return !(a == b); }
};

enum class ClassExprKind {
  Named,
  ComplementOf,     // operand must be a named class
  OneOf,            // individuals
  ObjectHasValue,   // property + individual
  DataHasValue,     // property + literal
  HasSelf,          // property
  MaxCardinality,   // cardinality + property + optional qualifier class
  MinCardinality,
  ExactCardinality,
  SomeValuesFrom,   // property + named class
  AllValuesFrom,
  IntersectionOf,   // members may not nest further intersections/unions
  UnionOf,
};

struct ClassExpression {
  ClassExprKind kind = ClassExprKind::Named;
  Iri cls;                       // Named / ComplementOf / ValuesFrom class
  Iri property;                  // restriction property
  Iri individual;                // ObjectHasValue
  Literal value;                 // DataHasValue
  int cardinality = 0;
  bool qualified = false;        // cardinality restriction carries `cls`
  std::vector<Iri> individuals;  // OneOf
  std::vector<ClassExpression> operands;  // IntersectionOf / UnionOf

  bool is_named() const { return kind == ClassExprKind::Named; }
  bool is_cardinality() const {
    return kind == ClassExprKind::MaxCardinality ||
           kind == ClassExprKind::MinCardinality ||
           kind == ClassExprKind::ExactCardinality;
  }

  friend bool operator==(const ClassExpression& a, const ClassExpression& b);
  friend bool operator!=(const ClassExpression& a, const ClassExpression& b) {
    return !(a == b);
  }
};

enum class AxiomKind {
  ClassAssertion,
  ObjectPropertyAssertion,
  DataPropertyAssertion,
  NegativeObjectPropertyAssertion,
  NegativeDataPropertyAssertion,
  DifferentIndividuals,
  SameIndividual,
  SubClassOf,
  EquivalentClasses,
  DisjointClasses,
  AnnotationAssertion,
  Declaration,
};

enum class DeclarationKind {
  Class,
  NamedIndividual,
  ObjectProperty,
  DataProperty,
  AnnotationProperty,
  Datatype,
};

// One parsed statement. n-ary DifferentIndividuals / SameIndividual /
// EquivalentClasses / DisjointClasses statements are expanded into pairs at
// parse time, so an Axiom always has at most two class-expression or
// individual arguments.
struct Axiom {
  AxiomKind kind = AxiomKind::Declaration;
  ClassExpression lhs;  // ClassAssertion expr; SubClassOf/Equivalent/Disjoint left
  ClassExpression rhs;  // SubClassOf/Equivalent/Disjoint right
  Iri subject;          // assertion subject / annotated entity / declared entity
  Iri object;           // assertion object individual / other individual
  Iri property;         // assertion or annotation property
  Literal value;        // data assertion or annotation value
  DeclarationKind declaration = DeclarationKind::Class;
  int line = 0;
  int column = 0;

  friend bool operator==(const Axiom& a, const Axiom& b);
  friend bool operator!=(const Axiom& a, const Axiom& b) { return !(a == b); }
};

// Well-known IRIs.
extern const char kRdfsLabel[];
extern const char kXsdString[];
extern const char kXsdBoolean[];

}  // namespace owltext

#endif  // OWLTEXT_AST_HPP_
