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
// The message-triple intermediate representation <S, P, O>: each triple is one
// expressible fact, derived from an axiom about a target entity, and is meant
// to realize as a single simple sentence.

#ifndef OWLTEXT_TRIPLES_HPP_
#define OWLTEXT_TRIPLES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "owltext/model.hpp"

namespace owltext {

enum class Keyword { IsA, InstanceOf, OneOf, DifferentIndividuals, SameIndividual };
enum class Modifier { Not, MaxCardinality, MinCardinality, ExactCardinality,
                      SomeValuesFrom, AllValuesFrom };

const char* keyword_name(Keyword k);
const char* modifier_name(Modifier m);

// P of a message triple: a property of the ontology, a domain-independent
// keyword, or modifier(inner) where inner is one of the former two.
struct PredicateSpec {
  enum class Inner { Property, Builtin };

  Inner inner = Inner::Property;
  Iri property;          // when inner == Property
  Keyword keyword = Keyword::IsA;  // when inner == Builtin
  std::optional<Modifier> modifier;

  static PredicateSpec ontology(Iri p) {
    PredicateSpec s;
    s.property = std::move(p);
    return s;
  }
  static PredicateSpec builtin(Keyword k) {
    PredicateSpec s;
    s.inner = Inner::Builtin;
    s.keyword = k;
    return s;
  }
  PredicateSpec modified(Modifier m) const {
    PredicateSpec s = *this;
    s.modifier = m;
    return s;
  }

  bool is_modified() const { return modifier.has_value(); }
  bool is_builtin() const { return inner == Inner::Builtin; }
  bool is_plain_property() const {
    return inner == Inner::Property && !modifier.has_value();
  }
  // Property identity used for interest scopes and section assignment.
  std::string scope_key() const;
  std::string display() const;

  friend bool operator==(const PredicateSpec& a, const PredicateSpec& b);
  friend bool operator!=(const PredicateSpec& a, const PredicateSpec& b) {
    return !(a == b);
  }
};

// O of a message triple.
struct Filler {
  enum class Kind { Individual, Class, Value, Conj, Disj, Cardinality };

  Kind kind = Kind::Individual;
  Iri entity;                   // Individual / Class
  Literal value;                // Value
  std::vector<Filler> members;  // Conj / Disj, members non-compound
  int number = 0;               // Cardinality
  std::optional<Iri> counted_class;

  static Filler individual(Iri i) {
    Filler f;
    f.kind = Kind::Individual;
    f.entity = std::move(i);
    return f;
  }
  static Filler named_class(Iri c) {
    Filler f;
    f.kind = Kind::Class;
    f.entity = std::move(c);
    return f;
  }
  static Filler literal(Literal v) {
    Filler f;
    f.kind = Kind::Value;
    f.value = std::move(v);
    return f;
  }
  static Filler cardinality(int n, std::optional<Iri> cls) {
    Filler f;
    f.kind = Kind::Cardinality;
    f.number = n;
    f.counted_class = std::move(cls);
    return f;
  }

  bool is_compound() const { return kind == Kind::Conj || kind == Kind::Disj; }
  // True when the filler is, or contains as a member, the given entity.
  bool contains_entity(const Iri& e) const;
  std::string display() const;

  friend bool operator==(const Filler& a, const Filler& b);
  friend bool operator!=(const Filler& a, const Filler& b) { return !(a == b); }
};

struct MessageTriple {
  Iri subject;
  PredicateSpec predicate;
  Filler filler;
  std::vector<int> source_axioms;  // indexes into the model's axiom list

  // Canonical <S, P, O> text; doubles as the user-model key.
  std::string key() const;

  friend bool operator==(const MessageTriple& a, const MessageTriple& b) {
    return a.subject == b.subject && a.predicate == b.predicate &&
           a.filler == b.filler;
  }
};

// A single triple, or an or(...) disjunction produced by a UnionOf statement.
struct Message {
  bool disjunctive = false;
  std::vector<MessageTriple> triples;

  static Message single(MessageTriple t) {
    Message m;
    m.triples.push_back(std::move(t));
    return m;
  }
  const MessageTriple& first() const { return triples.front(); }
  std::string key() const;
  bool filler_contains(const Iri& entity) const;
};

// Retrieved facts around one target: the target's own messages plus, at fact
// distance 2, one message group per second-level entity.
struct FactPlan {
  Iri target;
  bool target_is_class = false;
  std::vector<Message> primary;

  struct Group {
    Iri entity;
    std::vector<Message> messages;
  };
  std::vector<Group> groups;  // in first-introduction order
};

class ConversionError : public GenerationError {
 public:
  explicit ConversionError(const std::string& what) : GenerationError(what) {}
};

// Axiom-to-message conversion for an individual / class target. The axiom must
// mention the target in the required position.
std::vector<Message> convert_for_individual(const Axiom& axiom, const Iri& target);
std::vector<Message> convert_for_class(const Axiom& axiom, const Iri& target);

// Collects and converts every axiom about the target, in document order.
// max_fact_distance 2 is valid for individual targets only and adds groups for
// the target's named classes and object-property filler individuals.
FactPlan retrieve_messages(const OntologyModel& model, const Iri& target,
                           bool target_is_class, int max_fact_distance);

// Replaces runs of single triples sharing (subject, unmodified property) and
// having non-compound fillers with one triple holding an and(...) filler.
std::vector<Message> merge_same_property(const std::vector<Message>& messages);
FactPlan merge_fact_plan(FactPlan plan);

std::string dump_fact_plan(const FactPlan& plan);

}  // namespace owltext

#endif  // OWLTEXT_TRIPLES_HPP_
