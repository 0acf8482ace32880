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

#include "owltext/triples.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "owltext/parser.hpp"

namespace owltext {

const char* keyword_name(Keyword k) {
  switch (k) {
    case Keyword::IsA: return "isA";
    case Keyword::InstanceOf: return "instanceOf";
    case Keyword::OneOf: return "oneOf";
    case Keyword::DifferentIndividuals: return "differentIndividuals";
    case Keyword::SameIndividual: return "sameIndividual";
  }
  return "";
}

const char* modifier_name(Modifier m) {
  switch (m) {
    case Modifier::Not: return "not";
    case Modifier::MaxCardinality: return "maxCardinality";
    case Modifier::MinCardinality: return "minCardinality";
    case Modifier::ExactCardinality: return "exactCardinality";
    case Modifier::SomeValuesFrom: return "someValuesFrom";
    case Modifier::AllValuesFrom: return "allValuesFrom";
  }
  return "";
}

std::string PredicateSpec::scope_key() const {
  return inner == Inner::Property ? property.value : keyword_name(keyword);
}

std::string PredicateSpec::display() const {
  std::string inner_text =
      inner == Inner::Property ? property.display() : keyword_name(keyword);
  if (!modifier) return inner_text;
  return std::string(modifier_name(*modifier)) + "(" + inner_text + ")";
}

bool operator==(const PredicateSpec& a, const PredicateSpec& b) {
  if (a.inner != b.inner || a.modifier != b.modifier) return false;
  return a.inner == PredicateSpec::Inner::Property ? a.property == b.property
                                                   : a.keyword == b.keyword;
}

bool operator==(const Filler& a, const Filler& b) {
  return a.kind == b.kind && a.entity == b.entity && a.value == b.value &&
         a.members == b.members && a.number == b.number &&
         a.counted_class == b.counted_class;
}

bool Filler::contains_entity(const Iri& e) const {
  switch (kind) {
    case Kind::Individual:
    case Kind::Class:
      return entity == e;
    case Kind::Conj:
    case Kind::Disj:
      return std::any_of(members.begin(), members.end(),
                         [&](const Filler& m) { return m.contains_entity(e); });
    default:
      return false;
  }
}

std::string Filler::display() const {
  switch (kind) {
    case Kind::Individual:
    case Kind::Class:
      return entity.display();
    case Kind::Value: {
      std::string text = "\"" + value.lexical + "\"";
      if (!value.lang.empty()) text += "@" + value.lang;
      return text;
    }
    case Kind::Conj:
    case Kind::Disj: {
      std::string text = kind == Kind::Conj ? "and(" : "or(";
      for (size_t i = 0; i < members.size(); ++i) {
        if (i) text += ", ";
        text += members[i].display();
      }
      return text + ")";
    }
    case Kind::Cardinality: {
      std::string text = std::to_string(number);
      if (counted_class) text += ":" + counted_class->display();
      return text;
    }
  }
  return "";
}

std::string MessageTriple::key() const {
  return "<" + subject.display() + ", " + predicate.display() + ", " +
         filler.display() + ">";
}

std::string Message::key() const {
  if (!disjunctive) return triples.front().key();
  std::string text = "or(";
  for (size_t i = 0; i < triples.size(); ++i) {
    if (i) text += ", ";
    text += triples[i].key();
  }
  return text + ")";
}

bool Message::filler_contains(const Iri& entity) const {
  return std::any_of(triples.begin(), triples.end(), [&](const MessageTriple& t) {
    return t.filler.contains_entity(entity);
  });
}

namespace {

Modifier cardinality_modifier(ClassExprKind kind) {
  switch (kind) {
    case ClassExprKind::MaxCardinality: return Modifier::MaxCardinality;
    case ClassExprKind::MinCardinality: return Modifier::MinCardinality;
    default: return Modifier::ExactCardinality;
  }
}

// Converts one non-boolean class expression that constrains `subject`. The isA
// vs instanceOf choice is the only difference between the individual-target
// and class-target conversions.
MessageTriple convert_simple_expression(const ClassExpression& expr,
                                        const Iri& subject, Keyword class_keyword,
                                        int axiom_index) {
  MessageTriple triple;
  triple.subject = subject;
  triple.source_axioms.push_back(axiom_index);
  switch (expr.kind) {
    case ClassExprKind::Named:
      triple.predicate = PredicateSpec::builtin(class_keyword);
      triple.filler = Filler::named_class(expr.cls);
      break;
    case ClassExprKind::ComplementOf:
      triple.predicate = PredicateSpec::builtin(class_keyword).modified(Modifier::Not);
      triple.filler = Filler::named_class(expr.cls);
      break;
    case ClassExprKind::OneOf: {
      triple.predicate = PredicateSpec::builtin(Keyword::OneOf);
      Filler disj;
      disj.kind = Filler::Kind::Disj;
      for (const Iri& member : expr.individuals) {
        disj.members.push_back(Filler::individual(member));
      }
      triple.filler = std::move(disj);
      break;
    }
    case ClassExprKind::ObjectHasValue:
      triple.predicate = PredicateSpec::ontology(expr.property);
      triple.filler = Filler::individual(expr.individual);
      break;
    case ClassExprKind::DataHasValue:
      triple.predicate = PredicateSpec::ontology(expr.property);
      triple.filler = Filler::literal(expr.value);
      break;
    case ClassExprKind::HasSelf:
      triple.predicate = PredicateSpec::ontology(expr.property);
      if (class_keyword == Keyword::IsA) {
        triple.filler = Filler::named_class(subject);
      } else {
        triple.filler = Filler::individual(subject);
      }
      break;
    case ClassExprKind::MaxCardinality:
    case ClassExprKind::MinCardinality:
    case ClassExprKind::ExactCardinality:
      triple.predicate = PredicateSpec::ontology(expr.property)
                             .modified(cardinality_modifier(expr.kind));
      triple.filler = Filler::cardinality(
          expr.cardinality,
          expr.qualified ? std::optional<Iri>(expr.cls) : std::nullopt);
      break;
    case ClassExprKind::SomeValuesFrom:
      triple.predicate =
          PredicateSpec::ontology(expr.property).modified(Modifier::SomeValuesFrom);
      triple.filler = Filler::named_class(expr.cls);
      break;
    case ClassExprKind::AllValuesFrom:
      triple.predicate =
          PredicateSpec::ontology(expr.property).modified(Modifier::AllValuesFrom);
      triple.filler = Filler::named_class(expr.cls);
      break;
    case ClassExprKind::IntersectionOf:
    case ClassExprKind::UnionOf:
      throw ConversionError("nested boolean class expression");
  }
  return triple;
}

std::vector<Message> convert_expression(const ClassExpression& expr,
                                        const Iri& subject, Keyword class_keyword,
                                        int axiom_index) {
  std::vector<Message> messages;
  if (expr.kind == ClassExprKind::IntersectionOf) {
    for (const ClassExpression& member : expr.operands) {
      messages.push_back(Message::single(
          convert_simple_expression(member, subject, class_keyword, axiom_index)));
    }
    return messages;
  }
  if (expr.kind == ClassExprKind::UnionOf) {
    Message message;
    message.disjunctive = expr.operands.size() > 1;
    for (const ClassExpression& member : expr.operands) {
      message.triples.push_back(
          convert_simple_expression(member, subject, class_keyword, axiom_index));
    }
    messages.push_back(std::move(message));
    return messages;
  }
  messages.push_back(Message::single(
      convert_simple_expression(expr, subject, class_keyword, axiom_index)));
  return messages;
}

std::vector<Message> convert_for_individual_indexed(const Axiom& axiom,
                                                    const Iri& target,
                                                    int index) {
  std::vector<Message> messages;
  switch (axiom.kind) {
    case AxiomKind::ClassAssertion:
      if (axiom.subject != target) {
        throw ConversionError("axiom does not assert a class for " +
                              target.display() + ": " + serialize_axiom(axiom));
      }
      return convert_expression(axiom.lhs, target, Keyword::InstanceOf, index);
    case AxiomKind::ObjectPropertyAssertion: {
      MessageTriple t;
      t.subject = target;
      t.predicate = PredicateSpec::ontology(axiom.property);
      t.filler = Filler::individual(axiom.object);
      t.source_axioms.push_back(index);
      messages.push_back(Message::single(std::move(t)));
      return messages;
    }
    case AxiomKind::DataPropertyAssertion: {
      MessageTriple t;
      t.subject = target;
      t.predicate = PredicateSpec::ontology(axiom.property);
      t.filler = Filler::literal(axiom.value);
      t.source_axioms.push_back(index);
      messages.push_back(Message::single(std::move(t)));
      return messages;
    }
    case AxiomKind::NegativeObjectPropertyAssertion: {
      MessageTriple t;
      t.subject = target;
      t.predicate = PredicateSpec::ontology(axiom.property).modified(Modifier::Not);
      t.filler = Filler::individual(axiom.object);
      t.source_axioms.push_back(index);
      messages.push_back(Message::single(std::move(t)));
      return messages;
    }
    case AxiomKind::NegativeDataPropertyAssertion: {
      MessageTriple t;
      t.subject = target;
      t.predicate = PredicateSpec::ontology(axiom.property).modified(Modifier::Not);
      t.filler = Filler::literal(axiom.value);
      t.source_axioms.push_back(index);
      messages.push_back(Message::single(std::move(t)));
      return messages;
    }
    case AxiomKind::DifferentIndividuals:
    case AxiomKind::SameIndividual: {
      // The target moves into subject position whichever argument it was.
      MessageTriple t;
      t.subject = target;
      t.predicate = PredicateSpec::builtin(
          axiom.kind == AxiomKind::DifferentIndividuals
              ? Keyword::DifferentIndividuals
              : Keyword::SameIndividual);
      t.filler = Filler::individual(axiom.subject == target ? axiom.object
                                                            : axiom.subject);
      t.source_axioms.push_back(index);
      messages.push_back(Message::single(std::move(t)));
      return messages;
    }
    default:
      throw ConversionError("axiom kind not convertible for an individual target");
  }
}

std::vector<Message> convert_for_class_indexed(const Axiom& axiom,
                                               const Iri& target, int index) {
  auto convert_subclass_rhs = [&](const ClassExpression& rhs) {
    return convert_expression(rhs, target, Keyword::IsA, index);
  };
  switch (axiom.kind) {
    case AxiomKind::SubClassOf:
      if (!axiom.lhs.is_named() || axiom.lhs.cls != target) {
        throw ConversionError("SubClassOf does not describe " + target.display());
      }
      return convert_subclass_rhs(axiom.rhs);
    case AxiomKind::EquivalentClasses: {
      // EquivalentClasses(T, C) and (C, T) both convert like SubClassOf(T, C).
      if (axiom.lhs.is_named() && axiom.lhs.cls == target) {
        return convert_subclass_rhs(axiom.rhs);
      }
      if (axiom.rhs.is_named() && axiom.rhs.cls == target) {
        return convert_subclass_rhs(axiom.lhs);
      }
      throw ConversionError("EquivalentClasses does not describe " +
                            target.display());
    }
    case AxiomKind::DisjointClasses: {
      const ClassExpression& other =
          axiom.lhs.is_named() && axiom.lhs.cls == target ? axiom.rhs : axiom.lhs;
      if (!other.is_named()) {
        throw ConversionError("DisjointClasses requires named classes");
      }
      MessageTriple t;
      t.subject = target;
      t.predicate =
          PredicateSpec::builtin(Keyword::IsA).modified(Modifier::Not);
      t.filler = Filler::named_class(other.cls);
      t.source_axioms.push_back(index);
      std::vector<Message> messages;
      messages.push_back(Message::single(std::move(t)));
      return messages;
    }
    default:
      throw ConversionError("axiom kind not convertible for a class target");
  }
}

bool mentions_individual_target(const Axiom& axiom, const Iri& target) {
  switch (axiom.kind) {
    case AxiomKind::ClassAssertion:
      return axiom.subject == target;
    case AxiomKind::ObjectPropertyAssertion:
    case AxiomKind::DataPropertyAssertion:
    case AxiomKind::NegativeObjectPropertyAssertion:
    case AxiomKind::NegativeDataPropertyAssertion:
      return axiom.subject == target;
    case AxiomKind::DifferentIndividuals:
    case AxiomKind::SameIndividual:
      return axiom.subject == target || axiom.object == target;
    default:
      return false;
  }
}

bool mentions_class_target(const Axiom& axiom, const Iri& target) {
  switch (axiom.kind) {
    case AxiomKind::SubClassOf:
      return axiom.lhs.is_named() && axiom.lhs.cls == target;
    case AxiomKind::EquivalentClasses:
    case AxiomKind::DisjointClasses:
      return (axiom.lhs.is_named() && axiom.lhs.cls == target) ||
             (axiom.rhs.is_named() && axiom.rhs.cls == target);
    default:
      return false;
  }
}

std::vector<Message> messages_about(const OntologyModel& model, const Iri& target,
                                    bool target_is_class) {
  std::vector<Message> messages;
  const auto& axioms = model.axioms();
  for (size_t i = 0; i < axioms.size(); ++i) {
    const Axiom& axiom = axioms[i];
    std::vector<Message> converted;
    if (target_is_class) {
      if (!mentions_class_target(axiom, target)) continue;
      converted = convert_for_class_indexed(axiom, target, static_cast<int>(i));
    } else {
      if (!mentions_individual_target(axiom, target)) continue;
      converted =
          convert_for_individual_indexed(axiom, target, static_cast<int>(i));
    }
    for (Message& m : converted) messages.push_back(std::move(m));
  }
  return messages;
}

}  // namespace

std::vector<Message> convert_for_individual(const Axiom& axiom, const Iri& target) {
  return convert_for_individual_indexed(axiom, target, -1);
}

std::vector<Message> convert_for_class(const Axiom& axiom, const Iri& target) {
  return convert_for_class_indexed(axiom, target, -1);
}

FactPlan retrieve_messages(const OntologyModel& model, const Iri& target,
                           bool target_is_class, int max_fact_distance) {
  if (!model.is_known(target)) {
    throw GenerationError("unknown target " + target.display());
  }
  if (target_is_class && max_fact_distance > 1) {
    throw GenerationError(
        "fact distance 2 is only available for individual targets");
  }
  FactPlan plan;
  plan.target = target;
  plan.target_is_class = target_is_class;
  plan.primary = messages_about(model, target, target_is_class);
  if (max_fact_distance < 2) return plan;

  // Second-level targets: named classes the target is asserted to belong to
  // and individuals it links to through plain object properties.
  std::set<std::string> seen;
  std::vector<std::pair<Iri, bool>> entities;  // entity, is_class
  for (const Message& message : plan.primary) {
    for (const MessageTriple& triple : message.triples) {
      bool is_class_ref = false;
      Iri entity;
      if (triple.predicate.is_builtin() && !triple.predicate.is_modified() &&
          triple.predicate.keyword == Keyword::InstanceOf &&
          triple.filler.kind == Filler::Kind::Class) {
        entity = triple.filler.entity;
        is_class_ref = true;
      } else if (triple.predicate.is_plain_property() &&
                 triple.filler.kind == Filler::Kind::Individual) {
        entity = triple.filler.entity;
      } else {
        continue;
      }
      if (entity == target) continue;
      if (seen.insert(entity.value).second) {
        entities.emplace_back(entity, is_class_ref);
      }
    }
  }
  for (const auto& [entity, is_class_ref] : entities) {
    FactPlan::Group group;
    group.entity = entity;
    group.messages = messages_about(model, entity, is_class_ref);
    if (!group.messages.empty()) plan.groups.push_back(std::move(group));
  }
  return plan;
}

std::vector<Message> merge_same_property(const std::vector<Message>& messages) {
  std::vector<Message> result;
  std::vector<int> merged_into(messages.size(), -1);
  for (size_t i = 0; i < messages.size(); ++i) {
    if (merged_into[i] >= 0) continue;
    const Message& message = messages[i];
    bool mergeable = !message.disjunctive &&
                     message.first().predicate.is_plain_property() &&
                     !message.first().filler.is_compound() &&
                     message.first().filler.kind != Filler::Kind::Cardinality;
    if (!mergeable) {
      result.push_back(message);
      continue;
    }
    std::vector<size_t> partners;
    for (size_t j = i + 1; j < messages.size(); ++j) {
      const Message& other = messages[j];
      if (other.disjunctive || merged_into[j] >= 0) continue;
      const MessageTriple& t = other.first();
      if (t.predicate.is_plain_property() && !t.filler.is_compound() &&
          t.filler.kind != Filler::Kind::Cardinality &&
          t.subject == message.first().subject &&
          t.predicate == message.first().predicate) {
        partners.push_back(j);
      }
    }
    if (partners.empty()) {
      result.push_back(message);
      continue;
    }
    MessageTriple merged = message.first();
    Filler conj;
    conj.kind = Filler::Kind::Conj;
    conj.members.push_back(merged.filler);
    for (size_t j : partners) {
      conj.members.push_back(messages[j].first().filler);
      for (int src : messages[j].first().source_axioms) {
        merged.source_axioms.push_back(src);
      }
      merged_into[j] = static_cast<int>(i);
    }
    merged.filler = std::move(conj);
    result.push_back(Message::single(std::move(merged)));
  }
  return result;
}

FactPlan merge_fact_plan(FactPlan plan) {
  plan.primary = merge_same_property(plan.primary);
  for (FactPlan::Group& group : plan.groups) {
    group.messages = merge_same_property(group.messages);
  }
  return plan;
}

std::string dump_fact_plan(const FactPlan& plan) {
  std::ostringstream os;
  for (const Message& m : plan.primary) os << m.key() << '\n';
  for (const FactPlan::Group& group : plan.groups) {
    for (const Message& m : group.messages) os << m.key() << '\n';
  }
  return os.str();
}

}  // namespace owltext
