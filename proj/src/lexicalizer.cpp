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

#include "owltext/lexicalizer.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace owltext {

namespace {

const char* kNumberWords[] = {"zero", "one",   "two",  "three", "four",
                              "five", "six",   "seven", "eight", "nine",
                              "ten",  "eleven", "twelve"};

Token word(const std::string& text, Token::Pos pos = Token::Pos::None,
           bool capitalize = false) {
  Token t;
  t.text = text;
  t.pos = pos;
  t.capitalize = capitalize;
  return t;
}

Phrase fixed_phrase(const std::string& text, Token::Pos pos = Token::Pos::None) {
  Phrase p;
  p.source = Phrase::Source::Fixed;
  if (!text.empty()) p.tokens.push_back(word(text, pos));
  return p;
}

Phrase tokenized_phrase(const Iri& entity) {
  Phrase p;
  p.source = Phrase::Source::TokenizedId;
  for (const std::string& w : tokenize_identifier(entity.local_name())) {
    p.tokens.push_back(word(w));
  }
  return p;
}

Phrase label_phrase(const std::string& label) {
  Phrase p;
  p.source = Phrase::Source::Label;
  std::istringstream in(label);
  std::string w;
  while (in >> w) p.tokens.push_back(word(w));
  return p;
}

// Descriptor for a noun lookup: number plus case, the lookup falls back to
// number-only tables for languages without case morphology.
std::string noun_descriptor(const std::string& number, const std::string& c) {
  return c.empty() ? number : number + "." + c;
}

std::string verb_descriptor(const std::string& tense, const std::string& voice,
                            const std::string& number) {
  return tense + "." + voice + ".3" + number;
}

const std::string& label_or_empty(const std::optional<std::string>& label) {
  static const std::string kEmpty;
  return label ? *label : kEmpty;
}

}  // namespace

std::string number_word(int n) {
  if (n >= 0 && n < static_cast<int>(std::size(kNumberWords))) {
    return kNumberWords[n];
  }
  return std::to_string(n);
}

Phrase name_phrase(const Iri& entity, const LexContext& ctx,
                   const std::string& grammatical_case,
                   const std::string& article_override,
                   const std::string& number_override) {
  const ResourceSet& resources = *ctx.resources;
  const NlName* name = nullptr;
  if (ctx.use_nl_names) {
    auto candidates = resources.names_for(entity.value, ctx.language);
    if (!candidates.empty()) name = select_variant(candidates, ctx.user_type);
  }
  if (name == nullptr) {
    Phrase p;
    if (ctx.model) {
      auto label = ctx.model->lookup_label(entity, ctx.language);
      if (label) {
        p = label_phrase(*label);
      } else {
        p = tokenized_phrase(entity);
      }
    } else {
      p = tokenized_phrase(entity);
    }
    if (article_override == "indef") {
      Token article;
      article.kind = Token::Kind::IndefArticle;
      p.tokens.insert(p.tokens.begin(), article);
    } else if (article_override == "def") {
      Token article;
      article.kind = Token::Kind::DefArticle;
      article.text = "the";
      p.tokens.insert(p.tokens.begin(), article);
    }
    return p;
  }

  Phrase p;
  p.source = Phrase::Source::NlName;
  std::string number = number_override.empty() ? name->default_number
                                               : number_override;
  p.number = number;
  bool explicit_article = !name->slots.empty() &&
                          name->slots.front().kind == NameSlot::Kind::Article;
  // Effective article: the plan's directive wins over the name's own policy.
  std::string article = article_override;
  if (article.empty()) {
    if (explicit_article) {
      article = name->slots.front().article;
    } else if (name->article_policy == "definite") {
      article = "def";
    } else if (name->article_policy == "indefinite") {
      article = "indef";
    } else {
      article = "noarticle";
    }
  }
  if (article == "def") {
    Token t;
    t.kind = Token::Kind::DefArticle;
    t.text = "the";
    p.tokens.push_back(t);
  } else if (article == "indef") {
    Token t;
    t.kind = Token::Kind::IndefArticle;
    p.tokens.push_back(t);
  }
  for (size_t i = 0; i < name->slots.size(); ++i) {
    const NameSlot& slot = name->slots[i];
    switch (slot.kind) {
      case NameSlot::Kind::Article:
        break;  // already handled
      case NameSlot::Kind::Head: {
        std::string form = resources.inflect(
            slot.lexeme, noun_descriptor(number, grammatical_case), ctx.language);
        Token t = word(form,
                       slot.pos == LexiconEntry::Pos::Adjective
                           ? Token::Pos::Adjective
                           : Token::Pos::Noun,
                       slot.capitalize);
        t.head = true;
        p.head_index = static_cast<int>(p.tokens.size());
        p.tokens.push_back(t);
        const LexiconEntry* lexeme = resources.find_lexeme(slot.lexeme);
        if (lexeme != nullptr) {
          auto genders = lexeme->genders.find(ctx.language);
          if (genders != lexeme->genders.end() &&
              slot.pos == LexiconEntry::Pos::Noun) {
            p.genders = genders->second;
          }
        }
        break;
      }
      case NameSlot::Kind::Lexical: {
        std::string descriptor = slot.form.empty()
                                     ? noun_descriptor(number, grammatical_case)
                                     : slot.form;
        std::string form = resources.inflect(slot.lexeme, descriptor, ctx.language);
        p.tokens.push_back(word(form,
                                slot.pos == LexiconEntry::Pos::Adjective
                                    ? Token::Pos::Adjective
                                    : Token::Pos::Noun,
                                slot.capitalize));
        break;
      }
      case NameSlot::Kind::Preposition:
        p.tokens.push_back(word(slot.text, Token::Pos::Preposition, slot.capitalize));
        break;
      case NameSlot::Kind::Text: {
        Token t = word(slot.text, Token::Pos::None, slot.capitalize);
        p.tokens.push_back(t);
        break;
      }
    }
  }
  return p;
}

std::vector<std::string> gender_of(const Iri& entity, const LexContext& ctx) {
  LexContext lookup = ctx;
  auto gender_from_name = [&](const Iri& e) -> std::optional<std::vector<std::string>> {
    if (!lookup.use_nl_names) return std::nullopt;
    auto candidates = ctx.resources->names_for(e.value, ctx.language);
    if (candidates.empty()) return std::nullopt;
    const NlName* name = select_variant(candidates, ctx.user_type);
    int head = name->head_slot();
    if (head < 0) return std::vector<std::string>{};
    const NameSlot& slot = name->slots[head];
    if (slot.pos != LexiconEntry::Pos::Noun) return std::vector<std::string>{};
    const LexiconEntry* lexeme = ctx.resources->find_lexeme(slot.lexeme);
    if (lexeme == nullptr) return std::vector<std::string>{};
    auto genders = lexeme->genders.find(ctx.language);
    if (genders == lexeme->genders.end()) return std::vector<std::string>{};
    return genders->second;
  };
  if (auto direct = gender_from_name(entity)) return *direct;
  if (ctx.model) {
    for (const Iri& cls : ctx.model->specificity_order(entity)) {
      if (auto inherited = gender_from_name(cls)) return *inherited;
    }
  }
  return {};
}

namespace {

// True when the entity's selected name is a sequence of adjectives (an
// adjective head), which switches the built-in class plans to their
// adjectival variant.
bool has_adjective_name(const Iri& entity, const LexContext& ctx) {
  if (!ctx.use_nl_names) return false;
  auto candidates = ctx.resources->names_for(entity.value, ctx.language);
  if (candidates.empty()) return false;
  const NlName* name = select_variant(candidates, ctx.user_type);
  int head = name->head_slot();
  return head >= 0 && name->slots[head].pos == LexiconEntry::Pos::Adjective;
}

PlanSlot owner_slot(const std::string& c) {
  PlanSlot slot;
  slot.kind = PlanSlot::Kind::Owner;
  slot.grammatical_case = c;
  return slot;
}

PlanSlot verb_slot(const std::string& lexeme, const std::string& tense) {
  PlanSlot slot;
  slot.kind = PlanSlot::Kind::Verb;
  slot.lexeme = lexeme;
  slot.tense = tense;
  return slot;
}

PlanSlot text_slot(const std::string& text) {
  PlanSlot slot;
  slot.kind = PlanSlot::Kind::Text;
  slot.text = text;
  return slot;
}

PlanSlot filler_slot(const std::string& c, const std::string& article = "") {
  PlanSlot slot;
  slot.kind = PlanSlot::Kind::Filler;
  slot.grammatical_case = c;
  slot.form = article;  // reused as the filler-article directive
  return slot;
}

// Built-in plans for domain-independent predicates. English only; authored
// plans for the keyword override these (that is how other languages supply
// theirs).
SentencePlan builtin_plan(Keyword keyword, const MessageTriple& triple,
                          const LexContext& ctx) {
  SentencePlan plan;
  plan.id = std::string("builtin:") + keyword_name(keyword);
  plan.property = keyword_name(keyword);
  plan.language = ctx.language;
  plan.appropriateness.scores["default"] = 1;
  switch (keyword) {
    case Keyword::InstanceOf:
    case Keyword::IsA: {
      bool adjectival = triple.filler.kind == Filler::Kind::Class &&
                        has_adjective_name(triple.filler.entity, ctx);
      plan.slots.push_back(owner_slot("nom"));
      plan.slots.push_back(verb_slot(kBeLexeme, "present"));
      if (adjectival) {
        plan.slots.push_back(filler_slot("nom", "noarticle"));
      } else if (keyword == Keyword::IsA) {
        plan.slots.push_back(text_slot("a kind of"));
        plan.slots.push_back(filler_slot("nom", "noarticle"));
      } else {
        plan.slots.push_back(filler_slot("nom", "indef"));
      }
      break;
    }
    case Keyword::OneOf:
      plan.slots.push_back(owner_slot("nom"));
      plan.slots.push_back(verb_slot(kBeLexeme, "present"));
      plan.slots.push_back(filler_slot("nom"));
      break;
    case Keyword::DifferentIndividuals:
      plan.slots.push_back(owner_slot("nom"));
      plan.slots.push_back(verb_slot(kBeLexeme, "present"));
      plan.slots.push_back(text_slot("not identical to"));
      plan.slots.push_back(filler_slot("acc"));
      break;
    case Keyword::SameIndividual:
      plan.slots.push_back(owner_slot("nom"));
      plan.slots.push_back(verb_slot(kBeLexeme, "present"));
      plan.slots.push_back(text_slot("identical to"));
      plan.slots.push_back(filler_slot("acc"));
      break;
  }
  return plan;
}

SentencePlan default_plan(const MessageTriple& triple, const LexContext& ctx) {
  SentencePlan plan;
  plan.id = "default";
  plan.property = triple.predicate.scope_key();
  plan.language = ctx.language;
  plan.appropriateness.scores["default"] = 1;
  plan.slots.push_back(owner_slot("nom"));
  std::string property_text;
  if (triple.predicate.inner == PredicateSpec::Inner::Property) {
    const Iri& property = triple.predicate.property;
    if (ctx.model) {
      property_text =
          label_or_empty(ctx.model->lookup_label(property, ctx.language));
    }
    if (property_text.empty()) {
      property_text = tokenize_identifier_text(property.local_name());
    }
  } else {
    property_text = tokenize_identifier_text(keyword_name(triple.predicate.keyword));
  }
  plan.slots.push_back(text_slot(property_text));
  plan.slots.push_back(filler_slot("acc"));
  return plan;
}

ResolvedPlan resolve_unmodified(const MessageTriple& triple, const LexContext& ctx) {
  ResolvedPlan resolved;
  if (ctx.use_authored_plans) {
    auto candidates =
        ctx.resources->plans_for(triple.predicate.scope_key(), ctx.language);
    if (!candidates.empty()) {
      resolved.plan = *select_variant(candidates, ctx.user_type);
      resolved.origin = ResolvedPlan::Origin::Authored;
      resolved.counting = resolved.plan.counting;
      return resolved;
    }
  }
  if (triple.predicate.is_builtin()) {
    resolved.plan = builtin_plan(triple.predicate.keyword, triple, ctx);
    resolved.origin = ResolvedPlan::Origin::BuiltIn;
    return resolved;
  }
  resolved.plan = default_plan(triple, ctx);
  resolved.origin = ResolvedPlan::Origin::Default;
  return resolved;
}

}  // namespace

ResolvedPlan plan_for(const MessageTriple& triple, const LexContext& ctx) {
  if (!triple.predicate.is_modified()) return resolve_unmodified(triple, ctx);

  // Derived plan: start from the unmodified predicate's plan.
  MessageTriple inner = triple;
  inner.predicate.modifier.reset();
  ResolvedPlan resolved = resolve_unmodified(inner, ctx);
  resolved.modifier = triple.predicate.modifier;
  switch (*triple.predicate.modifier) {
    case Modifier::Not:
      resolved.polarity_flipped = true;
      break;
    case Modifier::MaxCardinality:
      resolved.filler_prefix = {"at", "most"};
      break;
    case Modifier::MinCardinality:
      resolved.filler_prefix = {"at", "least"};
      break;
    case Modifier::ExactCardinality:
      resolved.filler_prefix = {"exactly"};
      break;
    case Modifier::SomeValuesFrom:
      resolved.filler_prefix = {"at", "least", "some"};
      break;
    case Modifier::AllValuesFrom:
      resolved.filler_prefix = {"only"};
      break;
  }
  if (resolved.origin != ResolvedPlan::Origin::Default) {
    resolved.origin = ResolvedPlan::Origin::Derived;
  }
  return resolved;
}

namespace {

Phrase counting_phrase(int n, const std::optional<Iri>& counted_class,
                       const ResolvedPlan& plan, const std::string& property_key,
                       const LexContext& ctx) {
  std::string number = n == 1 ? "sg" : "pl";
  if (counted_class) {
    return name_phrase(*counted_class, ctx, "acc", "noarticle", number);
  }
  if (plan.counting && !plan.counting->noun.empty()) {
    Phrase p;
    p.source = Phrase::Source::Fixed;
    for (const std::string& w : plan.counting->pre) p.tokens.push_back(word(w));
    p.tokens.push_back(word(
        ctx.resources->inflect(plan.counting->noun, number, ctx.language),
        Token::Pos::Noun));
    return p;
  }
  // Last resort: the final word of the property identifier.
  size_t hash = property_key.find_last_of("#/");
  std::string local =
      hash == std::string::npos ? property_key : property_key.substr(hash + 1);
  auto words = tokenize_identifier(local);
  std::string noun = words.empty() ? local : words.back();
  if (n != 1) noun += "s";
  Phrase p;
  p.source = Phrase::Source::TokenizedId;
  p.tokens.push_back(word(noun, Token::Pos::Noun));
  return p;
}

Phrase literal_phrase(const Literal& value) {
  Phrase p;
  p.source = Phrase::Source::LiteralValue;
  Token t = word(value.lexical);
  if (value.is_numeric()) t.pos = Token::Pos::Number;
  p.tokens.push_back(t);
  return p;
}

}  // namespace

FillerRealization realize_filler(const Filler& filler, const LexContext& ctx,
                                 const std::string& grammatical_case,
                                 const ResolvedPlan& plan,
                                 const std::string& property_key) {
  FillerRealization out;
  switch (filler.kind) {
    case Filler::Kind::Individual:
    case Filler::Kind::Class: {
      // The plan's filler slot may force an article via its form field.
      std::string article;
      for (const PlanSlot& slot : plan.plan.slots) {
        if (slot.kind == PlanSlot::Kind::Filler) article = slot.form;
      }
      out.members.push_back(
          name_phrase(filler.entity, ctx, grammatical_case, article));
      break;
    }
    case Filler::Kind::Value:
      out.members.push_back(literal_phrase(filler.value));
      break;
    case Filler::Kind::Conj:
    case Filler::Kind::Disj: {
      out.join = filler.kind == Filler::Kind::Conj ? "and" : "or";
      for (const Filler& member : filler.members) {
        FillerRealization one =
            realize_filler(member, ctx, grammatical_case, plan, property_key);
        for (Phrase& p : one.members) out.members.push_back(std::move(p));
      }
      break;
    }
    case Filler::Kind::Cardinality: {
      Phrase p;
      p.source = Phrase::Source::Fixed;
      for (const std::string& w : plan.filler_prefix) p.tokens.push_back(word(w));
      p.tokens.push_back(word(number_word(filler.number), Token::Pos::Number));
      Phrase counting = counting_phrase(filler.number, filler.counted_class, plan,
                                        property_key, ctx);
      for (Token& t : counting.tokens) p.tokens.push_back(std::move(t));
      out.members.push_back(std::move(p));
      break;
    }
  }
  return out;
}

namespace {

void collect_entities(const Filler& filler, std::vector<std::string>* out) {
  if (filler.kind == Filler::Kind::Individual ||
      filler.kind == Filler::Kind::Class) {
    out->push_back(filler.entity.value);
  } else if (filler.is_compound()) {
    for (const Filler& member : filler.members) collect_entities(member, out);
  } else if (filler.kind == Filler::Kind::Cardinality && filler.counted_class) {
    out->push_back(filler.counted_class->value);
  }
}

std::string subject_number(const Iri& entity, const LexContext& ctx) {
  if (ctx.use_nl_names) {
    auto candidates = ctx.resources->names_for(entity.value, ctx.language);
    if (!candidates.empty()) {
      return select_variant(candidates, ctx.user_type)->default_number;
    }
  }
  return "sg";
}

// Negative verb forms: authored "neg." table entries win; English falls back
// to aux insertion or do-support.
std::string negative_verb_form(const LexiconEntry& lexeme,
                               const std::string& descriptor,
                               const std::string& number,
                               const std::string& tense,
                               const LexContext& ctx) {
  auto authored = lexeme.lookup("neg." + descriptor, ctx.language);
  if (authored) return *authored;
  auto positive = lexeme.lookup(descriptor, ctx.language);
  if (!positive) {
    throw GenerationError("lexicon entry '" + lexeme.id +
                          "' has no form for 'neg." + descriptor +
                          "' in language '" + ctx.language + "'");
  }
  if (ctx.language != "en") {
    throw GenerationError("lexicon entry '" + lexeme.id +
                          "' needs an authored negative form for '" +
                          descriptor + "' in language '" + ctx.language + "'");
  }
  size_t space = positive->find(' ');
  if (lexeme.copula || space != std::string::npos) {
    // "was used" -> "was not used"; "is" -> "is not".
    if (space == std::string::npos) return *positive + " not";
    return positive->substr(0, space) + " not" + positive->substr(space);
  }
  auto base = lexeme.lookup("base", ctx.language);
  if (!base) {
    throw GenerationError("lexicon entry '" + lexeme.id +
                          "' needs a base form for negation");
  }
  if (tense == "past") return "did not " + *base;
  return (number == "pl" ? "do not " : "does not ") + *base;
}

Clause instantiate_clause(const MessageTriple& triple, const ResolvedPlan& resolved,
                          const LexContext& ctx,
                          std::vector<std::string>* entities) {
  const SentencePlan& plan = resolved.plan;
  Clause clause;
  clause.source_key = triple.key();
  clause.property = triple.predicate.scope_key();
  clause.from_default_plan = resolved.origin == ResolvedPlan::Origin::Default;
  if (triple.predicate.is_modified()) {
    clause.pred_kind = Clause::PredKind::Modified;
    clause.modifier = triple.predicate.modifier;
    if (triple.filler.kind == Filler::Kind::Cardinality) {
      clause.card_number = triple.filler.number;
    }
  } else if (triple.predicate.is_builtin()) {
    switch (triple.predicate.keyword) {
      case Keyword::InstanceOf:
        clause.pred_kind = Clause::PredKind::InstanceOf;
        break;
      case Keyword::IsA:
        clause.pred_kind = Clause::PredKind::IsA;
        break;
      default:
        clause.pred_kind = Clause::PredKind::OtherBuiltin;
        break;
    }
  } else {
    clause.pred_kind = Clause::PredKind::Property;
  }

  std::string owner_number = subject_number(triple.subject, ctx);
  bool boolean_filler = triple.filler.kind == Filler::Kind::Value &&
                        triple.filler.value.is_boolean();

  for (const PlanSlot& slot : plan.slots) {
    switch (slot.kind) {
      case PlanSlot::Kind::Owner: {
        Chunk chunk;
        chunk.kind = Chunk::Kind::Subject;
        chunk.subject.entity = triple.subject;
        chunk.subject.grammatical_case = slot.grammatical_case;
        chunk.subject.re_policy = slot.re_policy;
        chunk.subject.number = owner_number;
        clause.chunks.push_back(std::move(chunk));
        break;
      }
      case PlanSlot::Kind::Verb: {
        const LexiconEntry* lexeme = ctx.resources->find_lexeme(slot.lexeme);
        if (lexeme == nullptr) {
          throw GenerationError("plan '" + plan.id +
                                "' references unknown lexeme '" + slot.lexeme +
                                "'");
        }
        Chunk chunk;
        chunk.kind = Chunk::Kind::Verb;
        VerbChunk& verb = chunk.verb;
        verb.lexeme = slot.lexeme;
        verb.tense = slot.tense;
        verb.voice = slot.voice;
        verb.copula = lexeme->copula;
        bool negative = slot.polarity == "negative";
        if (slot.polarity == "auto" && boolean_filler) {
          negative = triple.filler.value.lexical == "false";
        }
        if (resolved.polarity_flipped) negative = !negative;
        verb.negative = negative;
        std::string agree_number = owner_number;
        if (slot.agree_with >= 0 &&
            slot.agree_with < static_cast<int>(plan.slots.size()) &&
            plan.slots[slot.agree_with].kind == PlanSlot::Kind::Owner) {
          agree_number = owner_number;
        }
        verb.number = agree_number;
        std::string descriptor = verb_descriptor(slot.tense, slot.voice,
                                                 agree_number);
        if (negative) {
          verb.realized = negative_verb_form(*lexeme, descriptor, agree_number,
                                             slot.tense, ctx);
        } else {
          verb.realized = ctx.resources->inflect(slot.lexeme, descriptor,
                                                 ctx.language);
        }
        clause.chunks.push_back(std::move(chunk));
        break;
      }
      case PlanSlot::Kind::Lexical: {
        std::string descriptor = slot.form.empty() ? "base" : slot.form;
        Phrase p;
        p.source = Phrase::Source::Fixed;
        Token t = word(ctx.resources->inflect(slot.lexeme, descriptor, ctx.language),
                       slot.pos == LexiconEntry::Pos::Adjective
                           ? Token::Pos::Adjective
                           : Token::Pos::Noun,
                       slot.capitalize);
        p.tokens.push_back(std::move(t));
        clause.chunks.push_back(Chunk::text(std::move(p)));
        break;
      }
      case PlanSlot::Kind::Preposition: {
        Phrase p = fixed_phrase(slot.text, Token::Pos::Preposition);
        clause.chunks.push_back(Chunk::text(std::move(p), /*prep=*/true));
        break;
      }
      case PlanSlot::Kind::Text: {
        if (slot.text.empty()) break;
        if (slot.text == "," || slot.text == ":" || slot.text == ";") {
          clause.chunks.push_back(Chunk::punctuation(slot.text));
          break;
        }
        Phrase p;
        p.source = Phrase::Source::Fixed;
        std::istringstream in(slot.text);
        std::string w;
        bool first = true;
        while (in >> w) {
          Token t = word(w);
          if (first && slot.capitalize) t.capitalize = true;
          first = false;
          p.tokens.push_back(std::move(t));
        }
        clause.chunks.push_back(Chunk::text(std::move(p)));
        break;
      }
      case PlanSlot::Kind::Filler: {
        if (boolean_filler && resolved.origin != ResolvedPlan::Origin::Default) {
          bool consumed = false;
          for (const PlanSlot& s : plan.slots) {
            if (s.kind == PlanSlot::Kind::Verb && s.polarity == "auto") {
              consumed = true;
            }
          }
          if (consumed) break;  // polarity already expresses the value
        }
        collect_entities(triple.filler, entities);
        FillerRealization realization = realize_filler(
            triple.filler, ctx, slot.grammatical_case, resolved, clause.property);
        Chunk chunk;
        chunk.kind = Chunk::Kind::FillerList;
        chunk.members = std::move(realization.members);
        chunk.list_kind = realization.join;
        // Non-cardinality modifiers prefix the filler expression itself.
        if (!resolved.filler_prefix.empty() &&
            triple.filler.kind != Filler::Kind::Cardinality) {
          Phrase p;
          p.source = Phrase::Source::Fixed;
          for (const std::string& w : resolved.filler_prefix) {
            p.tokens.push_back(word(w));
          }
          clause.chunks.push_back(Chunk::text(std::move(p)));
        }
        clause.chunks.push_back(std::move(chunk));
        break;
      }
      case PlanSlot::Kind::FillerConcat: {
        if (triple.filler.kind != Filler::Kind::Individual || !ctx.model) {
          throw GenerationError("plan '" + plan.id +
                                "' concatenates property values of a filler "
                                "that is not an individual");
        }
        Phrase assembled;
        assembled.source = Phrase::Source::Fixed;
        for (const PlanSlot::ConcatPart& part : slot.parts) {
          bool found = false;
          for (const Axiom& axiom : ctx.model->axioms()) {
            bool object_assertion =
                axiom.kind == AxiomKind::ObjectPropertyAssertion;
            bool data_assertion = axiom.kind == AxiomKind::DataPropertyAssertion;
            if (!object_assertion && !data_assertion) continue;
            if (axiom.subject != triple.filler.entity ||
                axiom.property.value != part.property) {
              continue;
            }
            if (data_assertion) {
              assembled.tokens.push_back(word(axiom.value.lexical));
            } else if (part.mode == "value") {
              assembled.tokens.push_back(word(axiom.object.local_name()));
            } else {
              Phrase name = name_phrase(axiom.object, ctx, "acc", "noarticle");
              for (Token& t : name.tokens) assembled.tokens.push_back(std::move(t));
            }
            found = true;
            break;
          }
          if (!found) {
            throw GenerationError("no value of " + part.property +
                                  " found for " + triple.filler.entity.display());
          }
        }
        clause.chunks.push_back(Chunk::text(std::move(assembled)));
        break;
      }
    }
  }
  return clause;
}

}  // namespace

SentenceSpec instantiate(const Message& message, const LexContext& ctx) {
  SentenceSpec spec;
  spec.disjunctive = message.disjunctive;
  if (message.disjunctive) spec.clause_join = "or";
  spec.source_keys.push_back(message.key());
  bool aggregation_allowed = true;
  for (const MessageTriple& triple : message.triples) {
    ResolvedPlan resolved = plan_for(triple, ctx);
    aggregation_allowed = aggregation_allowed && resolved.plan.aggregation_allowed;
    spec.clauses.push_back(
        instantiate_clause(triple, resolved, ctx, &spec.entities));
  }
  spec.aggregation_allowed = aggregation_allowed;
  return spec;
}

}  // namespace owltext
