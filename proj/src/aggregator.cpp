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

#include "owltext/aggregator.hpp"

#include <algorithm>
#include <map>

#include "owltext/lexicalizer.hpp"

namespace owltext {

namespace {

// A sentence usable as the left side of the class-sentence rules: one clause,
// one message, an is-a or instance-of predicate, not merged before.
bool is_simple_class_sentence(const SentenceSpec& spec) {
  if (spec.clauses.size() != 1 || spec.disjunctive) return false;
  if (spec.merged != SentenceSpec::MergeKind::None &&
      spec.merged != SentenceSpec::MergeKind::AdjectiveDonation) {
    return false;
  }
  const Clause& clause = spec.first();
  return (clause.pred_kind == Clause::PredKind::InstanceOf ||
          clause.pred_kind == Clause::PredKind::IsA) &&
         clause.subject_verb_lead();
}

// A sentence usable as aggregation material: one clause expressing one
// message of an unmodified ontology property through a real (non-default)
// sentence plan.
bool is_simple_property_sentence(const SentenceSpec& spec) {
  return spec.clauses.size() == 1 && !spec.disjunctive &&
         spec.merged == SentenceSpec::MergeKind::None &&
         spec.first().pred_kind == Clause::PredKind::Property &&
         spec.first().message_count == 1 && !spec.first().from_default_plan;
}

bool same_section(const SentenceSpec& a, const SentenceSpec& b) {
  return a.section == b.section;
}

bool compatible(const SentenceSpec& a, const SentenceSpec& b) {
  return a.aggregation_allowed && b.aggregation_allowed && same_section(a, b);
}

const VerbChunk* clause_verb(const Clause& clause) {
  int i = clause.verb_chunk();
  return i < 0 ? nullptr : &clause.chunks[i].verb;
}

std::vector<Chunk> post_verb_chunks(const Clause& clause) {
  int verb = clause.verb_chunk();
  std::vector<Chunk> out;
  if (verb < 0) return out;
  for (size_t i = verb + 1; i < clause.chunks.size(); ++i) {
    out.push_back(clause.chunks[i]);
  }
  return out;
}

void merge_bookkeeping(SentenceSpec* into, const SentenceSpec& from) {
  for (const std::string& key : from.source_keys) into->source_keys.push_back(key);
  for (const std::string& e : from.entities) into->entities.push_back(e);
  into->aggregation_allowed =
      into->aggregation_allowed && from.aggregation_allowed;
}

// ---------------------------------------------------------------------------
// Rule: avoid repeating a noun with multiple adjectives.

struct MemberShape {
  bool ok = false;
  int article = -1;  // index of a leading article token
  int head = -1;     // index of the trailing head noun
};

MemberShape member_shape(const Phrase& member) {
  MemberShape shape;
  if (member.source != Phrase::Source::NlName) return shape;
  size_t i = 0;
  if (i < member.tokens.size() &&
      (member.tokens[i].kind == Token::Kind::IndefArticle ||
       member.tokens[i].kind == Token::Kind::DefArticle)) {
    shape.article = static_cast<int>(i);
    ++i;
  }
  size_t adjectives = 0;
  while (i < member.tokens.size() &&
         member.tokens[i].pos == Token::Pos::Adjective) {
    ++adjectives;
    ++i;
  }
  if (adjectives == 0) return shape;
  if (i + 1 != member.tokens.size()) return shape;
  if (member.tokens[i].pos != Token::Pos::Noun) return shape;
  shape.head = static_cast<int>(i);
  shape.ok = true;
  return shape;
}

bool elide_in_members(std::vector<Phrase>* members) {
  if (members->size() < 2) return false;
  std::vector<MemberShape> shapes;
  std::string head_text;
  for (const Phrase& member : *members) {
    MemberShape shape = member_shape(member);
    if (!shape.ok) return false;
    const std::string& text = member.tokens[shape.head].text;
    if (head_text.empty()) {
      head_text = text;
    } else if (head_text != text) {
      return false;
    }
    shapes.push_back(shape);
  }
  for (size_t i = 0; i < members->size(); ++i) {
    Phrase& member = (*members)[i];
    if (i + 1 < members->size()) {
      member.tokens.erase(member.tokens.begin() + shapes[i].head);
    }
    // Indefinite articles belong to the whole list; keep only the first.
    if (i > 0 && shapes[i].article >= 0 &&
        member.tokens[shapes[i].article].kind == Token::Kind::IndefArticle) {
      member.tokens.erase(member.tokens.begin() + shapes[i].article);
    }
  }
  return true;
}

}  // namespace

bool elide_repeated_heads(SentenceSpec* spec) {
  if (!spec->aggregation_allowed) return false;
  bool changed = false;
  for (Clause& clause : spec->clauses) {
    for (Chunk& chunk : clause.chunks) {
      if (chunk.kind == Chunk::Kind::FillerList && chunk.members.size() >= 2) {
        changed = elide_in_members(&chunk.members) || changed;
      }
    }
    // Complements of a same-verb merge: each must be a lone one-member list.
    if (clause.complements.size() >= 2) {
      std::vector<Phrase> phrases;
      bool eligible = true;
      for (const std::vector<Chunk>& complement : clause.complements) {
        if (complement.size() != 1 ||
            complement[0].kind != Chunk::Kind::FillerList ||
            complement[0].members.size() != 1) {
          eligible = false;
          break;
        }
        phrases.push_back(complement[0].members[0]);
      }
      if (eligible && elide_in_members(&phrases)) {
        for (size_t i = 0; i < phrases.size(); ++i) {
          clause.complements[i][0].members[0] = phrases[i];
        }
        changed = true;
      }
    }
  }
  return changed;
}

// ---------------------------------------------------------------------------
// Class-sentence rules.

namespace {

// Appends donor chunks to the class sentence. Class-membership sentences take
// a comma before the appended material; kind-of sentences attach directly.
SentenceSpec append_to_class_sentence(const SentenceSpec& class_sentence,
                                      const SentenceSpec& donor,
                                      std::vector<Chunk> tail,
                                      SentenceSpec::MergeKind kind) {
  SentenceSpec merged = class_sentence;
  Clause& clause = merged.first();
  if (class_sentence.first().pred_kind == Clause::PredKind::InstanceOf) {
    clause.chunks.push_back(Chunk::punctuation(","));
  }
  for (Chunk& chunk : tail) clause.chunks.push_back(std::move(chunk));
  clause.message_count += donor.message_count();
  merged.merged = kind;
  merge_bookkeeping(&merged, donor);
  return merged;
}

}  // namespace

std::optional<SentenceSpec> merge_class_passive(const SentenceSpec& class_sentence,
                                                const SentenceSpec& passive,
                                                const AggregationContext& ctx) {
  if (!is_simple_class_sentence(class_sentence) ||
      !is_simple_property_sentence(passive) ||
      !compatible(class_sentence, passive)) {
    return std::nullopt;
  }
  if (class_sentence.subject_entity() != passive.subject_entity()) {
    return std::nullopt;
  }
  if (class_sentence.message_count() + passive.message_count() >
      ctx.max_messages_per_sentence) {
    return std::nullopt;
  }
  const Clause& donor = passive.first();
  if (!donor.subject_verb_lead()) return std::nullopt;
  const VerbChunk* verb = clause_verb(donor);
  if (verb == nullptr || verb->voice != "passive" || verb->negative) {
    return std::nullopt;
  }
  // The auxiliary goes away: the verb re-realizes as its participle.
  const LexiconEntry* lexeme = ctx.resources->find_lexeme(verb->lexeme);
  if (lexeme == nullptr) return std::nullopt;
  auto participle = lexeme->lookup("participle", ctx.language);
  if (!participle) return std::nullopt;
  std::vector<Chunk> tail;
  Chunk participle_chunk;
  participle_chunk.kind = Chunk::Kind::Verb;
  participle_chunk.verb = *verb;
  participle_chunk.verb.realized = *participle;
  tail.push_back(std::move(participle_chunk));
  for (Chunk& chunk : post_verb_chunks(donor)) tail.push_back(std::move(chunk));
  return append_to_class_sentence(class_sentence, passive, std::move(tail),
                                  SentenceSpec::MergeKind::ClassTail);
}

std::optional<SentenceSpec> merge_class_preposition(
    const SentenceSpec& class_sentence, const SentenceSpec& prep,
    const AggregationContext& ctx) {
  if (!is_simple_class_sentence(class_sentence) ||
      !is_simple_property_sentence(prep) || !compatible(class_sentence, prep)) {
    return std::nullopt;
  }
  if (class_sentence.subject_entity() != prep.subject_entity()) {
    return std::nullopt;
  }
  if (class_sentence.message_count() + prep.message_count() >
      ctx.max_messages_per_sentence) {
    return std::nullopt;
  }
  const Clause& donor = prep.first();
  if (!donor.subject_verb_lead()) return std::nullopt;
  const VerbChunk* verb = clause_verb(donor);
  if (verb == nullptr || !verb->copula || verb->tense != "present" ||
      verb->voice != "active" || verb->negative) {
    return std::nullopt;
  }
  std::vector<Chunk> tail = post_verb_chunks(donor);
  if (tail.empty() || tail.front().kind != Chunk::Kind::Text ||
      !tail.front().preposition) {
    return std::nullopt;
  }
  return append_to_class_sentence(class_sentence, prep, std::move(tail),
                                  SentenceSpec::MergeKind::ClassTail);
}

std::optional<SentenceSpec> merge_class_apposition(
    const SentenceSpec& class_sentence, const SentenceSpec& kind_of,
    const AggregationContext& ctx) {
  if (!is_simple_class_sentence(class_sentence) ||
      !compatible(class_sentence, kind_of)) {
    return std::nullopt;
  }
  if (kind_of.clauses.size() != 1 || kind_of.disjunctive ||
      kind_of.merged != SentenceSpec::MergeKind::None ||
      kind_of.first().pred_kind != Clause::PredKind::IsA ||
      kind_of.first().message_count != 1 || !kind_of.first().subject_verb_lead()) {
    return std::nullopt;
  }
  if (class_sentence.message_count() + kind_of.message_count() >
      ctx.max_messages_per_sentence) {
    return std::nullopt;
  }
  // The second sentence must describe the class the first one introduced.
  const Clause& head = class_sentence.first();
  bool introduces = false;
  for (const Chunk& chunk : head.chunks) {
    if (chunk.kind == Chunk::Kind::FillerList) {
      for (const std::string& e : class_sentence.entities) {
        if (e == kind_of.subject_entity().value) introduces = true;
      }
    }
  }
  if (!introduces) return std::nullopt;
  const VerbChunk* verb = clause_verb(kind_of.first());
  if (verb == nullptr || !verb->copula || verb->negative) return std::nullopt;

  SentenceSpec merged = class_sentence;
  Clause& clause = merged.first();
  clause.chunks.push_back(Chunk::punctuation(","));
  for (Chunk& chunk : post_verb_chunks(kind_of.first())) {
    clause.chunks.push_back(std::move(chunk));
  }
  clause.message_count += kind_of.message_count();
  merged.merged = SentenceSpec::MergeKind::ClassTail;
  merge_bookkeeping(&merged, kind_of);
  return merged;
}

// ---------------------------------------------------------------------------
// Driver.

namespace {

// A donor for the class-and-adjectives rule: copula + a lone adjective.
bool is_adjective_donor(const SentenceSpec& spec) {
  if (!is_simple_property_sentence(spec) || !spec.first().subject_verb_lead()) {
    return false;
  }
  const VerbChunk* verb = clause_verb(spec.first());
  if (verb == nullptr || !verb->copula || verb->tense != "present" ||
      verb->voice != "active" || verb->negative) {
    return false;
  }
  std::vector<Chunk> tail = post_verb_chunks(spec.first());
  if (tail.size() != 1 || tail[0].kind != Chunk::Kind::FillerList ||
      tail[0].members.size() != 1) {
    return false;
  }
  const Phrase& member = tail[0].members[0];
  if (member.tokens.empty()) return false;
  for (const Token& t : member.tokens) {
    if (t.pos != Token::Pos::Adjective) return false;
  }
  return true;
}

std::vector<Token> donor_adjectives(const SentenceSpec& spec) {
  return post_verb_chunks(spec.first())[0].members[0].tokens;
}

// Inserts donated adjectives into the class phrase, after its article.
bool donate_adjectives(SentenceSpec* class_sentence,
                       const std::vector<std::vector<Token>>& donations) {
  Clause& clause = class_sentence->first();
  for (Chunk& chunk : clause.chunks) {
    if (chunk.kind != Chunk::Kind::FillerList || chunk.members.empty()) continue;
    Phrase& name = chunk.members[0];
    size_t insert_at = 0;
    if (!name.tokens.empty() &&
        (name.tokens[0].kind == Token::Kind::IndefArticle ||
         name.tokens[0].kind == Token::Kind::DefArticle)) {
      insert_at = 1;
    }
    std::vector<Token> inserted;
    for (size_t d = 0; d < donations.size(); ++d) {
      if (d > 0) {
        Token t;
        t.kind = Token::Kind::Punct;
        t.text = ",";
        inserted.push_back(t);
      }
      for (const Token& adj : donations[d]) inserted.push_back(adj);
    }
    name.tokens.insert(name.tokens.begin() + insert_at, inserted.begin(),
                       inserted.end());
    return true;
  }
  return false;
}

bool same_verb_form(const Clause& a, const Clause& b) {
  const VerbChunk* va = clause_verb(a);
  const VerbChunk* vb = clause_verb(b);
  if (va == nullptr || vb == nullptr) return false;
  return va->lexeme == vb->lexeme && va->realized == vb->realized &&
         va->negative == vb->negative;
}

SentenceSpec merge_same_verb_run(std::vector<SentenceSpec>& sentences,
                                 size_t begin, size_t count) {
  SentenceSpec merged = sentences[begin];
  Clause& clause = merged.first();
  std::vector<Chunk> own_tail = post_verb_chunks(clause);
  int verb = clause.verb_chunk();
  clause.chunks.resize(verb + 1);
  clause.complements.push_back(std::move(own_tail));
  for (size_t k = 1; k < count; ++k) {
    const SentenceSpec& donor = sentences[begin + k];
    clause.complements.push_back(post_verb_chunks(donor.first()));
    clause.message_count += donor.first().message_count;
    merge_bookkeeping(&merged, donor);
  }
  merged.merged = SentenceSpec::MergeKind::SameVerb;
  return merged;
}

// The disjunctive variant: clauses of one or-sentence sharing a verb form
// collapse into a single clause with or-joined complements.
bool collapse_disjunctive_same_verb(SentenceSpec* spec) {
  if (!spec->disjunctive || spec->clauses.size() < 2 ||
      !spec->aggregation_allowed) {
    return false;
  }
  const Clause& first = spec->clauses.front();
  if (!first.subject_verb_lead()) return false;
  for (const Clause& clause : spec->clauses) {
    if (!clause.subject_verb_lead()) return false;
    if (!same_verb_form(first, clause)) return false;
    if (clause.subject()->entity != first.subject()->entity) return false;
  }
  Clause collapsed = first;
  std::vector<Chunk> own_tail = post_verb_chunks(collapsed);
  collapsed.chunks.resize(collapsed.verb_chunk() + 1);
  collapsed.complements.push_back(std::move(own_tail));
  for (size_t i = 1; i < spec->clauses.size(); ++i) {
    collapsed.complements.push_back(post_verb_chunks(spec->clauses[i]));
  }
  collapsed.complement_join = "or";
  spec->clauses = {std::move(collapsed)};
  spec->clause_join = "and";
  spec->merged = SentenceSpec::MergeKind::SameVerb;
  return true;
}

// Cardinality sentences carry their counting phrase after the number token.
std::vector<Token> counting_tokens(const SentenceSpec& spec) {
  for (const Chunk& chunk : spec.first().chunks) {
    if (chunk.kind != Chunk::Kind::FillerList || chunk.members.empty()) continue;
    const Phrase& member = chunk.members[0];
    for (size_t i = 0; i < member.tokens.size(); ++i) {
      if (member.tokens[i].pos == Token::Pos::Number) {
        return std::vector<Token>(member.tokens.begin() + i + 1,
                                  member.tokens.end());
      }
    }
  }
  return {};
}

bool is_cardinality_sentence(const SentenceSpec& spec, Modifier wanted) {
  return spec.clauses.size() == 1 && !spec.disjunctive &&
         spec.merged == SentenceSpec::MergeKind::None &&
         spec.first().pred_kind == Clause::PredKind::Modified &&
         spec.first().modifier == wanted && spec.aggregation_allowed;
}

// Replaces the filler list of a cloned cardinality/values sentence.
void replace_filler(SentenceSpec* spec, const std::vector<Token>& lead,
                    std::optional<std::vector<Phrase>> values) {
  Clause& clause = spec->first();
  for (size_t i = 0; i < clause.chunks.size(); ++i) {
    Chunk& chunk = clause.chunks[i];
    if (chunk.kind != Chunk::Kind::FillerList) continue;
    Phrase head;
    head.source = Phrase::Source::Fixed;
    head.tokens = lead;
    if (values) {
      Chunk values_chunk = chunk;
      values_chunk.members = *values;
      Chunk colon = Chunk::punctuation(":");
      chunk = Chunk::text(std::move(head));
      clause.chunks.insert(clause.chunks.begin() + i + 1, colon);
      clause.chunks.insert(clause.chunks.begin() + i + 2, values_chunk);
    } else {
      chunk = Chunk::text(std::move(head));
    }
    return;
  }
}

Token aggregated_word(const std::string& text) {
  Token t;
  t.text = text;
  return t;
}

std::string number_text(int n);

// Cardinality restrictions and values: merge min/max/exact sentences with the
// plain values sentence for the same subject and property. The sentence cap
// does not apply here.
void apply_cardinality_values(std::vector<SentenceSpec>* sentences) {
  for (size_t i = 0; i < sentences->size(); ++i) {
    const SentenceSpec& seed = (*sentences)[i];
    if (seed.clauses.size() != 1 || seed.disjunctive ||
        seed.merged != SentenceSpec::MergeKind::None || !seed.aggregation_allowed) {
      continue;
    }
    bool seed_is_values = is_simple_property_sentence(seed);
    bool seed_is_cardinality =
        seed.first().pred_kind == Clause::PredKind::Modified &&
        seed.first().modifier &&
        (*seed.first().modifier == Modifier::MinCardinality ||
         *seed.first().modifier == Modifier::MaxCardinality ||
         *seed.first().modifier == Modifier::ExactCardinality);
    if (!seed_is_values && !seed_is_cardinality) continue;

    // Gather all sentences about (subject, property) in this section.
    std::vector<size_t> group;
    for (size_t j = i; j < sentences->size(); ++j) {
      const SentenceSpec& other = (*sentences)[j];
      if (!same_section(seed, other) || !other.aggregation_allowed) continue;
      if (other.clauses.size() != 1 || other.disjunctive ||
          other.merged != SentenceSpec::MergeKind::None) {
        continue;
      }
      if (other.subject_entity() != seed.subject_entity()) continue;
      if (other.first().property != seed.first().property) continue;
      bool values = is_simple_property_sentence(other);
      bool cardinality =
          other.first().pred_kind == Clause::PredKind::Modified &&
          other.first().modifier &&
          (*other.first().modifier == Modifier::MinCardinality ||
           *other.first().modifier == Modifier::MaxCardinality ||
           *other.first().modifier == Modifier::ExactCardinality);
      if (values || cardinality) group.push_back(j);
    }
    if (group.size() < 2) continue;

    int values_at = -1, min_at = -1, max_at = -1, exact_at = -1;
    for (size_t j : group) {
      const SentenceSpec& s = (*sentences)[j];
      if (is_simple_property_sentence(s)) {
        if (values_at < 0) values_at = static_cast<int>(j);
      } else if (is_cardinality_sentence(s, Modifier::MinCardinality)) {
        if (min_at < 0) min_at = static_cast<int>(j);
      } else if (is_cardinality_sentence(s, Modifier::MaxCardinality)) {
        if (max_at < 0) max_at = static_cast<int>(j);
      } else if (is_cardinality_sentence(s, Modifier::ExactCardinality)) {
        if (exact_at < 0) exact_at = static_cast<int>(j);
      }
    }
    int value_count = 0;
    if (values_at >= 0) {
      for (const Chunk& chunk : (*sentences)[values_at].first().chunks) {
        if (chunk.kind == Chunk::Kind::FillerList) {
          value_count = static_cast<int>(chunk.members.size());
        }
      }
    }

    std::optional<SentenceSpec> merged;
    std::vector<int> absorbed;
    auto exact_merge = [&](int n, const std::vector<Token>& counting,
                           std::vector<int> parts) {
      if (values_at >= 0 && value_count == n) {
        parts.push_back(values_at);
        std::sort(parts.begin(), parts.end());
        SentenceSpec base = (*sentences)[values_at];
        std::vector<Phrase> values;
        for (const Chunk& chunk : base.first().chunks) {
          if (chunk.kind == Chunk::Kind::FillerList) values = chunk.members;
        }
        std::vector<Token> lead = {aggregated_word("exactly"),
                                   aggregated_word(number_text(n))};
        for (const Token& t : counting) lead.push_back(t);
        SentenceSpec out = base;
        out.source_keys.clear();
        out.entities.clear();
        out.first().message_count = 0;
        for (int p : parts) {
          merge_bookkeeping(&out, (*sentences)[p]);
          out.first().message_count += (*sentences)[p].message_count();
        }
        replace_filler(&out, lead, values);
        out.merged = SentenceSpec::MergeKind::CardinalityValues;
        merged = std::move(out);
        absorbed = parts;
        return true;
      }
      if (parts.size() >= 2) {
        // min n + max n without values: "exactly n <counting>".
        std::sort(parts.begin(), parts.end());
        SentenceSpec out = (*sentences)[parts[0]];
        std::vector<Token> lead = {aggregated_word("exactly"),
                                   aggregated_word(number_text(n))};
        for (const Token& t : counting) lead.push_back(t);
        out.source_keys.clear();
        out.entities.clear();
        out.first().message_count = 0;
        for (int p : parts) {
          merge_bookkeeping(&out, (*sentences)[p]);
          out.first().message_count += (*sentences)[p].message_count();
        }
        replace_filler(&out, lead, std::nullopt);
        out.merged = SentenceSpec::MergeKind::CardinalityValues;
        merged = std::move(out);
        absorbed = parts;
        return true;
      }
      return false;
    };

    if (exact_at >= 0) {
      exact_merge((*sentences)[exact_at].first().card_number,
                  counting_tokens((*sentences)[exact_at]), {exact_at});
    } else if (min_at >= 0 && max_at >= 0) {
      int a = (*sentences)[min_at].first().card_number;
      int b = (*sentences)[max_at].first().card_number;
      if (a == b) {
        exact_merge(a, counting_tokens((*sentences)[max_at]), {min_at, max_at});
      } else {
        // "at least a and at most b <counting>"; the values stay separate.
        std::vector<int> parts = {std::min(min_at, max_at),
                                  std::max(min_at, max_at)};
        SentenceSpec out = (*sentences)[parts[0]];
        std::vector<Token> lead = {aggregated_word("at"), aggregated_word("least"),
                                   aggregated_word(number_text(a)),
                                   aggregated_word("and"), aggregated_word("at"),
                                   aggregated_word("most"),
                                   aggregated_word(number_text(b))};
        for (const Token& t : counting_tokens((*sentences)[max_at])) {
          lead.push_back(t);
        }
        out.source_keys.clear();
        out.entities.clear();
        out.first().message_count = 0;
        for (int p : parts) {
          merge_bookkeeping(&out, (*sentences)[p]);
          out.first().message_count += (*sentences)[p].message_count();
        }
        replace_filler(&out, lead, std::nullopt);
        out.merged = SentenceSpec::MergeKind::CardinalityValues;
        merged = std::move(out);
        absorbed = parts;
      }
    } else if (max_at >= 0 && values_at >= 0) {
      // A max bound plus exactly that many listed values pins the count.
      exact_merge((*sentences)[max_at].first().card_number,
                  counting_tokens((*sentences)[max_at]), {max_at});
    }

    if (merged) {
      size_t target = static_cast<size_t>(absorbed.front());
      (*sentences)[target] = std::move(*merged);
      for (size_t k = absorbed.size(); k-- > 1;) {
        sentences->erase(sentences->begin() + absorbed[k]);
      }
    }
  }
}

std::string number_text(int n) { return number_word(n); }

}  // namespace

std::vector<SentenceSpec> aggregate(std::vector<SentenceSpec> sentences,
                                    const AggregationContext& ctx) {
  int cap = ctx.max_messages_per_sentence;

  // Rule order follows the discussion order; each pass scans left to right.
  for (SentenceSpec& spec : sentences) elide_repeated_heads(&spec);

  apply_cardinality_values(&sentences);

  for (size_t i = 0; i + 1 < sentences.size(); ++i) {
    if (auto merged = merge_class_passive(sentences[i], sentences[i + 1], ctx)) {
      sentences[i] = std::move(*merged);
      sentences.erase(sentences.begin() + i + 1);
    }
  }
  for (size_t i = 0; i + 1 < sentences.size(); ++i) {
    if (auto merged =
            merge_class_preposition(sentences[i], sentences[i + 1], ctx)) {
      sentences[i] = std::move(*merged);
      sentences.erase(sentences.begin() + i + 1);
    }
  }
  for (size_t i = 0; i + 1 < sentences.size(); ++i) {
    if (auto merged =
            merge_class_apposition(sentences[i], sentences[i + 1], ctx)) {
      sentences[i] = std::move(*merged);
      sentences.erase(sentences.begin() + i + 1);
    }
  }

  // Class and multiple adjectives: absorb adjacent copula+adjective sentences
  // around a class sentence, preferring the application that takes the most.
  for (size_t i = 0; i < sentences.size(); ++i) {
    if (!is_simple_class_sentence(sentences[i]) ||
        !sentences[i].aggregation_allowed) {
      continue;
    }
    const Iri subject = sentences[i].subject_entity();
    std::vector<size_t> before, after;
    for (size_t j = i; j-- > 0;) {
      if (is_adjective_donor(sentences[j]) &&
          sentences[j].subject_entity() == subject &&
          compatible(sentences[i], sentences[j])) {
        before.insert(before.begin(), j);
      } else {
        break;
      }
    }
    for (size_t j = i + 1; j < sentences.size(); ++j) {
      if (is_adjective_donor(sentences[j]) &&
          sentences[j].subject_entity() == subject &&
          compatible(sentences[i], sentences[j])) {
        after.push_back(j);
      } else {
        break;
      }
    }
    int budget = cap - sentences[i].message_count();
    std::vector<size_t> chosen;
    for (size_t j : before) {
      if (budget <= 0) break;
      chosen.push_back(j);
      --budget;
    }
    for (size_t j : after) {
      if (budget <= 0) break;
      chosen.push_back(j);
      --budget;
    }
    if (chosen.empty()) continue;
    std::sort(chosen.begin(), chosen.end());
    std::vector<std::vector<Token>> donations;
    for (size_t j : chosen) donations.push_back(donor_adjectives(sentences[j]));
    if (!donate_adjectives(&sentences[i], donations)) continue;
    for (size_t j : chosen) {
      sentences[i].first().message_count +=
          sentences[j].first().message_count;
      merge_bookkeeping(&sentences[i], sentences[j]);
    }
    sentences[i].merged = SentenceSpec::MergeKind::AdjectiveDonation;
    for (size_t k = chosen.size(); k-- > 0;) {
      sentences.erase(sentences.begin() + chosen[k]);
      if (chosen[k] < i) --i;
    }
  }

  // Same-verb conjunction: the longest adjacent run within the cap wins.
  for (size_t i = 0; i < sentences.size(); ++i) {
    if (collapse_disjunctive_same_verb(&sentences[i])) {
      elide_repeated_heads(&sentences[i]);
      continue;
    }
    if (!is_simple_property_sentence(sentences[i]) ||
        !sentences[i].first().subject_verb_lead() ||
        !sentences[i].aggregation_allowed) {
      continue;
    }
    size_t run = 1;
    while (i + run < sentences.size()) {
      const SentenceSpec& next = sentences[i + run];
      if (!is_simple_property_sentence(next) ||
          !next.first().subject_verb_lead() ||
          !compatible(sentences[i], next) ||
          next.subject_entity() != sentences[i].subject_entity() ||
          !same_verb_form(sentences[i].first(), next.first()) ||
          static_cast<int>(run) + 1 > cap) {
        break;
      }
      ++run;
    }
    if (run < 2) continue;
    SentenceSpec merged = merge_same_verb_run(sentences, i, run);
    elide_repeated_heads(&merged);
    sentences[i] = std::move(merged);
    sentences.erase(sentences.begin() + i + 1, sentences.begin() + i + run);
  }

  // Different-verbs conjunction: adjacent same-subject simple sentences chain
  // into one clause conjunction.
  for (size_t i = 0; i < sentences.size(); ++i) {
    if (!is_simple_property_sentence(sentences[i]) ||
        !sentences[i].aggregation_allowed) {
      continue;
    }
    size_t run = 1;
    while (i + run < sentences.size()) {
      const SentenceSpec& next = sentences[i + run];
      if (!is_simple_property_sentence(next) ||
          !compatible(sentences[i], next) ||
          next.subject_entity() != sentences[i].subject_entity() ||
          static_cast<int>(run) + 1 > cap) {
        break;
      }
      ++run;
    }
    if (run < 2) continue;
    SentenceSpec merged = sentences[i];
    for (size_t k = 1; k < run; ++k) {
      merged.clauses.push_back(sentences[i + k].first());
      merge_bookkeeping(&merged, sentences[i + k]);
    }
    merged.clause_join = "and";
    merged.merged = SentenceSpec::MergeKind::ClauseConjunction;
    sentences[i] = std::move(merged);
    sentences.erase(sentences.begin() + i + 1, sentences.begin() + i + run);
  }

  return sentences;
}

}  // namespace owltext
