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
// Domain-dependent generation resources: lexicon entries, natural-language
// names, sentence plans, topical sections, interest assignments, and global
// parameters. Loaded from a single JSON document; immutable after load.

#ifndef OWLTEXT_RESOURCES_HPP_
#define OWLTEXT_RESOURCES_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "owltext/parser.hpp"

namespace owltext {

// Per-user-type appropriateness / interest scores. A missing user type falls
// back to the "default" entry.
struct Appropriateness {
  std::map<std::string, int> scores;

  int score_for(const std::string& user_type) const {
    auto it = scores.find(user_type);
    if (it != scores.end()) return it->second;
    it = scores.find("default");
    return it != scores.end() ? it->second : 0;
  }
};

struct LexiconEntry {
  enum class Pos { Verb, Noun, Adjective };

  std::string id;
  Pos pos = Pos::Noun;
  // language -> form descriptor -> word form. Descriptors are dotted keys:
  // verbs "past.passive.3sg" (plus "participle", "base", "neg.*" overrides),
  // nouns "sg" / "pl" optionally suffixed with a case, adjectives "base".
  std::map<std::string, std::map<std::string, std::string>> forms;
  std::map<std::string, std::vector<std::string>> genders;  // nouns, per language
  bool copula = false;  // marks "to be"; several aggregation rules key on it

  // Longest-prefix descriptor lookup; returns nullopt when no key matches.
  std::optional<std::string> lookup(const std::string& descriptor,
                                    const std::string& language) const;
};

struct NameSlot {
  enum class Kind { Article, Head, Lexical, Preposition, Text };

  Kind kind = Kind::Text;
  std::string article;  // "def" | "indef"
  std::string lexeme;
  LexiconEntry::Pos pos = LexiconEntry::Pos::Noun;
  std::string form;  // optional fixed form descriptor for Lexical slots
  std::string text;
  bool capitalize = false;
};

struct NlName {
  std::string id;
  std::string entity;  // absolute IRI
  std::string language;
  std::vector<NameSlot> slots;
  std::string article_policy = "none";  // definite | indefinite | none
  std::string default_number = "sg";
  Appropriateness appropriateness;

  int head_slot() const;
};

struct PlanSlot {
  enum class Kind { Owner, Verb, Lexical, Preposition, Text, Filler, FillerConcat };

  Kind kind = Kind::Text;
  // Owner / Filler
  std::string grammatical_case = "nom";
  std::string re_policy = "auto";  // auto | name
  // Verb
  std::string lexeme;
  std::string tense = "present";
  std::string voice = "active";
  std::string polarity = "positive";  // positive | negative | auto
  int agree_with = -1;                // slot index; -1 agrees with the owner
  // Lexical
  LexiconEntry::Pos pos = LexiconEntry::Pos::Noun;
  std::string form;
  // Preposition / Text
  std::string text;
  bool capitalize = false;
  // FillerConcat
  struct ConcatPart {
    std::string property;  // absolute IRI
    std::string mode;      // value | name
  };
  std::vector<ConcatPart> parts;
};

// The noun phrase used when counting filler values ("grape variety",
// "countries"). `pre` words precede the inflected noun.
struct CountingPhrase {
  std::vector<std::string> pre;
  std::string noun;
};

struct SentencePlan {
  std::string id;
  std::string property;  // absolute property IRI or domain-independent keyword
  std::string language;
  std::vector<PlanSlot> slots;
  bool aggregation_allowed = true;
  Appropriateness appropriateness;
  std::optional<CountingPhrase> counting;

  int owner_slot() const;
  int verb_slot() const;
};

struct Section {
  std::string name;
  std::string display;
  std::vector<std::string> properties;  // assignment order doubles as POrder
};

struct SectionConfig {
  std::vector<Section> sections;
  std::vector<std::string> order;  // ranked sections; others follow, declaration order

  bool empty() const { return sections.empty(); }
  std::optional<std::string> section_of(const std::string& property_key) const;
  // Rank of a property inside its section; nullopt when unordered.
  std::optional<int> property_rank(const std::string& section,
                                   const std::string& property_key) const;
  std::optional<int> section_rank(const std::string& name) const;
  int section_declaration_index(const std::string& name) const;
  std::string display_of(const std::string& name) const;
};

struct InterestAssignment {
  std::string property;   // absolute property IRI or keyword; required
  std::string cls;        // class scope, optional
  std::string entity;     // entity scope, optional (wins over cls)
  std::string user_type;  // empty applies to every user type
  int score = 0;
  std::optional<int> threshold;
};

struct Params {
  std::map<std::string, int> max_messages_per_page;      // keyed by user type
  std::map<std::string, int> max_messages_per_sentence;  // keyed by user type
  int max_fact_distance = 1;
  int default_interest_score = 1;
  std::optional<int> default_assimilation_threshold;  // absent: never assimilated
  std::map<std::string, std::map<std::string, std::string>> connectives;
  std::vector<std::string> article_an_exceptions;
  std::vector<std::string> article_a_exceptions;
  // language -> gender -> case -> surface form (empty string = dropped pronoun)
  std::map<std::string, std::map<std::string, std::map<std::string, std::string>>>
      pronouns;

  int page_cap(const std::string& user_type) const;
  int sentence_cap(const std::string& user_type) const;
  std::string connective(const std::string& language, const std::string& kind) const;
  std::optional<std::string> pronoun(const std::string& language,
                                     const std::string& gender,
                                     const std::string& grammatical_case) const;
};

struct ResourceSet {
  std::map<std::string, std::string> prefixes;
  std::vector<LexiconEntry> lexicon;
  std::vector<NlName> names;
  std::vector<SentencePlan> plans;
  std::set<std::string> anonymous;  // absolute IRIs
  SectionConfig sections;
  std::vector<InterestAssignment> interest;
  Params params;

  // Authored entries first, then the built-in copula entry.
  const LexiconEntry* find_lexeme(const std::string& id) const;
  std::vector<const NlName*> names_for(const std::string& entity,
                                       const std::string& language) const;
  std::vector<const SentencePlan*> plans_for(const std::string& property_key,
                                             const std::string& language) const;
  bool is_anonymous(const std::string& entity) const {
    return anonymous.count(entity) > 0;
  }
  // Exact table lookup; throws GenerationError naming lexeme and descriptor.
  std::string inflect(const std::string& lexeme, const std::string& descriptor,
                      const std::string& language) const;
};

struct ResourceLoadResult {
  ResourceSet set;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

ResourceLoadResult load_resources(const std::string& json_text);
std::string serialize_resources(const ResourceSet& set);

// The English copula, available without authoring.
const LexiconEntry* builtin_lexeme(const std::string& id);
extern const char kBeLexeme[];

// Highest appropriateness for the user type wins; ties break by declaration
// order. Candidates must be non-empty.
template <typename T>
const T* select_variant(const std::vector<const T*>& candidates,
                        const std::string& user_type) {
  const T* best = nullptr;
  int best_score = 0;
  for (const T* candidate : candidates) {
    int score = candidate->appropriateness.score_for(user_type);
    if (best == nullptr || score > best_score) {
      best = candidate;
      best_score = score;
    }
  }
  return best;
}

}  // namespace owltext

#endif  // OWLTEXT_RESOURCES_HPP_
