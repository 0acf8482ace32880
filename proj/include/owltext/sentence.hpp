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
// The sentence specification that flows from lexicalization through
// aggregation and referring-expression generation into surface realization.
// Everything is fully specified except subject referring expressions, which
// stay symbolic until the whole text is assembled.

#ifndef OWLTEXT_SENTENCE_HPP_
#define OWLTEXT_SENTENCE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "owltext/triples.hpp"

namespace owltext {

struct Token {
  enum class Kind { Word, IndefArticle, DefArticle, Punct };
  enum class Pos { None, Noun, Adjective, Preposition, Number };

  std::string text;  // empty for unresolved indefinite articles
  Kind kind = Kind::Word;
  Pos pos = Pos::None;
  bool capitalize = false;
  bool head = false;  // head word of a natural-language name
};

struct Phrase {
  enum class Source { NlName, Label, TokenizedId, LiteralValue, Fixed };

  std::vector<Token> tokens;
  Source source = Source::Fixed;
  std::string number = "sg";
  std::vector<std::string> genders;  // empty: unknown, read as neuter
  int head_index = -1;

  bool empty() const { return tokens.empty(); }
};

// An unresolved subject slot; refgen fills `expression`.
struct SubjectRef {
  Iri entity;
  std::string grammatical_case = "nom";
  std::string re_policy = "auto";  // auto | name
  std::string number = "sg";
  bool resolved = false;
  Phrase expression;
};

struct VerbChunk {
  std::string lexeme;
  std::string tense = "present";
  std::string voice = "active";
  bool negative = false;
  std::string number = "sg";
  std::string realized;  // surface form, possibly multi-word ("was used")
  bool copula = false;
};

struct Chunk {
  enum class Kind { Subject, Verb, Text, FillerList, Punct };

  Kind kind = Kind::Text;
  SubjectRef subject;            // Subject
  VerbChunk verb;                // Verb
  Phrase phrase;                 // Text
  bool preposition = false;      // Text originating from a preposition slot
  std::vector<Phrase> members;   // FillerList
  std::string list_kind = "and"; // how FillerList members join
  std::string punct;             // Punct

  static Chunk text(Phrase p, bool prep = false) {
    Chunk c;
    c.kind = Kind::Text;
    c.phrase = std::move(p);
    c.preposition = prep;
    return c;
  }
  static Chunk punctuation(std::string p) {
    Chunk c;
    c.kind = Kind::Punct;
    c.punct = std::move(p);
    return c;
  }
};

// One clause: a subject, usually a verb, and its complement. After same-verb
// aggregation the post-verb chunks of the merged clauses live in
// `complements`; otherwise everything is in `chunks`.
struct Clause {
  enum class PredKind { InstanceOf, IsA, OtherBuiltin, Property, Modified };

  std::vector<Chunk> chunks;
  std::vector<std::vector<Chunk>> complements;
  std::string complement_join = "and";

  std::string source_key;
  PredKind pred_kind = Clause::PredKind::Property;
  std::string property;  // scope key of the underlying property
  std::optional<Modifier> modifier;
  int card_number = 0;
  bool from_default_plan = false;
  int message_count = 1;

  int subject_chunk() const;
  int verb_chunk() const;
  const SubjectRef* subject() const;
  SubjectRef* subject();
  // True when the clause is shaped [Subject][Verb]... so its complement can
  // be split off.
  bool subject_verb_lead() const;
};

struct SentenceSpec {
  enum class MergeKind {
    None,
    ClassTail,            // class sentence extended by a participle/expression
    AdjectiveDonation,
    SameVerb,
    ClauseConjunction,
    CardinalityValues,
  };

  std::vector<Clause> clauses;    // >1 for disjunctive messages and clause chains
  std::string clause_join = "and";
  std::string section;
  bool second_level = false;
  bool aggregation_allowed = true;
  bool disjunctive = false;
  MergeKind merged = MergeKind::None;
  std::vector<std::string> source_keys;
  std::vector<std::string> entities;  // entity IRIs realized in filler position

  const Clause& first() const { return clauses.front(); }
  Clause& first() { return clauses.front(); }
  Iri subject_entity() const;       // first clause's subject
  Iri last_subject_entity() const;  // last clause's subject
  int message_count() const;
  bool single_message() const { return message_count() == 1; }
};

}  // namespace owltext

#endif  // OWLTEXT_SENTENCE_HPP_
