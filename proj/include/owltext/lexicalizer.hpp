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
// Lexicalization: pick a sentence plan for each message (authored, built-in,
// derived for modified properties, or the default plan) and instantiate it as
// a SentenceSpec with realized fillers and agreement.

#ifndef OWLTEXT_LEXICALIZER_HPP_
#define OWLTEXT_LEXICALIZER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "owltext/resources.hpp"
#include "owltext/sentence.hpp"
#include "owltext/triples.hpp"

namespace owltext {

struct LexContext {
  const ResourceSet* resources = nullptr;
  const OntologyModel* model = nullptr;
  std::string language = "en";
  std::string user_type = "default";
  bool use_authored_plans = true;  // off in the no-sentence-plans ablation
  bool use_nl_names = true;        // off in the no-NL-names ablation
};

struct ResolvedPlan {
  enum class Origin { Authored, BuiltIn, Derived, Default };

  SentencePlan plan;
  Origin origin = Origin::Default;
  std::optional<Modifier> modifier;
  bool polarity_flipped = false;
  std::vector<std::string> filler_prefix;  // "at most", "only", ...
  std::optional<CountingPhrase> counting;
};

// Plan resolution: authored plan, built-in plan for domain-independent
// predicates, derived plan for modified predicates, default plan otherwise.
// Total: every triple resolves to some plan.
ResolvedPlan plan_for(const MessageTriple& triple, const LexContext& ctx);

struct FillerRealization {
  std::vector<Phrase> members;
  std::string join = "and";
};

// Builds the surface phrase for an entity: its selected NL name, else its
// label, else its tokenized identifier. `article_override` may be "indef",
// "def", "noarticle", or empty to follow the name's own policy.
Phrase name_phrase(const Iri& entity, const LexContext& ctx,
                   const std::string& grammatical_case,
                   const std::string& article_override = "",
                   const std::string& number_override = "");

FillerRealization realize_filler(const Filler& filler, const LexContext& ctx,
                                 const std::string& grammatical_case,
                                 const ResolvedPlan& plan,
                                 const std::string& property_key);

SentenceSpec instantiate(const Message& message, const LexContext& ctx);

// Head-word gender of the entity's name, falling back to the nearest class
// with a name; empty means neuter.
std::vector<std::string> gender_of(const Iri& entity, const LexContext& ctx);

std::string number_word(int n);

}  // namespace owltext

#endif  // OWLTEXT_LEXICALIZER_HPP_
