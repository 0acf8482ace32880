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
// Sentence aggregation: greedy application of the rule families, in a fixed
// order, over adjacent same-section sentences, capped by the
// messages-per-sentence parameter (which the cardinality rules ignore).

#ifndef OWLTEXT_AGGREGATOR_HPP_
#define OWLTEXT_AGGREGATOR_HPP_

#include <optional>
#include <vector>

#include "owltext/resources.hpp"
#include "owltext/sentence.hpp"

namespace owltext {

struct AggregationContext {
  const ResourceSet* resources = nullptr;
  std::string language = "en";
  int max_messages_per_sentence = 3;
};

// Rule: avoid repeating a noun after multiple adjectives. Works on and/or
// lists whose members are adjective sequences sharing one head noun; drops
// every head but the last, and repeated indefinite articles. Returns true
// when the sentence changed.
bool elide_repeated_heads(SentenceSpec* spec);

// Rule: class sentence followed by a passive sentence about the same subject;
// the second subject and auxiliary are dropped.
std::optional<SentenceSpec> merge_class_passive(const SentenceSpec& class_sentence,
                                                const SentenceSpec& passive,
                                                const AggregationContext& ctx);

// Rule: class sentence followed by a copula + preposition-led complement about
// the same subject; the second subject and copula are dropped.
std::optional<SentenceSpec> merge_class_preposition(
    const SentenceSpec& class_sentence, const SentenceSpec& prep,
    const AggregationContext& ctx);

// Rule: class sentence whose filler class is the subject of an immediately
// following kind-of sentence; the second sentence attaches as an apposition
// ("This is an aryballos, a kind of vase.").
std::optional<SentenceSpec> merge_class_apposition(
    const SentenceSpec& class_sentence, const SentenceSpec& kind_of,
    const AggregationContext& ctx);

std::vector<SentenceSpec> aggregate(std::vector<SentenceSpec> sentences,
                                    const AggregationContext& ctx);

}  // namespace owltext

#endif  // OWLTEXT_AGGREGATOR_HPP_
