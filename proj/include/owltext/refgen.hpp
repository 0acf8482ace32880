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
// Referring-expression generation: resolves every subject slot into a
// pronoun, a natural-language name, or a demonstrative phrase for anonymous
// targets. Clauses of a conjunction count as separate sentences for the
// same-subject pronoun test.

#ifndef OWLTEXT_REFGEN_HPP_
#define OWLTEXT_REFGEN_HPP_

#include <string>
#include <vector>

#include "owltext/lexicalizer.hpp"
#include "owltext/sentence.hpp"

namespace owltext {

struct RefgenContext {
  LexContext lex;
  Iri primary_target;
  bool refexpr_enabled = true;  // off in the no-refexpr ablation
  std::vector<std::string>* warnings = nullptr;
};

void resolve_references(std::vector<SentenceSpec>* sentences,
                        const RefgenContext& ctx);

// The pronoun surface form for a gender set; sets of two or more genders
// render as compounds like "he/she".
std::string pronoun_form(const std::vector<std::string>& genders,
                         const std::string& grammatical_case,
                         const std::string& number, const LexContext& ctx);

}  // namespace owltext

#endif  // OWLTEXT_REFGEN_HPP_
