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
// Surface realization: articles, capitalization, punctuation, list
// connectives, and the output formats (plain, headed, structured dump).

#ifndef OWLTEXT_REALIZER_HPP_
#define OWLTEXT_REALIZER_HPP_

#include <string>
#include <vector>

#include "owltext/resources.hpp"
#include "owltext/sentence.hpp"

namespace owltext {

struct RealizerContext {
  const Params* params = nullptr;
  std::string language = "en";
};

struct RenderedSentence {
  std::string text;
  std::string section;
  std::vector<std::string> sources;
  std::vector<std::string> entities;
};

// Comma-separated with a serial comma before the final connective; two items
// join with the bare connective.
Phrase render_list(const std::vector<Phrase>& items, const std::string& kind,
                   const RealizerContext& ctx);
std::string render_list_text(const std::vector<std::string>& items,
                             const std::string& kind, const RealizerContext& ctx);

RenderedSentence render_sentence(const SentenceSpec& spec,
                                 const RealizerContext& ctx);

enum class OutputFormat { Plain, Headed, Dump };

struct RenderOptions {
  OutputFormat format = OutputFormat::Plain;
};

std::string render_text(const std::vector<SentenceSpec>& sentences,
                        const RealizerContext& ctx, const RenderOptions& options,
                        const SectionConfig& sections);

}  // namespace owltext

#endif  // OWLTEXT_REALIZER_HPP_
