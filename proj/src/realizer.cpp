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

#include "owltext/realizer.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace owltext {

namespace {

Token comma() {
  Token t;
  t.kind = Token::Kind::Punct;
  t.text = ",";
  return t;
}

Token plain_word(const std::string& text) {
  Token t;
  t.text = text;
  return t;
}

void append_phrase(std::vector<Token>* out, const Phrase& phrase) {
  for (const Token& t : phrase.tokens) out->push_back(t);
}

// Joins complements the way merged same-verb sentences read: commas between
// earlier items, a bare connective before the last, nothing at all when the
// next complement starts with a preposition.
void append_complements(std::vector<Token>* out,
                        const std::vector<std::vector<Token>>& complements,
                        const std::string& connective) {
  for (size_t i = 0; i < complements.size(); ++i) {
    if (i > 0) {
      bool prep_led = !complements[i].empty() &&
                      complements[i].front().pos == Token::Pos::Preposition;
      if (!prep_led) {
        if (i + 1 == complements.size()) {
          out->push_back(plain_word(connective));
        } else {
          out->push_back(comma());
        }
      }
    }
    for (const Token& t : complements[i]) out->push_back(t);
  }
}

std::vector<Token> chunk_tokens(const Chunk& chunk, const RealizerContext& ctx);

std::vector<Token> chunks_tokens(const std::vector<Chunk>& chunks,
                                 const RealizerContext& ctx) {
  std::vector<Token> out;
  for (const Chunk& chunk : chunks) {
    for (Token& t : chunk_tokens(chunk, ctx)) out.push_back(std::move(t));
  }
  return out;
}

std::vector<Token> chunk_tokens(const Chunk& chunk, const RealizerContext& ctx) {
  std::vector<Token> out;
  switch (chunk.kind) {
    case Chunk::Kind::Subject: {
      if (!chunk.subject.resolved) {
        throw GenerationError(
            "internal: unresolved subject reference reached realization");
      }
      append_phrase(&out, chunk.subject.expression);
      break;
    }
    case Chunk::Kind::Verb: {
      std::istringstream in(chunk.verb.realized);
      std::string w;
      while (in >> w) out.push_back(plain_word(w));
      break;
    }
    case Chunk::Kind::Text:
      append_phrase(&out, chunk.phrase);
      break;
    case Chunk::Kind::FillerList: {
      Phrase joined = render_list(chunk.members, chunk.list_kind, ctx);
      append_phrase(&out, joined);
      break;
    }
    case Chunk::Kind::Punct: {
      Token t;
      t.kind = Token::Kind::Punct;
      t.text = chunk.punct;
      out.push_back(t);
      break;
    }
  }
  return out;
}

std::vector<Token> clause_tokens(const Clause& clause, const RealizerContext& ctx) {
  std::vector<Token> out = chunks_tokens(clause.chunks, ctx);
  if (!clause.complements.empty()) {
    std::vector<std::vector<Token>> complements;
    for (const std::vector<Chunk>& complement : clause.complements) {
      complements.push_back(chunks_tokens(complement, ctx));
    }
    append_complements(&out, complements,
                       ctx.params->connective(ctx.language,
                                              clause.complement_join));
  }
  return out;
}

bool is_vowel_start(const std::string& word) {
  for (char c : word) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      return lower == 'a' || lower == 'e' || lower == 'i' || lower == 'o' ||
             lower == 'u';
    }
    // A leading digit decides on its own: no vowel sound information, use "a".
    if (std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return false;
}

void resolve_articles(std::vector<Token>* tokens, const RealizerContext& ctx) {
  for (size_t i = 0; i < tokens->size(); ++i) {
    Token& t = (*tokens)[i];
    if (t.kind != Token::Kind::IndefArticle) continue;
    std::string next;
    for (size_t j = i + 1; j < tokens->size(); ++j) {
      if (!(*tokens)[j].text.empty() &&
          (*tokens)[j].kind != Token::Kind::Punct) {
        next = (*tokens)[j].text;
        break;
      }
    }
    bool an = is_vowel_start(next);
    if (ctx.params) {
      for (const std::string& w : ctx.params->article_an_exceptions) {
        if (w == next) an = true;
      }
      for (const std::string& w : ctx.params->article_a_exceptions) {
        if (w == next) an = false;
      }
    }
    t.text = an ? "an" : "a";
    t.kind = Token::Kind::Word;
  }
}

std::string join_tokens(const std::vector<Token>& tokens) {
  std::string out;
  for (const Token& t : tokens) {
    if (t.text.empty()) continue;
    std::string text = t.text;
    if (t.capitalize && !text.empty()) {
      text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    }
    if (out.empty()) {
      out = text;
      continue;
    }
    if (t.kind == Token::Kind::Punct) {
      out += text;
    } else {
      out += " " + text;
    }
  }
  return out;
}

}  // namespace

Phrase render_list(const std::vector<Phrase>& items, const std::string& kind,
                   const RealizerContext& ctx) {
  Phrase out;
  out.source = Phrase::Source::Fixed;
  std::string connective =
      ctx.params ? ctx.params->connective(ctx.language, kind) : kind;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i > 0) {
      if (items.size() == 2) {
        out.tokens.push_back(plain_word(connective));
      } else if (i + 1 == items.size()) {
        out.tokens.push_back(comma());
        out.tokens.push_back(plain_word(connective));
      } else {
        out.tokens.push_back(comma());
      }
    }
    append_phrase(&out.tokens, items[i]);
  }
  return out;
}

std::string render_list_text(const std::vector<std::string>& items,
                             const std::string& kind,
                             const RealizerContext& ctx) {
  std::vector<Phrase> phrases;
  for (const std::string& item : items) {
    Phrase p;
    p.tokens.push_back(plain_word(item));
    phrases.push_back(std::move(p));
  }
  return join_tokens(render_list(phrases, kind, ctx).tokens);
}

RenderedSentence render_sentence(const SentenceSpec& spec,
                                 const RealizerContext& ctx) {
  std::vector<Token> tokens;
  std::string connective =
      ctx.params ? ctx.params->connective(ctx.language, spec.clause_join)
                 : spec.clause_join;
  for (size_t i = 0; i < spec.clauses.size(); ++i) {
    if (i > 0) {
      // Two clauses: bare connective. Three or more: commas between clauses
      // and a serial comma before the final connective.
      if (spec.clauses.size() >= 3) tokens.push_back(comma());
      if (i + 1 == spec.clauses.size()) tokens.push_back(plain_word(connective));
    }
    for (Token& t : clause_tokens(spec.clauses[i], ctx)) {
      tokens.push_back(std::move(t));
    }
  }
  resolve_articles(&tokens, ctx);
  std::string text = join_tokens(tokens);
  // Sentence-initial capitalization and the terminal period.
  for (char& c : text) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      break;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) break;
  }
  if (!text.empty()) {
    char last = text.back();
    if (last != '.' && last != '!' && last != '?') text += '.';
  }
  RenderedSentence rendered;
  rendered.text = std::move(text);
  rendered.section = spec.section;
  rendered.sources = spec.source_keys;
  rendered.entities = spec.entities;
  return rendered;
}

std::string render_text(const std::vector<SentenceSpec>& sentences,
                        const RealizerContext& ctx, const RenderOptions& options,
                        const SectionConfig& sections) {
  std::vector<RenderedSentence> rendered;
  rendered.reserve(sentences.size());
  for (const SentenceSpec& spec : sentences) {
    rendered.push_back(render_sentence(spec, ctx));
  }
  if (options.format == OutputFormat::Dump) {
    std::ostringstream out;
    for (const RenderedSentence& sentence : rendered) {
      nlohmann::json record;
      record["text"] = sentence.text;
      record["section"] = sentence.section;
      record["sources"] = sentence.sources;
      record["entities"] = sentence.entities;
      out << record.dump() << '\n';
    }
    return out.str();
  }
  // Plain and headed: consecutive same-section sentences form a paragraph.
  std::ostringstream out;
  size_t i = 0;
  bool first_paragraph = true;
  while (i < rendered.size()) {
    size_t j = i;
    while (j < rendered.size() && rendered[j].section == rendered[i].section) ++j;
    if (!first_paragraph) out << "\n\n";
    first_paragraph = false;
    if (options.format == OutputFormat::Headed && !rendered[i].section.empty()) {
      std::string display = sections.display_of(rendered[i].section);
      if (display.empty()) display = rendered[i].section;
      out << display << ": ";
    }
    for (size_t k = i; k < j; ++k) {
      if (k > i) out << ' ';
      out << rendered[k].text;
    }
    i = j;
  }
  return out.str();
}

}  // namespace owltext
