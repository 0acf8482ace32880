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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cctype>
#include <random>

#include "owltext/parser.hpp"
#include "owltext/pipeline.hpp"
#include "owltext/realizer.hpp"

#include <fstream>
#include <sstream>

using namespace owltext;

namespace {

Params default_params;

RealizerContext context() {
  RealizerContext ctx;
  ctx.params = &default_params;
  return ctx;
}

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(OWLTEXT_TEST_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SentenceSpec simple_sentence(const std::string& subject_text,
                             const std::vector<std::string>& words) {
  SentenceSpec spec;
  Clause clause;
  Chunk subject;
  subject.kind = Chunk::Kind::Subject;
  subject.subject.entity = Iri{"urn:x", "x"};
  subject.subject.resolved = true;
  Token t;
  t.text = subject_text;
  subject.subject.expression.tokens.push_back(t);
  clause.chunks.push_back(std::move(subject));
  Phrase rest;
  for (const std::string& w : words) {
    Token token;
    token.text = w;
    rest.tokens.push_back(token);
  }
  clause.chunks.push_back(Chunk::text(std::move(rest)));
  spec.clauses.push_back(std::move(clause));
  spec.source_keys.push_back("<x>");
  return spec;
}

}  // namespace

TEST_CASE("list rendering uses the serial comma") {
  RealizerContext ctx = context();
  CHECK(render_list_text({"Spain", "Italy", "Greece"}, "and", ctx) ==
        "Spain, Italy, and Greece");
  CHECK(render_list_text({"white", "rose", "red"}, "or", ctx) ==
        "white, rose, or red");
  CHECK(render_list_text({"A"}, "and", ctx) == "A");
  CHECK(render_list_text({"A", "B"}, "and", ctx) == "A and B");
  CHECK(render_list_text({"A", "B", "C", "D"}, "and", ctx) == "A, B, C, and D");
}

TEST_CASE("sentences are capitalized and terminated") {
  RealizerContext ctx = context();
  SentenceSpec spec = simple_sentence("it", {"works"});
  CHECK(render_sentence(spec, ctx).text == "It works.");
}

TEST_CASE("indefinite articles resolve against the following word") {
  RealizerContext ctx = context();
  auto with_article = [&](const std::string& next) {
    SentenceSpec spec = simple_sentence("it", {});
    Phrase p;
    Token article;
    article.kind = Token::Kind::IndefArticle;
    p.tokens.push_back(article);
    Token word;
    word.text = next;
    p.tokens.push_back(word);
    spec.clauses[0].chunks.push_back(Chunk::text(std::move(p)));
    return render_sentence(spec, ctx).text;
  };
  CHECK(with_article("aryballos") == "It an aryballos.");
  CHECK(with_article("laptop") == "It a laptop.");
  CHECK(with_article("Intel") == "It an Intel.");
  CHECK(with_article("110") == "It a 110.");

  // The configurable exception lists override the vowel heuristic.
  Params params;
  params.article_a_exceptions = {"European"};
  params.article_an_exceptions = {"hour"};
  RealizerContext custom;
  custom.params = &params;
  SentenceSpec spec = simple_sentence("it", {});
  Phrase p;
  Token article;
  article.kind = Token::Kind::IndefArticle;
  p.tokens.push_back(article);
  Token word;
  word.text = "European";
  p.tokens.push_back(word);
  spec.clauses[0].chunks.push_back(Chunk::text(std::move(p)));
  CHECK(render_sentence(spec, custom).text == "It a European.");
}

TEST_CASE("vowel heuristic plus exceptions agree with an oracle lexicon") {
  // Oracle: first alphabetic character decides, letters aeiou take "an";
  // exception lists override.
  Params params;
  params.article_an_exceptions = {"hour", "honest"};
  params.article_a_exceptions = {"European", "one", "unique"};
  RealizerContext ctx;
  ctx.params = &params;
  const char* words[] = {"aryballos", "laptop", "hour",   "honest", "European",
                         "one",       "unique", "statue", "Intel",  "exhibit",
                         "830",       "110",    "zebra",  "apple"};
  for (const char* w : words) {
    std::string word(w);
    bool an;
    if (std::find(params.article_an_exceptions.begin(),
                  params.article_an_exceptions.end(),
                  word) != params.article_an_exceptions.end()) {
      an = true;
    } else if (std::find(params.article_a_exceptions.begin(),
                         params.article_a_exceptions.end(),
                         word) != params.article_a_exceptions.end()) {
      an = false;
    } else {
      char first = word[0];
      an = first == 'a' || first == 'e' || first == 'i' || first == 'o' ||
           first == 'u' || first == 'A' || first == 'E' || first == 'I' ||
           first == 'O' || first == 'U';
    }
    SentenceSpec spec = simple_sentence("it", {"is"});
    Phrase p;
    Token article;
    article.kind = Token::Kind::IndefArticle;
    p.tokens.push_back(article);
    Token token;
    token.text = word;
    p.tokens.push_back(token);
    spec.clauses[0].chunks.push_back(Chunk::text(std::move(p)));
    std::string text = render_sentence(spec, ctx).text;
    CAPTURE(word);
    CHECK(text.find(an ? " an " : " a ") != std::string::npos);
  }
}

TEST_CASE("rendered sentences are well formed") {
  OntologyModel model;
  {
    ParseResult parsed = parse_ontology(read_file("museum.ofn"));
    REQUIRE(parsed.errors.empty());
    model = std::move(parsed.model);
  }
  ResourceLoadResult loaded = load_resources(read_file("museum_resources.json"));
  REQUIRE(loaded.ok());
  PipelineOptions options;
  options.distance = 2;
  PipelineResult result = describe(model, loaded.set, ":exhibit24", options);
  std::istringstream sentences(result.text);
  std::string sentence;
  // Plain output: one paragraph, sentences separated by ". ".
  REQUIRE_FALSE(result.text.empty());
  CHECK(std::isupper(static_cast<unsigned char>(result.text[0])));
  CHECK(result.text.back() == '.');
  CHECK(result.text.find("  ") == std::string::npos);
  CHECK(result.text.find(" ,") == std::string::npos);
  CHECK(result.text.find(" .") == std::string::npos);
  CHECK(result.text.find(" :") == std::string::npos);
}

TEST_CASE("plain and headed outputs carry the same sentences") {
  OntologyModel model;
  {
    ParseResult parsed = parse_ontology(read_file("stoa.ofn"));
    REQUIRE(parsed.errors.empty());
    model = std::move(parsed.model);
  }
  ResourceLoadResult loaded = load_resources(read_file("stoa_resources.json"));
  REQUIRE(loaded.ok());
  PipelineOptions options;
  options.no_aggregation = true;
  PipelineResult plain =
      describe(model, loaded.set, ":stoaZeusEleutherios", options);
  options.format = OutputFormat::Headed;
  PipelineResult headed =
      describe(model, loaded.set, ":stoaZeusEleutherios", options);
  // Strip the "Display: " markers and compare.
  std::string stripped = headed.text;
  for (const char* marker :
       {"Location: ", "Construction: ", "Use: ", "Condition: "}) {
    size_t at = stripped.find(marker);
    REQUIRE(at != std::string::npos);
    stripped.erase(at, std::string(marker).size());
  }
  CHECK(stripped == plain.text);
}

TEST_CASE("empty input renders an empty document") {
  RealizerContext ctx = context();
  RenderOptions options;
  SectionConfig sections;
  CHECK(render_text({}, ctx, options, sections).empty());
}
