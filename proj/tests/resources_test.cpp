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

#include <json.hpp>
#include <sstream>

#include "owltext/resources.hpp"

using namespace owltext;
using nlohmann::json;

namespace {

const char kValidDoc[] = R"({
  "prefixes": {"": "https://example.org/ont#"},
  "params": {
    "max_messages_per_page": 20,
    "max_messages_per_sentence": {"default": 3, "child": 2},
    "default_interest_score": 1
  },
  "lexicon": [
    {"id": "use", "pos": "verb", "forms": {"en": {
      "base": "use",
      "past.passive.3sg": "was used", "past.passive.3pl": "were used",
      "participle": "used"}}},
    {"id": "find", "pos": "verb", "forms": {"en": {
      "base": "find", "past.active.3sg": "found",
      "past.passive.3sg": "was found", "participle": "found"}}},
    {"id": "aryballos", "pos": "noun", "gender": {"en": "neuter"},
     "forms": {"en": {"sg": "aryballos", "pl": "aryballoi"}}},
    {"id": "period", "pos": "noun", "forms": {"en": {"sg": "period", "pl": "periods"}}},
    {"id": "classical", "pos": "adjective", "forms": {"en": {"base": "classical"}}}
  ],
  "names": [
    {"id": "classicalPeriodName", "entity": ":classicalPeriod", "language": "en",
     "article": "definite", "number": "sg",
     "slots": [
       {"kind": "article", "article": "def"},
       {"kind": "lexical", "lexeme": "classical", "pos": "adjective", "capitalize": true},
       {"kind": "head", "lexeme": "period", "pos": "noun"}
     ]}
  ],
  "plans": [
    {"id": "usedDuringPeriod", "property": ":usedDuringPeriod", "language": "en",
     "counting": {"noun": "period"},
     "slots": [
       {"kind": "owner", "case": "nom"},
       {"kind": "verb", "lexeme": "use", "tense": "past", "voice": "passive"},
       {"kind": "prep", "text": "during"},
       {"kind": "filler", "case": "acc"}
     ]}
  ],
  "anonymous": [":exhibit24"],
  "sections": {
    "order": ["useSection"],
    "list": [{"name": "useSection", "display": "Use",
              "properties": [":usedDuringPeriod"]}]
  },
  "interest": [
    {"property": ":usedDuringPeriod", "score": 2, "threshold": 2}
  ]
})";

ResourceSet load_ok(const std::string& text) {
  ResourceLoadResult result = load_resources(text);
  for (const Diagnostic& d : result.diagnostics) {
    INFO(d.message);
    CHECK(false);
  }
  return std::move(result.set);
}

}  // namespace

TEST_CASE("a complete resource document loads and resolves") {
  ResourceSet set = load_ok(kValidDoc);
  CHECK(set.lexicon.size() == 5);
  CHECK(set.names.size() == 1);
  CHECK(set.plans.size() == 1);
  CHECK(set.is_anonymous("https://example.org/ont#exhibit24"));
  CHECK(set.sections.section_of("https://example.org/ont#usedDuringPeriod") ==
        "useSection");
  CHECK(set.params.page_cap("anyone") == 20);
  CHECK(set.params.sentence_cap("child") == 2);
  CHECK(set.params.sentence_cap("adult") == 3);
}

TEST_CASE("empty document is a valid empty resource set") {
  ResourceSet set = load_ok("{}");
  CHECK(set.lexicon.empty());
  CHECK(set.plans.empty());
  CHECK(set.sections.empty());
  CHECK(set.params.page_cap("default") == 50);
}

TEST_CASE("trial-sized resource counts load and validate") {
  // 5 sentence plans, 67 lexicon entries, 41 natural-language names, 2 sections.
  json doc = json::object();
  doc["prefixes"] = {{"", "https://example.org/wine#"}};
  json lexicon = json::array();
  for (int i = 0; i < 67; ++i) {
    json entry = {{"id", "lex" + std::to_string(i)},
                  {"pos", i % 3 == 0 ? "verb" : i % 3 == 1 ? "noun" : "adjective"},
                  {"forms", {{"en", {{"base", "w" + std::to_string(i)}}}}}};
    lexicon.push_back(entry);
  }
  doc["lexicon"] = lexicon;
  json names = json::array();
  for (int i = 0; i < 41; ++i) {
    json name = {{"id", "name" + std::to_string(i)},
                 {"entity", ":e" + std::to_string(i)},
                 {"language", "en"},
                 {"slots", json::array({{{"kind", "head"},
                                         {"lexeme", "lex" + std::to_string(1 + 3 * (i % 20))},
                                         {"pos", "noun"}}})}};
    names.push_back(name);
  }
  doc["names"] = names;
  json plans = json::array();
  for (int i = 0; i < 5; ++i) {
    json plan = {{"id", "plan" + std::to_string(i)},
                 {"property", ":p" + std::to_string(i)},
                 {"language", "en"},
                 {"slots", json::array({{{"kind", "owner"}, {"case", "nom"}},
                                        {{"kind", "verb"},
                                         {"lexeme", "lex" + std::to_string(3 * (i % 5))},
                                         {"tense", "present"}},
                                        {{"kind", "filler"}, {"case", "acc"}}})}};
    plans.push_back(plan);
  }
  doc["plans"] = plans;
  doc["sections"] = {
      {"order", {"s1", "s2"}},
      {"list", json::array({{{"name", "s1"}, {"display", "One"},
                             {"properties", {":p0", ":p1", ":p2"}}},
                            {{"name", "s2"}, {"display", "Two"},
                             {"properties", {":p3", ":p4"}}}})}};
  ResourceSet set = load_ok(doc.dump());
  CHECK(set.plans.size() == 5);
  CHECK(set.lexicon.size() == 67);
  CHECK(set.names.size() == 41);
  CHECK(set.sections.sections.size() == 2);
}

TEST_CASE("dangling references produce diagnostics naming both sides") {
  std::string doc = R"({
    "prefixes": {"": "https://example.org/ont#"},
    "plans": [{"id": "p1", "property": ":x", "language": "en",
               "slots": [{"kind": "owner"},
                         {"kind": "verb", "lexeme": "ghost"},
                         {"kind": "filler"}]}]
  })";
  ResourceLoadResult result = load_resources(doc);
  REQUIRE(result.diagnostics.size() == 1);
  CHECK(result.diagnostics[0].message.find("p1") != std::string::npos);
  CHECK(result.diagnostics[0].message.find("ghost") != std::string::npos);
}

TEST_CASE("all validation errors are reported together") {
  std::string doc = R"({
    "names": [{"id": "n1", "entity": ":a", "language": "en", "slots": []}],
    "plans": [{"id": "p1", "property": "", "language": "en",
               "slots": [{"kind": "verb", "lexeme": "ghost"}]}],
    "interest": [{"property": ":p", "score": -1}]
  })";
  ResourceLoadResult result = load_resources(doc);
  CHECK(result.diagnostics.size() >= 4);
}

TEST_CASE("inflection is exact table lookup") {
  ResourceSet set = load_ok(kValidDoc);
  CHECK(set.inflect("use", "past.passive.3sg", "en") == "was used");
  CHECK(set.inflect("find", "base", "en") == "find");
  CHECK(set.inflect("aryballos", "pl", "en") == "aryballoi");
  CHECK(set.inflect("aryballos", "sg.nom", "en") == "aryballos");
  CHECK_THROWS_WITH_AS(set.inflect("use", "future.active.3sg", "el"),
                       doctest::Contains("use"), GenerationError);
}

TEST_CASE("the builtin copula inflects without authoring") {
  ResourceSet set = load_ok("{}");
  CHECK(set.inflect("be", "present.active.3sg", "en") == "is");
  CHECK(set.inflect("be", "past.active.3pl", "en") == "were");
  CHECK(set.inflect("be", "neg.present.active.3sg", "en") == "is not");
  CHECK(set.find_lexeme("be")->copula);
}

TEST_CASE("variant selection follows appropriateness then declaration order") {
  SentencePlan depicts;
  depicts.id = "depicts";
  depicts.appropriateness.scores = {{"default", 2}, {"child", 1}};
  SentencePlan shows;
  shows.id = "shows";
  shows.appropriateness.scores = {{"default", 1}, {"child", 3}};
  std::vector<const SentencePlan*> candidates = {&depicts, &shows};
  CHECK(select_variant(candidates, "child")->id == "shows");
  CHECK(select_variant(candidates, "adult")->id == "depicts");

  std::vector<const SentencePlan*> single = {&depicts};
  CHECK(select_variant(single, "child")->id == "depicts");

  SentencePlan tie1, tie2;
  tie1.id = "first";
  tie2.id = "second";
  tie1.appropriateness.scores = {{"default", 1}};
  tie2.appropriateness.scores = {{"default", 1}};
  std::vector<const SentencePlan*> tied = {&tie1, &tie2};
  CHECK(select_variant(tied, "anyone")->id == "first");
}

TEST_CASE("serialization round-trips to an identical resource set") {
  ResourceSet first = load_ok(kValidDoc);
  std::string one = serialize_resources(first);
  ResourceSet second = load_ok(one);
  std::string two = serialize_resources(second);
  CHECK(one == two);
  CHECK(second.plans.size() == first.plans.size());
  CHECK(second.names.size() == first.names.size());
}

TEST_CASE("breaking any one cross-reference always yields a diagnostic") {
  json doc = json::parse(kValidDoc);
  // Mutation sites: every lexeme reference and the section order entry.
  struct Mutation {
    const char* label;
    void (*apply)(json&);
  };
  const Mutation mutations[] = {
      {"plan verb lexeme",
       [](json& d) { d["plans"][0]["slots"][1]["lexeme"] = "missing"; }},
      {"name head lexeme",
       [](json& d) { d["names"][0]["slots"][2]["lexeme"] = "missing"; }},
      {"name lexical lexeme",
       [](json& d) { d["names"][0]["slots"][1]["lexeme"] = "missing"; }},
      {"counting noun",
       [](json& d) { d["plans"][0]["counting"]["noun"] = "missing"; }},
      {"section order",
       [](json& d) { d["sections"]["order"][0] = "missing"; }},
      {"second owner slot",
       [](json& d) {
         d["plans"][0]["slots"].push_back(json{{"kind", "owner"}});
       }},
      {"dropped head",
       [](json& d) { d["names"][0]["slots"].erase(2); }},
      {"second filler",
       [](json& d) {
         d["plans"][0]["slots"].push_back(json{{"kind", "filler"}});
       }},
      {"duplicate name without distinct appropriateness",
       [](json& d) {
         json copy = d["names"][0];
         copy["id"] = "copy";
         d["names"].push_back(copy);
       }},
      {"duplicate lexeme id",
       [](json& d) {
         json copy = d["lexicon"][0];
         d["lexicon"].push_back(copy);
       }},
  };
  for (const Mutation& mutation : mutations) {
    json broken = doc;
    mutation.apply(broken);
    ResourceLoadResult result = load_resources(broken.dump());
    INFO(mutation.label);
    CHECK_FALSE(result.diagnostics.empty());
  }
}

TEST_CASE("language fallbacks for connectives and pronouns") {
  ResourceSet set = load_ok(R"({
    "params": {
      "connectives": {"el": {"and": "KAI", "or": "I"}},
      "pronouns": {"el": {"neuter": {"nom": ""}}}
    }
  })");
  CHECK(set.params.connective("el", "and") == "KAI");
  CHECK(set.params.connective("en", "and") == "and");
  CHECK(set.params.connective("fr", "or") == "or");
  CHECK(set.params.pronoun("el", "neuter", "nom") == std::string(""));
  CHECK(set.params.pronoun("en", "masculine", "nom") == std::string("he"));
  CHECK(set.params.pronoun("en", "neuter", "gen") == std::string("its"));
}
