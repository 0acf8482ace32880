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

#include "owltext/lexicalizer.hpp"
#include "owltext/parser.hpp"
#include "owltext/realizer.hpp"
#include "owltext/refgen.hpp"

using namespace owltext;

namespace {

const char kPrefix[] = "Prefix(:=<https://example.org/lex#>)\n";

struct Fixture {
  OntologyModel model;
  ResourceSet resources;
  LexContext ctx;

  Fixture(const std::string& ontology, const std::string& resource_json) {
    ParseResult parsed = parse_ontology(std::string(kPrefix) + ontology);
    REQUIRE(parsed.errors.empty());
    model = std::move(parsed.model);
    ResourceLoadResult loaded = load_resources(resource_json);
    for (const Diagnostic& d : loaded.diagnostics) {
      INFO(d.message);
      REQUIRE(false);
    }
    resources = std::move(loaded.set);
    ctx.resources = &resources;
    ctx.model = &model;
  }

  Iri iri(const std::string& local) const {
    return Iri{"https://example.org/lex#" + local, ":" + local};
  }

  Message message_for(const std::string& target) {
    Iri entity = iri(target);
    bool is_class = model.is_class(entity) && !model.is_individual(entity);
    FactPlan plan = merge_fact_plan(retrieve_messages(model, entity, is_class, 1));
    REQUIRE(plan.primary.size() >= 1);
    return plan.primary[0];
  }

  std::string realize(const Message& message) {
    std::vector<SentenceSpec> sentences = {instantiate(message, ctx)};
    RefgenContext refgen;
    refgen.lex = ctx;
    refgen.primary_target = message.first().subject;
    resolve_references(&sentences, refgen);
    RealizerContext realizer;
    realizer.params = &resources.params;
    realizer.language = ctx.language;
    return render_sentence(sentences[0], realizer).text;
  }

  std::string realize_target(const std::string& target) {
    return realize(message_for(target));
  }
};

const char kBuiltinResources[] = R"({
  "prefixes": {"": "https://example.org/lex#"},
  "lexicon": [
    {"id": "eosNoun", "pos": "noun", "forms": {"en": {"sg": "EOS 450D"}}},
    {"id": "cameraNoun", "pos": "noun",
     "forms": {"en": {"sg": "camera", "pl": "cameras"}}},
    {"id": "photographicAdj", "pos": "adjective",
     "forms": {"en": {"base": "photographic"}}},
    {"id": "cheapAdj", "pos": "adjective", "forms": {"en": {"base": "cheap"}}},
    {"id": "wineColorNoun", "pos": "noun",
     "forms": {"en": {"sg": "wine color", "pl": "wine colors"}}},
    {"id": "whiteAdj", "pos": "adjective", "forms": {"en": {"base": "white"}}},
    {"id": "roseAdj", "pos": "adjective", "forms": {"en": {"base": "rose"}}},
    {"id": "redAdj", "pos": "adjective", "forms": {"en": {"base": "red"}}},
    {"id": "n97Noun", "pos": "noun", "forms": {"en": {"sg": "N97"}}},
    {"id": "n97MiniNoun", "pos": "noun", "forms": {"en": {"sg": "N97 mini"}}},
    {"id": "rebelNoun", "pos": "noun", "forms": {"en": {"sg": "Rebel XSi"}}},
    {"id": "aryballosNoun", "pos": "noun",
     "forms": {"en": {"sg": "aryballos", "pl": "aryballoi"}}},
    {"id": "vaseNoun", "pos": "noun", "forms": {"en": {"sg": "vase", "pl": "vases"}}}
  ],
  "names": [
    {"id": "eosName", "entity": ":eos450d", "language": "en",
     "article": "definite", "number": "sg",
     "slots": [{"kind": "head", "lexeme": "eosNoun", "pos": "noun"}]},
    {"id": "cameraName", "entity": ":PhotographicCamera", "language": "en",
     "article": "none", "number": "sg",
     "slots": [
       {"kind": "lexical", "lexeme": "photographicAdj", "pos": "adjective"},
       {"kind": "head", "lexeme": "cameraNoun", "pos": "noun"}
     ]},
    {"id": "cheapName", "entity": ":Cheap", "language": "en",
     "article": "none", "number": "sg",
     "slots": [{"kind": "head", "lexeme": "cheapAdj", "pos": "adjective"}]},
    {"id": "wineColorName", "entity": ":WineColor", "language": "en",
     "article": "indefinite", "number": "sg",
     "slots": [{"kind": "head", "lexeme": "wineColorNoun", "pos": "noun"}]},
    {"id": "whiteName", "entity": ":white", "language": "en",
     "article": "none", "number": "sg",
     "slots": [{"kind": "head", "lexeme": "whiteAdj", "pos": "adjective"}]},
    {"id": "roseName", "entity": ":rose", "language": "en",
     "article": "none", "number": "sg",
     "slots": [{"kind": "head", "lexeme": "roseAdj", "pos": "adjective"}]},
    {"id": "redName", "entity": ":red", "language": "en",
     "article": "none", "number": "sg",
     "slots": [{"kind": "head", "lexeme": "redAdj", "pos": "adjective"}]},
    {"id": "n97Name", "entity": ":n97", "language": "en",
     "article": "definite", "number": "sg",
     "slots": [{"kind": "head", "lexeme": "n97Noun", "pos": "noun"}]},
    {"id": "n97MiniName", "entity": ":n97mini", "language": "en",
     "article": "definite", "number": "sg",
     "slots": [{"kind": "head", "lexeme": "n97MiniNoun", "pos": "noun"}]},
    {"id": "rebelName", "entity": ":rebelXSi", "language": "en",
     "article": "definite", "number": "sg",
     "slots": [{"kind": "head", "lexeme": "rebelNoun", "pos": "noun"}]},
    {"id": "aryballoiName", "entity": ":Aryballos", "language": "en",
     "article": "none", "number": "pl",
     "slots": [{"kind": "head", "lexeme": "aryballosNoun", "pos": "noun"}]},
    {"id": "vaseName", "entity": ":Vase", "language": "en",
     "article": "none", "number": "sg",
     "slots": [{"kind": "head", "lexeme": "vaseNoun", "pos": "noun"}]}
  ]
})";

}  // namespace

TEST_CASE("built-in class plans choose noun or adjective variants") {
  Fixture f(R"(
ClassAssertion(:PhotographicCamera :eos450d)
ClassAssertion(:Cheap :eos450d)
SubClassOf(:Aryballos :Vase)
SubClassOf(:StEmilionX :Red2)
)",
            kBuiltinResources);
  FactPlan plan =
      merge_fact_plan(retrieve_messages(f.model, f.iri("eos450d"), false, 1));
  CHECK(f.realize(plan.primary[0]) == "The EOS 450D is a photographic camera.");
  CHECK(f.realize(plan.primary[1]) == "The EOS 450D is cheap.");
  // Plural subject: the copula agrees with the name's default number.
  CHECK(f.realize_target("Aryballos") == "Aryballoi are a kind of vase.");
}

TEST_CASE("one-of, different and same individuals built-ins") {
  Fixture f(R"(
ClassAssertion(ObjectOneOf(:white :rose :red) :WineColor)
DifferentIndividuals(:n97 :n97mini)
SameIndividual(:eos450d :rebelXSi)
)",
            kBuiltinResources);
  CHECK(f.realize_target("WineColor") == "A wine color is white, rose, or red.");
  CHECK(f.realize_target("n97") == "The N97 is not identical to the N97 mini.");
  CHECK(f.realize_target("eos450d") ==
        "The EOS 450D is identical to the Rebel XSi.");
}

namespace {

const char kWineResources[] = R"({
  "prefixes": {"": "https://example.org/lex#"},
  "lexicon": [
    {"id": "grapeNoun", "pos": "noun",
     "forms": {"en": {"sg": "grape", "pl": "grapes"}}},
    {"id": "product145Noun", "pos": "noun", "forms": {"en": {"sg": "Product 145"}}},
    {"id": "makeVerb", "pos": "verb",
     "forms": {"en": {"base": "make", "present.passive.3sg": "is made",
                      "past.passive.3sg": "was made", "participle": "made"}}},
    {"id": "useVerb", "pos": "verb",
     "forms": {"en": {"base": "use", "past.passive.3sg": "was used",
                      "past.passive.3pl": "were used", "participle": "used"}}},
    {"id": "haveVerb", "pos": "verb",
     "forms": {"en": {"base": "have", "present.active.3sg": "has",
                      "present.active.3pl": "have"}}}
  ],
  "names": [
    {"id": "productName", "entity": ":product145", "language": "en",
     "article": "none", "number": "sg",
     "slots": [{"kind": "head", "lexeme": "product145Noun", "pos": "noun"}]},
    {"id": "grapeClassName", "entity": ":Grape", "language": "en",
     "article": "none", "number": "pl",
     "slots": [{"kind": "head", "lexeme": "grapeNoun", "pos": "noun"}]}
  ],
  "plans": [
    {"id": "madeFromGrapePlan", "property": ":madeFromGrape", "language": "en",
     "slots": [
       {"kind": "owner", "case": "nom"},
       {"kind": "verb", "lexeme": "makeVerb", "tense": "present", "voice": "passive"},
       {"kind": "prep", "text": "from"},
       {"kind": "filler", "case": "acc"}
     ]},
    {"id": "usedDuringPlan", "property": ":usedDuring", "language": "en",
     "slots": [
       {"kind": "owner", "case": "nom"},
       {"kind": "verb", "lexeme": "useVerb", "tense": "past", "voice": "passive"},
       {"kind": "prep", "text": "during"},
       {"kind": "filler", "case": "acc"}
     ]},
    {"id": "hasFlashPlan", "property": ":hasFlash", "language": "en",
     "slots": [
       {"kind": "owner", "case": "nom"},
       {"kind": "verb", "lexeme": "haveVerb", "tense": "present", "polarity": "auto"},
       {"kind": "text", "text": "a built-in flash"},
       {"kind": "filler", "case": "acc"}
     ]}
  ]
})";

}  // namespace

TEST_CASE("modified plans derive from the unmodified plan") {
  Fixture f(R"(
ClassAssertion(ObjectMaxCardinality(1 :madeFromGrape) :product145)
ClassAssertion(ObjectMinCardinality(2 :madeFromGrape) :product145)
ClassAssertion(ObjectExactCardinality(3 :madeFromGrape :Grape) :product145)
ClassAssertion(ObjectSomeValuesFrom(:madeFromGrape :Grape) :product145)
ClassAssertion(ObjectAllValuesFrom(:madeFromGrape :Grape) :product145)
NegativeObjectPropertyAssertion(:usedDuring :product145 :warTime)
)",
            kWineResources);
  FactPlan plan =
      merge_fact_plan(retrieve_messages(f.model, f.iri("product145"), false, 1));
  REQUIRE(plan.primary.size() == 6);
  // Counting falls back to the last identifier token when the plan names none.
  CHECK(f.realize(plan.primary[0]) ==
        "Product 145 is made from at most one grape.");
  CHECK(f.realize(plan.primary[1]) ==
        "Product 145 is made from at least two grapes.");
  // A qualifier class counts through its own name.
  CHECK(f.realize(plan.primary[2]) ==
        "Product 145 is made from exactly three grapes.");
  CHECK(f.realize(plan.primary[3]) ==
        "Product 145 is made from at least some grapes.");
  CHECK(f.realize(plan.primary[4]) ==
        "Product 145 is made from only grapes.");
  CHECK(f.realize(plan.primary[5]) ==
        "Product 145 was not used during war time.");
}

TEST_CASE("stripping the modifier tokens recovers the base sentence") {
  Fixture f(R"(
ClassAssertion(ObjectAllValuesFrom(:madeFromGrape :Grape) :product145)
ClassAssertion(ObjectSomeValuesFrom(:madeFromGrape :Grape) :product145)
ClassAssertion(ObjectHasValue(:madeFromGrape :Grape) :product145)
NegativeObjectPropertyAssertion(:usedDuring :product145 :warTime)
ObjectPropertyAssertion(:usedDuring :product145 :warTime)
)",
            kWineResources);
  FactPlan plan =
      merge_fact_plan(retrieve_messages(f.model, f.iri("product145"), false, 1));
  std::string base = f.realize(plan.primary[2]);
  std::string all_values = f.realize(plan.primary[0]);
  std::string some_values = f.realize(plan.primary[1]);
  CHECK(all_values == "Product 145 is made from only grapes.");
  CHECK(some_values == "Product 145 is made from at least some grapes.");
  auto strip = [](std::string text, const std::string& needle) {
    size_t at = text.find(needle);
    REQUIRE(at != std::string::npos);
    return text.erase(at, needle.size());
  };
  CHECK(strip(all_values, "only ") == base);
  CHECK(strip(some_values, "at least some ") == base);
  CHECK(strip(f.realize(plan.primary[3]), "not ") == f.realize(plan.primary[4]));
}

TEST_CASE("boolean fillers drive verb polarity") {
  Fixture f(R"(
DataPropertyAssertion(:hasFlash :cameraX "false"^^xsd:boolean)
DataPropertyAssertion(:hasFlash :cameraY "true"^^xsd:boolean)
)",
            kWineResources);
  FactPlan x = merge_fact_plan(retrieve_messages(f.model, f.iri("cameraX"), false, 1));
  FactPlan y = merge_fact_plan(retrieve_messages(f.model, f.iri("cameraY"), false, 1));
  CHECK(f.realize(x.primary[0]) == "Camera x does not have a built-in flash.");
  CHECK(f.realize(y.primary[0]) == "Camera y has a built-in flash.");
}

TEST_CASE("verb number agrees with the subject name") {
  Fixture f(R"(
ObjectPropertyAssertion(:usedDuring :product145 :warTime)
ObjectPropertyAssertion(:usedDuring :stoas :warTime)
)",
            R"({
  "prefixes": {"": "https://example.org/lex#"},
  "lexicon": [
    {"id": "useVerb", "pos": "verb",
     "forms": {"en": {"base": "use", "past.passive.3sg": "was used",
                      "past.passive.3pl": "were used", "participle": "used"}}},
    {"id": "stoaNoun", "pos": "noun", "forms": {"en": {"sg": "stoa", "pl": "stoas"}}}
  ],
  "names": [
    {"id": "stoasName", "entity": ":stoas", "language": "en",
     "article": "none", "number": "pl",
     "slots": [{"kind": "head", "lexeme": "stoaNoun", "pos": "noun"}]}
  ],
  "plans": [
    {"id": "usedDuringPlan", "property": ":usedDuring", "language": "en",
     "slots": [
       {"kind": "owner", "case": "nom"},
       {"kind": "verb", "lexeme": "useVerb", "tense": "past", "voice": "passive"},
       {"kind": "prep", "text": "during"},
       {"kind": "filler", "case": "acc"}
     ]}
  ]
})");
  CHECK(f.realize_target("product145") == "Product145 was used during war time.");
  CHECK(f.realize_target("stoas") == "Stoas were used during war time.");
}

TEST_CASE("filler realization covers names, literals, and concatenation") {
  Fixture f(R"(
ClassAssertion(:ItalianWinePiemonte :wine32)
DataPropertyAssertion(:hasSpeed :wine32 "2"^^xsd:float)
ObjectPropertyAssertion(:hasPrice :tecra8 :priceNode)
DataPropertyAssertion(:hasAmount :priceNode "850"^^xsd:float)
ObjectPropertyAssertion(:hasCurrency :priceNode :euroCurrency)
)",
            R"({
  "prefixes": {"": "https://example.org/lex#"},
  "lexicon": [
    {"id": "wineNoun", "pos": "noun", "forms": {"en": {"sg": "wine", "pl": "wines"}}},
    {"id": "italianAdj", "pos": "adjective", "forms": {"en": {"base": "Italian"}}},
    {"id": "regionNoun", "pos": "noun", "forms": {"en": {"sg": "region"}}},
    {"id": "euroNoun", "pos": "noun", "forms": {"en": {"sg": "Euro"}}},
    {"id": "costVerb", "pos": "verb",
     "forms": {"en": {"base": "cost", "present.active.3sg": "costs"}}}
  ],
  "names": [
    {"id": "piemonteName", "entity": ":ItalianWinePiemonte", "language": "en",
     "article": "indefinite", "number": "sg",
     "slots": [
       {"kind": "article", "article": "indef"},
       {"kind": "lexical", "lexeme": "italianAdj", "pos": "adjective"},
       {"kind": "head", "lexeme": "wineNoun", "pos": "noun"},
       {"kind": "prep", "text": "from"},
       {"kind": "text", "text": "the Piemonte"},
       {"kind": "lexical", "lexeme": "regionNoun", "pos": "noun", "form": "sg"}
     ]},
    {"id": "euroName", "entity": ":euroCurrency", "language": "en",
     "article": "none", "number": "sg",
     "slots": [{"kind": "head", "lexeme": "euroNoun", "pos": "noun"}]}
  ],
  "plans": [
    {"id": "hasPricePlan", "property": ":hasPrice", "language": "en",
     "slots": [
       {"kind": "owner", "case": "nom"},
       {"kind": "verb", "lexeme": "costVerb", "tense": "present"},
       {"kind": "filler_concat", "parts": [
         {"property": ":hasAmount", "mode": "value"},
         {"property": ":hasCurrency", "mode": "name"}
       ]}
     ]}
  ]
})");
  FactPlan plan =
      merge_fact_plan(retrieve_messages(f.model, f.iri("wine32"), false, 1));
  // The class name carries its own article and structure.
  CHECK(f.realize(plan.primary[0]) ==
        "Wine32 is an Italian wine from the Piemonte region.");
  // Literal lexical forms pass through untouched.
  CHECK(f.realize(plan.primary[1]) == "Wine32 has speed 2.");

  FactPlan price =
      merge_fact_plan(retrieve_messages(f.model, f.iri("tecra8"), false, 1));
  CHECK(f.realize(price.primary[0]) == "Tecra8 costs 850 Euro.");
}

TEST_CASE("plan resolution order: authored, builtin, derived, default") {
  Fixture f(R"(
ClassAssertion(:PhotographicCamera :eos450d)
ObjectPropertyAssertion(:unplanned :eos450d :thing)
)",
            kBuiltinResources);
  Message inst = f.message_for("eos450d");
  ResolvedPlan builtin = plan_for(inst.first(), f.ctx);
  CHECK(builtin.origin == ResolvedPlan::Origin::BuiltIn);

  FactPlan plan =
      merge_fact_plan(retrieve_messages(f.model, f.iri("eos450d"), false, 1));
  ResolvedPlan fallback = plan_for(plan.primary[1].first(), f.ctx);
  CHECK(fallback.origin == ResolvedPlan::Origin::Default);

  // Authored keyword plans override the built-in table.
  ResourceLoadResult with_keyword = load_resources(R"({
    "lexicon": [{"id": "classify", "pos": "verb",
                 "forms": {"en": {"present.passive.3sg": "is classified as"}}}],
    "plans": [{"id": "instPlan", "property": "instanceOf", "language": "en",
               "slots": [{"kind": "owner", "case": "nom"},
                          {"kind": "verb", "lexeme": "classify",
                           "tense": "present", "voice": "passive"},
                          {"kind": "filler", "case": "acc"}]}]
  })");
  REQUIRE(with_keyword.ok());
  LexContext ctx2 = f.ctx;
  ctx2.resources = &with_keyword.set;
  ResolvedPlan authored = plan_for(inst.first(), ctx2);
  CHECK(authored.origin == ResolvedPlan::Origin::Authored);
  CHECK(authored.plan.id == "instPlan");

  // With authored plans disabled the built-in table returns.
  ctx2.use_authored_plans = false;
  CHECK(plan_for(inst.first(), ctx2).origin == ResolvedPlan::Origin::BuiltIn);
}

TEST_CASE("default plan shape is subject, property text, filler") {
  Fixture f("ObjectPropertyAssertion(:locatedIn :a :b)\n", "{}");
  f.ctx.use_authored_plans = false;
  SentenceSpec spec = instantiate(f.message_for("a"), f.ctx);
  REQUIRE(spec.clauses.size() == 1);
  const Clause& clause = spec.first();
  REQUIRE(clause.chunks.size() == 3);
  CHECK(clause.chunks[0].kind == Chunk::Kind::Subject);
  CHECK(clause.chunks[1].kind == Chunk::Kind::Text);
  CHECK(clause.chunks[2].kind == Chunk::Kind::FillerList);
  CHECK(clause.from_default_plan);
  CHECK(f.realize_target("a") == "A located in b.");
}

TEST_CASE("missing inflection reports the lexeme and descriptor") {
  Fixture f("ObjectPropertyAssertion(:usedDuring :x :y)\n",
            R"({
  "lexicon": [{"id": "useVerb", "pos": "verb",
               "forms": {"en": {"past.passive.3sg": "was used"}}}],
  "plans": [{"id": "p", "property": "https://example.org/lex#usedDuring",
             "language": "en",
             "slots": [{"kind": "owner", "case": "nom"},
                        {"kind": "verb", "lexeme": "useVerb",
                         "tense": "present", "voice": "active"},
                        {"kind": "filler", "case": "acc"}]}]
})");
  CHECK_THROWS_WITH_AS(f.realize_target("x"),
                       doctest::Contains("useVerb"), GenerationError);
}

TEST_CASE("every message yields a sentence in every mode") {
  Fixture f(R"(
ClassAssertion(ObjectMaxCardinality(2 :p) :t)
ClassAssertion(ObjectUnionOf(ObjectHasValue(:q :u) ObjectHasValue(:q :v)) :t)
DifferentIndividuals(:t :other)
DataPropertyAssertion(:r :t "5"^^xsd:integer)
)",
            "{}");
  FactPlan plan = merge_fact_plan(retrieve_messages(f.model, f.iri("t"), false, 1));
  for (bool authored : {true, false}) {
    for (bool names : {true, false}) {
      f.ctx.use_authored_plans = authored;
      f.ctx.use_nl_names = names;
      for (const Message& m : plan.primary) {
        std::string text = f.realize(m);
        CHECK_FALSE(text.empty());
        CHECK(text.back() == '.');
      }
    }
  }
}
