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

#include "owltext/refgen.hpp"

namespace owltext {

namespace {

void warn(const RefgenContext& ctx, const std::string& message) {
  if (ctx.warnings) ctx.warnings->push_back(message);
}

Phrase pronoun_phrase(const std::vector<std::string>& genders,
                      const std::string& grammatical_case,
                      const std::string& number, const LexContext& ctx) {
  Phrase p;
  p.source = Phrase::Source::Fixed;
  p.number = number;
  std::string form = pronoun_form(genders, grammatical_case, number, ctx);
  if (!form.empty()) {
    Token t;
    t.text = form;
    p.tokens.push_back(std::move(t));
  }
  return p;
}

// "this" plus the name of the most specific non-anonymous class of the target
// that has a natural-language name; bare "this" in class-membership sentences
// and when no such class exists.
Phrase demonstrative_phrase(const SubjectRef& ref, bool bare,
                            const RefgenContext& ctx) {
  Phrase p;
  p.source = Phrase::Source::Fixed;
  p.number = "sg";
  Token demo;
  demo.text = "this";
  p.tokens.push_back(demo);
  if (bare) return p;
  const LexContext& lex = ctx.lex;
  if (lex.model && lex.use_nl_names) {
    for (const Iri& cls : lex.model->specificity_order(ref.entity)) {
      if (lex.resources->is_anonymous(cls.value)) continue;
      if (lex.resources->names_for(cls.value, lex.language).empty()) continue;
      Phrase name = name_phrase(cls, lex, ref.grammatical_case, "noarticle", "sg");
      for (Token& t : name.tokens) p.tokens.push_back(std::move(t));
      return p;
    }
  }
  warn(ctx, "anonymous entity " + ref.entity.display() +
                " has no named non-anonymous class; using bare \"this\"");
  return p;
}

}  // namespace

std::string pronoun_form(const std::vector<std::string>& genders,
                         const std::string& grammatical_case,
                         const std::string& number, const LexContext& ctx) {
  const Params& params = ctx.resources->params;
  if (number == "pl") {
    auto form = params.pronoun(ctx.language, "plural", grammatical_case);
    return form ? *form : "they";
  }
  std::vector<std::string> effective = genders;
  if (effective.empty()) effective.push_back("neuter");
  std::string out;
  for (size_t i = 0; i < effective.size(); ++i) {
    auto form = params.pronoun(ctx.language, effective[i], grammatical_case);
    if (!form) form = params.pronoun(ctx.language, "neuter", grammatical_case);
    if (!form) continue;
    if (i > 0 && !out.empty() && !form->empty()) out += "/";
    out += *form;
  }
  return out;
}

void resolve_references(std::vector<SentenceSpec>* sentences,
                        const RefgenContext& ctx) {
  const Iri* previous_subject = nullptr;
  for (SentenceSpec& spec : *sentences) {
    for (Clause& clause : spec.clauses) {
      SubjectRef* ref = clause.subject();
      if (ref == nullptr) continue;
      const Iri& subject = ref->entity;
      bool same_as_previous =
          previous_subject != nullptr && *previous_subject == subject;
      bool pronoun = ctx.refexpr_enabled && same_as_previous &&
                     ref->re_policy != "name";
      if (pronoun) {
        std::vector<std::string> genders = gender_of(subject, ctx.lex);
        ref->expression = pronoun_phrase(genders, ref->grammatical_case,
                                         ref->number, ctx.lex);
      } else if (ctx.refexpr_enabled && subject == ctx.primary_target &&
                 ctx.lex.resources->is_anonymous(subject.value)) {
        // Anonymity outranks an always-name policy for the primary target.
        bool bare = clause.pred_kind == Clause::PredKind::InstanceOf ||
                    clause.pred_kind == Clause::PredKind::IsA;
        ref->expression = demonstrative_phrase(*ref, bare, ctx);
        ref->number = "sg";
      } else {
        ref->expression = name_phrase(subject, ctx.lex, ref->grammatical_case);
      }
      ref->resolved = true;
      previous_subject = &ref->entity;
    }
  }
}

}  // namespace owltext
