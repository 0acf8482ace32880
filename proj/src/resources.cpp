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

#include "owltext/resources.hpp"

#include <algorithm>

#include <json.hpp>

namespace owltext {

using nlohmann::json;

const char kBeLexeme[] = "be";

namespace {

const std::map<std::string, std::string> kBuiltinResourcePrefixes = {
    {"rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"},
    {"rdfs", "http://www.w3.org/2000/01/rdf-schema#"},
    {"xsd", "http://www.w3.org/2001/XMLSchema#"},
    {"owl", "http://www.w3.org/2002/07/owl#"},
};

const std::set<std::string> kKeywordProperties = {
    "isA", "instanceOf", "oneOf", "differentIndividuals", "sameIndividual"};

LexiconEntry make_be() {
  LexiconEntry be;
  be.id = kBeLexeme;
  be.pos = LexiconEntry::Pos::Verb;
  be.copula = true;
  be.forms["en"] = {
      {"base", "be"},
      {"present.active.3sg", "is"},
      {"present.active.3pl", "are"},
      {"past.active.3sg", "was"},
      {"past.active.3pl", "were"},
      {"neg.present.active.3sg", "is not"},
      {"neg.present.active.3pl", "are not"},
      {"neg.past.active.3sg", "was not"},
      {"neg.past.active.3pl", "were not"},
  };
  return be;
}

}  // namespace

const LexiconEntry* builtin_lexeme(const std::string& id) {
  static const LexiconEntry be = make_be();
  return id == kBeLexeme ? &be : nullptr;
}

std::optional<std::string> LexiconEntry::lookup(const std::string& descriptor,
                                                const std::string& language) const {
  auto lang_it = forms.find(language);
  if (lang_it == forms.end()) return std::nullopt;
  const auto& table = lang_it->second;
  std::string key = descriptor;
  while (true) {
    auto it = table.find(key);
    if (it != table.end()) return it->second;
    size_t dot = key.find_last_of('.');
    if (dot == std::string::npos) break;
    key.resize(dot);
  }
  // The citation form stands in for missing inflections, but never for a
  // missing negation row.
  if (descriptor != "base" && descriptor.rfind("neg.", 0) != 0) {
    auto it = table.find("base");
    if (it != table.end()) return it->second;
  }
  return std::nullopt;
}

int NlName::head_slot() const {
  for (size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].kind == NameSlot::Kind::Head) return static_cast<int>(i);
  }
  return -1;
}

int SentencePlan::owner_slot() const {
  for (size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].kind == PlanSlot::Kind::Owner) return static_cast<int>(i);
  }
  return -1;
}

int SentencePlan::verb_slot() const {
  for (size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].kind == PlanSlot::Kind::Verb) return static_cast<int>(i);
  }
  return -1;
}

std::optional<std::string> SectionConfig::section_of(
    const std::string& property_key) const {
  for (const Section& section : sections) {
    for (const std::string& property : section.properties) {
      if (property == property_key) return section.name;
    }
  }
  return std::nullopt;
}

std::optional<int> SectionConfig::property_rank(
    const std::string& section, const std::string& property_key) const {
  for (const Section& s : sections) {
    if (s.name != section) continue;
    for (size_t i = 0; i < s.properties.size(); ++i) {
      if (s.properties[i] == property_key) return static_cast<int>(i);
    }
  }
  return std::nullopt;
}

std::optional<int> SectionConfig::section_rank(const std::string& name) const {
  for (size_t i = 0; i < order.size(); ++i) {
    if (order[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

int SectionConfig::section_declaration_index(const std::string& name) const {
  for (size_t i = 0; i < sections.size(); ++i) {
    if (sections[i].name == name) return static_cast<int>(i);
  }
  return static_cast<int>(sections.size());
}

std::string SectionConfig::display_of(const std::string& name) const {
  for (const Section& section : sections) {
    if (section.name == name) return section.display;
  }
  return "";
}

int Params::page_cap(const std::string& user_type) const {
  auto it = max_messages_per_page.find(user_type);
  if (it != max_messages_per_page.end()) return it->second;
  it = max_messages_per_page.find("default");
  return it != max_messages_per_page.end() ? it->second : 50;
}

int Params::sentence_cap(const std::string& user_type) const {
  auto it = max_messages_per_sentence.find(user_type);
  if (it != max_messages_per_sentence.end()) return it->second;
  it = max_messages_per_sentence.find("default");
  return it != max_messages_per_sentence.end() ? it->second : 3;
}

std::string Params::connective(const std::string& language,
                               const std::string& kind) const {
  auto lang_it = connectives.find(language);
  if (lang_it != connectives.end()) {
    auto it = lang_it->second.find(kind);
    if (it != lang_it->second.end()) return it->second;
  }
  return kind == "or" ? "or" : "and";
}

std::optional<std::string> Params::pronoun(
    const std::string& language, const std::string& gender,
    const std::string& grammatical_case) const {
  auto lang_it = pronouns.find(language);
  if (lang_it != pronouns.end()) {
    auto gender_it = lang_it->second.find(gender);
    if (gender_it != lang_it->second.end()) {
      auto case_it = gender_it->second.find(grammatical_case);
      if (case_it != gender_it->second.end()) return case_it->second;
    }
  }
  static const std::map<std::string, std::map<std::string, std::string>> kEnglish = {
      {"masculine", {{"nom", "he"}, {"gen", "his"}, {"acc", "him"}}},
      {"feminine", {{"nom", "she"}, {"gen", "her"}, {"acc", "her"}}},
      {"neuter", {{"nom", "it"}, {"gen", "its"}, {"acc", "it"}}},
      {"plural", {{"nom", "they"}, {"gen", "their"}, {"acc", "them"}}},
  };
  auto gender_it = kEnglish.find(gender);
  if (gender_it == kEnglish.end()) return std::nullopt;
  auto case_it = gender_it->second.find(grammatical_case);
  if (case_it == gender_it->second.end()) return std::nullopt;
  return case_it->second;
}

const LexiconEntry* ResourceSet::find_lexeme(const std::string& id) const {
  for (const LexiconEntry& entry : lexicon) {
    if (entry.id == id) return &entry;
  }
  return builtin_lexeme(id);
}

std::vector<const NlName*> ResourceSet::names_for(
    const std::string& entity, const std::string& language) const {
  std::vector<const NlName*> out;
  for (const NlName& name : names) {
    if (name.entity == entity && name.language == language) out.push_back(&name);
  }
  return out;
}

std::vector<const SentencePlan*> ResourceSet::plans_for(
    const std::string& property_key, const std::string& language) const {
  std::vector<const SentencePlan*> out;
  for (const SentencePlan& plan : plans) {
    if (plan.property == property_key && plan.language == language) {
      out.push_back(&plan);
    }
  }
  return out;
}

std::string ResourceSet::inflect(const std::string& lexeme,
                                 const std::string& descriptor,
                                 const std::string& language) const {
  const LexiconEntry* entry = find_lexeme(lexeme);
  if (entry == nullptr) {
    throw GenerationError("unknown lexicon entry '" + lexeme + "'");
  }
  auto form = entry->lookup(descriptor, language);
  if (!form) {
    throw GenerationError("lexicon entry '" + lexeme + "' has no form for '" +
                          descriptor + "' in language '" + language + "'");
  }
  return *form;
}

namespace {

class Loader {
 public:
  explicit Loader(ResourceLoadResult* out) : out_(out) {}

  void error(const std::string& context, const std::string& message) {
    out_->diagnostics.push_back({0, 0, context + ": " + message});
  }

  std::string expand(const std::string& ref, const std::string& context) {
    if (ref.rfind("http://", 0) == 0 || ref.rfind("https://", 0) == 0 ||
        ref.rfind("urn:", 0) == 0) {
      return ref;
    }
    size_t colon = ref.find(':');
    if (colon == std::string::npos) return ref;  // keyword property
    std::string prefix = ref.substr(0, colon);
    std::string local = ref.substr(colon + 1);
    auto it = out_->set.prefixes.find(prefix);
    if (it != out_->set.prefixes.end()) return it->second + local;
    auto builtin = kBuiltinResourcePrefixes.find(prefix);
    if (builtin != kBuiltinResourcePrefixes.end()) return builtin->second + local;
    error(context, "unknown prefix '" + prefix + ":' in '" + ref + "'");
    return ref;
  }

  void load(const json& doc) {
    if (doc.contains("prefixes")) {
      for (auto& [name, value] : doc.at("prefixes").items()) {
        out_->set.prefixes[name] = value.get<std::string>();
      }
    }
    if (doc.contains("params")) load_params(doc.at("params"));
    if (doc.contains("lexicon")) load_lexicon(doc.at("lexicon"));
    if (doc.contains("names")) load_names(doc.at("names"));
    if (doc.contains("plans")) load_plans(doc.at("plans"));
    if (doc.contains("anonymous")) {
      for (const auto& entry : doc.at("anonymous")) {
        out_->set.anonymous.insert(expand(entry.get<std::string>(), "anonymous"));
      }
    }
    if (doc.contains("sections")) load_sections(doc.at("sections"));
    if (doc.contains("interest")) load_interest(doc.at("interest"));
    validate();
  }

 private:
  void load_user_type_map(const json& value, std::map<std::string, int>* out) {
    if (value.is_number_integer()) {
      (*out)["default"] = value.get<int>();
    } else if (value.is_object()) {
      for (auto& [key, v] : value.items()) (*out)[key] = v.get<int>();
    }
  }

  void load_params(const json& params) {
    Params& p = out_->set.params;
    if (params.contains("max_messages_per_page")) {
      load_user_type_map(params.at("max_messages_per_page"),
                         &p.max_messages_per_page);
    }
    if (params.contains("max_messages_per_sentence")) {
      load_user_type_map(params.at("max_messages_per_sentence"),
                         &p.max_messages_per_sentence);
    }
    if (params.contains("max_fact_distance")) {
      p.max_fact_distance = params.at("max_fact_distance").get<int>();
    }
    if (params.contains("default_interest_score")) {
      p.default_interest_score = params.at("default_interest_score").get<int>();
    }
    if (params.contains("default_assimilation_threshold") &&
        !params.at("default_assimilation_threshold").is_null()) {
      p.default_assimilation_threshold =
          params.at("default_assimilation_threshold").get<int>();
    }
    if (params.contains("connectives")) {
      for (auto& [lang, table] : params.at("connectives").items()) {
        for (auto& [kind, word] : table.items()) {
          p.connectives[lang][kind] = word.get<std::string>();
        }
      }
    }
    if (params.contains("article_an_exceptions")) {
      for (const auto& w : params.at("article_an_exceptions")) {
        p.article_an_exceptions.push_back(w.get<std::string>());
      }
    }
    if (params.contains("article_a_exceptions")) {
      for (const auto& w : params.at("article_a_exceptions")) {
        p.article_a_exceptions.push_back(w.get<std::string>());
      }
    }
    if (params.contains("pronouns")) {
      for (auto& [lang, genders] : params.at("pronouns").items()) {
        for (auto& [gender, cases] : genders.items()) {
          for (auto& [c, form] : cases.items()) {
            p.pronouns[lang][gender][c] = form.get<std::string>();
          }
        }
      }
    }
  }

  LexiconEntry::Pos parse_pos(const std::string& text, const std::string& context) {
    if (text == "verb") return LexiconEntry::Pos::Verb;
    if (text == "noun") return LexiconEntry::Pos::Noun;
    if (text == "adjective") return LexiconEntry::Pos::Adjective;
    error(context, "unknown part of speech '" + text + "'");
    return LexiconEntry::Pos::Noun;
  }

  void load_lexicon(const json& entries) {
    for (const json& e : entries) {
      LexiconEntry entry;
      entry.id = e.value("id", "");
      std::string context = "lexicon entry '" + entry.id + "'";
      if (entry.id.empty()) error("lexicon", "entry without id");
      entry.pos = parse_pos(e.value("pos", "noun"), context);
      if (e.contains("copula")) entry.copula = e.at("copula").get<bool>();
      if (e.contains("forms")) {
        for (auto& [lang, table] : e.at("forms").items()) {
          for (auto& [descriptor, form] : table.items()) {
            entry.forms[lang][descriptor] = form.get<std::string>();
          }
        }
      }
      if (e.contains("gender")) {
        for (auto& [lang, value] : e.at("gender").items()) {
          if (value.is_string()) {
            entry.genders[lang].push_back(value.get<std::string>());
          } else {
            for (const auto& g : value) {
              entry.genders[lang].push_back(g.get<std::string>());
            }
          }
        }
      }
      out_->set.lexicon.push_back(std::move(entry));
    }
  }

  Appropriateness load_appropriateness(const json& e) {
    Appropriateness a;
    if (e.contains("appropriateness")) {
      for (auto& [user_type, score] : e.at("appropriateness").items()) {
        a.scores[user_type] = score.get<int>();
      }
    } else {
      a.scores["default"] = 1;
    }
    return a;
  }

  void load_names(const json& names) {
    for (const json& n : names) {
      NlName name;
      name.id = n.value("id", "");
      std::string context = "name '" + name.id + "'";
      name.entity = expand(n.value("entity", ""), context);
      name.language = n.value("language", "en");
      name.article_policy = n.value("article", "none");
      name.default_number = n.value("number", "sg");
      name.appropriateness = load_appropriateness(n);
      if (n.contains("slots")) {
        for (const json& s : n.at("slots")) {
          NameSlot slot;
          std::string kind = s.value("kind", "");
          if (kind == "article") {
            slot.kind = NameSlot::Kind::Article;
            slot.article = s.value("article", "def");
          } else if (kind == "head") {
            slot.kind = NameSlot::Kind::Head;
            slot.lexeme = s.value("lexeme", "");
            slot.pos = parse_pos(s.value("pos", "noun"), context);
          } else if (kind == "lexical") {
            slot.kind = NameSlot::Kind::Lexical;
            slot.lexeme = s.value("lexeme", "");
            slot.pos = parse_pos(s.value("pos", "adjective"), context);
            slot.form = s.value("form", "");
          } else if (kind == "prep") {
            slot.kind = NameSlot::Kind::Preposition;
            slot.text = s.value("text", "");
          } else if (kind == "text") {
            slot.kind = NameSlot::Kind::Text;
            slot.text = s.value("text", "");
          } else {
            error(context, "unknown name slot kind '" + kind + "'");
          }
          slot.capitalize = s.value("capitalize", false);
          name.slots.push_back(std::move(slot));
        }
      }
      out_->set.names.push_back(std::move(name));
    }
  }

  void load_plans(const json& plans) {
    for (const json& p : plans) {
      SentencePlan plan;
      plan.id = p.value("id", "");
      std::string context = "plan '" + plan.id + "'";
      plan.property = expand(p.value("property", ""), context);
      plan.language = p.value("language", "en");
      plan.aggregation_allowed = p.value("aggregation_allowed", true);
      plan.appropriateness = load_appropriateness(p);
      if (p.contains("counting")) {
        CountingPhrase counting;
        const json& c = p.at("counting");
        if (c.contains("pre")) {
          for (const auto& w : c.at("pre")) {
            counting.pre.push_back(w.get<std::string>());
          }
        }
        counting.noun = c.value("noun", "");
        plan.counting = std::move(counting);
      }
      if (p.contains("slots")) {
        for (const json& s : p.at("slots")) {
          PlanSlot slot;
          std::string kind = s.value("kind", "");
          if (kind == "owner") {
            slot.kind = PlanSlot::Kind::Owner;
            slot.grammatical_case = s.value("case", "nom");
            slot.re_policy = s.value("re", "auto");
          } else if (kind == "verb") {
            slot.kind = PlanSlot::Kind::Verb;
            slot.lexeme = s.value("lexeme", "");
            slot.tense = s.value("tense", "present");
            slot.voice = s.value("voice", "active");
            slot.polarity = s.value("polarity", "positive");
            slot.agree_with = s.value("agree_with", -1);
          } else if (kind == "lexical") {
            slot.kind = PlanSlot::Kind::Lexical;
            slot.lexeme = s.value("lexeme", "");
            slot.pos = parse_pos(s.value("pos", "noun"), context);
            slot.form = s.value("form", "");
          } else if (kind == "prep") {
            slot.kind = PlanSlot::Kind::Preposition;
            slot.text = s.value("text", "");
          } else if (kind == "text") {
            slot.kind = PlanSlot::Kind::Text;
            slot.text = s.value("text", "");
          } else if (kind == "filler") {
            slot.kind = PlanSlot::Kind::Filler;
            slot.grammatical_case = s.value("case", "acc");
          } else if (kind == "filler_concat") {
            slot.kind = PlanSlot::Kind::FillerConcat;
            if (s.contains("parts")) {
              for (const json& part : s.at("parts")) {
                PlanSlot::ConcatPart concat;
                concat.property = expand(part.value("property", ""), context);
                concat.mode = part.value("mode", "name");
                slot.parts.push_back(std::move(concat));
              }
            }
          } else {
            error(context, "unknown plan slot kind '" + kind + "'");
          }
          slot.capitalize = s.value("capitalize", false);
          plan.slots.push_back(std::move(slot));
        }
      }
      out_->set.plans.push_back(std::move(plan));
    }
  }

  void load_sections(const json& sections) {
    if (sections.contains("order")) {
      for (const auto& name : sections.at("order")) {
        out_->set.sections.order.push_back(name.get<std::string>());
      }
    }
    if (sections.contains("list")) {
      for (const json& s : sections.at("list")) {
        Section section;
        section.name = s.value("name", "");
        section.display = s.value("display", "");
        if (s.contains("properties")) {
          for (const auto& p : s.at("properties")) {
            section.properties.push_back(
                expand(p.get<std::string>(), "section '" + section.name + "'"));
          }
        }
        out_->set.sections.sections.push_back(std::move(section));
      }
    }
  }

  void load_interest(const json& entries) {
    for (const json& e : entries) {
      InterestAssignment a;
      a.property = expand(e.value("property", ""), "interest assignment");
      if (e.contains("class")) {
        a.cls = expand(e.at("class").get<std::string>(), "interest assignment");
      }
      if (e.contains("entity")) {
        a.entity = expand(e.at("entity").get<std::string>(), "interest assignment");
      }
      a.user_type = e.value("user_type", "");
      a.score = e.value("score", 0);
      if (e.contains("threshold") && !e.at("threshold").is_null()) {
        a.threshold = e.at("threshold").get<int>();
      }
      out_->set.interest.push_back(std::move(a));
    }
  }

  // Cross-reference validation. Reports every problem, not just the first.
  void validate() {
    ResourceSet& set = out_->set;
    std::set<std::string> lexeme_ids;
    for (const LexiconEntry& entry : set.lexicon) {
      if (!lexeme_ids.insert(entry.id).second) {
        error("lexicon", "duplicate lexeme id '" + entry.id + "'");
      }
    }
    auto check_lexeme = [&](const std::string& id, const std::string& context) {
      if (id.empty()) {
        error(context, "missing lexeme reference");
      } else if (lexeme_ids.count(id) == 0 && builtin_lexeme(id) == nullptr) {
        error(context, "references unknown lexeme '" + id + "'");
      }
    };

    std::map<std::string, std::vector<const NlName*>> by_entity_lang;
    for (const NlName& name : set.names) {
      std::string context = "name '" + name.id + "'";
      int heads = 0;
      for (const NameSlot& slot : name.slots) {
        if (slot.kind == NameSlot::Kind::Head) {
          ++heads;
          check_lexeme(slot.lexeme, context);
        } else if (slot.kind == NameSlot::Kind::Lexical) {
          check_lexeme(slot.lexeme, context);
        }
      }
      if (heads != 1) {
        error(context, "needs exactly one head slot, found " +
                           std::to_string(heads));
      }
      by_entity_lang[name.entity + "\n" + name.language].push_back(&name);
    }
    for (const auto& [key, group] : by_entity_lang) {
      for (size_t i = 0; i < group.size(); ++i) {
        for (size_t j = i + 1; j < group.size(); ++j) {
          if (group[i]->appropriateness.scores == group[j]->appropriateness.scores) {
            error("name '" + group[j]->id + "'",
                  "duplicates name '" + group[i]->id +
                      "' for the same entity and language without distinct "
                      "appropriateness");
          }
        }
      }
    }

    for (const SentencePlan& plan : set.plans) {
      std::string context = "plan '" + plan.id + "'";
      if (plan.property.empty()) error(context, "missing property");
      int owners = 0, fillers = 0;
      for (size_t i = 0; i < plan.slots.size(); ++i) {
        const PlanSlot& slot = plan.slots[i];
        switch (slot.kind) {
          case PlanSlot::Kind::Owner:
            ++owners;
            break;
          case PlanSlot::Kind::Filler:
          case PlanSlot::Kind::FillerConcat:
            ++fillers;
            break;
          case PlanSlot::Kind::Verb:
            check_lexeme(slot.lexeme, context);
            if (slot.agree_with >= 0 &&
                (slot.agree_with >= static_cast<int>(plan.slots.size()) ||
                 plan.slots[slot.agree_with].kind != PlanSlot::Kind::Owner)) {
              error(context, "verb agreement reference does not point at an "
                             "owner slot");
            }
            break;
          case PlanSlot::Kind::Lexical:
            check_lexeme(slot.lexeme, context);
            break;
          default:
            break;
        }
      }
      if (owners != 1) {
        error(context,
              "needs exactly one owner slot, found " + std::to_string(owners));
      }
      if (fillers > 1) {
        error(context, "has more than one filler slot");
      }
      if (plan.counting) check_lexeme(plan.counting->noun, context + " counting");
    }

    std::map<std::string, std::string> property_sections;
    std::set<std::string> section_names;
    for (const Section& section : set.sections.sections) {
      if (!section_names.insert(section.name).second) {
        error("sections", "duplicate section '" + section.name + "'");
      }
      for (const std::string& property : section.properties) {
        auto [it, inserted] = property_sections.emplace(property, section.name);
        if (!inserted && it->second != section.name) {
          error("sections", "property '" + property +
                                "' is assigned to sections '" + it->second +
                                "' and '" + section.name + "'");
        }
      }
    }
    for (const std::string& name : set.sections.order) {
      if (section_names.count(name) == 0) {
        error("sections", "ordering references unknown section '" + name + "'");
      }
    }

    for (const InterestAssignment& a : set.interest) {
      if (a.property.empty()) error("interest", "assignment without property");
      if (a.score < 0) error("interest", "negative score");
      if (a.threshold && *a.threshold < 1) error("interest", "threshold below 1");
    }

    for (const auto& [user_type, cap] : set.params.max_messages_per_page) {
      if (cap < 1) {
        error("params", "max_messages_per_page for '" + user_type +
                            "' must be at least 1");
      }
    }
    for (const auto& [user_type, cap] : set.params.max_messages_per_sentence) {
      if (cap < 1) {
        error("params", "max_messages_per_sentence for '" + user_type +
                            "' must be at least 1");
      }
    }
  }

  ResourceLoadResult* out_;
};

json appropriateness_json(const Appropriateness& a) {
  json out = json::object();
  for (const auto& [user_type, score] : a.scores) out[user_type] = score;
  return out;
}

const char* pos_name(LexiconEntry::Pos pos) {
  switch (pos) {
    case LexiconEntry::Pos::Verb: return "verb";
    case LexiconEntry::Pos::Noun: return "noun";
    case LexiconEntry::Pos::Adjective: return "adjective";
  }
  return "noun";
}

}  // namespace

ResourceLoadResult load_resources(const std::string& json_text) {
  ResourceLoadResult result;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    result.diagnostics.push_back({0, 0, std::string("resource JSON: ") + e.what()});
    return result;
  }
  try {
    Loader loader(&result);
    loader.load(doc);
  } catch (const json::exception& e) {
    result.diagnostics.push_back(
        {0, 0, std::string("resource schema: ") + e.what()});
  }
  return result;
}

std::string serialize_resources(const ResourceSet& set) {
  json doc = json::object();
  if (!set.prefixes.empty()) {
    json prefixes = json::object();
    for (const auto& [name, expansion] : set.prefixes) prefixes[name] = expansion;
    doc["prefixes"] = prefixes;
  }
  {
    json params = json::object();
    const Params& p = set.params;
    if (!p.max_messages_per_page.empty()) {
      params["max_messages_per_page"] = p.max_messages_per_page;
    }
    if (!p.max_messages_per_sentence.empty()) {
      params["max_messages_per_sentence"] = p.max_messages_per_sentence;
    }
    params["max_fact_distance"] = p.max_fact_distance;
    params["default_interest_score"] = p.default_interest_score;
    if (p.default_assimilation_threshold) {
      params["default_assimilation_threshold"] = *p.default_assimilation_threshold;
    }
    if (!p.connectives.empty()) params["connectives"] = p.connectives;
    if (!p.article_an_exceptions.empty()) {
      params["article_an_exceptions"] = p.article_an_exceptions;
    }
    if (!p.article_a_exceptions.empty()) {
      params["article_a_exceptions"] = p.article_a_exceptions;
    }
    if (!p.pronouns.empty()) params["pronouns"] = p.pronouns;
    doc["params"] = params;
  }
  {
    json lexicon = json::array();
    for (const LexiconEntry& entry : set.lexicon) {
      json e = json::object();
      e["id"] = entry.id;
      e["pos"] = pos_name(entry.pos);
      if (entry.copula) e["copula"] = true;
      e["forms"] = entry.forms;
      if (!entry.genders.empty()) e["gender"] = entry.genders;
      lexicon.push_back(e);
    }
    doc["lexicon"] = lexicon;
  }
  {
    json names = json::array();
    for (const NlName& name : set.names) {
      json n = json::object();
      n["id"] = name.id;
      n["entity"] = name.entity;
      n["language"] = name.language;
      n["article"] = name.article_policy;
      n["number"] = name.default_number;
      n["appropriateness"] = appropriateness_json(name.appropriateness);
      json slots = json::array();
      for (const NameSlot& slot : name.slots) {
        json s = json::object();
        switch (slot.kind) {
          case NameSlot::Kind::Article:
            s["kind"] = "article";
            s["article"] = slot.article;
            break;
          case NameSlot::Kind::Head:
            s["kind"] = "head";
            s["lexeme"] = slot.lexeme;
            s["pos"] = pos_name(slot.pos);
            break;
          case NameSlot::Kind::Lexical:
            s["kind"] = "lexical";
            s["lexeme"] = slot.lexeme;
            s["pos"] = pos_name(slot.pos);
            if (!slot.form.empty()) s["form"] = slot.form;
            break;
          case NameSlot::Kind::Preposition:
            s["kind"] = "prep";
            s["text"] = slot.text;
            break;
          case NameSlot::Kind::Text:
            s["kind"] = "text";
            s["text"] = slot.text;
            break;
        }
        if (slot.capitalize) s["capitalize"] = true;
        slots.push_back(s);
      }
      n["slots"] = slots;
      names.push_back(n);
    }
    doc["names"] = names;
  }
  {
    json plans = json::array();
    for (const SentencePlan& plan : set.plans) {
      json p = json::object();
      p["id"] = plan.id;
      p["property"] = plan.property;
      p["language"] = plan.language;
      p["aggregation_allowed"] = plan.aggregation_allowed;
      p["appropriateness"] = appropriateness_json(plan.appropriateness);
      if (plan.counting) {
        json c = json::object();
        if (!plan.counting->pre.empty()) c["pre"] = plan.counting->pre;
        c["noun"] = plan.counting->noun;
        p["counting"] = c;
      }
      json slots = json::array();
      for (const PlanSlot& slot : plan.slots) {
        json s = json::object();
        switch (slot.kind) {
          case PlanSlot::Kind::Owner:
            s["kind"] = "owner";
            s["case"] = slot.grammatical_case;
            s["re"] = slot.re_policy;
            break;
          case PlanSlot::Kind::Verb:
            s["kind"] = "verb";
            s["lexeme"] = slot.lexeme;
            s["tense"] = slot.tense;
            s["voice"] = slot.voice;
            s["polarity"] = slot.polarity;
            if (slot.agree_with >= 0) s["agree_with"] = slot.agree_with;
            break;
          case PlanSlot::Kind::Lexical:
            s["kind"] = "lexical";
            s["lexeme"] = slot.lexeme;
            s["pos"] = pos_name(slot.pos);
            if (!slot.form.empty()) s["form"] = slot.form;
            break;
          case PlanSlot::Kind::Preposition:
            s["kind"] = "prep";
            s["text"] = slot.text;
            break;
          case PlanSlot::Kind::Text:
            s["kind"] = "text";
            s["text"] = slot.text;
            break;
          case PlanSlot::Kind::Filler:
            s["kind"] = "filler";
            s["case"] = slot.grammatical_case;
            break;
          case PlanSlot::Kind::FillerConcat: {
            s["kind"] = "filler_concat";
            json parts = json::array();
            for (const PlanSlot::ConcatPart& part : slot.parts) {
              parts.push_back({{"property", part.property}, {"mode", part.mode}});
            }
            s["parts"] = parts;
            break;
          }
        }
        if (slot.capitalize) s["capitalize"] = true;
        slots.push_back(s);
      }
      p["slots"] = slots;
      plans.push_back(p);
    }
    doc["plans"] = plans;
  }
  if (!set.anonymous.empty()) {
    doc["anonymous"] = std::vector<std::string>(set.anonymous.begin(),
                                                set.anonymous.end());
  }
  {
    json sections = json::object();
    if (!set.sections.order.empty()) sections["order"] = set.sections.order;
    json list = json::array();
    for (const Section& section : set.sections.sections) {
      json s = json::object();
      s["name"] = section.name;
      s["display"] = section.display;
      s["properties"] = section.properties;
      list.push_back(s);
    }
    sections["list"] = list;
    doc["sections"] = sections;
  }
  {
    json interest = json::array();
    for (const InterestAssignment& a : set.interest) {
      json e = json::object();
      e["property"] = a.property;
      if (!a.cls.empty()) e["class"] = a.cls;
      if (!a.entity.empty()) e["entity"] = a.entity;
      if (!a.user_type.empty()) e["user_type"] = a.user_type;
      e["score"] = a.score;
      if (a.threshold) e["threshold"] = *a.threshold;
      interest.push_back(e);
    }
    doc["interest"] = interest;
  }
  return doc.dump(2) + "\n";
}

}  // namespace owltext
