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
// Command-line front end: describe one target, run batches, validate
// resources, or scaffold a resource skeleton from an ontology.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "owltext/pipeline.hpp"
#include "owltext/scaffold.hpp"

namespace {

// Exit codes, also documented in the README.
constexpr int kOkExit = 0;
constexpr int kBatchFailures = 1;
constexpr int kParseError = 2;
constexpr int kResourceError = 3;
constexpr int kUnknownTarget = 4;
constexpr int kPipelineError = 5;

struct CommonArgs {
  std::string ontology_path;
  std::string resources_path;
  std::string language = "en";
  std::string user_type = "default";
  std::string user_id;
  std::string user_model_path;
  int distance = 0;
  std::string format = "plain";
  bool no_interest = false;
  bool no_refexpr = false;
  bool no_nlnames = false;
  bool no_aggregation = false;
  bool no_sentence_plans = false;
  bool no_ordering = false;
  bool baseline = false;
  bool truncate_after_group = false;
  bool dump_triples = false;
};

void add_common_flags(CLI::App* cmd, CommonArgs* args) {
  cmd->add_option("--ontology", args->ontology_path, "ontology file")
      ->required();
  cmd->add_option("--resources", args->resources_path, "resource file");
  cmd->add_option("--lang", args->language, "language tag");
  cmd->add_option("--user-type", args->user_type, "user type for scores");
  cmd->add_option("--user-id", args->user_id, "user id for the user model");
  cmd->add_option("--user-model", args->user_model_path, "user model file");
  cmd->add_option("--distance", args->distance, "maximum fact distance (1 or 2)")
      ->check(CLI::Range(1, 2));
  cmd->add_option("--format", args->format, "plain, headed, or dump")
      ->check(CLI::IsMember({"plain", "headed", "dump"}));
  cmd->add_flag("--no-interest", args->no_interest,
                "disable interest scores and assimilation");
  cmd->add_flag("--no-refexpr", args->no_refexpr,
                "disable pronouns and demonstratives");
  cmd->add_flag("--no-nlnames", args->no_nlnames,
                "ignore authored natural-language names");
  cmd->add_flag("--no-aggregation", args->no_aggregation,
                "disable sentence aggregation");
  cmd->add_flag("--no-sentence-plans", args->no_sentence_plans,
                "ignore authored sentence plans");
  cmd->add_flag("--no-ordering", args->no_ordering,
                "disable section ordering");
  cmd->add_flag("--baseline", args->baseline, "enable every ablation switch");
  cmd->add_flag("--truncate-after-group", args->truncate_after_group,
                "end the text after the first second-level group");
  cmd->add_flag("--dump-triples", args->dump_triples,
                "print the planned message triples instead of text");
}

int load_ontology(const CommonArgs& args, owltext::OntologyModel* model) {
  std::ifstream in(args.ontology_path);
  if (!in.good()) {
    std::cerr << args.ontology_path << ": cannot open\n";
    return kParseError;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  owltext::ParseResult result = owltext::parse_ontology(buffer.str());
  if (!result.ok()) {
    for (const owltext::Diagnostic& d : result.errors) {
      std::cerr << args.ontology_path << ":" << d.str() << "\n";
    }
    return kParseError;
  }
  *model = std::move(result.model);
  return kOkExit;
}

int load_resource_set(const CommonArgs& args, owltext::ResourceSet* set) {
  if (args.resources_path.empty()) return kOkExit;
  std::ifstream in(args.resources_path);
  if (!in.good()) {
    std::cerr << args.resources_path << ": cannot open\n";
    return kResourceError;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  owltext::ResourceLoadResult result = owltext::load_resources(buffer.str());
  if (!result.ok()) {
    for (const owltext::Diagnostic& d : result.diagnostics) {
      std::cerr << args.resources_path << ": " << d.message << "\n";
    }
    return kResourceError;
  }
  *set = std::move(result.set);
  return kOkExit;
}

owltext::PipelineOptions to_options(const CommonArgs& args) {
  owltext::PipelineOptions options;
  options.language = args.language;
  options.user_type = args.user_type;
  options.distance = args.distance;
  options.no_interest = args.no_interest || args.baseline;
  options.no_refexpr = args.no_refexpr || args.baseline;
  options.no_nlnames = args.no_nlnames || args.baseline;
  options.no_aggregation = args.no_aggregation || args.baseline;
  options.no_sentence_plans = args.no_sentence_plans || args.baseline;
  options.no_ordering = args.no_ordering || args.baseline;
  options.stop_after_first_group = args.truncate_after_group;
  options.dump_triples = args.dump_triples;
  if (args.format == "headed") {
    options.format = owltext::OutputFormat::Headed;
  } else if (args.format == "dump") {
    options.format = owltext::OutputFormat::Dump;
  }
  return options;
}

std::string user_model_path(const CommonArgs& args) {
  if (!args.user_model_path.empty()) return args.user_model_path;
  return args.user_id + ".usermodel";
}

int run_describe(const CommonArgs& args, const std::string& target) {
  owltext::OntologyModel model;
  if (int status = load_ontology(args, &model)) return status;
  owltext::ResourceSet resources;
  if (int status = load_resource_set(args, &resources)) return status;

  owltext::UserModel user_model;
  bool track_user = !args.user_id.empty();
  if (track_user) {
    user_model = owltext::load_user_model(user_model_path(args), args.user_id);
  }
  try {
    owltext::PipelineResult result = owltext::describe(
        model, resources, target, to_options(args),
        track_user ? &user_model : nullptr);
    for (const std::string& warning : result.warnings) {
      std::cerr << "warning: " << warning << "\n";
    }
    std::cout << result.text;
    if (!result.text.empty() && result.text.back() != '\n') std::cout << "\n";
    if (track_user) {
      owltext::record_conveyed(&user_model, result.conveyed);
      owltext::save_user_model(user_model, user_model_path(args));
    }
  } catch (const owltext::GenerationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::string what = e.what();
    return what.find("unknown target") != std::string::npos ? kUnknownTarget
                                                            : kPipelineError;
  }
  return kOkExit;
}

int run_batch(const CommonArgs& args, const std::string& targets_path,
              bool all_individuals, bool all_classes) {
  owltext::OntologyModel model;
  if (int status = load_ontology(args, &model)) return status;
  owltext::ResourceSet resources;
  if (int status = load_resource_set(args, &resources)) return status;

  std::vector<std::string> targets;
  if (all_individuals) {
    for (const owltext::Iri& iri : model.all_individuals()) {
      targets.push_back(iri.display());
    }
  }
  if (all_classes) {
    for (const owltext::Iri& iri : model.all_classes()) {
      targets.push_back(iri.display());
    }
  }
  if (!targets_path.empty()) {
    std::ifstream in(targets_path);
    if (!in.good()) {
      std::cerr << targets_path << ": cannot open\n";
      return kPipelineError;
    }
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) targets.push_back(line);
    }
  }

  owltext::UserModel user_model;
  bool track_user = !args.user_id.empty();
  if (track_user) {
    user_model = owltext::load_user_model(user_model_path(args), args.user_id);
  }

  owltext::PipelineOptions options = to_options(args);
  options.format = owltext::OutputFormat::Dump;
  bool failures = false;
  for (const std::string& target : targets) {
    nlohmann::json record;
    record["target"] = target;
    try {
      owltext::PipelineResult result =
          owltext::describe(model, resources, target, options,
                            track_user ? &user_model : nullptr);
      record["status"] = "ok";
      nlohmann::json sentences = nlohmann::json::array();
      std::istringstream lines(result.text);
      std::string line;
      while (std::getline(lines, line)) {
        if (!line.empty()) sentences.push_back(nlohmann::json::parse(line));
      }
      record["sentences"] = sentences;
      if (track_user) {
        owltext::record_conveyed(&user_model, result.conveyed);
      }
    } catch (const owltext::GenerationError& e) {
      record["status"] = "error";
      record["error"] = e.what();
      std::cerr << target << ": " << e.what() << "\n";
      failures = true;
    }
    std::cout << record.dump() << "\n";
  }
  if (track_user) {
    owltext::save_user_model(user_model, user_model_path(args));
  }
  return failures ? kBatchFailures : kOkExit;
}

int run_validate(const CommonArgs& args) {
  std::ifstream in(args.resources_path);
  if (!in.good()) {
    std::cerr << args.resources_path << ": cannot open\n";
    return kResourceError;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  owltext::ResourceLoadResult result = owltext::load_resources(buffer.str());
  for (const owltext::Diagnostic& d : result.diagnostics) {
    std::cerr << args.resources_path << ": " << d.message << "\n";
  }
  if (!result.ok()) return kResourceError;
  std::cout << "resources valid: " << result.set.lexicon.size()
            << " lexicon entries, " << result.set.names.size() << " names, "
            << result.set.plans.size() << " plans\n";
  return kOkExit;
}

int run_scaffold(const CommonArgs& args, const std::string& out_path) {
  owltext::OntologyModel model;
  if (int status = load_ontology(args, &model)) return status;
  owltext::ResourceSet skeleton =
      owltext::scaffold_resources(model, args.language);
  std::string text = owltext::serialize_resources(skeleton);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::trunc);
    if (!out.good()) {
      std::cerr << out_path << ": cannot open for writing\n";
      return kPipelineError;
    }
    out << text;
  }
  return kOkExit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generates natural-language descriptions of the individuals "
               "and classes of an OWL ontology"};
  app.require_subcommand(1);

  CommonArgs describe_args;
  std::string target;
  CLI::App* describe = app.add_subcommand("describe", "describe one target");
  add_common_flags(describe, &describe_args);
  describe->add_option("--target", target, "IRI of the entity to describe")
      ->required();

  CommonArgs batch_args;
  std::string targets_path;
  bool all_individuals = false;
  bool all_classes = false;
  CLI::App* batch = app.add_subcommand("batch", "describe many targets");
  add_common_flags(batch, &batch_args);
  batch->add_option("--targets", targets_path, "file with one IRI per line");
  batch->add_flag("--all-individuals", all_individuals,
                  "describe every individual");
  batch->add_flag("--all-classes", all_classes, "describe every class");

  CommonArgs validate_args;
  CLI::App* validate = app.add_subcommand("validate", "validate a resource file");
  validate->add_option("--resources", validate_args.resources_path,
                       "resource file")
      ->required();

  CommonArgs scaffold_args;
  std::string scaffold_out;
  CLI::App* scaffold =
      app.add_subcommand("scaffold", "emit a resource skeleton for an ontology");
  scaffold->add_option("--ontology", scaffold_args.ontology_path,
                       "ontology file")
      ->required();
  scaffold->add_option("--lang", scaffold_args.language, "language tag");
  scaffold->add_option("-o,--out", scaffold_out, "output path");

  CLI11_PARSE(app, argc, argv);

  if (describe->parsed()) return run_describe(describe_args, target);
  if (batch->parsed()) {
    return run_batch(batch_args, targets_path, all_individuals, all_classes);
  }
  if (validate->parsed()) return run_validate(validate_args);
  if (scaffold->parsed()) return run_scaffold(scaffold_args, scaffold_out);
  return kOkExit;
}
