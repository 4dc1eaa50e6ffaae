// Copyright 2026 The revgen Authors.
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

#include <functional>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "revgen/commands.h"
#include "revgen/config.h"
#include "revgen/error.h"

namespace {

struct Flag {
  const char* name;
  const char* key;
  const char* help;
};

// Every flag maps onto a RunConfig key and is applied after the config file.
constexpr Flag kFlags[] = {
    {"--seed", "seed", "Random seed for splitting and generation"},
    {"--jobs", "jobs", "Maximum worker threads"},
    {"--output-dir,-o", "output_dir", "Directory for outputs"},
    {"--backend", "backend", "builtin | exec:PATH [ARGS] | http:URL"},
    {"--backend-timeout-ms", "backend_timeout_ms", "Per-response backend deadline"},
    {"--mode", "mode", "guided | non-guided | segless"},
    {"--prefixes", "prefixes", "Prefix set file (module<TAB>prefix)"},
    {"--proposal-keywords", "proposal_keywords", "Proposal keyword list"},
    {"--verb-lexicon", "verb_lexicon", "Base-form verb lexicon"},
    {"--section-lexicon", "section_lexicon", "Section title lexicon (pattern<TAB>class)"},
    {"--min-manuscript-words", "min_manuscript_words", "Inclusive manuscript length threshold"},
    {"--min-review-words", "min_review_words", "Inclusive review length threshold"},
    {"--split-ratios", "split_ratios", "train:validation:test, e.g. 8:1:1"},
    {"--top-p", "top_p", "Nucleus sampling mass forwarded to the backend"},
    {"--top-k", "top_k", "Top-k forwarded to the backend"},
    {"--no-repeat-ngram-size", "no_repeat_ngram_size", "Forbidden repeated n-gram size"},
    {"--max-new-tokens", "max_new_tokens", "Generation length budget"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular guided review generation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  app.add_option("--config", config_path, "Flat key = value configuration file");
  bool strict = false;
  app.add_flag("--strict", strict, "Fail on the first malformed record");

  std::vector<std::pair<const char*, std::string>> values;
  values.reserve(std::size(kFlags));
  std::vector<CLI::Option*> options;
  for (const Flag& f : kFlags) {
    values.emplace_back(f.key, std::string());
    options.push_back(app.add_option(f.name, values.back().second, f.help));
  }

  using Command = std::function<void(const revgen::RunConfig&, std::ostream&)>;
  const std::vector<std::tuple<const char*, const char*, Command>> commands = {
      {"ingest", "Parse JSON records and TEI manuscripts into a corpus file", revgen::cmd_ingest},
      {"label", "Auto-label review comments", revgen::cmd_label},
      {"build", "Assemble fine-tuning datasets and the split manifest", revgen::cmd_build},
      {"split", "Split filtered records into train/validation/test", revgen::cmd_split},
      {"stats", "Corpus statistics", revgen::cmd_stats},
      {"generate", "Generate a review for one manuscript", revgen::cmd_generate},
      {"evaluate", "ROUGE evaluation of candidate/reference pairs", revgen::cmd_evaluate},
  };
  std::vector<std::string> inputs;
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& [name, help, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", inputs, "Input files")->required();
    subs.emplace_back(sub, &fn);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    revgen::RunConfig config;
    if (!config_path.empty()) revgen::apply_config_file(config, config_path);
    if (strict) config.strict = true;
    for (std::size_t i = 0; i < options.size(); ++i) {
      if (options[i]->count() > 0) config.set(values[i].first, values[i].second);
    }
    if (!inputs.empty()) config.inputs = inputs;
    for (const auto& [sub, fn] : subs) {
      if (sub->parsed()) (*fn)(config, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << revgen::error_json(e) << std::endl;
    return 1;
  }
  return 0;
}
