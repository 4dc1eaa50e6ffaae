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

#ifndef REVGEN_CONFIG_H_
#define REVGEN_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "revgen/datasets.h"
#include "revgen/genkit.h"

namespace revgen {

// Everything a pipeline run depends on. Empty resource paths select the
// shipped resources.
struct RunConfig {
  std::vector<std::string> inputs;
  std::string output_dir = ".";
  std::int64_t seed = 0;
  int jobs = 1;
  bool strict = false;
  RecordThresholds thresholds;
  SplitRatios ratios;
  std::string prefixes_path;
  std::string proposal_keywords_path;
  std::string verb_lexicon_path;
  std::string section_lexicon_path;
  std::string backend = "builtin";
  int backend_timeout_ms = 60000;
  GenerationParams params;
  GenerationMode mode = GenerationMode::kModularGuided;

  // Sets one field from its textual form. "seed" also sets params.seed.
  // Throws Error(kInvalidArgument) for unknown keys or bad values.
  void set(std::string_view key, std::string_view value);
};

// Flat "key = value" lines; '#' starts a comment line. "input" may repeat.
void apply_config_text(RunConfig& config, std::string_view text);
void apply_config_file(RunConfig& config, const std::string& path);

// Round-trips through apply_config_text.
std::string config_to_text(const RunConfig& config);

}  // namespace revgen

#endif  // REVGEN_CONFIG_H_
