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

// Modular guided review generation: prefix selection, per-module backend
// calls, ablation modes and postprocessing.

#ifndef REVGEN_GENKIT_H_
#define REVGEN_GENKIT_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "revgen/module.h"
#include "revgen/rng.h"
#include "revgen/sectioner.h"

namespace revgen {

class Backend;

inline constexpr std::string_view kPlaceholderText = "[no content available for this module]";

// Per-module prefix lists for the five guided modules.
class PrefixSet {
 public:
  // Throws Error(kInvalidArgument) unless each guided module has a nonempty
  // list of nonempty prefixes and no other module is present.
  explicit PrefixSet(std::map<Module, std::vector<std::string>> lists);

  // "module<TAB>prefix" per line; '#' lines and blank lines are skipped.
  static PrefixSet parse(std::string_view tsv);
  static PrefixSet load(const std::string& path);
  static const PrefixSet& builtin();

  const std::vector<std::string>& prefixes(Module m) const;
  bool contains(Module m, std::string_view prefix) const;

 private:
  std::map<Module, std::vector<std::string>> lists_;
};

struct GenerationParams {
  double top_p = 0.92;
  int top_k = 50;
  int no_repeat_ngram_size = 3;
  int max_new_tokens = 256;
  std::int64_t seed = 0;

  // Throws Error(kInvalidArgument) when a field is out of range.
  void validate() const;
  bool operator==(const GenerationParams&) const = default;
};

nlohmann::json params_to_json(const GenerationParams& p);
GenerationParams params_from_json(const nlohmann::json& j);

enum class GenerationMode { kModularGuided, kModularNonGuided, kSegmentationLess };

std::string_view mode_name(GenerationMode mode);
// Accepts the canonical names plus "guided", "non-guided", "nonguided",
// "segless" and "segmentation-less".
GenerationMode parse_mode(std::string_view text);

std::string choose_prefix(Module module, const PrefixSet& prefixes, SeededRng& rng);

struct ModuleOutput {
  Module module = Module::kBasic;
  std::string prefix;
  std::string text;
  bool operator==(const ModuleOutput&) const = default;
};

struct GeneratedReview {
  GenerationMode mode = GenerationMode::kModularGuided;
  std::vector<ModuleOutput> modules;
  std::string assembled;  // PlainText rendering of modules
  GenerationParams params;
  std::string backend_id;
  bool operator==(const GeneratedReview&) const = default;
};

// One backend call. The prefix is re-prepended when the backend did not
// echo it; empty output is Error(kBackendProtocolError).
std::string generate_module(Backend& backend, Module module, std::string_view prefix,
                            std::string_view source, const GenerationParams& params);

// Routes t_sum to Basic, t_mr to EF and t_full to Ques, Propos and Addl
// (or a single Whole call in segmentation-less mode). Empty t_sum / t_mr
// yield the placeholder text. Prefixes are drawn from a generator seeded
// with params.seed. Module calls run concurrently when the backend is
// reentrant.
GeneratedReview generate_review(Backend& backend, const ManuscriptSegments& segments,
                                const PrefixSet& prefixes, const GenerationParams& params,
                                GenerationMode mode);

enum class OutputFormat { kPlainText, kMarkdown, kJson };

OutputFormat parse_output_format(std::string_view text);
std::string assemble(const GeneratedReview& review, OutputFormat format);

nlohmann::json review_to_json(const GeneratedReview& review);
GeneratedReview review_from_json(const nlohmann::json& j);

// Deterministic extractive generator. Sentences of `source` are ranked by
// position and term salience and kept in document order within a budget of
// max_new_tokens words (prefix included). A sentence is skipped when it
// would repeat a word n-gram of size no_repeat_ngram_size. Empty source
// returns the prefix alone.
std::string baseline_generate(std::string_view prefix, std::string_view source,
                              const GenerationParams& params);

// True when some n-gram of `tokens` occurs twice.
bool has_repeated_ngram(const std::vector<std::string>& tokens, std::size_t n);

}  // namespace revgen

#endif  // REVGEN_GENKIT_H_
