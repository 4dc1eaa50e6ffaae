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

#include "revgen/genkit.h"

#include <algorithm>
#include <cmath>

#include "revgen/backends.h"
#include "revgen/error.h"
#include "revgen/resources.h"
#include "revgen/text.h"

namespace revgen {

using nlohmann::json;

PrefixSet::PrefixSet(std::map<Module, std::vector<std::string>> lists)
    : lists_(std::move(lists)) {
  for (const auto& [m, list] : lists_) {
    if (m == Module::kWhole) {
      throw Error(ErrorCode::kInvalidArgument, "prefix set: module 'whole' takes no prefixes");
    }
    for (const std::string& p : list) {
      if (trim(p).empty()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "prefix set: empty prefix for module " + std::string(module_tag(m)));
      }
    }
  }
  for (Module m : kGuidedModules) {
    auto it = lists_.find(m);
    if (it == lists_.end() || it->second.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "prefix set: no prefixes for module " + std::string(module_tag(m)));
    }
  }
}

PrefixSet PrefixSet::parse(std::string_view tsv) {
  std::map<Module, std::vector<std::string>> lists;
  std::size_t line_no = 0;
  for (const std::string& raw : split_lines(tsv)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "prefix set line " + std::to_string(line_no) + ": expected module<TAB>prefix");
    }
    Module m;
    try {
      m = parse_module(trim(line.substr(0, tab)));
    } catch (const Error& e) {
      throw Error(ErrorCode::kInvalidArgument,
                  "prefix set line " + std::to_string(line_no) + ": " + e.what());
    }
    lists[m].emplace_back(trim(line.substr(tab + 1)));
  }
  return PrefixSet(std::move(lists));
}

PrefixSet PrefixSet::load(const std::string& path) { return parse(read_file(path)); }

const PrefixSet& PrefixSet::builtin() {
  static const PrefixSet set = parse(resources::default_prefixes());
  return set;
}

const std::vector<std::string>& PrefixSet::prefixes(Module m) const {
  auto it = lists_.find(m);
  if (it == lists_.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "prefix set: module " + std::string(module_tag(m)) + " takes no prefixes");
  }
  return it->second;
}

bool PrefixSet::contains(Module m, std::string_view prefix) const {
  auto it = lists_.find(m);
  return it != lists_.end() &&
         std::find(it->second.begin(), it->second.end(), prefix) != it->second.end();
}

void GenerationParams::validate() const {
  if (!(top_p > 0.0 && top_p <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "top_p must be in (0, 1]");
  }
  if (top_k < 1) throw Error(ErrorCode::kInvalidArgument, "top_k must be positive");
  if (no_repeat_ngram_size < 1) {
    throw Error(ErrorCode::kInvalidArgument, "no_repeat_ngram_size must be positive");
  }
  if (max_new_tokens < 1) throw Error(ErrorCode::kInvalidArgument, "max_new_tokens must be positive");
}

json params_to_json(const GenerationParams& p) {
  return {{"top_p", p.top_p},
          {"top_k", p.top_k},
          {"no_repeat_ngram_size", p.no_repeat_ngram_size},
          {"max_new_tokens", p.max_new_tokens},
          {"seed", p.seed}};
}

GenerationParams params_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kSchemaViolation, "params: expected object");
  auto integer = [&](const char* key) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_number_integer()) {
      throw Error(ErrorCode::kSchemaViolation, std::string("params.") + key + ": expected integer");
    }
    return it->get<std::int64_t>();
  };
  auto it = j.find("top_p");
  if (it == j.end() || !it->is_number()) {
    throw Error(ErrorCode::kSchemaViolation, "params.top_p: expected number");
  }
  GenerationParams p;
  p.top_p = it->get<double>();
  p.top_k = static_cast<int>(integer("top_k"));
  p.no_repeat_ngram_size = static_cast<int>(integer("no_repeat_ngram_size"));
  p.max_new_tokens = static_cast<int>(integer("max_new_tokens"));
  p.seed = integer("seed");
  return p;
}

std::string_view mode_name(GenerationMode mode) {
  switch (mode) {
    case GenerationMode::kModularGuided: return "modular_guided";
    case GenerationMode::kModularNonGuided: return "modular_non_guided";
    case GenerationMode::kSegmentationLess: return "segmentation_less";
  }
  return "modular_guided";
}

GenerationMode parse_mode(std::string_view text) {
  const std::string t = to_lower(trim(text));
  if (t == "modular_guided" || t == "guided") return GenerationMode::kModularGuided;
  if (t == "modular_non_guided" || t == "non-guided" || t == "nonguided") {
    return GenerationMode::kModularNonGuided;
  }
  if (t == "segmentation_less" || t == "segmentation-less" || t == "segless") {
    return GenerationMode::kSegmentationLess;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown generation mode '" + std::string(text) + "'");
}

std::string choose_prefix(Module module, const PrefixSet& prefixes, SeededRng& rng) {
  const std::vector<std::string>& list = prefixes.prefixes(module);
  return list[rng.uniform_index(list.size())];
}

namespace {

std::string with_prefix(std::string_view prefix, std::string text) {
  if (prefix.empty() || text.starts_with(prefix)) return text;
  const std::string_view body = trim(text);
  if (body.empty()) return std::string(prefix);
  return std::string(prefix) + " " + std::string(body);
}

GenerationRequest make_request(Module module, std::string_view prefix, std::string_view source,
                               const GenerationParams& params) {
  GenerationRequest r;
  r.module = module;
  r.prefix = std::string(prefix);
  r.source = std::string(source);
  r.params = params;
  return r;
}

}  // namespace

std::string generate_module(Backend& backend, Module module, std::string_view prefix,
                            std::string_view source, const GenerationParams& params) {
  std::string text = backend.generate(make_request(module, prefix, source, params));
  if (trim(text).empty()) {
    throw Error(ErrorCode::kBackendProtocolError, "backend returned empty text");
  }
  return with_prefix(prefix, std::move(text));
}

GeneratedReview generate_review(Backend& backend, const ManuscriptSegments& segments,
                                const PrefixSet& prefixes, const GenerationParams& params,
                                GenerationMode mode) {
  params.validate();
  if (trim(segments.t_full).empty()) {
    throw Error(ErrorCode::kInvalidArgument, "manuscript has no text to generate from");
  }
  GeneratedReview review;
  review.mode = mode;
  review.params = params;
  review.backend_id = backend.handshake().backend_id;

  std::vector<GenerationRequest> requests;
  std::vector<std::size_t> slots;  // module index of each request
  if (mode == GenerationMode::kSegmentationLess) {
    review.modules.push_back({Module::kWhole, "", ""});
    requests.push_back(make_request(Module::kWhole, "", segments.t_full, params));
    slots.push_back(0);
  } else {
    SeededRng rng(mix_seed(static_cast<std::uint64_t>(params.seed)));
    for (Module m : kGuidedModules) {
      const std::string& source = m == Module::kBasic ? segments.t_sum
                                  : m == Module::kEF  ? segments.t_mr
                                                      : segments.t_full;
      std::string prefix =
          mode == GenerationMode::kModularGuided ? choose_prefix(m, prefixes, rng) : "";
      if (trim(source).empty()) {
        review.modules.push_back({m, "", std::string(kPlaceholderText)});
        continue;
      }
      slots.push_back(review.modules.size());
      requests.push_back(make_request(m, prefix, source, params));
      review.modules.push_back({m, std::move(prefix), ""});
    }
  }

  std::vector<std::string> texts;
  try {
    texts = backend.generate_batch(requests);
  } catch (const Error& e) {
    throw Error(e.code(), std::string("generation failed: ") + e.what());
  }
  for (std::size_t i = 0; i < requests.size(); ++i) {
    ModuleOutput& out = review.modules[slots[i]];
    if (trim(texts[i]).empty()) {
      throw Error(ErrorCode::kBackendProtocolError,
                  "module " + std::string(module_tag(out.module)) + ": backend returned empty text");
    }
    out.text = with_prefix(out.prefix, std::move(texts[i]));
  }
  review.assembled = assemble(review, OutputFormat::kPlainText);
  return review;
}

OutputFormat parse_output_format(std::string_view text) {
  const std::string t = to_lower(trim(text));
  if (t == "text" || t == "plain" || t == "plaintext" || t == "txt") return OutputFormat::kPlainText;
  if (t == "markdown" || t == "md") return OutputFormat::kMarkdown;
  if (t == "json") return OutputFormat::kJson;
  throw Error(ErrorCode::kInvalidArgument, "unknown output format '" + std::string(text) + "'");
}

std::string assemble(const GeneratedReview& review, OutputFormat format) {
  if (format == OutputFormat::kJson) return review_to_json(review).dump(2);
  if (review.mode == GenerationMode::kSegmentationLess) {
    return review.modules.empty() ? "" : review.modules.front().text;
  }
  std::vector<std::string> blocks;
  for (const ModuleOutput& m : review.modules) {
    const std::string heading(module_heading(m.module));
    blocks.push_back(format == OutputFormat::kMarkdown ? "## " + heading + "\n\n" + m.text
                                                       : heading + "\n" + m.text);
  }
  return join(blocks, "\n\n");
}

json review_to_json(const GeneratedReview& review) {
  json modules = json::array();
  for (const ModuleOutput& m : review.modules) {
    modules.push_back({{"module", module_tag(m.module)},
                       {"heading", module_heading(m.module)},
                       {"prefix", m.prefix},
                       {"text", m.text}});
  }
  return {{"mode", mode_name(review.mode)},
          {"backend_id", review.backend_id},
          {"params", params_to_json(review.params)},
          {"modules", std::move(modules)},
          {"assembled", review.assembled}};
}

GeneratedReview review_from_json(const json& j) {
  auto str = [](const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_string()) {
      throw Error(ErrorCode::kSchemaViolation, path + key + ": expected string");
    }
    return it->get<std::string>();
  };
  if (!j.is_object()) throw Error(ErrorCode::kSchemaViolation, "review: expected object");
  GeneratedReview r;
  try {
    r.mode = parse_mode(str(j, "mode", ""));
  } catch (const Error& e) {
    throw Error(ErrorCode::kSchemaViolation, std::string("mode: ") + e.what());
  }
  r.backend_id = str(j, "backend_id", "");
  r.assembled = str(j, "assembled", "");
  auto params = j.find("params");
  if (params == j.end()) throw Error(ErrorCode::kSchemaViolation, "params: missing");
  r.params = params_from_json(*params);
  auto modules = j.find("modules");
  if (modules == j.end() || !modules->is_array()) {
    throw Error(ErrorCode::kSchemaViolation, "modules: expected array");
  }
  for (std::size_t i = 0; i < modules->size(); ++i) {
    const json& m = (*modules)[i];
    const std::string path = "modules[" + std::to_string(i) + "].";
    if (!m.is_object()) throw Error(ErrorCode::kSchemaViolation, path + ": expected object");
    ModuleOutput out;
    try {
      out.module = parse_module(str(m, "module", path));
    } catch (const Error& e) {
      throw Error(ErrorCode::kSchemaViolation, path + "module: " + e.what());
    }
    out.prefix = str(m, "prefix", path);
    out.text = str(m, "text", path);
    r.modules.push_back(std::move(out));
  }
  return r;
}

}  // namespace revgen
