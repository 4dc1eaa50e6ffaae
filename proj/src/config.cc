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

#include "revgen/config.h"

#include <charconv>
#include <sstream>

#include "revgen/error.h"
#include "revgen/text.h"

namespace revgen {
namespace {

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "config " + std::string(key) + ": invalid number '" + std::string(text) + "'");
  }
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  const std::string t = to_lower(text);
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  throw Error(ErrorCode::kInvalidArgument,
              "config " + std::string(key) + ": expected true or false, got '" + std::string(text) + "'");
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

void RunConfig::set(std::string_view key_in, std::string_view value_in) {
  const std::string key(trim(key_in));
  const std::string value(trim(value_in));
  if (key == "input") {
    inputs.push_back(value);
  } else if (key == "output_dir") {
    output_dir = value;
  } else if (key == "seed") {
    seed = parse_number<std::int64_t>(key, value);
    params.seed = seed;
  } else if (key == "jobs") {
    jobs = parse_number<int>(key, value);
    if (jobs < 1) throw Error(ErrorCode::kInvalidArgument, "config jobs: must be at least 1");
  } else if (key == "strict") {
    strict = parse_bool(key, value);
  } else if (key == "min_manuscript_words") {
    thresholds.min_manuscript_words = parse_number<std::size_t>(key, value);
  } else if (key == "min_review_words") {
    thresholds.min_review_words = parse_number<std::size_t>(key, value);
  } else if (key == "split_ratios") {
    ratios = parse_split_ratios(value);
  } else if (key == "prefixes") {
    prefixes_path = value;
  } else if (key == "proposal_keywords") {
    proposal_keywords_path = value;
  } else if (key == "verb_lexicon") {
    verb_lexicon_path = value;
  } else if (key == "section_lexicon") {
    section_lexicon_path = value;
  } else if (key == "backend") {
    backend = value;
  } else if (key == "backend_timeout_ms") {
    backend_timeout_ms = parse_number<int>(key, value);
    if (backend_timeout_ms < 1) {
      throw Error(ErrorCode::kInvalidArgument, "config backend_timeout_ms: must be positive");
    }
  } else if (key == "top_p" || key == "top_k" || key == "no_repeat_ngram_size" ||
             key == "max_new_tokens") {
    GenerationParams p = params;
    if (key == "top_p") p.top_p = parse_number<double>(key, value);
    if (key == "top_k") p.top_k = parse_number<int>(key, value);
    if (key == "no_repeat_ngram_size") p.no_repeat_ngram_size = parse_number<int>(key, value);
    if (key == "max_new_tokens") p.max_new_tokens = parse_number<int>(key, value);
    try {
      p.validate();
    } catch (const Error& e) {
      throw Error(e.code(), "config " + key + ": " + e.what());
    }
    params = p;
  } else if (key == "mode") {
    mode = parse_mode(value);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "config: unknown key '" + key + "'");
  }
}

void apply_config_text(RunConfig& config, std::string_view text) {
  std::size_t line_no = 0;
  for (const std::string& raw : split_lines(text)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "config line " + std::to_string(line_no) + ": expected key = value");
    }
    try {
      config.set(line.substr(0, eq), line.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(e.code(), "config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void apply_config_file(RunConfig& config, const std::string& path) {
  apply_config_text(config, read_file(path));
}

std::string config_to_text(const RunConfig& c) {
  std::ostringstream out;
  for (const std::string& in : c.inputs) out << "input = " << in << '\n';
  out << "output_dir = " << c.output_dir << '\n'
      << "seed = " << c.seed << '\n'
      << "jobs = " << c.jobs << '\n'
      << "strict = " << (c.strict ? "true" : "false") << '\n'
      << "min_manuscript_words = " << c.thresholds.min_manuscript_words << '\n'
      << "min_review_words = " << c.thresholds.min_review_words << '\n'
      << "split_ratios = " << c.ratios.train << ':' << c.ratios.validation << ':' << c.ratios.test
      << '\n'
      << "prefixes = " << c.prefixes_path << '\n'
      << "proposal_keywords = " << c.proposal_keywords_path << '\n'
      << "verb_lexicon = " << c.verb_lexicon_path << '\n'
      << "section_lexicon = " << c.section_lexicon_path << '\n'
      << "backend = " << c.backend << '\n'
      << "backend_timeout_ms = " << c.backend_timeout_ms << '\n'
      << "top_p = " << format_double(c.params.top_p) << '\n'
      << "top_k = " << c.params.top_k << '\n'
      << "no_repeat_ngram_size = " << c.params.no_repeat_ngram_size << '\n'
      << "max_new_tokens = " << c.params.max_new_tokens << '\n'
      << "mode = " << mode_name(c.mode) << '\n';
  return out.str();
}

}  // namespace revgen
