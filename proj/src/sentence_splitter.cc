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

#include "revgen/sentence_splitter.h"

#include "revgen/resources.h"
#include "revgen/text.h"

namespace revgen {
namespace {

bool is_terminator(char c) { return c == '.' || c == '?' || c == '!'; }

// Closing quote or bracket at `i`; returns its byte length or 0.
std::size_t closer_length(std::string_view t, std::size_t i) {
  const char c = t[i];
  if (c == '"' || c == '\'' || c == ')' || c == ']') return 1;
  // U+201D and U+2019.
  if (i + 2 < t.size() && static_cast<unsigned char>(c) == 0xE2 &&
      static_cast<unsigned char>(t[i + 1]) == 0x80 &&
      (static_cast<unsigned char>(t[i + 2]) == 0x9D ||
       static_cast<unsigned char>(t[i + 2]) == 0x99)) {
    return 3;
  }
  return 0;
}

bool can_start_sentence(char c) {
  return is_upper(c) || is_digit(c) || c == '"' || c == '\'' ||
         static_cast<unsigned char>(c) >= 0x80;
}

// Returns the index just past a blank line starting at the newline `i`, or
// npos when the newline is not followed by another one.
std::size_t blank_line_end(std::string_view t, std::size_t i) {
  std::size_t j = i + 1;
  while (j < t.size() && (t[j] == ' ' || t[j] == '\t' || t[j] == '\r')) ++j;
  if (j < t.size() && t[j] == '\n') return j + 1;
  return std::string_view::npos;
}

}  // namespace

SentenceSplitter::SentenceSplitter(std::string_view abbreviations_text) {
  for (const std::string& raw : split_lines(abbreviations_text)) {
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    abbreviations_.insert(to_lower(line));
  }
}

const SentenceSplitter& SentenceSplitter::builtin() {
  static const SentenceSplitter instance(resources::abbreviations());
  return instance;
}

bool SentenceSplitter::is_abbreviation(std::string_view text, std::size_t sentence_start,
                                       std::size_t period) const {
  std::size_t begin = period;
  while (begin > sentence_start && !is_space(text[begin - 1])) --begin;
  std::string_view token = text.substr(begin, period - begin);
  const bool first_token = trim(text.substr(sentence_start, begin - sentence_start)).empty();
  while (!token.empty() && (token.front() == '(' || token.front() == '[' ||
                            token.front() == '"' || token.front() == '\'')) {
    token.remove_prefix(1);
  }
  if (token.empty()) return false;
  if (token.size() == 1 && is_upper(token[0])) return true;
  if (first_token) {
    bool all_digits = true;
    for (char c : token) all_digits = all_digits && is_digit(c);
    if (all_digits) return true;
  }
  return abbreviations_.count(to_lower(token) + ".") > 0;
}

std::vector<std::string> SentenceSplitter::split(std::string_view text) const {
  std::vector<std::string> out;
  std::size_t start = 0;
  auto emit = [&](std::size_t end) {
    std::string_view s = trim(text.substr(start, end - start));
    if (!s.empty()) out.emplace_back(s);
    start = end;
  };

  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      const std::size_t after = blank_line_end(text, i);
      if (after != std::string_view::npos) {
        emit(i);
        start = after;
        i = after;
        continue;
      }
      ++i;
      continue;
    }
    if (!is_terminator(c)) {
      ++i;
      continue;
    }

    std::size_t j = i;
    while (j < text.size() && is_terminator(text[j])) ++j;
    std::size_t k = j;
    while (k < text.size()) {
      const std::size_t len = closer_length(text, k);
      if (len == 0) break;
      k += len;
    }
    if (k >= text.size()) {
      emit(k);
      i = k;
      continue;
    }
    if (!is_space(text[k])) {
      i = k;
      continue;
    }
    std::size_t m = k;
    while (m < text.size() && is_space(text[m])) ++m;
    bool boundary = m >= text.size() || can_start_sentence(text[m]);
    if (boundary && c == '.' && j == i + 1 && is_abbreviation(text, start, i)) boundary = false;
    if (boundary) emit(k);
    i = k;
  }
  emit(text.size());
  return out;
}

std::vector<std::string> split_sentences(std::string_view text) {
  return SentenceSplitter::builtin().split(text);
}

}  // namespace revgen
