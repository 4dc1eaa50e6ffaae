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

#ifndef REVGEN_SENTENCE_SPLITTER_H_
#define REVGEN_SENTENCE_SPLITTER_H_

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace revgen {

// Rule-based English sentence splitter.
//
// A run of '.', '?' or '!' (plus closing quotes and brackets) ends a sentence
// when it is followed by whitespace and then an uppercase letter, a digit,
// an opening quote or a non-ASCII character, or by the end of the text. A
// single period does not end a sentence after a listed abbreviation, after
// a single capital initial ("J. Smith"), or after a leading list number
// ("1. The authors ..."). A blank line always ends a sentence.
//
// Sentences are returned as verbatim substrings with surrounding whitespace
// trimmed.
class SentenceSplitter {
 public:
  // Abbreviation list text: one lowercase token per line including the
  // final period, '#' starts a comment.
  explicit SentenceSplitter(std::string_view abbreviations_text);

  static const SentenceSplitter& builtin();

  std::vector<std::string> split(std::string_view text) const;

 private:
  bool is_abbreviation(std::string_view text, std::size_t sentence_start,
                       std::size_t period) const;

  std::unordered_set<std::string> abbreviations_;
};

// Splits with the builtin abbreviation list.
std::vector<std::string> split_sentences(std::string_view text);

}  // namespace revgen

#endif  // REVGEN_SENTENCE_SPLITTER_H_
