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

// Small byte-oriented string helpers shared by all modules. Text is UTF-8;
// only ASCII characters are ever case-folded or treated as whitespace.

#ifndef REVGEN_TEXT_H_
#define REVGEN_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace revgen {

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_alpha(char c) { return is_upper(c) || is_lower(c); }
inline bool is_alnum(char c) { return is_alpha(c) || is_digit(c); }
inline char to_lower(char c) { return is_upper(c) ? char(c - 'A' + 'a') : c; }

// Number of maximal nonempty runs of non-whitespace characters.
std::size_t word_count(std::string_view text);

std::string to_lower(std::string_view text);
std::string_view trim(std::string_view text);
std::string collapse_whitespace(std::string_view text);
std::vector<std::string> split_whitespace(std::string_view text);
std::vector<std::string> split_lines(std::string_view text);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Case-insensitive search for `needle` (ASCII folding) starting at `from`.
std::size_t find_ci(std::string_view haystack, std::string_view needle,
                    std::size_t from = 0);

// True when `needle` occurs in `haystack` with no letter or digit directly
// before or after it. Case-insensitive.
bool contains_word_ci(std::string_view haystack, std::string_view needle);

std::string read_file(const std::string& path);

}  // namespace revgen

#endif  // REVGEN_TEXT_H_
