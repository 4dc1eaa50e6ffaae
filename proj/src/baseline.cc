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

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "revgen/genkit.h"
#include "revgen/metrics.h"
#include "revgen/sentence_splitter.h"
#include "revgen/text.h"

namespace revgen {
namespace {

constexpr double kPositionWeight = 0.6;
constexpr double kSalienceWeight = 0.4;
constexpr std::size_t kMinContentLength = 4;

bool violates(const std::string& text, std::size_t n) {
  return has_repeated_ngram(split_whitespace(text), n) ||
         has_repeated_ngram(tokenize_for_rouge(text), n);
}

std::string compose(std::string_view prefix, const std::vector<std::string>& sentences,
                    const std::set<std::size_t>& chosen) {
  std::vector<std::string> parts;
  if (!prefix.empty()) parts.emplace_back(prefix);
  for (std::size_t i : chosen) parts.push_back(sentences[i]);
  return join(parts, " ");
}

std::vector<double> score_sentences(const std::vector<std::string>& sentences, std::uint64_t seed) {
  std::vector<std::vector<std::string>> content(sentences.size());
  std::unordered_map<std::string, std::size_t> tf;
  std::size_t max_tf = 1;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    for (std::string& t : tokenize_for_rouge(sentences[i])) {
      if (t.size() < kMinContentLength) continue;
      max_tf = std::max(max_tf, ++tf[t]);
      content[i].push_back(std::move(t));
    }
  }
  const double n = static_cast<double>(sentences.size());
  std::vector<double> scores(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    double salience = 0;
    for (const std::string& t : content[i]) salience += static_cast<double>(tf[t]);
    if (!content[i].empty()) {
      salience /= static_cast<double>(max_tf) * static_cast<double>(content[i].size());
    }
    const double position = 1.0 - static_cast<double>(i) / n;
    const double jitter = static_cast<double>(mix_seed(seed ^ mix_seed(i)) >> 11) * 0x1p-53 * 1e-9;
    scores[i] = kPositionWeight * position + kSalienceWeight * salience + jitter;
  }
  return scores;
}

}  // namespace

bool has_repeated_ngram(const std::vector<std::string>& tokens, std::size_t n) {
  if (n == 0 || tokens.size() < n + 1) return false;
  std::set<std::vector<std::string>> seen;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::vector<std::string> gram(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                  tokens.begin() + static_cast<std::ptrdiff_t>(i + n));
    if (!seen.insert(std::move(gram)).second) return true;
  }
  return false;
}

std::string baseline_generate(std::string_view prefix, std::string_view source,
                              const GenerationParams& params) {
  const std::vector<std::string> sentences = split_sentences(source);
  const std::size_t prefix_words = word_count(prefix);
  const std::size_t budget = static_cast<std::size_t>(std::max(params.max_new_tokens, 0));
  if (sentences.empty() || prefix_words >= budget) return std::string(prefix);
  const std::size_t room = budget - prefix_words;
  const std::size_t n = static_cast<std::size_t>(std::max(params.no_repeat_ngram_size, 1));

  const std::vector<double> scores = score_sentences(sentences, static_cast<std::uint64_t>(params.seed));
  std::vector<std::size_t> order(sentences.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

  std::set<std::size_t> chosen;
  std::size_t used = 0;
  for (std::size_t i : order) {
    const std::size_t words = word_count(sentences[i]);
    if (used + words > room) continue;
    chosen.insert(i);
    if (violates(compose(prefix, sentences, chosen), n)) {
      chosen.erase(i);
      continue;
    }
    used += words;
    if (used == room) break;
  }
  if (!chosen.empty()) return compose(prefix, sentences, chosen);

  // Nothing fits whole: keep the leading words of the best sentence.
  std::vector<std::string> parts;
  if (!prefix.empty()) parts.emplace_back(prefix);
  for (const std::string& w : split_whitespace(sentences[order.front()])) {
    if (parts.size() - (prefix.empty() ? 0 : 1) >= room) break;
    parts.push_back(w);
    if (violates(join(parts, " "), n)) {
      parts.pop_back();
      break;
    }
  }
  return join(parts, " ");
}

}  // namespace revgen
