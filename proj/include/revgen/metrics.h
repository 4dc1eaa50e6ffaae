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

// ROUGE-N, ROUGE-L and ROUGE-Lsum with corpus-level aggregation.

#ifndef REVGEN_METRICS_H_
#define REVGEN_METRICS_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace revgen {

struct RougeScore {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

// f1 = 2PR / (P + R), or 0 when P + R is 0.
RougeScore make_rouge_score(double precision, double recall);

// Lowercases and splits on every character outside [a-z0-9]. No stemming.
std::vector<std::string> tokenize_for_rouge(std::string_view text);

RougeScore rouge_n_tokens(const std::vector<std::string>& candidate,
                          const std::vector<std::string>& reference, std::size_t n);
RougeScore rouge_l_tokens(const std::vector<std::string>& candidate,
                          const std::vector<std::string>& reference);

// Summary-level LCS over pre-tokenized sentences. For every reference
// sentence the union of its tokens that take part in an LCS with each
// candidate sentence is credited, at most as often as the token occurs in
// both texts. Where a sentence pair has several LCSs, the one using the
// earliest reference positions is taken.
RougeScore rouge_lsum_sentences(const std::vector<std::vector<std::string>>& candidate,
                                const std::vector<std::vector<std::string>>& reference);

// Clipped n-gram overlap; zero counts yield 0.
RougeScore rouge_n(std::string_view candidate, std::string_view reference, std::size_t n);
RougeScore rouge_l(std::string_view candidate, std::string_view reference);
// Sentences come from the review sentence splitter.
RougeScore rouge_lsum(std::string_view candidate, std::string_view reference);

std::size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b);

// Mean F1 x 100 over the evaluated pairs.
struct MethodScores {
  double rouge1 = 0;
  double rouge2 = 0;
  double rougeL = 0;
  double rougeLsum = 0;
  std::size_t count = 0;
};

// Throws Error(kEmptyEvaluation) for an empty input. Pairs are
// (candidate, reference). Scoring may use up to `jobs` threads; the result
// does not depend on it.
MethodScores evaluate_corpus(const std::vector<std::pair<std::string, std::string>>& pairs,
                             int jobs = 1);

struct EvalReport {
  std::vector<std::pair<std::string, MethodScores>> methods;  // input order
};

// Values rounded to two decimals.
nlohmann::json report_to_json(const EvalReport& report);
std::string report_table(const EvalReport& report);

}  // namespace revgen

#endif  // REVGEN_METRICS_H_
