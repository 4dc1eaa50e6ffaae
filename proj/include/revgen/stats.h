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

#ifndef REVGEN_STATS_H_
#define REVGEN_STATS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "revgen/corpus.h"

namespace revgen {

// Corpus-level statistics. Means are absent when no entry contributes.
struct CorpusStats {
  std::size_t total_papers = 0;
  std::size_t total_review_comments = 0;
  std::size_t total_rebuttals = 0;
  std::optional<double> mean_review_rounds;             // over all papers
  std::optional<double> mean_reviewers_per_manuscript;  // papers with >= 1 review
  std::optional<double> mean_v1_manuscript_words;
  std::optional<double> mean_v2_manuscript_words;
  std::optional<double> mean_v1_review_words_per_reviewer;  // reviews of v1 rounds
  std::optional<double> mean_v2_review_words_per_reviewer;
  std::optional<double> mean_meta_review_words;  // rounds with a meta-review
  std::map<std::string, std::size_t> discipline_histogram;
};

// Reviewers are distinct reviewer labels across a paper's rounds; an
// unlabeled review is identified by its position within its round.
CorpusStats corpus_stats(const Corpus& corpus);

// Means rounded to one decimal, absent means as null.
nlohmann::json stats_to_json(const CorpusStats& stats);

// Two-column table in the conventional row order, followed by the
// discipline histogram.
std::string stats_table(const CorpusStats& stats);

}  // namespace revgen

#endif  // REVGEN_STATS_H_
