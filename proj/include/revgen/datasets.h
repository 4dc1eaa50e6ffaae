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

// Fine-tuning dataset assembly: labeled corpora, experiment record
// selection, per-module (source, target) pairs and the seeded 8:1:1 split.

#ifndef REVGEN_DATASETS_H_
#define REVGEN_DATASETS_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "revgen/corpus.h"
#include "revgen/labeler.h"
#include "revgen/module.h"
#include "revgen/sectioner.h"

namespace revgen {

// A paper together with the labels of all its reviews:
// labels[i][j] belongs to record.review_rounds[i].reviews[j].
struct LabeledPaper {
  PaperRecord record;
  std::vector<std::vector<LabeledReview>> labels;

  bool operator==(const LabeledPaper&) const = default;
};

LabeledPaper label_paper(const PaperRecord& record, const ReviewLabeler& labeler);
std::vector<LabeledPaper> label_corpus(const Corpus& corpus, const ReviewLabeler& labeler,
                                       int jobs = 1);

// The record JSON with a "labels" object added to every review.
nlohmann::json labeled_paper_to_json(const LabeledPaper& paper);
// Reviews without "labels" are labeled with `labeler`.
LabeledPaper labeled_paper_from_json(const nlohmann::json& json, const ReviewLabeler& labeler);
std::vector<LabeledPaper> load_labeled_corpus(std::istream& in, const ReviewLabeler& labeler);

struct RecordKey {
  std::string paper_id;
  std::string reviewer;

  auto operator<=>(const RecordKey&) const = default;
};

// One initial-submission manuscript paired with one of its reviews.
struct ExperimentRecord {
  RecordKey key;
  ManuscriptDoc manuscript;
  ReviewComment review;
  LabeledReview labeled;
};

struct RecordThresholds {
  std::size_t min_manuscript_words = 2000;  // inclusive
  std::size_t min_review_words = 100;       // inclusive, on the filtered whole review
};

// Keeps every review of a round on manuscript version 1 whose manuscript and
// filtered review reach the thresholds. Unlabeled reviewers are keyed
// "reviewer-<n>" by their position in the round.
std::vector<ExperimentRecord> filter_records(const std::vector<LabeledPaper>& corpus,
                                             const RecordThresholds& thresholds = {});

struct FinetunePair {
  std::string paper_id;
  std::string reviewer;
  Module module;
  std::string source;
  std::string target;

  bool operator==(const FinetunePair&) const = default;
};

nlohmann::json pair_to_json(const FinetunePair& pair);
FinetunePair pair_from_json(const nlohmann::json& json);

struct FinetuneCorpus {
  std::map<Module, std::vector<FinetunePair>> pairs;
  std::map<Module, std::size_t> dropped;  // empty source or target

  std::size_t emitted() const;
  std::size_t total_dropped() const;
};

// Per record: Basic (t_sum -> basic reporting), EF (t_mr -> ED + VF),
// Ques and Propos (t_full -> sentences joined by spaces), Addl (t_full ->
// additional comments) and Whole (t_full -> whole review). A pair whose
// source or target is blank is dropped and counted.
FinetuneCorpus build_finetune_corpus(const std::vector<ExperimentRecord>& records,
                                     const TitleClassifier& classifier);

struct SplitRatios {
  unsigned train = 8;
  unsigned validation = 1;
  unsigned test = 1;

  bool operator==(const SplitRatios&) const = default;
};

// Parses "8:1:1".
SplitRatios parse_split_ratios(std::string_view text);

struct SplitDataset {
  std::vector<RecordKey> train;
  std::vector<RecordKey> validation;
  std::vector<RecordKey> test;
  std::uint64_t seed = 0;
  SplitRatios ratios;
};

// Sorts the keys, shuffles them with a generator seeded by `seed`, then takes
// floor(N * test / total) keys for test, floor(N * validation / total) for
// validation and the rest for train. Throws Error(kTooFewRecords) when
// N < 10 and Error(kInvalidArgument) for duplicate keys.
SplitDataset split(std::vector<RecordKey> keys, std::uint64_t seed, SplitRatios ratios = {});

nlohmann::json split_to_json(const SplitDataset& split);

}  // namespace revgen

#endif  // REVGEN_DATASETS_H_
