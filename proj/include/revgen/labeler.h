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

// Review-comment auto-labeling: figure/table/PeerJ sentence filtering and
// question and proposal extraction.

#ifndef REVGEN_LABELER_H_
#define REVGEN_LABELER_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "revgen/corpus.h"
#include "revgen/sentence_splitter.h"
#include "revgen/tagger.h"

namespace revgen {

enum class RemovalReason { kFigureTable, kPeerJ };

std::string_view removal_reason_name(RemovalReason reason);

struct RemovedSentence {
  std::string sentence;
  RemovalReason reason;

  bool operator==(const RemovedSentence&) const = default;
};

struct FilterResult {
  std::string kept;                     // kept sentences joined by single spaces
  std::vector<std::string> sentences;   // the kept sentences
  std::vector<RemovedSentence> removed;
};

struct LabeledReview {
  std::string basic;       // filtered Basic Reporting
  std::string ef;          // filtered Experimental Design + Validity of Findings
  std::string additional;  // filtered Additional Comments
  std::string whole;       // all four filtered segments
  std::vector<std::string> questions;
  std::vector<std::string> proposals;
  std::vector<RemovedSentence> removed;

  bool operator==(const LabeledReview&) const = default;
};

nlohmann::json labeled_to_json(const LabeledReview& labeled);
LabeledReview labeled_from_json(const nlohmann::json& json);

// True iff the sentence contains '?'.
bool is_question(std::string_view sentence);

// True iff the first word (after list markers such as "1." or "(a)") is
// tagged as a base-form verb and the sentence ends with '.'.
bool is_imperative(std::string_view sentence, const PosTagger& tagger);

class ReviewLabeler {
 public:
  // Keyword text: one keyword or phrase per line, '#' comments.
  ReviewLabeler(const PosTagger& tagger, std::string_view keywords_text,
                const SentenceSplitter& splitter = SentenceSplitter::builtin());

  // Builtin tagger, keywords and splitter.
  static const ReviewLabeler& builtin();

  bool has_proposal_keyword(std::string_view sentence) const;
  bool is_proposal(std::string_view sentence) const;

  // Drops sentences mentioning figures or tables (whole words "figure",
  // "figures", "fig.", "figs.", "table", "tables") and sentences containing
  // "peerj". Figure/table takes precedence when both apply.
  FilterResult filter(std::string_view text) const;

  // Segments are filtered one by one, then concatenated with blank lines in
  // the order Basic, Experimental Design, Validity, Additional (empty ones
  // skipped). A sentence that is both a question and a proposal is listed as
  // a question only.
  LabeledReview label(const ReviewComment& review) const;

 private:
  const PosTagger& tagger_;
  const SentenceSplitter& splitter_;
  std::vector<std::vector<std::string>> keywords_;  // lowercase word sequences
};

// Convenience wrappers over ReviewLabeler with the builtin keyword list.
bool is_proposal(std::string_view sentence, const PosTagger& tagger);
FilterResult filter_review_sentences(std::string_view text);
LabeledReview label_review(const ReviewComment& review, const PosTagger& tagger);

}  // namespace revgen

#endif  // REVGEN_LABELER_H_
