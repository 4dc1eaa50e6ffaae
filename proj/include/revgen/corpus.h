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

// Open-peer-review corpus model: papers, manuscript versions, review rounds
// and their ingestion from processed JSON records and GROBID TEI output.

#ifndef REVGEN_CORPUS_H_
#define REVGEN_CORPUS_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace revgen {

enum class Decision { kAccept, kMinorRevision, kMajorRevision, kReject, kUnknown };

// Case-insensitive; unrecognized strings map to kUnknown.
Decision parse_decision(std::string_view text);
std::string_view decision_name(Decision decision);

struct Section {
  std::string title;
  std::string body;

  bool operator==(const Section&) const = default;
};

struct ManuscriptDoc {
  int version = 1;
  std::vector<Section> sections;
  std::size_t word_count = 0;  // words over all section bodies

  // Recomputes word_count from the sections.
  void update_word_count();

  bool operator==(const ManuscriptDoc&) const = default;
};

struct ReviewComment {
  std::optional<std::string> reviewer_label;
  std::string basic_reporting;
  std::string experimental_design;
  std::string validity_of_findings;
  std::string additional_comments;

  bool empty() const {
    return basic_reporting.empty() && experimental_design.empty() &&
           validity_of_findings.empty() && additional_comments.empty();
  }

  bool operator==(const ReviewComment&) const = default;
};

struct ReviewRound {
  int round_index = 1;
  int manuscript_version = 1;
  std::vector<ReviewComment> reviews;
  std::optional<std::string> meta_review;
  std::optional<std::string> decision_note;

  bool operator==(const ReviewRound&) const = default;
};

struct RebuttalLetter {
  int round_index = 1;
  std::string text;

  bool operator==(const RebuttalLetter&) const = default;
};

struct PaperRecord {
  std::string paper_id;
  std::string title;
  std::set<std::string> disciplines;
  std::set<std::string> subjects;
  std::vector<ManuscriptDoc> manuscripts;  // version 1 first
  std::vector<ReviewRound> review_rounds;
  std::vector<RebuttalLetter> rebuttals;
  Decision decision = Decision::kUnknown;

  const ManuscriptDoc* manuscript(int version) const;

  bool operator==(const PaperRecord&) const = default;
};

using Corpus = std::vector<PaperRecord>;

// Parses one processed record. Throws Error(kMalformedJson) for text that is
// not JSON and Error(kSchemaViolation) naming the offending field path.
PaperRecord load_record(std::string_view json_text);
PaperRecord record_from_json(const nlohmann::json& json);

nlohmann::json record_to_json(const PaperRecord& record);
std::string serialize_record(const PaperRecord& record);

nlohmann::json manuscript_to_json(const ManuscriptDoc& doc);
// Accepts {"version"?, "sections": [...]}; version defaults to 1.
ManuscriptDoc manuscript_from_json(const nlohmann::json& json,
                                   const std::string& path = "");

// One failed line of a JSON-Lines corpus.
struct IngestIssue {
  std::size_t line = 0;  // 1-based
  std::string error;     // error code name
  std::string message;
};

struct IngestResult {
  Corpus records;
  std::vector<IngestIssue> issues;
};

// Reads JSON-Lines; blank lines are skipped. Bad lines and duplicate
// paper_ids are reported in `issues` and skipped; when `strict` the first
// problem is thrown instead.
IngestResult load_corpus(std::istream& in, bool strict = false);
Corpus load_corpus_file(const std::string& path);

// GROBID TEI to ManuscriptDoc. The abstract becomes a leading "Abstract"
// section and every body division one section. Figures, tables and formulas
// are dropped. Throws kMalformedXml or kEmptyDocument.
ManuscriptDoc parse_tei(std::string_view xml_text);

}  // namespace revgen

#endif  // REVGEN_CORPUS_H_
