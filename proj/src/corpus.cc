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

#include "revgen/corpus.h"

#include <fstream>
#include <unordered_set>

#include "revgen/error.h"
#include "revgen/text.h"

namespace revgen {

using nlohmann::json;

namespace {

[[noreturn]] void violation(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kSchemaViolation, path + ": " + what);
}

std::string join_path(const std::string& base, std::string_view key) {
  return base.empty() ? std::string(key) : base + "." + std::string(key);
}

std::string index_path(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

const json* find_field(const json& obj, std::string_view key) {
  auto it = obj.find(key);
  if (it == obj.end()) return nullptr;
  return &*it;
}

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) violation(path.empty() ? "<record>" : path, "expected object");
}

std::string required_string(const json& obj, std::string_view key,
                            const std::string& base) {
  const json* v = find_field(obj, key);
  const std::string path = join_path(base, key);
  if (v == nullptr) violation(path, "required field missing");
  if (!v->is_string()) violation(path, "expected string");
  return v->get<std::string>();
}

std::string optional_string(const json& obj, std::string_view key,
                            const std::string& base) {
  const json* v = find_field(obj, key);
  if (v == nullptr || v->is_null()) return {};
  if (!v->is_string()) violation(join_path(base, key), "expected string");
  return v->get<std::string>();
}

std::optional<std::string> nullable_string(const json& obj, std::string_view key,
                                           const std::string& base) {
  const json* v = find_field(obj, key);
  if (v == nullptr || v->is_null()) return std::nullopt;
  if (!v->is_string()) violation(join_path(base, key), "expected string or null");
  return v->get<std::string>();
}

int required_int(const json& obj, std::string_view key, const std::string& base) {
  const json* v = find_field(obj, key);
  const std::string path = join_path(base, key);
  if (v == nullptr) violation(path, "required field missing");
  if (!v->is_number_integer()) violation(path, "expected integer");
  const auto value = v->get<long long>();
  if (value < 1 || value > 1000000) violation(path, "expected positive integer");
  return static_cast<int>(value);
}

const json* array_field(const json& obj, std::string_view key,
                        const std::string& base, bool required) {
  const json* v = find_field(obj, key);
  const std::string path = join_path(base, key);
  if (v == nullptr || (!required && v->is_null())) {
    if (required) violation(path, "required field missing");
    return nullptr;
  }
  if (!v->is_array()) violation(path, "expected array");
  return v;
}

std::set<std::string> string_set(const json& obj, std::string_view key,
                                 const std::string& base) {
  std::set<std::string> out;
  const json* arr = array_field(obj, key, base, false);
  if (arr == nullptr) return out;
  const std::string path = join_path(base, key);
  for (std::size_t i = 0; i < arr->size(); ++i) {
    if (!(*arr)[i].is_string()) violation(index_path(path, i), "expected string");
    out.insert((*arr)[i].get<std::string>());
  }
  return out;
}

ReviewComment review_from_json(const json& j, const std::string& path) {
  require_object(j, path);
  ReviewComment review;
  review.reviewer_label = nullable_string(j, "reviewer", path);
  review.basic_reporting = optional_string(j, "basic_reporting", path);
  review.experimental_design = optional_string(j, "experimental_design", path);
  review.validity_of_findings = optional_string(j, "validity_of_findings", path);
  review.additional_comments = optional_string(j, "additional_comments", path);
  if (review.empty()) violation(path, "all four review segments are empty");
  return review;
}

ReviewRound round_from_json(const json& j, const std::string& path) {
  require_object(j, path);
  ReviewRound round;
  round.round_index = required_int(j, "round", path);
  round.manuscript_version = required_int(j, "manuscript_version", path);
  if (const json* reviews = array_field(j, "reviews", path, false)) {
    const std::string rpath = join_path(path, "reviews");
    for (std::size_t i = 0; i < reviews->size(); ++i) {
      round.reviews.push_back(review_from_json((*reviews)[i], index_path(rpath, i)));
    }
  }
  round.meta_review = nullable_string(j, "meta_review", path);
  round.decision_note = nullable_string(j, "decision_note", path);
  if (round.reviews.empty() && !round.meta_review) {
    violation(join_path(path, "reviews"), "empty round without a meta_review");
  }
  return round;
}

json nullable(const std::optional<std::string>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

Decision parse_decision(std::string_view text) {
  const std::string key = collapse_whitespace(to_lower(text));
  if (key == "accept") return Decision::kAccept;
  if (key == "minor revision" || key == "minor revisions") return Decision::kMinorRevision;
  if (key == "major revision" || key == "major revisions") return Decision::kMajorRevision;
  if (key == "reject") return Decision::kReject;
  return Decision::kUnknown;
}

std::string_view decision_name(Decision decision) {
  switch (decision) {
    case Decision::kAccept: return "accept";
    case Decision::kMinorRevision: return "minor revision";
    case Decision::kMajorRevision: return "major revision";
    case Decision::kReject: return "reject";
    case Decision::kUnknown: break;
  }
  return "unknown";
}

void ManuscriptDoc::update_word_count() {
  word_count = 0;
  for (const Section& s : sections) word_count += revgen::word_count(s.body);
}

const ManuscriptDoc* PaperRecord::manuscript(int version) const {
  for (const ManuscriptDoc& doc : manuscripts) {
    if (doc.version == version) return &doc;
  }
  return nullptr;
}

ManuscriptDoc manuscript_from_json(const json& j, const std::string& path) {
  require_object(j, path);
  ManuscriptDoc doc;
  doc.version = find_field(j, "version") ? required_int(j, "version", path) : 1;
  const json* sections = array_field(j, "sections", path, true);
  const std::string spath = join_path(path, "sections");
  for (std::size_t i = 0; i < sections->size(); ++i) {
    const json& s = (*sections)[i];
    const std::string p = index_path(spath, i);
    require_object(s, p);
    doc.sections.push_back({required_string(s, "title", p), optional_string(s, "body", p)});
  }
  doc.update_word_count();
  return doc;
}

json manuscript_to_json(const ManuscriptDoc& doc) {
  json sections = json::array();
  for (const Section& s : doc.sections) {
    sections.push_back({{"title", s.title}, {"body", s.body}});
  }
  return {{"version", doc.version}, {"sections", std::move(sections)}};
}

PaperRecord record_from_json(const json& j) {
  require_object(j, "");
  PaperRecord record;
  record.paper_id = required_string(j, "paper_id", "");
  if (record.paper_id.empty()) violation("paper_id", "must be nonempty");
  record.title = optional_string(j, "title", "");
  record.disciplines = string_set(j, "disciplines", "");
  record.subjects = string_set(j, "subjects", "");

  const json* manuscripts = array_field(j, "manuscripts", "", true);
  if (manuscripts->empty()) violation("manuscripts", "must contain at least one version");
  for (std::size_t i = 0; i < manuscripts->size(); ++i) {
    const std::string p = index_path("manuscripts", i);
    const json& m = (*manuscripts)[i];
    require_object(m, p);
    // Ordinary manuscripts must state their version.
    required_int(m, "version", p);
    ManuscriptDoc doc = manuscript_from_json(m, p);
    const bool in_order = record.manuscripts.empty()
                              ? doc.version == 1
                              : doc.version > record.manuscripts.back().version;
    if (!in_order) {
      violation(p + ".version", "versions must start at 1 and strictly increase");
    }
    record.manuscripts.push_back(std::move(doc));
  }

  if (const json* rounds = array_field(j, "review_rounds", "", false)) {
    std::unordered_set<int> seen;
    for (std::size_t i = 0; i < rounds->size(); ++i) {
      const std::string p = index_path("review_rounds", i);
      ReviewRound round = round_from_json((*rounds)[i], p);
      if (!seen.insert(round.round_index).second) violation(p + ".round", "duplicate round index");
      if (record.manuscript(round.manuscript_version) == nullptr) {
        violation(p + ".manuscript_version", "references a missing manuscript version");
      }
      record.review_rounds.push_back(std::move(round));
    }
  }

  if (const json* rebuttals = array_field(j, "rebuttals", "", false)) {
    for (std::size_t i = 0; i < rebuttals->size(); ++i) {
      const std::string p = index_path("rebuttals", i);
      require_object((*rebuttals)[i], p);
      record.rebuttals.push_back(
          {required_int((*rebuttals)[i], "round", p), optional_string((*rebuttals)[i], "text", p)});
    }
  }

  record.decision = parse_decision(optional_string(j, "decision", ""));
  return record;
}

PaperRecord load_record(std::string_view json_text) {
  json j = json::parse(json_text.begin(), json_text.end(), nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::kMalformedJson, "record is not valid JSON");
  return record_from_json(j);
}

json record_to_json(const PaperRecord& record) {
  json manuscripts = json::array();
  for (const ManuscriptDoc& doc : record.manuscripts) manuscripts.push_back(manuscript_to_json(doc));

  json rounds = json::array();
  for (const ReviewRound& round : record.review_rounds) {
    json reviews = json::array();
    for (const ReviewComment& r : round.reviews) {
      reviews.push_back({{"reviewer", nullable(r.reviewer_label)},
                         {"basic_reporting", r.basic_reporting},
                         {"experimental_design", r.experimental_design},
                         {"validity_of_findings", r.validity_of_findings},
                         {"additional_comments", r.additional_comments}});
    }
    rounds.push_back({{"round", round.round_index},
                      {"manuscript_version", round.manuscript_version},
                      {"reviews", std::move(reviews)},
                      {"meta_review", nullable(round.meta_review)},
                      {"decision_note", nullable(round.decision_note)}});
  }

  json rebuttals = json::array();
  for (const RebuttalLetter& r : record.rebuttals) {
    rebuttals.push_back({{"round", r.round_index}, {"text", r.text}});
  }

  return {{"paper_id", record.paper_id},
          {"title", record.title},
          {"disciplines", record.disciplines},
          {"subjects", record.subjects},
          {"manuscripts", std::move(manuscripts)},
          {"review_rounds", std::move(rounds)},
          {"rebuttals", std::move(rebuttals)},
          {"decision", decision_name(record.decision)}};
}

std::string serialize_record(const PaperRecord& record) {
  return record_to_json(record).dump();
}

IngestResult load_corpus(std::istream& in, bool strict) {
  IngestResult result;
  std::unordered_set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      PaperRecord record = load_record(line);
      if (!ids.insert(record.paper_id).second) {
        throw Error(ErrorCode::kSchemaViolation, "paper_id: duplicate id " + record.paper_id);
      }
      result.records.push_back(std::move(record));
    } catch (const Error& e) {
      if (strict) {
        throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
      }
      result.issues.push_back({line_no, std::string(error_code_name(e.code())), e.what()});
    }
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "error while reading corpus");
  return result;
}

Corpus load_corpus_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  try {
    return load_corpus(in, true).records;
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

}  // namespace revgen
