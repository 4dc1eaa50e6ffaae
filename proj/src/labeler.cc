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

#include "revgen/labeler.h"

#include <algorithm>

#include "revgen/error.h"
#include "revgen/resources.h"
#include "revgen/text.h"

namespace revgen {

using nlohmann::json;

namespace {

constexpr std::string_view kFigureTableTerms[] = {"figure", "figures", "fig.", "figs.",
                                                  "table",  "tables"};

bool mentions_figure_or_table(std::string_view sentence) {
  return std::any_of(std::begin(kFigureTableTerms), std::end(kFigureTableTerms),
                     [&](std::string_view term) { return contains_word_ci(sentence, term); });
}

bool mentions_peerj(std::string_view sentence) {
  return find_ci(sentence, "peerj") != std::string_view::npos;
}

bool is_word_token(const std::string& t) {
  return !t.empty() && (is_alnum(t[0]) || static_cast<unsigned char>(t[0]) >= 0x80);
}

bool is_number_token(const std::string& t) {
  return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return is_digit(c); });
}

RemovalReason parse_reason(std::string_view name) {
  if (name == "figure_table") return RemovalReason::kFigureTable;
  if (name == "peerj") return RemovalReason::kPeerJ;
  throw Error(ErrorCode::kSchemaViolation, "labels.removed: unknown reason '" + std::string(name) + "'");
}

std::string append_segment(std::string acc, const std::string& segment) {
  if (segment.empty()) return acc;
  if (!acc.empty()) acc += "\n\n";
  acc += segment;
  return acc;
}

}  // namespace

std::string_view removal_reason_name(RemovalReason reason) {
  return reason == RemovalReason::kFigureTable ? "figure_table" : "peerj";
}

bool is_question(std::string_view sentence) {
  return sentence.find('?') != std::string_view::npos;
}

bool is_imperative(std::string_view sentence, const PosTagger& tagger) {
  const std::string_view s = trim(sentence);
  if (s.empty() || s.back() != '.') return false;
  const std::vector<std::string> tokens = tokenize_words(s);
  // Skip list markers: "1.", "2)", "(a)", "-", "*".
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (!is_word_token(tokens[i]) || is_number_token(tokens[i])) {
      ++i;
    } else if (tokens[i].size() == 1 && i + 1 < tokens.size() &&
               (tokens[i + 1] == ")" || tokens[i + 1] == ".")) {
      i += 2;
    } else {
      break;
    }
  }
  if (i >= tokens.size()) return false;
  const std::vector<std::string> rest(tokens.begin() + static_cast<std::ptrdiff_t>(i), tokens.end());
  const std::vector<PosTag> tags = tagger.tag(rest);
  return !tags.empty() && tags.front() == PosTag::kVerbBase;
}

ReviewLabeler::ReviewLabeler(const PosTagger& tagger, std::string_view keywords_text,
                             const SentenceSplitter& splitter)
    : tagger_(tagger), splitter_(splitter) {
  for (const std::string& raw : split_lines(keywords_text)) {
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> words = split_whitespace(to_lower(line));
    if (!words.empty()) keywords_.push_back(std::move(words));
  }
}

const ReviewLabeler& ReviewLabeler::builtin() {
  static const ReviewLabeler instance(LexiconPosTagger::builtin(), resources::proposal_keywords());
  return instance;
}

bool ReviewLabeler::has_proposal_keyword(std::string_view sentence) const {
  std::vector<std::string> tokens = tokenize_words(sentence);
  for (std::string& t : tokens) t = to_lower(t);
  for (const auto& kw : keywords_) {
    if (kw.size() > tokens.size()) continue;
    for (std::size_t i = 0; i + kw.size() <= tokens.size(); ++i) {
      if (std::equal(kw.begin(), kw.end(), tokens.begin() + static_cast<std::ptrdiff_t>(i))) {
        return true;
      }
    }
  }
  return false;
}

bool ReviewLabeler::is_proposal(std::string_view sentence) const {
  return has_proposal_keyword(sentence) || is_imperative(sentence, tagger_);
}

FilterResult ReviewLabeler::filter(std::string_view text) const {
  FilterResult result;
  for (std::string& s : splitter_.split(text)) {
    if (mentions_figure_or_table(s)) {
      result.removed.push_back({std::move(s), RemovalReason::kFigureTable});
    } else if (mentions_peerj(s)) {
      result.removed.push_back({std::move(s), RemovalReason::kPeerJ});
    } else {
      result.sentences.push_back(std::move(s));
    }
  }
  result.kept = join(result.sentences, " ");
  return result;
}

LabeledReview ReviewLabeler::label(const ReviewComment& review) const {
  LabeledReview out;
  const std::string* segments[] = {&review.basic_reporting, &review.experimental_design,
                                   &review.validity_of_findings, &review.additional_comments};
  std::string filtered[4];
  for (int k = 0; k < 4; ++k) {
    FilterResult f = filter(*segments[k]);
    filtered[k] = std::move(f.kept);
    for (RemovedSentence& r : f.removed) out.removed.push_back(std::move(r));
    for (std::string& s : f.sentences) {
      if (is_question(s)) {
        out.questions.push_back(std::move(s));
      } else if (is_proposal(s)) {
        out.proposals.push_back(std::move(s));
      }
    }
  }
  out.basic = filtered[0];
  out.ef = append_segment(append_segment("", filtered[1]), filtered[2]);
  out.additional = filtered[3];
  for (const std::string& seg : filtered) out.whole = append_segment(std::move(out.whole), seg);
  return out;
}

bool is_proposal(std::string_view sentence, const PosTagger& tagger) {
  return ReviewLabeler(tagger, resources::proposal_keywords()).is_proposal(sentence);
}

FilterResult filter_review_sentences(std::string_view text) {
  return ReviewLabeler::builtin().filter(text);
}

LabeledReview label_review(const ReviewComment& review, const PosTagger& tagger) {
  if (&tagger == &LexiconPosTagger::builtin()) return ReviewLabeler::builtin().label(review);
  return ReviewLabeler(tagger, resources::proposal_keywords()).label(review);
}

json labeled_to_json(const LabeledReview& l) {
  json removed = json::array();
  for (const RemovedSentence& r : l.removed) {
    removed.push_back({{"sentence", r.sentence}, {"reason", removal_reason_name(r.reason)}});
  }
  return {{"basic_reporting", l.basic},   {"ef", l.ef},
          {"additional_comments", l.additional}, {"whole", l.whole},
          {"questions", l.questions},     {"proposals", l.proposals},
          {"removed", std::move(removed)}};
}

LabeledReview labeled_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kSchemaViolation, "labels: expected object");
  LabeledReview l;
  try {
    l.basic = j.at("basic_reporting").get<std::string>();
    l.ef = j.at("ef").get<std::string>();
    l.additional = j.at("additional_comments").get<std::string>();
    l.whole = j.at("whole").get<std::string>();
    l.questions = j.at("questions").get<std::vector<std::string>>();
    l.proposals = j.at("proposals").get<std::vector<std::string>>();
    for (const json& r : j.at("removed")) {
      l.removed.push_back({r.at("sentence").get<std::string>(),
                           parse_reason(r.at("reason").get<std::string>())});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kSchemaViolation, std::string("labels: ") + e.what());
  }
  return l;
}

}  // namespace revgen
