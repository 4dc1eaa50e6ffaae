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

#include "revgen/stats.h"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <vector>

#include "revgen/text.h"

namespace revgen {
namespace {

class Mean {
 public:
  void add(double v) {
    sum_ += v;
    ++n_;
  }
  std::optional<double> value() const {
    if (n_ == 0) return std::nullopt;
    return sum_ / static_cast<double>(n_);
  }

 private:
  double sum_ = 0;
  std::size_t n_ = 0;
};

std::size_t review_words(const ReviewComment& r) {
  return word_count(r.basic_reporting) + word_count(r.experimental_design) +
         word_count(r.validity_of_findings) + word_count(r.additional_comments);
}

nlohmann::json rounded(const std::optional<double>& v) {
  if (!v) return nullptr;
  return std::round(*v * 10.0) / 10.0;
}

std::string format_count(std::size_t n) {
  std::string digits = std::to_string(n);
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0 && (digits.size() - i) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return out;
}

std::string format_mean(const std::optional<double>& v) {
  if (!v) return "n/a";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", *v);
  return buf;
}

}  // namespace

CorpusStats corpus_stats(const Corpus& corpus) {
  CorpusStats s;
  Mean rounds, reviewers, v1_words, v2_words, v1_review, v2_review, meta;
  for (const PaperRecord& paper : corpus) {
    ++s.total_papers;
    s.total_rebuttals += paper.rebuttals.size();
    rounds.add(static_cast<double>(paper.review_rounds.size()));
    if (const ManuscriptDoc* m = paper.manuscript(1)) v1_words.add(static_cast<double>(m->word_count));
    if (const ManuscriptDoc* m = paper.manuscript(2)) v2_words.add(static_cast<double>(m->word_count));

    std::set<std::string> distinct;
    for (const ReviewRound& round : paper.review_rounds) {
      s.total_review_comments += round.reviews.size();
      if (round.meta_review) meta.add(static_cast<double>(word_count(*round.meta_review)));
      for (std::size_t k = 0; k < round.reviews.size(); ++k) {
        const ReviewComment& r = round.reviews[k];
        distinct.insert(r.reviewer_label ? "label:" + *r.reviewer_label
                                         : "position:" + std::to_string(k));
        const double words = static_cast<double>(review_words(r));
        if (round.manuscript_version == 1) v1_review.add(words);
        if (round.manuscript_version == 2) v2_review.add(words);
      }
    }
    if (!distinct.empty()) reviewers.add(static_cast<double>(distinct.size()));
    for (const std::string& d : paper.disciplines) ++s.discipline_histogram[d];
  }
  s.mean_review_rounds = rounds.value();
  s.mean_reviewers_per_manuscript = reviewers.value();
  s.mean_v1_manuscript_words = v1_words.value();
  s.mean_v2_manuscript_words = v2_words.value();
  s.mean_v1_review_words_per_reviewer = v1_review.value();
  s.mean_v2_review_words_per_reviewer = v2_review.value();
  s.mean_meta_review_words = meta.value();
  return s;
}

nlohmann::json stats_to_json(const CorpusStats& s) {
  return {{"total_papers", s.total_papers},
          {"total_review_comments", s.total_review_comments},
          {"total_rebuttals", s.total_rebuttals},
          {"mean_review_rounds", rounded(s.mean_review_rounds)},
          {"mean_reviewers_per_manuscript", rounded(s.mean_reviewers_per_manuscript)},
          {"mean_v1_manuscript_words", rounded(s.mean_v1_manuscript_words)},
          {"mean_v2_manuscript_words", rounded(s.mean_v2_manuscript_words)},
          {"mean_v1_review_words_per_reviewer", rounded(s.mean_v1_review_words_per_reviewer)},
          {"mean_v2_review_words_per_reviewer", rounded(s.mean_v2_review_words_per_reviewer)},
          {"mean_meta_review_words", rounded(s.mean_meta_review_words)},
          {"discipline_histogram", s.discipline_histogram}};
}

std::string stats_table(const CorpusStats& s) {
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"Total papers", format_count(s.total_papers)},
      {"Total review comments", format_count(s.total_review_comments)},
      {"Total rebuttal letters", format_count(s.total_rebuttals)},
      {"Mean review rounds per manuscript", format_mean(s.mean_review_rounds)},
      {"Mean reviewer number per manuscript", format_mean(s.mean_reviewers_per_manuscript)},
      {"Mean v1 manuscript word count", format_mean(s.mean_v1_manuscript_words)},
      {"Mean v2 manuscript word count", format_mean(s.mean_v2_manuscript_words)},
      {"Mean v1 review comment word count per reviewer",
       format_mean(s.mean_v1_review_words_per_reviewer)},
      {"Mean v2 review comment word count per reviewer",
       format_mean(s.mean_v2_review_words_per_reviewer)},
      {"Mean meta-review word count", format_mean(s.mean_meta_review_words)},
  };
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [d, n] : s.discipline_histogram) width = std::max(width, d.size() + 2);

  std::ostringstream out;
  auto line = [&](const std::string& k, const std::string& v) {
    out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  };
  line("Statistical feature", "Value");
  for (const auto& [k, v] : rows) line(k, v);
  if (!s.discipline_histogram.empty()) {
    out << '\n';
    line("Discipline", "Papers");
    for (const auto& [d, n] : s.discipline_histogram) line("  " + d, format_count(n));
  }
  return out.str();
}

}  // namespace revgen
