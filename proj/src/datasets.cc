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

#include "revgen/datasets.h"

#include <algorithm>
#include <set>

#include "revgen/error.h"
#include "revgen/parallel.h"
#include "revgen/rng.h"
#include "revgen/text.h"

namespace revgen {

using nlohmann::json;

LabeledPaper label_paper(const PaperRecord& record, const ReviewLabeler& labeler) {
  LabeledPaper out{record, {}};
  out.labels.reserve(record.review_rounds.size());
  for (const ReviewRound& round : record.review_rounds) {
    std::vector<LabeledReview> labels;
    labels.reserve(round.reviews.size());
    for (const ReviewComment& review : round.reviews) labels.push_back(labeler.label(review));
    out.labels.push_back(std::move(labels));
  }
  return out;
}

std::vector<LabeledPaper> label_corpus(const Corpus& corpus, const ReviewLabeler& labeler,
                                       int jobs) {
  std::vector<LabeledPaper> out(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t i) { out[i] = label_paper(corpus[i], labeler); });
  return out;
}

json labeled_paper_to_json(const LabeledPaper& paper) {
  json j = record_to_json(paper.record);
  json& rounds = j["review_rounds"];
  for (std::size_t i = 0; i < paper.labels.size() && i < rounds.size(); ++i) {
    json& reviews = rounds[i]["reviews"];
    for (std::size_t k = 0; k < paper.labels[i].size() && k < reviews.size(); ++k) {
      reviews[k]["labels"] = labeled_to_json(paper.labels[i][k]);
    }
  }
  return j;
}

LabeledPaper labeled_paper_from_json(const json& j, const ReviewLabeler& labeler) {
  LabeledPaper out{record_from_json(j), {}};
  if (out.record.review_rounds.empty()) return out;
  const json& rounds = j.at("review_rounds");
  for (std::size_t i = 0; i < out.record.review_rounds.size(); ++i) {
    const ReviewRound& round = out.record.review_rounds[i];
    std::vector<LabeledReview> labels;
    for (std::size_t k = 0; k < round.reviews.size(); ++k) {
      const json& rj = rounds[i]["reviews"][k];
      auto it = rj.find("labels");
      labels.push_back(it != rj.end() ? labeled_from_json(*it) : labeler.label(round.reviews[k]));
    }
    out.labels.push_back(std::move(labels));
  }
  return out;
}

std::vector<LabeledPaper> load_labeled_corpus(std::istream& in, const ReviewLabeler& labeler) {
  std::vector<LabeledPaper> out;
  std::set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    json j = json::parse(line, nullptr, false);
    try {
      if (j.is_discarded()) throw Error(ErrorCode::kMalformedJson, "not valid JSON");
      LabeledPaper paper = labeled_paper_from_json(j, labeler);
      if (!ids.insert(paper.record.paper_id).second) {
        throw Error(ErrorCode::kSchemaViolation, "paper_id: duplicate id " + paper.record.paper_id);
      }
      out.push_back(std::move(paper));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<ExperimentRecord> filter_records(const std::vector<LabeledPaper>& corpus,
                                             const RecordThresholds& thresholds) {
  std::vector<ExperimentRecord> out;
  for (const LabeledPaper& paper : corpus) {
    const ManuscriptDoc* v1 = paper.record.manuscript(1);
    if (v1 == nullptr || v1->word_count < thresholds.min_manuscript_words) continue;
    std::set<std::string> used;
    for (std::size_t i = 0; i < paper.record.review_rounds.size(); ++i) {
      const ReviewRound& round = paper.record.review_rounds[i];
      if (round.manuscript_version != 1) continue;
      for (std::size_t k = 0; k < round.reviews.size(); ++k) {
        const LabeledReview& labeled = paper.labels.at(i).at(k);
        if (word_count(labeled.whole) < thresholds.min_review_words) continue;
        const ReviewComment& review = round.reviews[k];
        std::string reviewer = review.reviewer_label && !trim(*review.reviewer_label).empty()
                                   ? *review.reviewer_label
                                   : "reviewer-" + std::to_string(k + 1);
        if (!used.insert(reviewer).second) {
          int n = 2;
          while (!used.insert(reviewer + "#" + std::to_string(n)).second) ++n;
          reviewer += "#" + std::to_string(n);
        }
        out.push_back({{paper.record.paper_id, reviewer}, *v1, review, labeled});
      }
    }
  }
  return out;
}

json pair_to_json(const FinetunePair& p) {
  return {{"paper_id", p.paper_id},
          {"reviewer", p.reviewer},
          {"module", module_tag(p.module)},
          {"source", p.source},
          {"target", p.target}};
}

FinetunePair pair_from_json(const json& j) {
  try {
    return {j.at("paper_id").get<std::string>(), j.at("reviewer").get<std::string>(),
            parse_module(j.at("module").get<std::string>()), j.at("source").get<std::string>(),
            j.at("target").get<std::string>()};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kSchemaViolation, std::string("finetune pair: ") + e.what());
  }
}

std::size_t FinetuneCorpus::emitted() const {
  std::size_t n = 0;
  for (const auto& [m, v] : pairs) n += v.size();
  return n;
}

std::size_t FinetuneCorpus::total_dropped() const {
  std::size_t n = 0;
  for (const auto& [m, d] : dropped) n += d;
  return n;
}

FinetuneCorpus build_finetune_corpus(const std::vector<ExperimentRecord>& records,
                                     const TitleClassifier& classifier) {
  FinetuneCorpus corpus;
  for (Module m : kAllModules) {
    corpus.pairs[m];
    corpus.dropped[m] = 0;
  }
  for (const ExperimentRecord& r : records) {
    const ManuscriptSegments seg = segment_manuscript(r.manuscript, classifier);
    const std::pair<Module, std::pair<const std::string*, std::string>> candidates[] = {
        {Module::kBasic, {&seg.t_sum, r.labeled.basic}},
        {Module::kEF, {&seg.t_mr, r.labeled.ef}},
        {Module::kQues, {&seg.t_full, join(r.labeled.questions, " ")}},
        {Module::kPropos, {&seg.t_full, join(r.labeled.proposals, " ")}},
        {Module::kAddl, {&seg.t_full, r.labeled.additional}},
        {Module::kWhole, {&seg.t_full, r.labeled.whole}},
    };
    for (const auto& [module, st] : candidates) {
      const auto& [source, target] = st;
      if (trim(*source).empty() || trim(target).empty()) {
        ++corpus.dropped[module];
        continue;
      }
      corpus.pairs[module].push_back({r.key.paper_id, r.key.reviewer, module, *source, target});
    }
  }
  return corpus;
}

SplitRatios parse_split_ratios(std::string_view text) {
  std::vector<unsigned> parts;
  std::string cur;
  auto flush = [&] {
    const std::string_view t = trim(cur);
    if (t.empty() || t.size() > 6 ||
        !std::all_of(t.begin(), t.end(), [](char c) { return is_digit(c); })) {
      throw Error(ErrorCode::kInvalidArgument, "split ratios must look like 8:1:1");
    }
    parts.push_back(static_cast<unsigned>(std::stoul(std::string(t))));
    cur.clear();
  };
  for (char c : text) {
    if (c == ':') {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  if (parts.size() != 3 || parts[0] + parts[1] + parts[2] == 0) {
    throw Error(ErrorCode::kInvalidArgument, "split ratios must look like 8:1:1");
  }
  return {parts[0], parts[1], parts[2]};
}

SplitDataset split(std::vector<RecordKey> keys, std::uint64_t seed, SplitRatios ratios) {
  const std::size_t n = keys.size();
  if (n < 10) {
    throw Error(ErrorCode::kTooFewRecords,
                "need at least 10 records to split, got " + std::to_string(n));
  }
  const std::uint64_t total = std::uint64_t{ratios.train} + ratios.validation + ratios.test;
  if (total == 0) throw Error(ErrorCode::kInvalidArgument, "split ratios sum to zero");
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate record keys in split input");
  }

  SeededRng rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(keys[i], keys[rng.uniform_index(i + 1)]);
  }

  const std::size_t n_test = static_cast<std::size_t>(n * std::uint64_t{ratios.test} / total);
  const std::size_t n_val = static_cast<std::size_t>(n * std::uint64_t{ratios.validation} / total);
  SplitDataset out;
  out.seed = seed;
  out.ratios = ratios;
  auto it = keys.begin();
  out.test.assign(it, it + static_cast<std::ptrdiff_t>(n_test));
  it += static_cast<std::ptrdiff_t>(n_test);
  out.validation.assign(it, it + static_cast<std::ptrdiff_t>(n_val));
  it += static_cast<std::ptrdiff_t>(n_val);
  out.train.assign(it, keys.end());
  return out;
}

json split_to_json(const SplitDataset& s) {
  auto keys = [](const std::vector<RecordKey>& v) {
    json arr = json::array();
    for (const RecordKey& k : v) arr.push_back({{"paper_id", k.paper_id}, {"reviewer", k.reviewer}});
    return arr;
  };
  return {{"seed", s.seed},
          {"ratios", {s.ratios.train, s.ratios.validation, s.ratios.test}},
          {"sizes", {{"train", s.train.size()}, {"validation", s.validation.size()}, {"test", s.test.size()}}},
          {"train", keys(s.train)},
          {"validation", keys(s.validation)},
          {"test", keys(s.test)}};
}

}  // namespace revgen
