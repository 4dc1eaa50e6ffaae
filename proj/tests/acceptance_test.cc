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

// Acceptance suite. Prints one line per criterion:
//   [PASS] name: detail
//   [FAIL] name: detail
//   [SKIP] name: detail   (optional data not present)
// and exits nonzero when any criterion fails.
//
// REVGEN_FULL_CORPUS=path/to/corpus.jsonl enables the full-corpus
// statistics check.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "revgen/backends.h"
#include "revgen/commands.h"
#include "revgen/config.h"
#include "revgen/datasets.h"
#include "revgen/genkit.h"
#include "revgen/labeler.h"
#include "revgen/metrics.h"
#include "revgen/sectioner.h"
#include "revgen/stats.h"
#include "revgen/text.h"
#include "rouge_oracle.h"
#include "test_support.h"

namespace revgen {
namespace {

using Clock = std::chrono::steady_clock;

enum class Outcome { kPass, kFail, kSkip };

struct Result {
  Outcome outcome = Outcome::kPass;
  std::string detail;
};

// Collects failed checks inside one criterion.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  Result result(const std::string& summary) const {
    if (failures_.empty()) return {Outcome::kPass, summary};
    std::string d = summary + "; failed: " + failures_.front();
    if (failures_.size() > 1) d += " (+" + std::to_string(failures_.size() - 1) + " more)";
    return {Outcome::kFail, d};
  }

 private:
  std::vector<std::string> failures_;
};

std::string fmt(double v, int digits = 2) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(digits) << v;
  return o.str();
}

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

// --- criteria -----------------------------------------------------------------

Result rouge_oracle_equivalence() {
  std::mt19937 gen(20260101);
  double worst = 0;
  const auto start = Clock::now();
  auto track = [&](const RougeScore& got, const oracle::Prf& want) {
    worst = std::max({worst, std::abs(got.precision - want.p), std::abs(got.recall - want.r),
                      std::abs(got.f1 - want.f)});
  };
  for (int i = 0; i < 200; ++i) {
    const std::size_t vocab = 1 + gen() % 5;
    const oracle::Tokens c = oracle::random_tokens(gen, vocab, 10);
    const oracle::Tokens r = oracle::random_tokens(gen, vocab, 10);
    track(rouge_n_tokens(c, r, 1), oracle::rouge_n(c, r, 1));
    track(rouge_n_tokens(c, r, 2), oracle::rouge_n(c, r, 2));
    track(rouge_l_tokens(c, r), oracle::rouge_l(c, r));
    const auto cs = oracle::random_sentences(gen, c), rs = oracle::random_sentences(gen, r);
    track(rouge_lsum_sentences(cs, rs), oracle::rouge_lsum(cs, rs));
  }
  const double elapsed = seconds_since(start);
  Checks k;
  k.expect(worst < 1e-9, "max abs difference " + std::to_string(worst));
  k.expect(elapsed < 5.0, "runtime " + fmt(elapsed) + " s");
  std::ostringstream d;
  d << "200 instances, max abs diff " << std::scientific << std::setprecision(1) << worst
    << ", " << std::fixed << std::setprecision(2) << elapsed << " s";
  return k.result(d.str());
}

Result rouge_hand_cases() {
  Checks k;
  const double r1 = rouge_n("the cat sat", "the cat", 1).f1;
  const double id1 = rouge_n("the cat sat", "the cat sat", 1).f1;
  const double id2 = rouge_n("the cat sat", "the cat sat", 2).f1;
  const double idl = rouge_l("the cat sat", "the cat sat").f1;
  const double idls = rouge_lsum("The cat sat.", "The cat sat.").f1;
  const double rl = rouge_l_tokens({"a", "b", "c", "d"}, {"a", "c", "b", "d"}).f1;
  k.expect(std::abs(r1 - 0.8) < 1e-12, "ROUGE-1 F1 " + fmt(r1, 6));
  k.expect(id1 == 1.0 && id2 == 1.0 && idl == 1.0 && idls == 1.0, "identity != 1");
  k.expect(std::abs(rl - 0.75) < 1e-12, "ROUGE-L F1 " + fmt(rl, 6));
  return k.result("ROUGE-1 " + fmt(r1, 4) + ", identity " + fmt(id1, 4) + ", ROUGE-L " +
                  fmt(rl, 4));
}

double ratio(std::size_t num, std::size_t den) {
  return den ? static_cast<double>(num) / static_cast<double>(den) : 1.0;
}

Result labeler_exactness() {
  const auto gold = testing::load_labeler_gold();
  std::vector<std::string> all;
  std::set<std::string> gq, gp, gremoved;
  std::string stable;
  for (const auto& [label, s] : gold) {
    all.push_back(s);
    if (label == "Q") gq.insert(s);
    if (label == "P") gp.insert(s);
    if (label == "FT" || label == "PJ") gremoved.insert(s);
    if (s.find("stable") != std::string::npos) stable = s;
  }
  ReviewComment review;
  review.basic_reporting = join(all, " ");
  const LabeledReview l = ReviewLabeler::builtin().label(review);
  const std::set<std::string> q(l.questions.begin(), l.questions.end());
  const std::set<std::string> p(l.proposals.begin(), l.proposals.end());
  std::set<std::string> removed;
  for (const auto& r : l.removed) removed.insert(r.sentence);
  auto overlap = [](const std::set<std::string>& a, const std::set<std::string>& b) {
    std::size_t n = 0;
    for (const auto& x : a) n += b.count(x);
    return n;
  };
  const double qp = ratio(overlap(q, gq), q.size()), qr = ratio(overlap(q, gq), gq.size());
  const double pp = ratio(overlap(p, gp), p.size()), pr = ratio(overlap(p, gp), gp.size());
  Checks k;
  k.expect(gold.size() == 40, "fixture has " + std::to_string(gold.size()) + " sentences");
  k.expect(qp == 1.0 && qr == 1.0, "questions P=" + fmt(qp, 3) + " R=" + fmt(qr, 3));
  k.expect(pp == 1.0 && pr == 1.0, "proposals P=" + fmt(pp, 3) + " R=" + fmt(pr, 3));
  k.expect(removed == gremoved, "removal set differs from gold");
  k.expect(!stable.empty() && !removed.count(stable), "\"stable\" sentence removed");
  return k.result("questions P=" + fmt(qp, 2) + " R=" + fmt(qr, 2) + " (" +
                  std::to_string(gq.size()) + "), proposals P=" + fmt(pp, 2) + " R=" +
                  fmt(pr, 2) + " (" + std::to_string(gp.size()) + "), removed " +
                  std::to_string(removed.size()) + "/" + std::to_string(gremoved.size()));
}

Result dataset_assembly() {
  Checks k;
  const Corpus corpus = load_corpus_file(testing::fixture("corpus12.jsonl"));
  const auto records = filter_records(label_corpus(corpus, ReviewLabeler::builtin()));
  const FinetuneCorpus ft = build_finetune_corpus(records, LexiconTitleClassifier::builtin());
  const std::map<Module, std::size_t> expected = {
      {Module::kBasic, 11}, {Module::kEF, 12},   {Module::kQues, 7},
      {Module::kPropos, 9}, {Module::kAddl, 10}, {Module::kWhole, 12}};
  std::string counts;
  for (const auto& [m, n] : expected) {
    const auto it = ft.pairs.find(m);
    const std::size_t got = it == ft.pairs.end() ? 0 : it->second.size();
    k.expect(got == n, std::string(module_tag(m)) + " " + std::to_string(got) + " != " +
                           std::to_string(n));
    counts += (counts.empty() ? "" : " ") + std::string(module_tag(m)) + "=" + std::to_string(got);
  }
  k.expect(ft.emitted() + ft.total_dropped() == 6 * records.size(), "emitted + dropped != 6N");

  std::mt19937 gen(4242);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 10 + gen() % 19991;
    const std::uint64_t seed = gen();
    std::vector<RecordKey> keys;
    for (std::size_t i = 0; i < n; ++i) keys.push_back({"p" + std::to_string(i), "r"});
    const SplitDataset a = split(keys, seed), b = split(keys, seed);
    const std::size_t tenth = n / 10;
    k.expect(a.test.size() == tenth && a.validation.size() == tenth &&
                 a.train.size() == n - 2 * tenth,
             "sizes for N=" + std::to_string(n));
    std::set<RecordKey> all(a.train.begin(), a.train.end());
    all.insert(a.validation.begin(), a.validation.end());
    all.insert(a.test.begin(), a.test.end());
    k.expect(all.size() == n, "overlap or loss for N=" + std::to_string(n));
    k.expect(a.train == b.train && a.validation == b.validation && a.test == b.test,
             "nondeterministic for N=" + std::to_string(n));
  }
  return k.result(counts + "; 50 random splits checked");
}

// Brute-force scan independent of the library helper.
bool repeated_trigram(const std::vector<std::string>& t) {
  for (std::size_t i = 0; i + 3 <= t.size(); ++i) {
    for (std::size_t j = i + 1; j + 3 <= t.size(); ++j) {
      if (t[i] == t[j] && t[i + 1] == t[j + 1] && t[i + 2] == t[j + 2]) return true;
    }
  }
  return false;
}

Result pipeline_structure() {
  Checks k;
  testing::TempDir dir;
  std::ostringstream log;
  RunConfig c;
  c.inputs = {testing::fixture("manuscript.tei.xml")};
  c.set("seed", "2026");
  c.mode = GenerationMode::kModularGuided;
  const auto start = Clock::now();
  c.output_dir = dir.str("run1");
  cmd_generate(c, log);
  c.output_dir = dir.str("run2");
  cmd_generate(c, log);
  const double elapsed = seconds_since(start);
  for (const char* f : {"review.txt", "review.md", "review.json"}) {
    k.expect(read_file(dir.str(std::string("run1/") + f)) ==
                 read_file(dir.str(std::string("run2/") + f)),
             std::string(f) + " differs between runs");
  }
  const GeneratedReview r =
      review_from_json(nlohmann::json::parse(read_file(dir.str("run1/review.json"))));
  const std::vector<Module> order = {Module::kBasic, Module::kEF, Module::kQues, Module::kPropos,
                                     Module::kAddl};
  k.expect(r.modules.size() == 5, std::to_string(r.modules.size()) + " modules");
  for (std::size_t i = 0; i < r.modules.size() && i < 5; ++i) {
    const ModuleOutput& m = r.modules[i];
    k.expect(m.module == order[i], "module " + std::to_string(i) + " out of order");
    bool prefixed = false;
    for (const std::string& p : PrefixSet::builtin().prefixes(order[i])) {
      prefixed = prefixed || (m.prefix == p && m.text.rfind(p, 0) == 0);
    }
    k.expect(prefixed, std::string(module_tag(m.module)) + " lacks a prefix from its set");
    k.expect(!repeated_trigram(split_whitespace(m.text)) &&
                 !repeated_trigram(tokenize_for_rouge(m.text)),
             std::string(module_tag(m.module)) + " repeats a trigram");
  }
  k.expect(elapsed < 10.0, "runtime " + fmt(elapsed) + " s");
  return k.result(std::to_string(r.modules.size()) + " modules, two runs in " + fmt(elapsed) +
                  " s");
}

Result corpus_stats_desk() {
  Checks k;
  const CorpusStats s = corpus_stats(load_corpus_file(testing::fixture("stats3.jsonl")));
  auto near = [](const std::optional<double>& v, double want) {
    return v && std::abs(*v - want) < 1e-9;
  };
  k.expect(s.total_papers == 3, "papers");
  k.expect(s.total_review_comments == 10, "review comments");
  k.expect(s.total_rebuttals == 6, "rebuttals");
  k.expect(near(s.mean_review_rounds, 3.0), "mean rounds");
  k.expect(near(s.mean_reviewers_per_manuscript, 7.0 / 3.0), "mean reviewers");
  k.expect(near(s.mean_v1_manuscript_words, 200.0), "v1 manuscript words");
  k.expect(near(s.mean_v2_manuscript_words, 150.0), "v2 manuscript words");
  k.expect(near(s.mean_v1_review_words_per_reviewer, 41.75), "v1 review words");
  k.expect(near(s.mean_v2_review_words_per_reviewer, 12.0), "v2 review words");
  k.expect(near(s.mean_meta_review_words, 15.6), "meta-review words");
  k.expect(s.discipline_histogram ==
               std::map<std::string, std::size_t>{{"Biology", 2}, {"Computer Science", 1},
                                                  {"Ecology", 1}},
           "discipline histogram");
  return k.result("3-paper fixture: 3 papers, 10 reviews, 6 rebuttals, mean rounds " +
                  fmt(s.mean_review_rounds.value_or(0), 1));
}

Result corpus_stats_full() {
  const char* path = std::getenv("REVGEN_FULL_CORPUS");
  if (!path || !*path) return {Outcome::kSkip, "set REVGEN_FULL_CORPUS to an ingested corpus"};
  const CorpusStats s = corpus_stats(load_corpus_file(path));
  Checks k;
  k.expect(s.total_papers == 6578, "papers " + std::to_string(s.total_papers));
  k.expect(s.total_review_comments == 22483,
           "review comments " + std::to_string(s.total_review_comments));
  k.expect(s.total_rebuttals == 11213, "rebuttals " + std::to_string(s.total_rebuttals));
  const std::vector<std::tuple<std::string, std::optional<double>, double>> means = {
      {"mean rounds", s.mean_review_rounds, 2.7},
      {"mean reviewers", s.mean_reviewers_per_manuscript, 2.4},
      {"v1 manuscript words", s.mean_v1_manuscript_words, 5434},
      {"v2 manuscript words", s.mean_v2_manuscript_words, 6015},
      {"v1 review words", s.mean_v1_review_words_per_reviewer, 636},
      {"v2 review words", s.mean_v2_review_words_per_reviewer, 224},
      {"meta-review words", s.mean_meta_review_words, 129}};
  for (const auto& [name, got, want] : means) {
    k.expect(got && std::abs(*got - want) <= 0.05 * want,
             name + " " + (got ? fmt(*got, 1) : "absent") + " vs " + fmt(want, 1));
  }
  return k.result(std::to_string(s.total_papers) + " papers, " +
                  std::to_string(s.total_review_comments) + " reviews, " +
                  std::to_string(s.total_rebuttals) + " rebuttals");
}

Result heldout_rouge() {
  Checks k;
  const Corpus corpus = load_corpus_file(testing::fixture("heldout50.jsonl"));
  const ReviewLabeler& labeler = ReviewLabeler::builtin();
  BuiltinBackend backend;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const PaperRecord& p = corpus[i];
    const ManuscriptSegments seg =
        segment_manuscript(*p.manuscript(1), LexiconTitleClassifier::builtin());
    GenerationParams params;
    params.seed = static_cast<std::int64_t>(i);
    const GeneratedReview r = generate_review(backend, seg, PrefixSet::builtin(), params,
                                              GenerationMode::kModularGuided);
    const LabeledReview ref = labeler.label(p.review_rounds.front().reviews.front());
    pairs.push_back({r.assembled, ref.whole});
  }
  const MethodScores m = evaluate_corpus(pairs, 4);
  k.expect(m.count == 50, std::to_string(m.count) + " pairs");
  for (double v : {m.rouge1, m.rouge2, m.rougeL, m.rougeLsum}) {
    k.expect(std::isfinite(v) && v >= 0 && v <= 100, "mean out of range: " + fmt(v));
  }
  return k.result(std::to_string(m.count) + " pairs, ROUGE-1 " + fmt(m.rouge1) + " ROUGE-2 " +
                  fmt(m.rouge2) + " ROUGE-L " + fmt(m.rougeL) + " ROUGE-Lsum " +
                  fmt(m.rougeLsum));
}

}  // namespace
}  // namespace revgen

int main() {
  using revgen::Outcome;
  using revgen::Result;
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"rouge_oracle_equivalence", revgen::rouge_oracle_equivalence},
      {"rouge_hand_cases", revgen::rouge_hand_cases},
      {"labeler_exactness", revgen::labeler_exactness},
      {"dataset_assembly", revgen::dataset_assembly},
      {"pipeline_structure", revgen::pipeline_structure},
      {"corpus_statistics_fixture", revgen::corpus_stats_desk},
      {"corpus_statistics_full", revgen::corpus_stats_full},
      {"heldout_rouge_sanity", revgen::heldout_rouge},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Result r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r = {Outcome::kFail, std::string("exception: ") + e.what()};
    }
    const char* tag = r.outcome == Outcome::kPass ? "PASS" : r.outcome == Outcome::kSkip ? "SKIP" : "FAIL";
    std::cout << "[" << tag << "] " << name << ": " << r.detail << std::endl;
    failed += r.outcome == Outcome::kFail;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed")
            << std::endl;
  return failed ? 1 : 0;
}
