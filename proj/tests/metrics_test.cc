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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "revgen/error.h"
#include "revgen/metrics.h"
#include "revgen/sentence_splitter.h"
#include "rouge_oracle.h"

namespace revgen {
namespace {

using Tokens = std::vector<std::string>;

void expect_close(const RougeScore& got, const oracle::Prf& want, double tol = 1e-12) {
  EXPECT_NEAR(got.precision, want.p, tol);
  EXPECT_NEAR(got.recall, want.r, tol);
  EXPECT_NEAR(got.f1, want.f, tol);
}

TEST(TokenizeForRouge, Examples) {
  EXPECT_EQ(tokenize_for_rouge("The cat, sat!"), (Tokens{"the", "cat", "sat"}));
  EXPECT_TRUE(tokenize_for_rouge("").empty());
  EXPECT_EQ(tokenize_for_rouge("state-of-the-art"), (Tokens{"state", "of", "the", "art"}));
  EXPECT_EQ(tokenize_for_rouge("n=5 at 3.5%"), (Tokens{"n", "5", "at", "3", "5"}));
}

TEST(RougeN, HandCases) {
  const RougeScore s = rouge_n("the cat sat", "the cat", 1);
  EXPECT_DOUBLE_EQ(s.recall, 1.0);
  EXPECT_DOUBLE_EQ(s.precision, 2.0 / 3.0);
  EXPECT_NEAR(s.f1, 0.8, 1e-12);
  const RougeScore id = rouge_n("A b c.", "a b c", 2);
  EXPECT_DOUBLE_EQ(id.f1, 1.0);
  EXPECT_DOUBLE_EQ(rouge_n("a b", "a", 2).f1, 0.0);
  EXPECT_DOUBLE_EQ(rouge_n("", "", 1).f1, 0.0);
  // Clipping: "the" appears 3 times in the candidate but once in the reference.
  const RougeScore clip = rouge_n("the the the", "the cat", 1);
  EXPECT_DOUBLE_EQ(clip.precision, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(clip.recall, 0.5);
}

TEST(RougeL, HandCases) {
  const RougeScore s = rouge_l_tokens({"a", "b", "c", "d"}, {"a", "c", "b", "d"});
  EXPECT_DOUBLE_EQ(s.precision, 0.75);
  EXPECT_DOUBLE_EQ(s.recall, 0.75);
  EXPECT_DOUBLE_EQ(s.f1, 0.75);
  EXPECT_DOUBLE_EQ(rouge_l("x y", "z w").f1, 0.0);
  EXPECT_DOUBLE_EQ(rouge_l("same text here", "same text here").f1, 1.0);
  EXPECT_EQ(lcs_length({"a", "b", "c", "b", "d", "a", "b"}, {"b", "d", "c", "a", "b", "a"}), 4u);
}

TEST(RougeLsum, HandCases) {
  EXPECT_DOUBLE_EQ(rouge_lsum("Alpha bravo charlie.", "Bravo alpha charlie delta.").f1,
                   rouge_l("Alpha bravo charlie.", "Bravo alpha charlie delta.").f1);
  EXPECT_DOUBLE_EQ(rouge_lsum("One two. Three four.", "One two. Three four.").f1, 1.0);
  // Reference sentence "a b c" against candidates "a b" and "b c": the
  // union covers all three reference tokens, but the candidate has only one
  // "c" and two "b": hits a, b, c = 3.
  const RougeScore u = rouge_lsum_sentences({{"a", "b"}, {"b", "c"}}, {{"a", "b", "c"}});
  EXPECT_DOUBLE_EQ(u.recall, 1.0);
  EXPECT_DOUBLE_EQ(u.precision, 0.75);
  EXPECT_DOUBLE_EQ(rouge_lsum("", "Alpha.").f1, 0.0);
}

TEST(Rouge, MatchesOracle) {
  std::mt19937 gen(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t vocab = 1 + gen() % 5;
    const Tokens c = oracle::random_tokens(gen, vocab, 10);
    const Tokens r = oracle::random_tokens(gen, vocab, 10);
    expect_close(rouge_n_tokens(c, r, 1), oracle::rouge_n(c, r, 1));
    expect_close(rouge_n_tokens(c, r, 2), oracle::rouge_n(c, r, 2));
    expect_close(rouge_n_tokens(c, r, 3), oracle::rouge_n(c, r, 3));
    expect_close(rouge_l_tokens(c, r), oracle::rouge_l(c, r));
    EXPECT_EQ(lcs_length(c, r), oracle::lcs(c, r));
    const auto cs = oracle::random_sentences(gen, c);
    const auto rs = oracle::random_sentences(gen, r);
    expect_close(rouge_lsum_sentences(cs, rs), oracle::rouge_lsum(cs, rs));
  }
}

TEST(RougeLsum, TextLevelMatchesOracle) {
  std::mt19937 gen(77);
  for (int trial = 0; trial < 100; ++trial) {
    const auto cs = oracle::random_sentences(gen, oracle::random_tokens(gen, 4, 8, 1));
    const auto rs = oracle::random_sentences(gen, oracle::random_tokens(gen, 4, 8, 1));
    const std::string ct = oracle::render(cs), rt = oracle::render(rs);
    ASSERT_EQ(split_sentences(ct).size(), cs.size()) << ct;
    expect_close(rouge_lsum(ct, rt), oracle::rouge_lsum(cs, rs));
  }
}

TEST(Rouge, Properties) {
  std::mt19937 gen(99);
  for (int trial = 0; trial < 300; ++trial) {
    const Tokens c = oracle::random_tokens(gen, 5, 12);
    const Tokens r = oracle::random_tokens(gen, 5, 12);
    for (std::size_t n : {1u, 2u}) {
      const RougeScore a = rouge_n_tokens(c, r, n), b = rouge_n_tokens(r, c, n);
      EXPECT_DOUBLE_EQ(a.precision, b.recall);
      EXPECT_DOUBLE_EQ(a.recall, b.precision);
    }
    const RougeScore l = rouge_l_tokens(c, r), lr = rouge_l_tokens(r, c);
    EXPECT_DOUBLE_EQ(l.precision, lr.recall);
    EXPECT_DOUBLE_EQ(l.recall, lr.precision);

    Tokens doubled = c;
    doubled.insert(doubled.end(), r.begin(), r.end());
    for (const auto& [s, grown] :
         {std::pair{rouge_n_tokens(c, r, 1), rouge_n_tokens(doubled, r, 1)},
          std::pair{rouge_n_tokens(c, r, 2), rouge_n_tokens(doubled, r, 2)},
          std::pair{rouge_l_tokens(c, r), rouge_l_tokens(doubled, r)}}) {
      EXPECT_LE(s.f1, std::max(s.precision, s.recall) + 1e-15);
      EXPECT_LE(std::max(s.precision, s.recall), 1.0);
      EXPECT_GE(s.f1, 0.0);
      EXPECT_GE(grown.recall + 1e-15, s.recall);
    }
  }
}

TEST(EvaluateCorpus, Aggregation) {
  const MethodScores one = evaluate_corpus({{"the cat sat", "the cat sat"}});
  EXPECT_DOUBLE_EQ(one.rouge1, 100.0);
  EXPECT_DOUBLE_EQ(one.rouge2, 100.0);
  EXPECT_DOUBLE_EQ(one.rougeL, 100.0);
  EXPECT_DOUBLE_EQ(one.rougeLsum, 100.0);
  EXPECT_EQ(one.count, 1u);

  // ROUGE-1 F1 0.5 and 0.7.
  const std::string c7 = "a b c d e f g h i j", r7 = "a b c d e f g x y z";
  EXPECT_NEAR(rouge_n("a b", "a c", 1).f1, 0.5, 1e-12);
  EXPECT_NEAR(rouge_n(c7, r7, 1).f1, 0.7, 1e-12);
  EXPECT_NEAR(evaluate_corpus({{"a b", "a c"}, {c7, r7}}).rouge1, 60.0, 1e-9);
}

TEST(EvaluateCorpus, TenPairsAveragedByHand) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::mt19937 gen(10);
  double sum1 = 0, sum2 = 0, suml = 0, sumlsum = 0;
  for (int i = 0; i < 10; ++i) {
    const auto cs = oracle::random_sentences(gen, oracle::random_tokens(gen, 5, 9, 1));
    const auto rs = oracle::random_sentences(gen, oracle::random_tokens(gen, 5, 9, 1));
    pairs.push_back({oracle::render(cs), oracle::render(rs)});
    Tokens c, r;
    for (const auto& s : cs) c.insert(c.end(), s.begin(), s.end());
    for (const auto& s : rs) r.insert(r.end(), s.begin(), s.end());
    sum1 += oracle::rouge_n(c, r, 1).f;
    sum2 += oracle::rouge_n(c, r, 2).f;
    suml += oracle::rouge_l(c, r).f;
    sumlsum += oracle::rouge_lsum(cs, rs).f;
  }
  for (int jobs : {1, 4}) {
    const MethodScores m = evaluate_corpus(pairs, jobs);
    EXPECT_NEAR(m.rouge1, sum1 * 10, 1e-9);
    EXPECT_NEAR(m.rouge2, sum2 * 10, 1e-9);
    EXPECT_NEAR(m.rougeL, suml * 10, 1e-9);
    EXPECT_NEAR(m.rougeLsum, sumlsum * 10, 1e-9);
    EXPECT_EQ(m.count, 10u);
  }
}

TEST(EvaluateCorpus, EmptyIsError) {
  try {
    evaluate_corpus({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyEvaluation);
  }
}

TEST(EvalReport, JsonAndTable) {
  EvalReport report;
  report.methods.push_back({"guided", {41.234, 12.0, 30.5, 33.333, 3}});
  report.methods.push_back({"segless", {1, 2, 3, 4, 3}});
  const nlohmann::json j = report_to_json(report);
  ASSERT_EQ(j.at("methods").size(), 2u);
  EXPECT_EQ(j["methods"][0]["method"], "guided");
  EXPECT_DOUBLE_EQ(j["methods"][0]["rouge1"].get<double>(), 41.23);
  EXPECT_DOUBLE_EQ(j["methods"][0]["rougeLsum"].get<double>(), 33.33);
  EXPECT_EQ(j["methods"][0]["count"], 3);
  const std::string table = report_table(report);
  EXPECT_NE(table.find("ROUGE-Lsum"), std::string::npos);
  EXPECT_NE(table.find("41.23"), std::string::npos);
  EXPECT_LT(table.find("guided"), table.find("segless"));
}

}  // namespace
}  // namespace revgen
