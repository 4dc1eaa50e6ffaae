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

#include "revgen/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <unordered_map>

#include "revgen/error.h"
#include "revgen/parallel.h"
#include "revgen/sentence_splitter.h"
#include "revgen/text.h"

namespace revgen {
namespace {

using Table = std::vector<std::vector<std::size_t>>;

// suffix[i][j] = LCS(a[i:], b[j:]).
Table suffix_lcs(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  Table t(a.size() + 1, std::vector<std::size_t>(b.size() + 1, 0));
  for (std::size_t i = a.size(); i-- > 0;) {
    for (std::size_t j = b.size(); j-- > 0;) {
      t[i][j] = a[i] == b[j] ? t[i + 1][j + 1] + 1 : std::max(t[i + 1][j], t[i][j + 1]);
    }
  }
  return t;
}

// Reference positions of the LCS of (reference, candidate) that is
// lexicographically smallest in reference positions.
std::vector<std::size_t> earliest_lcs_positions(const std::vector<std::string>& reference,
                                                const std::vector<std::string>& candidate) {
  const Table s = suffix_lcs(reference, candidate);
  std::vector<std::size_t> out;
  std::size_t need = s[0][0];
  std::size_t i = 0, j = 0;
  while (need > 0) {
    bool found = false;
    for (; i < reference.size() && !found; ++i) {
      for (std::size_t jj = j; jj < candidate.size(); ++jj) {
        if (reference[i] == candidate[jj] && s[i + 1][jj + 1] + 1 >= need) {
          out.push_back(i);
          j = jj + 1;
          found = true;
          break;
        }
      }
    }
    --need;
  }
  return out;
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }

}  // namespace

RougeScore make_rouge_score(double precision, double recall) {
  RougeScore s{precision, recall, 0.0};
  if (precision + recall > 0) s.f1 = 2 * precision * recall / (precision + recall);
  return s;
}

std::vector<std::string> tokenize_for_rouge(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (is_alnum(c)) {
      cur.push_back(to_lower(c));
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

RougeScore rouge_n_tokens(const std::vector<std::string>& candidate,
                          const std::vector<std::string>& reference, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "ROUGE-N needs n >= 1");
  auto ngrams = [n](const std::vector<std::string>& tokens) {
    std::map<std::vector<std::string>, std::size_t> counts;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
      ++counts[std::vector<std::string>(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                        tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
    }
    return counts;
  };
  const auto cand = ngrams(candidate);
  const auto ref = ngrams(reference);
  const std::size_t cand_total = candidate.size() >= n ? candidate.size() - n + 1 : 0;
  const std::size_t ref_total = reference.size() >= n ? reference.size() - n + 1 : 0;
  std::size_t overlap = 0;
  for (const auto& [gram, count] : ref) {
    auto it = cand.find(gram);
    if (it != cand.end()) overlap += std::min(count, it->second);
  }
  const double p = cand_total ? static_cast<double>(overlap) / static_cast<double>(cand_total) : 0.0;
  const double r = ref_total ? static_cast<double>(overlap) / static_cast<double>(ref_total) : 0.0;
  return make_rouge_score(p, r);
}

std::size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

RougeScore rouge_l_tokens(const std::vector<std::string>& candidate,
                          const std::vector<std::string>& reference) {
  const double lcs = static_cast<double>(lcs_length(candidate, reference));
  const double p = candidate.empty() ? 0.0 : lcs / static_cast<double>(candidate.size());
  const double r = reference.empty() ? 0.0 : lcs / static_cast<double>(reference.size());
  return make_rouge_score(p, r);
}

RougeScore rouge_lsum_sentences(const std::vector<std::vector<std::string>>& candidate,
                                const std::vector<std::vector<std::string>>& reference) {
  std::unordered_map<std::string, std::size_t> cand_counts, ref_counts;
  std::size_t cand_total = 0, ref_total = 0;
  for (const auto& s : candidate) {
    for (const auto& t : s) ++cand_counts[t];
    cand_total += s.size();
  }
  for (const auto& s : reference) {
    for (const auto& t : s) ++ref_counts[t];
    ref_total += s.size();
  }

  std::size_t hits = 0;
  for (const auto& ref_sentence : reference) {
    std::vector<bool> in_union(ref_sentence.size(), false);
    for (const auto& cand_sentence : candidate) {
      for (std::size_t pos : earliest_lcs_positions(ref_sentence, cand_sentence)) {
        in_union[pos] = true;
      }
    }
    for (std::size_t pos = 0; pos < ref_sentence.size(); ++pos) {
      if (!in_union[pos]) continue;
      const std::string& t = ref_sentence[pos];
      auto r = ref_counts.find(t);
      auto c = cand_counts.find(t);
      if (r != ref_counts.end() && c != cand_counts.end() && r->second > 0 && c->second > 0) {
        ++hits;
        --r->second;
        --c->second;
      }
    }
  }
  const double p = cand_total ? static_cast<double>(hits) / static_cast<double>(cand_total) : 0.0;
  const double r = ref_total ? static_cast<double>(hits) / static_cast<double>(ref_total) : 0.0;
  return make_rouge_score(p, r);
}

RougeScore rouge_n(std::string_view candidate, std::string_view reference, std::size_t n) {
  return rouge_n_tokens(tokenize_for_rouge(candidate), tokenize_for_rouge(reference), n);
}

RougeScore rouge_l(std::string_view candidate, std::string_view reference) {
  return rouge_l_tokens(tokenize_for_rouge(candidate), tokenize_for_rouge(reference));
}

RougeScore rouge_lsum(std::string_view candidate, std::string_view reference) {
  auto sentences = [](std::string_view text) {
    std::vector<std::vector<std::string>> out;
    for (const std::string& s : split_sentences(text)) {
      std::vector<std::string> tokens = tokenize_for_rouge(s);
      if (!tokens.empty()) out.push_back(std::move(tokens));
    }
    return out;
  };
  return rouge_lsum_sentences(sentences(candidate), sentences(reference));
}

MethodScores evaluate_corpus(const std::vector<std::pair<std::string, std::string>>& pairs,
                             int jobs) {
  if (pairs.empty()) throw Error(ErrorCode::kEmptyEvaluation, "no candidate/reference pairs");
  struct PairScores {
    double r1, r2, rl, rlsum;
  };
  std::vector<PairScores> scores(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t i) {
    const auto& [cand, ref] = pairs[i];
    const auto ct = tokenize_for_rouge(cand);
    const auto rt = tokenize_for_rouge(ref);
    scores[i] = {rouge_n_tokens(ct, rt, 1).f1, rouge_n_tokens(ct, rt, 2).f1,
                 rouge_l_tokens(ct, rt).f1, rouge_lsum(cand, ref).f1};
  });
  MethodScores m;
  for (const PairScores& s : scores) {
    m.rouge1 += s.r1;
    m.rouge2 += s.r2;
    m.rougeL += s.rl;
    m.rougeLsum += s.rlsum;
  }
  const double scale = 100.0 / static_cast<double>(pairs.size());
  m.rouge1 *= scale;
  m.rouge2 *= scale;
  m.rougeL *= scale;
  m.rougeLsum *= scale;
  m.count = pairs.size();
  return m;
}

nlohmann::json report_to_json(const EvalReport& report) {
  nlohmann::json methods = nlohmann::json::array();
  for (const auto& [name, s] : report.methods) {
    methods.push_back({{"method", name},
                       {"count", s.count},
                       {"rouge1", round2(s.rouge1)},
                       {"rouge2", round2(s.rouge2)},
                       {"rougeL", round2(s.rougeL)},
                       {"rougeLsum", round2(s.rougeLsum)}});
  }
  return {{"methods", std::move(methods)}};
}

std::string report_table(const EvalReport& report) {
  const std::vector<std::string> header = {"Method", "ROUGE-1", "ROUGE-2", "ROUGE-L", "ROUGE-Lsum", "Pairs"};
  std::vector<std::vector<std::string>> rows = {header};
  for (const auto& [name, s] : report.methods) {
    rows.push_back({name, fixed2(s.rouge1), fixed2(s.rouge2), fixed2(s.rougeL),
                    fixed2(s.rougeLsum), std::to_string(s.count)});
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        out << row[c] << std::string(width[c] - row[c].size(), ' ');
      } else {
        out << "  " << std::string(width[c] - row[c].size(), ' ') << row[c];
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace revgen
