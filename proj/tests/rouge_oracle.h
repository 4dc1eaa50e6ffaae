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

// Slow reference implementations of the ROUGE family. Everything here is
// exhaustive enumeration over short token lists (at most ~16 tokens per
// side), kept deliberately unlike the production code.

#ifndef REVGEN_TESTS_ROUGE_ORACLE_H_
#define REVGEN_TESTS_ROUGE_ORACLE_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace revgen::oracle {

using Tokens = std::vector<std::string>;

struct Prf {
  double p = 0, r = 0, f = 0;
};

inline Prf prf(double overlap, double cand_total, double ref_total) {
  Prf s;
  s.p = cand_total > 0 ? overlap / cand_total : 0;
  s.r = ref_total > 0 ? overlap / ref_total : 0;
  s.f = s.p + s.r > 0 ? 2 * s.p * s.r / (s.p + s.r) : 0;
  return s;
}

inline std::vector<Tokens> ngrams(const Tokens& t, std::size_t n) {
  std::vector<Tokens> out;
  for (std::size_t i = 0; i + n <= t.size(); ++i) out.emplace_back(t.begin() + i, t.begin() + i + n);
  return out;
}

inline std::size_t occurrences(const std::vector<Tokens>& grams, const Tokens& g) {
  std::size_t k = 0;
  for (const Tokens& x : grams) k += x == g;
  return k;
}

// Clipped overlap: every distinct candidate n-gram contributes
// min(count in candidate, count in reference).
inline Prf rouge_n(const Tokens& cand, const Tokens& ref, std::size_t n) {
  const auto cg = ngrams(cand, n), rg = ngrams(ref, n);
  std::vector<Tokens> seen;
  double overlap = 0;
  for (const Tokens& g : cg) {
    if (occurrences(seen, g)) continue;
    seen.push_back(g);
    overlap += static_cast<double>(std::min(occurrences(cg, g), occurrences(rg, g)));
  }
  return prf(overlap, static_cast<double>(cg.size()), static_cast<double>(rg.size()));
}

inline bool is_subsequence(const Tokens& small, const Tokens& big) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < big.size() && j < small.size(); ++i) j += big[i] == small[j];
  return j == small.size();
}

inline Tokens pick(const Tokens& t, std::uint32_t mask) {
  Tokens out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (mask >> i & 1u) out.push_back(t[i]);
  }
  return out;
}

// Longest common subsequence by trying every subset of `a`.
inline std::size_t lcs(const Tokens& a, const Tokens& b) {
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << a.size()); ++mask) {
    const auto bits = static_cast<std::size_t>(__builtin_popcount(mask));
    if (bits > best && is_subsequence(pick(a, mask), b)) best = bits;
  }
  return best;
}

inline Prf rouge_l(const Tokens& cand, const Tokens& ref) {
  return prf(static_cast<double>(lcs(cand, ref)), static_cast<double>(cand.size()),
             static_cast<double>(ref.size()));
}

// Reference positions of the LCS whose sorted position list is
// lexicographically smallest.
inline std::vector<std::size_t> earliest_lcs(const Tokens& ref, const Tokens& cand) {
  const std::size_t len = lcs(ref, cand);
  std::vector<std::size_t> best;
  if (len == 0) return best;
  bool found = false;
  for (std::uint32_t mask = 0; mask < (1u << ref.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != len) continue;
    if (!is_subsequence(pick(ref, mask), cand)) continue;
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < ref.size(); ++i) {
      if (mask >> i & 1u) pos.push_back(i);
    }
    if (!found || pos < best) best = pos;
    found = true;
  }
  return best;
}

// Union LCS per reference sentence; a hit needs an unused token of the same
// type on both sides.
inline Prf rouge_lsum(const std::vector<Tokens>& cand, const std::vector<Tokens>& ref) {
  Tokens all_cand, all_ref;
  for (const Tokens& s : cand) all_cand.insert(all_cand.end(), s.begin(), s.end());
  for (const Tokens& s : ref) all_ref.insert(all_ref.end(), s.begin(), s.end());
  std::vector<bool> cand_used(all_cand.size(), false), ref_used(all_ref.size(), false);
  auto consume = [](const Tokens& pool, std::vector<bool>& used, const std::string& t) {
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!used[i] && pool[i] == t) {
        used[i] = true;
        return true;
      }
    }
    return false;
  };
  double hits = 0;
  for (const Tokens& r : ref) {
    std::vector<bool> u(r.size(), false);
    for (const Tokens& c : cand) {
      for (std::size_t p : earliest_lcs(r, c)) u[p] = true;
    }
    for (std::size_t p = 0; p < r.size(); ++p) {
      if (!u[p]) continue;
      // Check availability on both sides before consuming either.
      std::vector<bool> cu = cand_used, ru = ref_used;
      if (consume(all_cand, cu, r[p]) && consume(all_ref, ru, r[p])) {
        cand_used = cu;
        ref_used = ru;
        hits += 1;
      }
    }
  }
  return prf(hits, static_cast<double>(all_cand.size()), static_cast<double>(all_ref.size()));
}

// Random token list over the first `vocab` (at most 8) words.
inline Tokens random_tokens(std::mt19937& gen, std::size_t vocab, std::size_t max_len,
                            std::size_t min_len = 0) {
  static const char* const kWords[] = {"alpha", "bravo", "charlie", "delta",
                                       "echo",  "foxtrot", "golf", "hotel"};
  const std::size_t len = min_len + gen() % (max_len - min_len + 1);
  Tokens t;
  for (std::size_t i = 0; i < len; ++i) t.push_back(kWords[gen() % vocab]);
  return t;
}

// Splits `t` into nonempty sentences at random cut points.
inline std::vector<Tokens> random_sentences(std::mt19937& gen, const Tokens& t) {
  std::vector<Tokens> out;
  std::size_t start = 0;
  while (start < t.size()) {
    const std::size_t len = 1 + gen() % (t.size() - start);
    out.emplace_back(t.begin() + start, t.begin() + start + len);
    start += len;
  }
  return out;
}

// Renders sentences as text, e.g. "Alpha bravo. Echo."
inline std::string render(const std::vector<Tokens>& sentences) {
  std::string out;
  for (const Tokens& s : sentences) {
    if (!out.empty()) out += ' ';
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::string w = s[i];
      if (i == 0) w[0] = static_cast<char>(w[0] - 'a' + 'A');
      out += (i ? " " : "") + w;
    }
    out += '.';
  }
  return out;
}

}  // namespace revgen::oracle

#endif  // REVGEN_TESTS_ROUGE_ORACLE_H_
