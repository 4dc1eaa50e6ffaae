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

#include "revgen/sectioner.h"

#include <algorithm>

#include "revgen/error.h"
#include "revgen/resources.h"
#include "revgen/text.h"

namespace revgen {
namespace {

bool is_roman_upper(char c) {
  return c == 'I' || c == 'V' || c == 'X' || c == 'L' || c == 'C';
}

// Length of a leading numbering token such as "3.1.", "IV." or "B)",
// including trailing whitespace, or 0 when there is none.
std::size_t numbering_prefix(std::string_view t) {
  std::size_t i = 0;
  if (i < t.size() && is_digit(t[i])) {
    while (i < t.size() && (is_digit(t[i]) || (t[i] == '.' && i + 1 < t.size()))) ++i;
    if (i < t.size() && (t[i] == '.' || t[i] == ')')) ++i;
  } else if (i < t.size() && is_roman_upper(t[i])) {
    while (i < t.size() && is_roman_upper(t[i])) ++i;
    if (i >= t.size() || (t[i] != '.' && t[i] != ')')) return 0;
    ++i;
  } else if (i < t.size() && is_alpha(t[i]) && i + 1 < t.size() &&
             (t[i + 1] == '.' || t[i + 1] == ')')) {
    i += 2;
  } else {
    return 0;
  }
  if (i >= t.size() || !is_space(t[i])) return 0;
  while (i < t.size() && is_space(t[i])) ++i;
  return i;
}

int priority(SectionClass c) {
  switch (c) {
    case SectionClass::kMethodsResults: return 2;
    case SectionClass::kSummary: return 1;
    case SectionClass::kOther: break;
  }
  return 0;
}

std::vector<std::string> tokens_of(const std::string& normalized) {
  return split_whitespace(normalized);
}

}  // namespace

std::string_view section_class_name(SectionClass c) {
  switch (c) {
    case SectionClass::kSummary: return "summary";
    case SectionClass::kMethodsResults: return "methods_results";
    case SectionClass::kOther: break;
  }
  return "other";
}

SectionClass parse_section_class(std::string_view name) {
  const std::string key = to_lower(trim(name));
  if (key == "summary") return SectionClass::kSummary;
  if (key == "methods_results" || key == "methods-results") return SectionClass::kMethodsResults;
  if (key == "other") return SectionClass::kOther;
  throw Error(ErrorCode::kInvalidArgument, "unknown section class '" + std::string(name) + "'");
}

std::string normalize_title(std::string_view title) {
  std::string_view t = trim(title);
  t.remove_prefix(numbering_prefix(t));
  std::string out;
  out.reserve(t.size());
  for (char c : t) {
    const bool keep = is_alnum(c) || static_cast<unsigned char>(c) >= 0x80;
    out.push_back(keep ? to_lower(c) : ' ');
  }
  return collapse_whitespace(out);
}

LexiconTitleClassifier::LexiconTitleClassifier(std::string_view lexicon_text) {
  std::size_t line_no = 0;
  for (const std::string& raw : split_lines(lexicon_text)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "section lexicon line " + std::to_string(line_no) + ": expected pattern<TAB>class");
    }
    std::string pattern = normalize_title(line.substr(0, tab));
    if (pattern.empty()) continue;
    entries_.emplace_back(std::move(pattern), parse_section_class(line.substr(tab + 1)));
  }
}

const LexiconTitleClassifier& LexiconTitleClassifier::builtin() {
  static const LexiconTitleClassifier instance(resources::section_lexicon());
  return instance;
}

SectionClass LexiconTitleClassifier::classify(std::string_view title) const {
  const std::string normalized = normalize_title(title);
  for (const auto& [pattern, cls] : entries_) {
    if (pattern == normalized) return cls;
  }

  // Whole-word occurrences as token spans.
  struct Match {
    std::size_t begin, end;
    SectionClass cls;
  };
  const std::vector<std::string> words = tokens_of(normalized);
  std::vector<Match> matches;
  for (const auto& [pattern, cls] : entries_) {
    const std::vector<std::string> pw = tokens_of(pattern);
    if (pw.empty() || pw.size() > words.size()) continue;
    for (std::size_t i = 0; i + pw.size() <= words.size(); ++i) {
      if (std::equal(pw.begin(), pw.end(), words.begin() + static_cast<std::ptrdiff_t>(i))) {
        matches.push_back({i, i + pw.size(), cls});
      }
    }
  }

  // A match inside a longer match ("data" in "data availability") is not
  // evidence on its own.
  SectionClass best = SectionClass::kOther;
  bool any = false;
  for (const Match& m : matches) {
    const bool covered = std::any_of(matches.begin(), matches.end(), [&](const Match& o) {
      return o.begin <= m.begin && m.end <= o.end && (o.end - o.begin) > (m.end - m.begin);
    });
    if (covered) continue;
    if (!any || priority(m.cls) > priority(best)) best = m.cls;
    any = true;
  }
  return best;
}

SectionClass classify_section_title(std::string_view title, const TitleClassifier& classifier) {
  if (trim(title).empty()) throw Error(ErrorCode::kEmptyTitle, "section title is empty");
  return classifier.classify(title);
}

bool ManuscriptSegments::has_summary() const {
  return std::any_of(provenance.begin(), provenance.end(),
                     [](const auto& p) { return p.second == SectionClass::kSummary; });
}

bool ManuscriptSegments::has_methods_results() const {
  return std::any_of(provenance.begin(), provenance.end(),
                     [](const auto& p) { return p.second == SectionClass::kMethodsResults; });
}

ManuscriptSegments segment_manuscript(const ManuscriptDoc& doc, const TitleClassifier& classifier) {
  ManuscriptSegments seg;
  std::vector<std::string> sum, mr, full;
  for (const Section& s : doc.sections) {
    const SectionClass cls = trim(s.title).empty() ? SectionClass::kOther
                                                   : classify_section_title(s.title, classifier);
    seg.provenance.emplace_back(s.title, cls);
    full.push_back(s.body);
    if (cls == SectionClass::kSummary) sum.push_back(s.body);
    if (cls == SectionClass::kMethodsResults) mr.push_back(s.body);
  }
  seg.t_sum = join(sum, "\n");
  seg.t_mr = join(mr, "\n");
  seg.t_full = join(full, "\n");
  return seg;
}

}  // namespace revgen
