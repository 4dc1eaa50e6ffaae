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

#ifndef REVGEN_SECTIONER_H_
#define REVGEN_SECTIONER_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "revgen/corpus.h"

namespace revgen {

enum class SectionClass { kSummary, kMethodsResults, kOther };

std::string_view section_class_name(SectionClass c);
// Accepts "summary", "methods_results" (or "methods-results"), "other".
SectionClass parse_section_class(std::string_view name);

// Maps a section title to its class. Implementations must be safe to call
// concurrently.
class TitleClassifier {
 public:
  virtual ~TitleClassifier() = default;
  virtual SectionClass classify(std::string_view title) const = 0;
};

// Lowercases, drops leading numbering ("3.1", "IV.", "A.") and replaces
// punctuation with spaces. "3.1. Materials & Methods" -> "materials methods".
std::string normalize_title(std::string_view title);

// Lexicon baseline: exact match on the normalized title, then whole-word
// substring matches, then Other. When substring matches disagree,
// MethodsResults beats Summary beats Other.
class LexiconTitleClassifier : public TitleClassifier {
 public:
  // Lexicon text: one "pattern<TAB>class" per line, '#' starts a comment.
  explicit LexiconTitleClassifier(std::string_view lexicon_text);

  // The shipped lexicon.
  static const LexiconTitleClassifier& builtin();

  SectionClass classify(std::string_view title) const override;

 private:
  std::vector<std::pair<std::string, SectionClass>> entries_;
};

// Throws Error(kEmptyTitle) when the title is blank.
SectionClass classify_section_title(std::string_view title,
                                    const TitleClassifier& classifier);

struct ManuscriptSegments {
  std::string t_sum;   // summary-like sections
  std::string t_mr;    // methods and results sections
  std::string t_full;  // every section
  std::vector<std::pair<std::string, SectionClass>> provenance;

  bool has_summary() const;
  bool has_methods_results() const;

  bool operator==(const ManuscriptSegments&) const = default;
};

// Bodies are newline-joined in document order. Sections with blank titles
// are counted as Other without consulting the classifier.
ManuscriptSegments segment_manuscript(const ManuscriptDoc& doc,
                                      const TitleClassifier& classifier);

}  // namespace revgen

#endif  // REVGEN_SECTIONER_H_
