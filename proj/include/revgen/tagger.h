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

#ifndef REVGEN_TAGGER_H_
#define REVGEN_TAGGER_H_

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace revgen {

// Coarse part-of-speech tags. Only kVerbBase matters to the labeler; the
// rest exist so taggers can say "definitely not a base verb".
enum class PosTag {
  kVerbBase,   // VB
  kVerbOther,  // inflected verb forms
  kAuxiliary,
  kModal,
  kNoun,
  kAdjective,
  kAdverb,
  kDeterminer,
  kPronoun,
  kPreposition,
  kConjunction,
  kNumber,
  kPunctuation,
};

std::string_view pos_tag_name(PosTag tag);

// Word and punctuation tokens. Letters and digits form words together with
// inner hyphens and apostrophes ("re-run", "authors'"); each other
// non-space character is its own token.
std::vector<std::string> tokenize_words(std::string_view sentence);

class PosTagger {
 public:
  virtual ~PosTagger() = default;
  // One tag per token. Must be const-safe for concurrent use.
  virtual std::vector<PosTag> tag(const std::vector<std::string>& tokens) const = 0;
};

// Closed-class word lists, a base-form verb lexicon, suffix heuristics and
// one contextual rule: a lexicon verb directly followed by "of", an
// auxiliary or a modal is a noun ("Use of ...", "Approach is ...").
// Unknown words are nouns.
class LexiconPosTagger : public PosTagger {
 public:
  // Verb lexicon text: one lowercase base verb per line, '#' comments.
  explicit LexiconPosTagger(std::string_view verb_lexicon_text);

  static const LexiconPosTagger& builtin();

  std::vector<PosTag> tag(const std::vector<std::string>& tokens) const override;

  std::size_t lexicon_size() const { return verbs_.size(); }

 private:
  PosTag tag_word(const std::string& lower) const;

  std::unordered_set<std::string> verbs_;
};

}  // namespace revgen

#endif  // REVGEN_TAGGER_H_
