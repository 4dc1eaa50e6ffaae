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

#include "revgen/tagger.h"

#include <array>

#include "revgen/resources.h"
#include "revgen/text.h"

namespace revgen {
namespace {

bool is_word_char(char c) { return is_alnum(c) || static_cast<unsigned char>(c) >= 0x80; }

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

template <std::size_t N>
bool in_list(const std::array<std::string_view, N>& list, std::string_view w) {
  for (std::string_view x : list) {
    if (x == w) return true;
  }
  return false;
}

constexpr std::array<std::string_view, 24> kDeterminers = {
    "the", "a", "an", "this", "that", "these", "those", "each", "every", "some", "any", "no",
    "all", "both", "either", "neither", "another", "such", "many", "much", "several", "few",
    "more", "most"};
constexpr std::array<std::string_view, 26> kPronouns = {
    "i", "we", "you", "he", "she", "it", "they", "me", "us", "him", "her", "them",
    "my", "our", "your", "his", "its", "their", "mine", "ours", "yours", "theirs",
    "there", "here", "one", "itself"};
constexpr std::array<std::string_view, 10> kModals = {
    "can", "could", "may", "might", "must", "shall", "should", "will", "would", "ought"};
constexpr std::array<std::string_view, 14> kAuxiliaries = {
    "is", "are", "was", "were", "be", "been", "being", "am", "has", "had", "does", "did",
    "isn't", "aren't"};
constexpr std::array<std::string_view, 38> kPrepositions = {
    "of", "in", "on", "at", "by", "for", "with", "from", "to", "into", "onto", "over",
    "under", "about", "above", "below", "between", "among", "through", "during", "before",
    "after", "without", "within", "across", "against", "along", "around", "behind", "beyond",
    "despite", "except", "like", "near", "per", "since", "toward", "towards"};
constexpr std::array<std::string_view, 16> kConjunctions = {
    "and", "or", "but", "nor", "so", "yet", "if", "because", "although", "though", "while",
    "whereas", "unless", "whether", "than", "as"};
// Words that make a preceding lexicon verb read as a noun subject.
constexpr std::array<std::string_view, 21> kNounContext = {
    "of", "is", "are", "was", "were", "has", "have", "had", "can", "could", "may", "might",
    "must", "shall", "should", "will", "would", "seems", "appears", "remains", "'s"};

}  // namespace

std::string_view pos_tag_name(PosTag tag) {
  switch (tag) {
    case PosTag::kVerbBase: return "VB";
    case PosTag::kVerbOther: return "VBX";
    case PosTag::kAuxiliary: return "AUX";
    case PosTag::kModal: return "MD";
    case PosTag::kNoun: return "NN";
    case PosTag::kAdjective: return "JJ";
    case PosTag::kAdverb: return "RB";
    case PosTag::kDeterminer: return "DT";
    case PosTag::kPronoun: return "PRP";
    case PosTag::kPreposition: return "IN";
    case PosTag::kConjunction: return "CC";
    case PosTag::kNumber: return "CD";
    case PosTag::kPunctuation: return "PUNCT";
  }
  return "?";
}

std::vector<std::string> tokenize_words(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (is_space(s[i])) {
      ++i;
      continue;
    }
    if (!is_word_char(s[i])) {
      out.emplace_back(1, s[i]);
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size()) {
      if (is_word_char(s[j])) {
        ++j;
      } else if ((s[j] == '-' || s[j] == '\'') && j + 1 < s.size() && is_word_char(s[j + 1])) {
        j += 2;
      } else {
        break;
      }
    }
    out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

LexiconPosTagger::LexiconPosTagger(std::string_view verb_lexicon_text) {
  for (const std::string& raw : split_lines(verb_lexicon_text)) {
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    verbs_.insert(to_lower(line));
  }
}

const LexiconPosTagger& LexiconPosTagger::builtin() {
  static const LexiconPosTagger instance(resources::verb_lexicon());
  return instance;
}

PosTag LexiconPosTagger::tag_word(const std::string& w) const {
  if (w.empty() || !is_word_char(w[0])) return PosTag::kPunctuation;
  bool numeric = true;
  for (char c : w) numeric = numeric && (is_digit(c) || c == '.' || c == ',');
  if (numeric) return PosTag::kNumber;

  if (in_list(kModals, w)) return PosTag::kModal;
  if (in_list(kAuxiliaries, w)) return PosTag::kAuxiliary;
  if (in_list(kDeterminers, w)) return PosTag::kDeterminer;
  if (in_list(kPronouns, w)) return PosTag::kPronoun;
  if (in_list(kPrepositions, w)) return PosTag::kPreposition;
  if (in_list(kConjunctions, w)) return PosTag::kConjunction;
  if (verbs_.count(w)) return PosTag::kVerbBase;

  // Inflections of lexicon verbs.
  if (ends_with(w, "s") && !ends_with(w, "ss")) {
    if (verbs_.count(w.substr(0, w.size() - 1))) return PosTag::kVerbOther;
    if (ends_with(w, "es") && verbs_.count(w.substr(0, w.size() - 2))) return PosTag::kVerbOther;
  }
  if (ends_with(w, "ing") || ends_with(w, "ed")) return PosTag::kVerbOther;
  if (ends_with(w, "ly")) return PosTag::kAdverb;
  for (std::string_view suffix : {"ous", "ful", "able", "ible", "ive", "al", "ic", "less"}) {
    if (ends_with(w, suffix)) return PosTag::kAdjective;
  }
  return PosTag::kNoun;
}

std::vector<PosTag> LexiconPosTagger::tag(const std::vector<std::string>& tokens) const {
  std::vector<PosTag> tags;
  tags.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string lower = to_lower(tokens[i]);
    PosTag t = tag_word(lower);
    if (t == PosTag::kVerbBase && i + 1 < tokens.size()) {
      std::string next = to_lower(tokens[i + 1]);
      if (next == "'" && i + 2 < tokens.size() && to_lower(tokens[i + 2]) == "s") next = "'s";
      if (in_list(kNounContext, next)) t = PosTag::kNoun;
    }
    tags.push_back(t);
  }
  return tags;
}

}  // namespace revgen
