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

// Streaming TEI reader on top of expat. Only the handful of elements GROBID
// uses for article structure are interpreted; everything else contributes
// nothing.

#include <expat.h>

#include <memory>
#include <string>
#include <vector>

#include "revgen/corpus.h"
#include "revgen/error.h"
#include "revgen/text.h"

namespace revgen {
namespace {

constexpr char kUntitled[] = "Untitled";

std::string_view local_name(const XML_Char* name) {
  std::string_view n(name);
  const std::size_t colon = n.rfind(':');
  return colon == std::string_view::npos ? n : n.substr(colon + 1);
}

struct PendingSection {
  std::string title;
  std::vector<std::string> paragraphs;
};

class TeiReader {
 public:
  static void XMLCALL on_start(void* data, const XML_Char* name, const XML_Char**) {
    static_cast<TeiReader*>(data)->start(local_name(name));
  }
  static void XMLCALL on_end(void* data, const XML_Char* name) {
    static_cast<TeiReader*>(data)->end(local_name(name));
  }
  static void XMLCALL on_text(void* data, const XML_Char* s, int len) {
    static_cast<TeiReader*>(data)->text(std::string_view(s, static_cast<std::size_t>(len)));
  }

  ManuscriptDoc finish() {
    ManuscriptDoc doc;
    if (!abstract_paragraphs_.empty()) {
      doc.sections.push_back({"Abstract", join(abstract_paragraphs_, "\n")});
    }
    for (PendingSection& s : sections_) {
      doc.sections.push_back({std::move(s.title), join(s.paragraphs, "\n")});
    }
    if (doc.sections.empty()) {
      throw Error(ErrorCode::kEmptyDocument, "TEI document has no abstract and no body divisions");
    }
    doc.update_word_count();
    return doc;
  }

 private:
  void start(std::string_view name) {
    if (skip_depth_ > 0) {
      ++skip_depth_;
      return;
    }
    if (name == "figure" || name == "table" || name == "formula") {
      skip_depth_ = 1;
      return;
    }
    if (name == "abstract") {
      ++abstract_depth_;
      abstract_text_.clear();
    } else if (name == "body") {
      ++body_depth_;
    } else if (name == "div" && body_depth_ > 0 && abstract_depth_ == 0) {
      div_stack_.push_back(sections_.size());
      sections_.emplace_back();
    } else if (name == "head" && !div_stack_.empty()) {
      ++head_depth_;
    } else if (name == "p" && (abstract_depth_ > 0 || !div_stack_.empty())) {
      if (p_depth_++ == 0) paragraph_.clear();
    }
  }

  void end(std::string_view name) {
    if (skip_depth_ > 0) {
      --skip_depth_;
      return;
    }
    if (name == "abstract" && abstract_depth_ > 0) {
      if (--abstract_depth_ == 0 && abstract_paragraphs_.empty()) {
        std::string loose = collapse_whitespace(abstract_text_);
        if (!loose.empty()) abstract_paragraphs_.push_back(std::move(loose));
      }
    } else if (name == "body" && body_depth_ > 0) {
      --body_depth_;
    } else if (name == "div" && !div_stack_.empty() && abstract_depth_ == 0 && body_depth_ > 0) {
      close_div();
    } else if (name == "head" && head_depth_ > 0) {
      --head_depth_;
    } else if (name == "p" && p_depth_ > 0) {
      if (--p_depth_ == 0) {
        std::string para = collapse_whitespace(paragraph_);
        if (para.empty()) return;
        if (abstract_depth_ > 0) {
          abstract_paragraphs_.push_back(std::move(para));
        } else if (!div_stack_.empty()) {
          sections_[div_stack_.back()].paragraphs.push_back(std::move(para));
        }
      }
    }
  }

  void text(std::string_view s) {
    if (skip_depth_ > 0) return;
    if (p_depth_ > 0) {
      paragraph_.append(s);
    } else if (head_depth_ > 0 && !div_stack_.empty()) {
      sections_[div_stack_.back()].title.append(s);
    } else if (abstract_depth_ > 0) {
      abstract_text_.append(s);
    }
  }

  // A division without a heading continues the previous body section; a
  // leading one becomes an "Untitled" section.
  void close_div() {
    const std::size_t index = div_stack_.back();
    div_stack_.pop_back();
    PendingSection& section = sections_[index];
    section.title = collapse_whitespace(section.title);
    if (!section.title.empty()) return;
    if (index == 0) {
      section.title = kUntitled;
      return;
    }
    PendingSection& previous = sections_[index - 1];
    for (std::string& p : section.paragraphs) previous.paragraphs.push_back(std::move(p));
    sections_.erase(sections_.begin() + static_cast<std::ptrdiff_t>(index));
  }

  int skip_depth_ = 0;
  int abstract_depth_ = 0;
  int body_depth_ = 0;
  int head_depth_ = 0;
  int p_depth_ = 0;
  std::vector<std::size_t> div_stack_;
  std::vector<PendingSection> sections_;
  std::vector<std::string> abstract_paragraphs_;
  std::string abstract_text_;
  std::string paragraph_;
};

struct ParserDeleter {
  void operator()(XML_Parser p) const { XML_ParserFree(p); }
};

}  // namespace

ManuscriptDoc parse_tei(std::string_view xml_text) {
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, ParserDeleter> parser(
      XML_ParserCreate("UTF-8"));
  if (!parser) throw Error(ErrorCode::kMalformedXml, "cannot create XML parser");
  TeiReader reader;
  XML_SetUserData(parser.get(), &reader);
  XML_SetElementHandler(parser.get(), &TeiReader::on_start, &TeiReader::on_end);
  XML_SetCharacterDataHandler(parser.get(), &TeiReader::on_text);

  constexpr std::size_t kChunk = 1 << 20;
  std::size_t offset = 0;
  do {
    const std::size_t n = std::min(kChunk, xml_text.size() - offset);
    const bool last = offset + n == xml_text.size();
    if (XML_Parse(parser.get(), xml_text.data() + offset, static_cast<int>(n), last) ==
        XML_STATUS_ERROR) {
      throw Error(ErrorCode::kMalformedXml,
                  std::string(XML_ErrorString(XML_GetErrorCode(parser.get()))) + " at line " +
                      std::to_string(XML_GetCurrentLineNumber(parser.get())) + ", column " +
                      std::to_string(XML_GetCurrentColumnNumber(parser.get())));
    }
    offset += n;
  } while (offset < xml_text.size());
  return reader.finish();
}

}  // namespace revgen
