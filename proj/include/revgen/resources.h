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

// Plain-text resources compiled in from resources/. The same files can be
// passed on the command line to override these defaults.

#ifndef REVGEN_RESOURCES_H_
#define REVGEN_RESOURCES_H_

#include <string_view>

namespace revgen::resources {

std::string_view section_lexicon();    // resources/section_lexicon.tsv
std::string_view verb_lexicon();       // resources/verb_lexicon.txt
std::string_view proposal_keywords();  // resources/proposal_keywords.txt
std::string_view default_prefixes();   // resources/prefixes.tsv
std::string_view abbreviations();      // resources/abbreviations.txt

}  // namespace revgen::resources

#endif  // REVGEN_RESOURCES_H_
