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

#include "revgen/module.h"

#include <string>

#include "revgen/error.h"

namespace revgen {

std::string_view module_tag(Module m) {
  switch (m) {
    case Module::kBasic: return "basic";
    case Module::kEF: return "ef";
    case Module::kQues: return "ques";
    case Module::kPropos: return "propos";
    case Module::kAddl: return "addl";
    case Module::kWhole: return "whole";
  }
  return "?";
}

Module parse_module(std::string_view tag) {
  for (Module m : kAllModules) {
    if (module_tag(m) == tag) return m;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown module '" + std::string(tag) + "'");
}

std::string_view module_heading(Module m) {
  switch (m) {
    case Module::kBasic: return "Basic Reporting";
    case Module::kEF: return "Experimental Design & Validity of Findings";
    case Module::kQues: return "Questions";
    case Module::kPropos: return "Proposals";
    case Module::kAddl: return "Additional Comments";
    case Module::kWhole: return "Review";
  }
  return "";
}

}  // namespace revgen
