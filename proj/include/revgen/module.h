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

#ifndef REVGEN_MODULE_H_
#define REVGEN_MODULE_H_

#include <array>
#include <string_view>

namespace revgen {

// Review modules. The first five are the guided generation modules; kWhole
// is the segmentation-less target (the entire review).
enum class Module { kBasic, kEF, kQues, kPropos, kAddl, kWhole };

inline constexpr std::array<Module, 5> kGuidedModules = {
    Module::kBasic, Module::kEF, Module::kQues, Module::kPropos, Module::kAddl};
inline constexpr std::array<Module, 6> kAllModules = {
    Module::kBasic, Module::kEF,   Module::kQues,
    Module::kPropos, Module::kAddl, Module::kWhole};

// Wire and file tag: basic, ef, ques, propos, addl, whole.
std::string_view module_tag(Module m);
// Throws Error(kInvalidArgument) for unknown tags.
Module parse_module(std::string_view tag);
// Heading used when assembling a review.
std::string_view module_heading(Module m);

}  // namespace revgen

#endif  // REVGEN_MODULE_H_
