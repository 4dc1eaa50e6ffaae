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

#ifndef REVGEN_ERROR_H_
#define REVGEN_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace revgen {

enum class ErrorCode {
  kMalformedXml,
  kMalformedJson,
  kEmptyDocument,
  kSchemaViolation,
  kEmptyTitle,
  kTooFewRecords,
  kBackendUnavailable,
  kBackendTimeout,
  kBackendProtocolError,
  kEmptyEvaluation,
  kInvalidArgument,
  kIoError,
};

// Stable machine-readable name, e.g. "SchemaViolation".
std::string_view error_code_name(ErrorCode code);

// Every failure surfaced by the library is an Error carrying a code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace revgen

#endif  // REVGEN_ERROR_H_
