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

// Backend wire protocol: one JSON object per line.
//
//   handshake  {"protocol": 1, "backend_id": str, "reentrant": bool}
//   request    {"id": str, "module": str, "prefix": str, "source": str,
//               "params": {"top_p", "top_k", "no_repeat_ngram_size",
//                          "max_new_tokens", "seed"}}
//   response   {"id": str, "text": str} | {"id": str, "error": str}
//
// Parsers throw Error(kBackendProtocolError) naming the offending field.

#ifndef REVGEN_PROTOCOL_H_
#define REVGEN_PROTOCOL_H_

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "revgen/genkit.h"
#include "revgen/module.h"

namespace revgen {

inline constexpr int kProtocolVersion = 1;

struct Handshake {
  int protocol = kProtocolVersion;
  std::string backend_id;
  bool reentrant = false;
  bool operator==(const Handshake&) const = default;
};

struct GenerationRequest {
  std::string id;
  Module module = Module::kBasic;
  std::string prefix;
  std::string source;
  GenerationParams params;
  bool operator==(const GenerationRequest&) const = default;
};

struct GenerationResponse {
  std::string id;
  std::optional<std::string> text;
  std::optional<std::string> error;
  bool operator==(const GenerationResponse&) const = default;
};

nlohmann::json handshake_to_json(const Handshake& h);
nlohmann::json request_to_json(const GenerationRequest& r);
nlohmann::json response_to_json(const GenerationResponse& r);

Handshake parse_handshake(std::string_view line);
GenerationRequest parse_request(std::string_view line);
GenerationResponse parse_response(std::string_view line);

Handshake handshake_from_json(const nlohmann::json& j);
GenerationRequest request_from_json(const nlohmann::json& j);
GenerationResponse response_from_json(const nlohmann::json& j);

}  // namespace revgen

#endif  // REVGEN_PROTOCOL_H_
