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

#include "revgen/protocol.h"

#include "revgen/error.h"

namespace revgen {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorCode::kBackendProtocolError, what);
}

json parse_line(std::string_view line, const char* kind) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded()) fail(std::string(kind) + ": not valid JSON");
  if (!j.is_object()) fail(std::string(kind) + ": expected a JSON object");
  return j;
}

const json& field(const json& j, const char* kind, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(std::string(kind) + "." + key + ": missing");
  return *it;
}

std::string string_field(const json& j, const char* kind, const char* key) {
  const json& v = field(j, kind, key);
  if (!v.is_string()) fail(std::string(kind) + "." + key + ": expected string");
  return v.get<std::string>();
}

}  // namespace

json handshake_to_json(const Handshake& h) {
  return {{"protocol", h.protocol}, {"backend_id", h.backend_id}, {"reentrant", h.reentrant}};
}

json request_to_json(const GenerationRequest& r) {
  return {{"id", r.id},
          {"module", module_tag(r.module)},
          {"prefix", r.prefix},
          {"source", r.source},
          {"params", params_to_json(r.params)}};
}

json response_to_json(const GenerationResponse& r) {
  json j = {{"id", r.id}};
  if (r.error) {
    j["error"] = *r.error;
  } else {
    j["text"] = r.text.value_or("");
  }
  return j;
}

Handshake handshake_from_json(const json& j) {
  if (!j.is_object()) fail("handshake: expected a JSON object");
  Handshake h;
  const json& protocol = field(j, "handshake", "protocol");
  if (!protocol.is_number_integer()) fail("handshake.protocol: expected integer");
  h.protocol = protocol.get<int>();
  if (h.protocol != kProtocolVersion) {
    fail("handshake.protocol: unsupported version " + std::to_string(h.protocol));
  }
  h.backend_id = string_field(j, "handshake", "backend_id");
  const json& reentrant = field(j, "handshake", "reentrant");
  if (!reentrant.is_boolean()) fail("handshake.reentrant: expected boolean");
  h.reentrant = reentrant.get<bool>();
  return h;
}

GenerationRequest request_from_json(const json& j) {
  if (!j.is_object()) fail("request: expected a JSON object");
  GenerationRequest r;
  r.id = string_field(j, "request", "id");
  const std::string module = string_field(j, "request", "module");
  try {
    r.module = parse_module(module);
  } catch (const Error&) {
    fail("request.module: unknown module '" + module + "'");
  }
  r.prefix = string_field(j, "request", "prefix");
  r.source = string_field(j, "request", "source");
  try {
    r.params = params_from_json(field(j, "request", "params"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kBackendProtocolError) throw;
    fail(std::string("request.") + e.what());
  }
  return r;
}

GenerationResponse response_from_json(const json& j) {
  if (!j.is_object()) fail("response: expected a JSON object");
  GenerationResponse r;
  r.id = string_field(j, "response", "id");
  const bool has_text = j.contains("text");
  const bool has_error = j.contains("error");
  if (has_text == has_error) fail("response: exactly one of text and error is required");
  if (has_text) {
    r.text = string_field(j, "response", "text");
  } else {
    r.error = string_field(j, "response", "error");
  }
  return r;
}

Handshake parse_handshake(std::string_view line) {
  return handshake_from_json(parse_line(line, "handshake"));
}

GenerationRequest parse_request(std::string_view line) {
  return request_from_json(parse_line(line, "request"));
}

GenerationResponse parse_response(std::string_view line) {
  return response_from_json(parse_line(line, "response"));
}

}  // namespace revgen
