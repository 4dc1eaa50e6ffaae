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

#ifndef REVGEN_BACKENDS_H_
#define REVGEN_BACKENDS_H_

#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "revgen/protocol.h"

namespace revgen {

// A text generator. generate() may be called from several threads only
// when handshake().reentrant is true.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual const Handshake& handshake() const = 0;

  // The request id is assigned by the backend; the caller's id is ignored.
  virtual std::string generate(const GenerationRequest& request) = 0;

  // Results in request order. Reentrant backends serve the batch
  // concurrently, others one request at a time.
  virtual std::vector<std::string> generate_batch(const std::vector<GenerationRequest>& requests);
};

// In-process extractive baseline.
class BuiltinBackend : public Backend {
 public:
  BuiltinBackend();
  const Handshake& handshake() const override { return handshake_; }
  std::string generate(const GenerationRequest& request) override;

 private:
  Handshake handshake_;
};

struct BackendOptions {
  std::chrono::milliseconds timeout{60000};
};

// Child process speaking the protocol over its stdin/stdout. The handshake
// is read on construction.
class ExecBackend : public Backend {
 public:
  ExecBackend(std::vector<std::string> argv, BackendOptions options = {});
  ~ExecBackend() override;
  ExecBackend(const ExecBackend&) = delete;
  ExecBackend& operator=(const ExecBackend&) = delete;

  const Handshake& handshake() const override { return handshake_; }
  std::string generate(const GenerationRequest& request) override;
  // Reentrant children receive the whole batch before any response is
  // awaited; responses are matched by id.
  std::vector<std::string> generate_batch(const std::vector<GenerationRequest>& requests) override;

 private:
  std::vector<std::string> exchange(const std::vector<GenerationRequest>& requests);
  std::string read_line(std::chrono::steady_clock::time_point deadline);
  void shutdown();

  std::vector<std::string> argv_;
  BackendOptions options_;
  Handshake handshake_;
  int pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
  std::uint64_t next_id_ = 0;
  bool broken_ = false;
  std::mutex mu_;
};

// Requests as POST <url>/generate. The handshake comes from GET
// <url>/handshake when the server offers it; otherwise the backend is
// treated as non-reentrant with id "http:<url>".
class HttpBackend : public Backend {
 public:
  explicit HttpBackend(std::string url, BackendOptions options = {});
  const Handshake& handshake() const override { return handshake_; }
  std::string generate(const GenerationRequest& request) override;

 private:
  std::string base_;
  std::string path_prefix_;
  BackendOptions options_;
  Handshake handshake_;
  std::uint64_t next_id_ = 0;
  std::mutex mu_;
};

// "builtin", "exec:PATH [ARGS...]" (whitespace separated) or "http:URL".
std::unique_ptr<Backend> make_backend(const std::string& spec, BackendOptions options = {});

}  // namespace revgen

#endif  // REVGEN_BACKENDS_H_
