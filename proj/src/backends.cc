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

#include "revgen/backends.h"

#include <fcntl.h>
#include <netdb.h>
#include <poll.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <map>
#include <optional>
#include <thread>

#include "httplib.h"
#include "revgen/error.h"
#include "revgen/parallel.h"
#include "revgen/text.h"

namespace revgen {

using Clock = std::chrono::steady_clock;

std::vector<std::string> Backend::generate_batch(const std::vector<GenerationRequest>& requests) {
  std::vector<std::string> out(requests.size());
  const int jobs = handshake().reentrant ? static_cast<int>(requests.size()) : 1;
  parallel_for(requests.size(), jobs, [&](std::size_t i) { out[i] = generate(requests[i]); });
  return out;
}

BuiltinBackend::BuiltinBackend() : handshake_{kProtocolVersion, "builtin-extractive-1", true} {}

std::string BuiltinBackend::generate(const GenerationRequest& request) {
  return baseline_generate(request.prefix, request.source, request.params);
}

// ---------------------------------------------------------------------------

namespace {

std::string errno_text() { return std::strerror(errno); }

class BackendReportedError : public Error {
 public:
  explicit BackendReportedError(const std::string& message)
      : Error(ErrorCode::kBackendProtocolError, message) {}
};

int remaining_ms(Clock::time_point deadline) {
  const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
  return left.count() > 0 ? static_cast<int>(left.count()) : 0;
}

}  // namespace

ExecBackend::ExecBackend(std::vector<std::string> argv, BackendOptions options)
    : argv_(std::move(argv)), options_(options) {
  if (argv_.empty()) throw Error(ErrorCode::kInvalidArgument, "exec backend: empty command");
  ::signal(SIGPIPE, SIG_IGN);

  int in_pipe[2], out_pipe[2];
  if (::pipe2(in_pipe, O_CLOEXEC) != 0) {
    throw Error(ErrorCode::kBackendUnavailable, "exec backend: pipe: " + errno_text());
  }
  if (::pipe2(out_pipe, O_CLOEXEC) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    throw Error(ErrorCode::kBackendUnavailable, "exec backend: pipe: " + errno_text());
  }
  std::vector<char*> args;
  for (std::string& a : argv_) args.push_back(a.data());
  args.push_back(nullptr);

  pid_ = ::fork();
  if (pid_ < 0) {
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) ::close(fd);
    throw Error(ErrorCode::kBackendUnavailable, "exec backend: fork: " + errno_text());
  }
  if (pid_ == 0) {
    ::dup2(in_pipe[0], STDIN_FILENO);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    ::execvp(args[0], args.data());
    ::_exit(127);
  }
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  to_child_ = in_pipe[1];
  from_child_ = out_pipe[0];
  ::fcntl(to_child_, F_SETFL, ::fcntl(to_child_, F_GETFL) | O_NONBLOCK);

  try {
    const std::string line = read_line(Clock::now() + options_.timeout);
    handshake_ = parse_handshake(line);
  } catch (...) {
    shutdown();
    throw;
  }
}

ExecBackend::~ExecBackend() { shutdown(); }

void ExecBackend::shutdown() {
  if (to_child_ >= 0) ::close(to_child_);
  if (from_child_ >= 0) ::close(from_child_);
  to_child_ = from_child_ = -1;
  if (pid_ > 0) {
    const auto deadline = Clock::now() + std::chrono::milliseconds(1000);
    int status = 0;
    while (::waitpid(pid_, &status, WNOHANG) == 0) {
      if (Clock::now() >= deadline) {
        ::kill(pid_, SIGKILL);
        ::waitpid(pid_, &status, 0);
        break;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
    pid_ = -1;
  }
}

std::string ExecBackend::read_line(Clock::time_point deadline) {
  for (;;) {
    const std::size_t nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      if (trim(line).empty()) continue;
      return line;
    }
    pollfd p{from_child_, POLLIN, 0};
    const int r = ::poll(&p, 1, remaining_ms(deadline));
    if (r < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::kBackendUnavailable, "exec backend: poll: " + errno_text());
    }
    if (r == 0) throw Error(ErrorCode::kBackendTimeout, "exec backend: no output before deadline");
    char chunk[65536];
    const ssize_t n = ::read(from_child_, chunk, sizeof chunk);
    if (n < 0) {
      if (errno == EINTR || errno == EAGAIN) continue;
      throw Error(ErrorCode::kBackendUnavailable, "exec backend: read: " + errno_text());
    }
    if (n == 0) throw Error(ErrorCode::kBackendUnavailable, "exec backend: process closed its output");
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

std::vector<std::string> ExecBackend::exchange(const std::vector<GenerationRequest>& requests) {
  std::map<std::string, std::size_t> pending;
  std::string outgoing;
  for (std::size_t i = 0; i < requests.size(); ++i) {
    GenerationRequest r = requests[i];
    r.id = std::to_string(++next_id_);
    pending[r.id] = i;
    outgoing += request_to_json(r).dump() + "\n";
  }
  std::vector<std::string> out(requests.size());
  std::size_t written = 0;
  auto deadline = Clock::now() + options_.timeout;
  std::optional<std::string> backend_error;

  auto take_lines = [&] {
    std::size_t nl;
    while ((nl = buffer_.find('\n')) != std::string::npos) {
      const std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      if (trim(line).empty()) continue;
      const GenerationResponse resp = parse_response(line);
      auto it = pending.find(resp.id);
      if (it == pending.end()) {
        throw Error(ErrorCode::kBackendProtocolError,
                    "exec backend: response for unknown id '" + resp.id + "'");
      }
      if (resp.error) {
        if (!backend_error) backend_error = *resp.error;
      } else {
        out[it->second] = *resp.text;
      }
      pending.erase(it);
      deadline = Clock::now() + options_.timeout;
    }
  };

  while (!pending.empty()) {
    pollfd fds[2] = {{from_child_, POLLIN, 0}, {to_child_, POLLOUT, 0}};
    const nfds_t count = written < outgoing.size() ? 2 : 1;
    const int r = ::poll(fds, count, remaining_ms(deadline));
    if (r < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::kBackendUnavailable, "exec backend: poll: " + errno_text());
    }
    if (r == 0) throw Error(ErrorCode::kBackendTimeout, "exec backend: response deadline exceeded");
    if (count == 2 && (fds[1].revents & (POLLOUT | POLLERR | POLLHUP))) {
      const ssize_t n = ::write(to_child_, outgoing.data() + written, outgoing.size() - written);
      if (n < 0 && errno != EAGAIN && errno != EINTR) {
        throw Error(ErrorCode::kBackendUnavailable, "exec backend: write: " + errno_text());
      }
      if (n > 0) written += static_cast<std::size_t>(n);
    }
    if (fds[0].revents & (POLLIN | POLLHUP | POLLERR)) {
      char chunk[65536];
      const ssize_t n = ::read(from_child_, chunk, sizeof chunk);
      if (n < 0 && errno != EAGAIN && errno != EINTR) {
        throw Error(ErrorCode::kBackendUnavailable, "exec backend: read: " + errno_text());
      }
      if (n == 0) throw Error(ErrorCode::kBackendUnavailable, "exec backend: process closed its output");
      if (n > 0) {
        buffer_.append(chunk, static_cast<std::size_t>(n));
        take_lines();
      }
    }
  }
  // The stream is still in sync here, so a reported error leaves it usable.
  if (backend_error) throw BackendReportedError("backend error: " + *backend_error);
  return out;
}

std::string ExecBackend::generate(const GenerationRequest& request) {
  return generate_batch({request}).front();
}

std::vector<std::string> ExecBackend::generate_batch(const std::vector<GenerationRequest>& requests) {
  std::lock_guard<std::mutex> lock(mu_);
  if (broken_) throw Error(ErrorCode::kBackendUnavailable, "exec backend: stream is unusable after an earlier failure");
  try {
    if (handshake_.reentrant) return exchange(requests);
    std::vector<std::string> out;
    for (const GenerationRequest& r : requests) out.push_back(exchange({r}).front());
    return out;
  } catch (const BackendReportedError&) {
    throw;
  } catch (...) {
    broken_ = true;
    throw;
  }
}

// ---------------------------------------------------------------------------

namespace {

// True when a plain TCP connect to the backend fails outright (refused,
// unresolvable, unreachable). httplib folds some of these into a read error.
bool endpoint_refuses(const std::string& base, std::chrono::milliseconds timeout) {
  std::string hostport = base.substr(base.find("://") + 3);
  std::string host = hostport, port = base.starts_with("https") ? "443" : "80";
  if (const std::size_t colon = hostport.rfind(':'); colon != std::string::npos) {
    host = hostport.substr(0, colon);
    port = hostport.substr(colon + 1);
  }
  if (host.size() > 1 && host.front() == '[') host = host.substr(1, host.size() - 2);

  addrinfo hints{};
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* list = nullptr;
  if (getaddrinfo(host.c_str(), port.c_str(), &hints, &list) != 0) return true;
  bool refused = true;
  for (addrinfo* ai = list; ai && refused; ai = ai->ai_next) {
    const int fd = ::socket(ai->ai_family, ai->ai_socktype | SOCK_NONBLOCK, ai->ai_protocol);
    if (fd < 0) continue;
    int rc = ::connect(fd, ai->ai_addr, ai->ai_addrlen);
    if (rc != 0 && errno == EINPROGRESS) {
      pollfd p{fd, POLLOUT, 0};
      rc = ::poll(&p, 1, static_cast<int>(timeout.count()));
      if (rc == 0) {
        refused = false;  // still pending: a slow network, not a refusal
      } else if (rc > 0) {
        int err = 0;
        socklen_t len = sizeof err;
        ::getsockopt(fd, SOL_SOCKET, SO_ERROR, &err, &len);
        refused = err != 0;
      }
    } else {
      refused = rc != 0;
    }
    ::close(fd);
  }
  freeaddrinfo(list);
  return refused;
}

// httplib reports a read timeout and a dropped connection alike as
// Error::Read; elapsed time and a connect probe tell them apart.
Error http_error(const httplib::Result& res, const std::string& what, const std::string& base,
                 Clock::time_point start, std::chrono::milliseconds timeout) {
  const httplib::Error e = res.error();
  const std::string msg = what + ": " + httplib::to_string(e);
  const bool expired = Clock::now() - start >= timeout;
  if (e == httplib::Error::ConnectionTimeout || (e == httplib::Error::Read && expired)) {
    if (!endpoint_refuses(base, timeout)) return Error(ErrorCode::kBackendTimeout, msg);
  }
  return Error(ErrorCode::kBackendUnavailable, msg);
}

}  // namespace

HttpBackend::HttpBackend(std::string url, BackendOptions options) : options_(options) {
  const std::size_t scheme = url.find("://");
  if (scheme == std::string::npos) {
    throw Error(ErrorCode::kInvalidArgument, "http backend: URL must look like http://host:port");
  }
  const std::size_t path = url.find('/', scheme + 3);
  base_ = path == std::string::npos ? url : url.substr(0, path);
  path_prefix_ = path == std::string::npos ? "" : url.substr(path);
  while (!path_prefix_.empty() && path_prefix_.back() == '/') path_prefix_.pop_back();

  httplib::Client client(base_);
  client.set_connection_timeout(options_.timeout);
  client.set_read_timeout(options_.timeout);
  const auto start = Clock::now();
  httplib::Result res = client.Get(path_prefix_ + "/handshake");
  if (!res) throw http_error(res, "http backend: handshake", base_, start, options_.timeout);
  if (res->status == 200) {
    handshake_ = parse_handshake(res->body);
  } else {
    handshake_ = {kProtocolVersion, "http:" + url, false};
  }
}

std::string HttpBackend::generate(const GenerationRequest& request) {
  GenerationRequest r = request;
  {
    std::lock_guard<std::mutex> lock(mu_);
    r.id = std::to_string(++next_id_);
  }
  httplib::Client client(base_);
  client.set_connection_timeout(options_.timeout);
  client.set_read_timeout(options_.timeout);
  client.set_write_timeout(options_.timeout);
  const auto start = Clock::now();
  httplib::Result res =
      client.Post(path_prefix_ + "/generate", request_to_json(r).dump(), "application/json");
  if (!res) throw http_error(res, "http backend: generate", base_, start, options_.timeout);
  if (res->status != 200) {
    try {
      const GenerationResponse resp = parse_response(res->body);
      if (resp.error) throw Error(ErrorCode::kBackendProtocolError, "backend error: " + *resp.error);
    } catch (const Error& e) {
      if (std::string_view(e.what()).starts_with("backend error")) throw;
    }
    throw Error(ErrorCode::kBackendProtocolError,
                "http backend: status " + std::to_string(res->status));
  }
  const GenerationResponse resp = parse_response(res->body);
  if (resp.id != r.id) {
    throw Error(ErrorCode::kBackendProtocolError,
                "http backend: response id '" + resp.id + "' does not match request '" + r.id + "'");
  }
  if (resp.error) throw Error(ErrorCode::kBackendProtocolError, "backend error: " + *resp.error);
  return *resp.text;
}

// ---------------------------------------------------------------------------

std::unique_ptr<Backend> make_backend(const std::string& spec, BackendOptions options) {
  const std::string_view s = trim(spec);
  if (s == "builtin") return std::make_unique<BuiltinBackend>();
  if (s.starts_with("exec:")) {
    std::vector<std::string> argv = split_whitespace(s.substr(5));
    if (argv.empty()) throw Error(ErrorCode::kInvalidArgument, "backend spec exec: needs a command");
    return std::make_unique<ExecBackend>(std::move(argv), options);
  }
  if (s.starts_with("http://") || s.starts_with("https://")) {
    return std::make_unique<HttpBackend>(std::string(s), options);
  }
  if (s.starts_with("http:")) return std::make_unique<HttpBackend>(std::string(s.substr(5)), options);
  throw Error(ErrorCode::kInvalidArgument,
              "unknown backend spec '" + spec + "' (expected builtin, exec:PATH or http:URL)");
}

}  // namespace revgen
