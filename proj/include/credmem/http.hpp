/*
 * Copyright 2026 The credmem Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Minimal HTTP plumbing shared by the model gateway and the validity prober.

#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace credmem {

class Clock {
 public:
  virtual ~Clock() = default;
  virtual std::int64_t now_ms() = 0;
  virtual void sleep_ms(std::int64_t ms) = 0;
};

class SystemClock final : public Clock {
 public:
  std::int64_t now_ms() override;
  void sleep_ms(std::int64_t ms) override;
};

// Time only moves when slept or advanced.
class ManualClock final : public Clock {
 public:
  explicit ManualClock(std::int64_t start_ms = 0) : now_(start_ms) {}
  std::int64_t now_ms() override { return now_; }
  void sleep_ms(std::int64_t ms) override {
    if (ms > 0) now_ += ms;
  }
  void advance(std::int64_t ms) { sleep_ms(ms); }

 private:
  std::int64_t now_;
};

// Spaces consecutive acquisitions at least `gap_ms` apart on `clock`.
class RateLimiter {
 public:
  RateLimiter(Clock& clock, std::int64_t gap_ms) : clock_(&clock), gap_ms_(gap_ms) {}

  // Blocks as needed; returns the time the caller may start.
  std::int64_t acquire();

  std::int64_t gap_ms() const noexcept { return gap_ms_; }

 private:
  Clock* clock_;
  std::int64_t gap_ms_;
  bool primed_ = false;
  std::int64_t last_ = 0;
};

struct HttpRequest {
  std::string method = "POST";
  std::string url;
  std::vector<std::pair<std::string, std::string>> headers;
  std::string body;
};

struct HttpResponse {
  int status = 0;
  std::string body;
};

class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  // Throws Error{Transport} when no response is obtained.
  virtual HttpResponse send(const HttpRequest& request) = 0;
};

std::unique_ptr<HttpTransport> make_http_transport(std::chrono::milliseconds timeout = std::chrono::seconds(60));

// Splits "scheme://host[:port]/path?query" into ("scheme://host[:port]", "/path?query").
// Throws Error{ConfigError} for anything that is not http(s).
std::pair<std::string, std::string> split_url(const std::string& url);

}  // namespace credmem
