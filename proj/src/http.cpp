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

#include "credmem/http.hpp"

#include <thread>

#include "httplib.h"

#include "credmem/error.hpp"
#include "credmem/kernels.hpp"

namespace credmem {

std::int64_t SystemClock::now_ms() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

void SystemClock::sleep_ms(std::int64_t ms) {
  if (ms > 0) std::this_thread::sleep_for(std::chrono::milliseconds(ms));
}

std::int64_t RateLimiter::acquire() {
  std::int64_t now = clock_->now_ms();
  if (primed_ && now < last_ + gap_ms_) {
    clock_->sleep_ms(last_ + gap_ms_ - now);
    now = clock_->now_ms();
  }
  primed_ = true;
  last_ = now;
  return now;
}

std::pair<std::string, std::string> split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw Error(Errc::ConfigError, "not an absolute URL: " + url);
  const std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") throw Error(Errc::ConfigError, "unsupported URL scheme: " + scheme);
  const auto path_begin = url.find('/', scheme_end + 3);
  if (path_begin == std::string::npos) return {url, "/"};
  return {url.substr(0, path_begin), url.substr(path_begin)};
}

namespace {

class HttplibTransport final : public HttpTransport {
 public:
  explicit HttplibTransport(std::chrono::milliseconds timeout) : timeout_(timeout) {}

  HttpResponse send(const HttpRequest& request) override {
    const auto [origin, path] = split_url(request.url);
    httplib::Client client(origin);
    client.set_connection_timeout(timeout_);
    client.set_read_timeout(timeout_);
    client.set_write_timeout(timeout_);

    httplib::Headers headers;
    std::string content_type = "application/json";
    for (const auto& [k, v] : request.headers) {
      if (kernels::ascii_lower(k) == "content-type") {
        content_type = v;
      } else {
        headers.emplace(k, v);
      }
    }

    httplib::Result res;
    if (request.method == "GET") {
      res = client.Get(path, headers);
    } else if (request.method == "POST") {
      res = client.Post(path, headers, request.body, content_type);
    } else if (request.method == "PUT") {
      res = client.Put(path, headers, request.body, content_type);
    } else {
      throw Error(Errc::ConfigError, "unsupported HTTP method: " + request.method);
    }
    if (!res) throw Error(Errc::Transport, "request to " + origin + " failed: " + httplib::to_string(res.error()));
    return {res->status, res->body};
  }

 private:
  std::chrono::milliseconds timeout_;
};

}  // namespace

std::unique_ptr<HttpTransport> make_http_transport(std::chrono::milliseconds timeout) {
  return std::make_unique<HttplibTransport>(timeout);
}

}  // namespace credmem
