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

#include <gtest/gtest.h>

#include <thread>

#include "httplib.h"

#include "credmem/error.hpp"
#include "credmem/prober.hpp"
#include "netguard.hpp"

namespace credmem {
namespace {

namespace fs = std::filesystem;

const Registry& shipped() {
  static const Registry reg = Registry::load(fs::path(CREDMEM_SOURCE_DIR) / "data/registry.conf");
  return reg;
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::Io;
}

CandidateSecret candidate(std::string type, std::string text, std::string id = "c1:b:1:0") {
  CandidateSecret c;
  c.candidate_id = std::move(id);
  c.secret_type_id = std::move(type);
  c.raw_text = std::move(text);
  c.plausible = true;
  return c;
}

const std::string kGoodKey = "sk_test_4eC39HqLyjWDarjtT1zdp7dc";

// Accepts exactly one stripe test key.
class StripeFixture {
 public:
  StripeFixture() {
    server_.Get("/v1/balance", [](const httplib::Request& req, httplib::Response& res) {
      res.status = req.get_header_value("Authorization") == "Bearer " + kGoodKey ? 200 : 401;
      res.set_content("{\"object\": \"balance\"}", "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~StripeFixture() {
    server_.stop();
    thread_.join();
  }
  std::string origin() const { return "http://127.0.0.1:" + std::to_string(port_); }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

TEST(ProbeGates, LiveRefusedForEveryNonValidatableType) {
  std::size_t refused_with_ack = 0, refused_without_ack = 0;
  for (const auto& [id, spec] : shipped().specs()) {
    if (code_of([&, id = id] { ProbeSpec::from_registry(shipped(), id, ProbeMode::Live, false); }) ==
        Errc::EthicsGate) {
      ++refused_without_ack;
    }
    if (!spec.validation_supported) {
      EXPECT_EQ(code_of([&, id = id] { ProbeSpec::from_registry(shipped(), id, ProbeMode::Live, true); }),
                Errc::EthicsGate)
          << id;
      ++refused_with_ack;
    }
  }
  EXPECT_EQ(refused_without_ack, 18u);
  EXPECT_EQ(refused_with_ack, 15u);
  EXPECT_EQ(code_of([] { ProbeSpec::from_registry(shipped(), "stripe_live_secret_key", ProbeMode::Live, true); }),
            Errc::EthicsGate);

  // A hand-built spec cannot sneak past the constructor.
  ProbeSpec forged;
  forged.secret_type_id = "stripe_live_secret_key";
  forged.mode = ProbeMode::Live;
  ManualClock clock;
  auto transport = make_http_transport();
  EXPECT_EQ(code_of([&] { Prober(forged, shipped(), transport.get(), clock, 0); }), Errc::EthicsGate);
}

TEST(ProbeGates, ValidatableLiveWithAckIsConstructible) {
  const auto s = ProbeSpec::from_registry(shipped(), "stripe_test_secret_key", ProbeMode::Live, true);
  EXPECT_EQ(s.success_statuses, std::set<int>{200});
  EXPECT_EQ(s.endpoint_template, "https://api.stripe.com/v1/balance");
}

TEST(DryRun, NeverTouchesTheNetwork) {
  const int before = netguard::total();
  ManualClock clock;
  for (const auto& [id, spec] : shipped().specs()) {
    Prober p(ProbeSpec::from_registry(shipped(), id, ProbeMode::DryRun), shipped(), nullptr, clock, 30'000);
    const std::string secret = generate_example_secret(spec, 1);
    const auto r = p.probe(candidate(id, secret));
    EXPECT_EQ(r.outcome, ProbeOutcome::NotAttempted);
    EXPECT_FALSE(r.status_code.has_value());
    EXPECT_EQ(r.note.find(secret), std::string::npos) << r.note;
    EXPECT_EQ(to_json(r).dump().find(secret), std::string::npos);
  }
  EXPECT_EQ(netguard::total(), before);
  EXPECT_EQ(clock.now_ms(), 0);
}

TEST(DryRun, PreviewShowsMaskedRequest) {
  ManualClock clock;
  Prober p(ProbeSpec::from_registry(shipped(), "stripe_test_secret_key", ProbeMode::DryRun), shipped(), nullptr,
           clock, 0);
  const auto r = p.probe(candidate("stripe_test_secret_key", kGoodKey));
  EXPECT_NE(r.note.find("GET https://api.stripe.com/v1/balance"), std::string::npos);
  EXPECT_NE(r.note.find("Bearer sk_test_4eC39H**"), std::string::npos);
}

TEST(Stub, FixtureDecidesValidity) {
  StripeFixture fixture;
  const int before = netguard::total();
  ManualClock clock;
  auto transport = make_http_transport();
  Prober p(ProbeSpec::from_registry(shipped(), "stripe_test_secret_key", ProbeMode::Stub, false, fixture.origin()),
           shipped(), transport.get(), clock, 30'000);
  const auto good = p.probe(candidate("stripe_test_secret_key", kGoodKey));
  EXPECT_EQ(good.outcome, ProbeOutcome::Valid);
  EXPECT_EQ(good.status_code, 200);
  const auto bad = p.probe(candidate("stripe_test_secret_key", "sk_test_000000000000000000000000"));
  EXPECT_EQ(bad.outcome, ProbeOutcome::Invalid);
  EXPECT_EQ(bad.status_code, 401);
  EXPECT_EQ(to_json(bad).dump(), R"({"candidate_id":"c1:b:1:0","outcome":"Invalid","status":401})");
  EXPECT_GE(clock.now_ms(), 30'000);       // serialized through the rate limiter
  EXPECT_GT(netguard::total(), before);    // the harness does see real connections
}

TEST(Probe, Preconditions) {
  ManualClock clock;
  Prober p(ProbeSpec::from_registry(shipped(), "stripe_test_secret_key", ProbeMode::DryRun), shipped(), nullptr,
           clock, 0);
  auto c = candidate("stripe_test_secret_key", kGoodKey);
  c.plausible = false;
  EXPECT_EQ(code_of([&] { p.probe(c); }), Errc::NotPlausible);
  EXPECT_EQ(code_of([&] { p.probe(candidate("aws_access_key_id", "AKIAZ7Q3N5X2L8R4T6W9")); }), Errc::Precondition);
  EXPECT_EQ(code_of([] { ProbeSpec::from_registry(shipped(), "aws_access_key_id", ProbeMode::Stub, false, "http://x"); }),
            Errc::ConfigError);
}

TEST(Probe, BasicAuthRendering) {
  const auto s = ProbeSpec::from_registry(shipped(), "midtrans_sandbox_server_key", ProbeMode::DryRun);
  const auto req = render_probe_request(s, "SB-Mid-server-abc");
  ASSERT_FALSE(req.headers.empty());
  EXPECT_EQ(req.headers[0].first, "Authorization");
  EXPECT_EQ(req.headers[0].second, "Basic " + base64_encode("SB-Mid-server-abc:"));
}

}  // namespace
}  // namespace credmem
