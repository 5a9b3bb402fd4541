/*
Copyright 2026 The RLA Simulator Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "helpers.hpp"
#include "rla/error.hpp"
#include "rla/policy.hpp"

using namespace rla;
using rla::test::link;

namespace {

// Independent 1-based rendering of the scan: z advances by one each pass and
// the loop stops on the first link below its threshold, else ends on the last.
std::size_t literal_scan(const std::vector<double>& B, const std::vector<double>& T) {
  const std::size_t n = B.size();
  std::vector<double> b(n + 1), t(n + 1);
  std::copy(B.begin(), B.end(), b.begin() + 1);
  std::copy(T.begin(), T.end(), t.begin() + 1);
  std::size_t z = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    z = z + 1;
    if (b[z] < t[z]) break;
  }
  return z - 1;
}

AggregationGroup with_buffers(AggregationGroup g, const std::vector<double>& buffers) {
  for (std::size_t i = 0; i < buffers.size(); ++i) g.set_buffer(i, buffers[i]);
  return g;
}

}  // namespace

TEST_CASE("policy names") {
  CHECK(parse_policy("olb") == PolicyId::OLB);
  CHECK(parse_policy("rr") == PolicyId::ROUND_ROBIN);
  CHECK(parse_policy("wfq") == PolicyId::WFQ);
  CHECK(parse_policy("vrrp") == PolicyId::VRRP);
  CHECK_THROWS_AS(parse_policy("bogus"), Error);
  CHECK_THROWS_AS(parse_policy("OLB"), Error);
  for (auto id : {PolicyId::OLB, PolicyId::ROUND_ROBIN, PolicyId::WFQ, PolicyId::VRRP}) {
    CHECK(parse_policy(to_string(id)) == id);
  }
  CHECK(parse_cost_direction("inverse") == CostDirection::Inverse);
  CHECK(parse_cost_direction("direct") == CostDirection::Direct);
  CHECK_THROWS_AS(parse_cost_direction("sideways"), Error);
}

TEST_CASE("olb_select") {
  const auto s1 = test::scenario1();
  CHECK(olb_select(s1) == 0);
  CHECK(olb_select(with_buffers(s1, {64, 0})) == 1);
  CHECK(olb_select(with_buffers(s1, {63.5, 0})) == 0);

  const auto s2 = test::scenario2();
  const std::vector<double> full{4, 16, 16};
  CHECK(literal_scan(full, {4, 16, 16}) == 2);
  CHECK(olb_select(with_buffers(s2, full)) == 2);
  CHECK(olb_select(with_buffers(s2, {4, 3, 0})) == 1);

  SUBCASE("failed links are skipped") {
    CHECK(olb_select(s1, {true, false}) == 1);
    CHECK(olb_select(with_buffers(s2, full), {false, false, true}) == 1);
    CHECK_THROWS_AS(olb_select(s1, {true, true}), Error);
  }
}

TEST_CASE("olb matches the literal scan and never skips a link with room") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    std::vector<Link> links;
    for (int i = 0; i < n; ++i) links.push_back(link("l" + std::to_string(i), 1 + rng() % 50, i + 1));
    auto g = validate_group("g", links);
    std::vector<double> B, T;
    for (int i = 0; i < n; ++i) {
      // Bias towards full buffers so the fallthrough path gets exercised.
      const double level = frac(rng) < 0.6 ? g[i].threshold : frac(rng) * g[i].threshold;
      g.set_buffer(i, level);
      B.push_back(level);
      T.push_back(g[i].threshold);
    }
    const auto chosen = olb_select(g);
    CHECK(chosen == literal_scan(B, T));
    for (std::size_t i = 0; i < chosen; ++i) CHECK(g[i].buffer >= g[i].threshold);
    CHECK(olb_select(g) == chosen);
  }
}

TEST_CASE("rr_select") {
  const auto s1 = test::scenario1();
  PolicyState st;
  std::vector<std::size_t> seq;
  for (int k = 0; k < 4; ++k) seq.push_back(rr_select(s1, st));
  CHECK(seq == std::vector<std::size_t>{0, 1, 0, 1});

  const auto s2 = test::scenario2();
  PolicyState st2;
  std::vector<int> counts(3, 0);
  for (int k = 0; k < 7; ++k) ++counts[rr_select(s2, st2)];
  CHECK(*std::max_element(counts.begin(), counts.end()) - *std::min_element(counts.begin(), counts.end()) == 1);
  CHECK(st2.rr_cursor < 3);

  const auto one = validate_group("one", {link("a", 10, 1)});
  PolicyState st3;
  for (int k = 0; k < 5; ++k) CHECK(rr_select(one, st3) == 0);

  PolicyState st4;
  for (int k = 0; k < 4; ++k) CHECK(rr_select(s2, st4, {false, true, false}) != 1);
}

TEST_CASE("rr exact fairness over whole cycles") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t k = 1 + rng() % 20;
    std::vector<Link> links;
    for (std::size_t i = 0; i < n; ++i) links.push_back(link("l" + std::to_string(i), 5, static_cast<int>(i + 1)));
    const auto g = validate_group("g", links);
    PolicyState st;
    std::vector<std::size_t> counts(n, 0);
    for (std::size_t q = 0; q < k * n; ++q) ++counts[rr_select(g, st)];
    for (auto c : counts) CHECK(c == k);
  }
}

TEST_CASE("wfq_weights") {
  auto w = wfq_weights(validate_group("g", {link("a", 1, 1, 1.0), link("b", 1, 2, 1.0)}));
  CHECK(w == std::vector<double>{0.5, 0.5});

  w = wfq_weights(validate_group("g", {link("a", 1, 1, 1.0), link("b", 1, 2, 3.0)}));
  CHECK(w[0] == doctest::Approx(0.75));
  CHECK(w[1] == doctest::Approx(0.25));

  // 1/2, 1/2, 1/4 sum to 5/4, so 0.4, 0.4, 0.2.
  w = wfq_weights(validate_group("g", {link("a", 1, 1, 2.0), link("b", 1, 2, 2.0), link("c", 1, 3, 4.0)}));
  CHECK(w[0] == doctest::Approx(0.4));
  CHECK(w[1] == doctest::Approx(0.4));
  CHECK(w[2] == doctest::Approx(0.2));

  w = wfq_weights(validate_group("g", {link("a", 1, 1, 1.0), link("b", 1, 2, 3.0)}), CostDirection::Direct);
  CHECK(w[0] == doctest::Approx(0.25));
  CHECK(w[1] == doctest::Approx(0.75));

  try {
    wfq_weights(validate_group("g", {link("a", 1, 1, 0.0), link("b", 1, 2, 3.0)}));
    FAIL("expected ZeroCost");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroCost);
  }
}

TEST_CASE("wfq_select") {
  const auto g2 = validate_group("g", {link("a", 1, 1), link("b", 1, 2)});
  PolicyState st;
  std::vector<int> c(2, 0);
  for (int q = 0; q < 10; ++q) ++c[wfq_select(g2, st, {0.5, 0.5})];
  CHECK(c == std::vector<int>{5, 5});

  PolicyState st2;
  std::vector<std::size_t> seq;
  for (int q = 0; q < 8; ++q) seq.push_back(wfq_select(g2, st2, {0.75, 0.25}));
  // Hand run: deficits (.75,.25)->a, (.5,.5) tie->a, (.25,.75)->b, (1,0)->a, then repeat.
  CHECK(seq == std::vector<std::size_t>{0, 0, 1, 0, 0, 0, 1, 0});

  const auto one = validate_group("one", {link("a", 1, 1)});
  PolicyState st3;
  for (int q = 0; q < 5; ++q) CHECK(wfq_select(one, st3, {1.0}) == 0);
}

TEST_CASE("wfq stays within one quantum of its share") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<Link> links;
    std::vector<double> w;
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      links.push_back(link("l" + std::to_string(i), 5, static_cast<int>(i + 1)));
      w.push_back(u(rng));
      s += w.back();
    }
    for (auto& x : w) x /= s;
    const auto g = validate_group("g", links);
    PolicyState st;
    std::vector<double> counts(n, 0);
    const int quanta = 1 + static_cast<int>(rng() % 500);
    for (int q = 1; q <= quanta; ++q) {
      ++counts[wfq_select(g, st, w)];
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(counts[i] - q * w[i]) <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("vrrp_select") {
  const auto s1 = test::scenario1();
  auto st = make_policy_state(s1, PolicyId::VRRP);
  CHECK(st.vrrp_master == "L64");
  for (int q = 0; q < 10; ++q) CHECK(vrrp_select(s1, st) == 0);
  CHECK(vrrp_select(s1, st, {true, false}) == 1);
  CHECK(st.vrrp_master == "L32");
  CHECK(vrrp_select(s1, st) == 0);  // preempts back once the master recovers

  const auto s2 = test::scenario2();
  auto st2 = make_policy_state(s2, PolicyId::VRRP);
  const auto master = vrrp_select(s2, st2);
  CHECK(s2[master].capacity == 16.0);
  CHECK(s2[master].id == "S16");
  for (int q = 0; q < 10; ++q) CHECK(vrrp_select(s2, st2) == master);

  try {
    vrrp_select(s1, st, {true, true});
    FAIL("expected AllLinksFailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AllLinksFailed);
  }
}

TEST_CASE("make_failed_mask") {
  const auto s2 = test::scenario2();
  CHECK(make_failed_mask(s2, {"T16"}) == FailedMask{false, false, true});
  CHECK_THROWS_AS(make_failed_mask(s2, {"nope"}), Error);
}
