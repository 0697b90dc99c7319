/*
 * Copyright (c) 2026, The receptive-entropy authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "receptive/dimensional.hpp"
#include "receptive/error.hpp"
#include "receptive/topological.hpp"

#include <cmath>
#include <random>

using namespace receptive;

namespace {

const double kLog2 = std::log(2.0);

const CoordinatePartition kOrigin(sites_1d({0}));

}  // namespace

TEST_CASE("order of a cylinder set") {
  const auto g = standard_system(1, 10);
  auto r = order_of_set(full_shift(2), g, kOrigin, interval_sites(0, 5), 10);
  CHECK(r.order == 5);
  CHECK_FALSE(r.saturated);
  CHECK_FALSE(r.unbounded);

  r = order_of_set(full_shift(2), g, kOrigin, interval_sites(1, 5), 10);
  CHECK(r.order == 0);

  r = order_of_set(full_shift(2), g, kOrigin, interval_sites(0, 20), 8);
  CHECK(r.order == 8);
  CHECK(r.saturated);

  r = order_of_set(trivial_system(2, 1), g, kOrigin, interval_sites(0, 0), 10);
  CHECK(r.unbounded);
  CHECK(r.saturated);

  // diagonal k = 2: the generators move the origin to (n, n)
  const auto d = diagonal_system(2, 2);
  const auto g2 = standard_system(2, 10);
  CHECK(order_of_set(d, g2, kOrigin, interval_sites(0, 7), 10).order == 3);
}

TEST_CASE("order grows with the window") {
  std::mt19937_64 rng(59);
  const auto g = standard_system(2, 12);
  for (int trial = 0; trial < 50; ++trial) {
    const SymbolicSystem sys(2, 1, {{static_cast<int>(rng() % 3)}, {static_cast<int>(rng() % 3)}});
    const int m = static_cast<int>(rng() % 15);
    const auto a = order_of_set(sys, g, kOrigin, interval_sites(0, m), 12);
    const auto b = order_of_set(sys, g, kOrigin, interval_sites(0, m + 1), 12);
    CHECK(a.order <= b.order);
  }
}

TEST_CASE("cover weights") {
  CHECK(cover_weight({{0}, {}}, 3.0) == 1.0);
  CHECK(cover_weight({{1, 1}, {}}, std::log(8.0 / 3)) == doctest::Approx(0.75));
  CHECK(cover_weight({{4, 2, 7, 1, 3}, {}}, 0.0) == 5.0);
  CHECK(cover_weight({{2, 5}, {false, true}}, 0.5) == doctest::Approx(std::exp(-1.0)));
  CHECK(cover_weight({{2, 5}, {false, true}}, 0.0) == 2.0);
  CHECK_THROWS_AS(cover_weight({{1}, {}}, -0.1), DomainError);

  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    CoverCandidate c;
    for (int i = 0; i < 6; ++i) c.orders.push_back(1 + static_cast<int>(rng() % 9));
    const double l1 = static_cast<double>(rng() % 1000) / 500;
    const double l2 = l1 + 0.01 + static_cast<double>(rng() % 1000) / 500;
    CHECK(cover_weight(c, l2) < cover_weight(c, l1));
    CoverCandidate flat{std::vector<int>(4, 0), {}};
    CHECK(cover_weight(flat, l1) == cover_weight(flat, l2));
  }
}

TEST_CASE("Pesin weights") {
  const auto g = standard_system(1, 40);
  const auto w = pesin_min_weight(full_shift(2), g, 1.0, 2, 0.3, 2);
  CHECK(w.weight == doctest::Approx(16 * std::exp(-2.0)));
  CHECK(w.depth == 2);
  CHECK(pesin_min_weight(full_shift(2), g, 0.0, 1, 0.3, 10).weight >= 2.0);
  for (double lambda : {0.0, 0.3, 0.7, 1.2}) {
    CHECK(pesin_min_weight(full_shift(2), g, lambda, 1, 0.15, 20).weight >=
          pesin_min_weight(full_shift(2), g, lambda, 1, 0.3, 20).weight);
  }
  CHECK_THROWS_AS(pesin_profile(full_shift(2), g, 5, 0.3, 4), DomainError);
  CHECK_THROWS_AS(pesin_profile(full_shift(2), g, 1, 0.3, 41), DomainError);
}

TEST_CASE("Bowen weights") {
  const auto g = standard_system(1, 40);
  const auto p = bowen_profile(full_shift(2), g, kOrigin, 1, 20);
  CHECK(p.entries.front().depth == 1);
  CHECK(p.entries.back().order == 20);
  CHECK(p.saturated);
  for (const auto& e : p.entries) CHECK(e.log_count == doctest::Approx((e.depth + 1) * kLog2));
  CHECK(bowen_min_weight(full_shift(2), g, kOrigin, 0.0, 1, 20).weight >= 2.0);
  CHECK_THROWS_AS(bowen_profile(full_shift(2), g, kOrigin, 1, 0), DomainError);
  CHECK_THROWS_AS(bowen_profile(full_shift(2), g, kOrigin, 1, 41), DomainError);
  CHECK_THROWS_AS(min_weight(WeightProfile{}, 1.0), DomainError);
}

TEST_CASE("critical exponent brackets") {
  auto r = critical_exponent([](double l) { return 3 * std::exp(-l); }, 1.0, 1e-9);
  CHECK(r.lambda == doctest::Approx(std::log(3.0)).epsilon(1e-8));
  CHECK(r.weight_lo >= 1.0);
  CHECK(r.weight_hi < 1.0);
  CHECK(r.hi - r.lo <= 1e-9);
  CHECK(r.monotone);

  r = critical_exponent([](double) { return 0.5; }, 1.0);
  CHECK(r.lambda == 0.0);
  CHECK(r.evaluations == 1);

  CHECK_THROWS_AS(critical_exponent([](double) { return 2.0; }, 1.0), DomainError);
  CHECK_THROWS_AS(critical_exponent([](double) { return 2.0; }, 1.0, 0.0), DomainError);
}

TEST_CASE("critical exponents on the 2-shift") {
  // min over depths of the count-to-order ratio
  const auto g = standard_system(1, 128);
  for (int cap : {8, 20, 64}) {
    const auto b = bowen_entropy(full_shift(2), g, kOrigin, 1, cap, 1e-9);
    CHECK(b.lambda == doctest::Approx((cap + 1) * kLog2 / cap).epsilon(1e-7));
    CHECK(b.saturated);
    CHECK_FALSE(b.upper_bound);
  }
  for (int horizon : {10, 40, 128}) {
    const auto c = pesin_entropy(full_shift(2), g, 1, 0.3, horizon, 1e-9);
    CHECK(c.lambda == doctest::Approx((horizon + 2) * kLog2 / horizon).epsilon(1e-7));
    const auto c2 = pesin_entropy(full_shift(2), g, 1, 0.15, horizon, 1e-9);
    CHECK(c2.lambda == doctest::Approx((horizon + 3) * kLog2 / horizon).epsilon(1e-7));
    CHECK(c2.lambda >= c.lambda);
  }
}

TEST_CASE("b, c and h") {
  DimensionalConfig cfg;
  auto r = b_c_h_comparison(full_shift(2), standard_system(1, 128), cfg);
  CHECK(std::fabs(r.b.lambda - kLog2) <= cfg.tol);
  CHECK(std::fabs(r.c.lambda - kLog2) <= cfg.tol);
  CHECK(r.h == doctest::Approx(kLog2).epsilon(1e-9));
  CHECK(r.b_below_h);
  CHECK(r.gap_bc <= cfg.tol);

  r = b_c_h_comparison(trivial_system(2, 1), standard_system(1, 128), cfg);
  CHECK(r.b.lambda == 0.0);
  CHECK(r.c.lambda == 0.0);
  CHECK(r.h == 0.0);

  r = b_c_h_comparison(diagonal_system(2, 2), standard_system(2, 128), cfg);
  CHECK(std::fabs(r.b.lambda - 2 * kLog2) <= cfg.tol);
  CHECK(std::fabs(r.c.lambda - 2 * kLog2) <= cfg.tol);
  CHECK(r.b_below_h);
}
