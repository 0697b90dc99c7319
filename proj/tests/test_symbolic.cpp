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

#include "receptive/error.hpp"
#include "receptive/symbolic.hpp"

#include <climits>
#include <cmath>
#include <random>

using namespace receptive;

namespace {

SymbolicSystem random_system(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> alpha(2, 3), dim(1, 2), gens(1, 3), step(0, 2);
  const int d = dim(rng);
  const int k = gens(rng);
  std::vector<std::vector<int>> disp;
  for (int i = 0; i < k; ++i) {
    std::vector<int> v;
    for (int j = 0; j < d; ++j) v.push_back(step(rng));
    disp.push_back(v);
  }
  return SymbolicSystem(alpha(rng), d, disp);
}

SiteSet random_sites(const SymbolicSystem& sys, std::mt19937_64& rng, int count) {
  std::uniform_int_distribution<int> c(0, 3);
  SiteSet s;
  for (int i = 0; i < count; ++i) {
    std::vector<int> p(static_cast<std::size_t>(sys.layer(0).dim));
    for (auto& x : p) x = c(rng);
    s.emplace_back(0, p);
  }
  return normalized(s);
}

// full-shift metric read off two words on the same sites
double direct_distance(const SiteSet& sites, const Word& x, const Word& y) {
  int m = INT_MAX;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (x[i] != y[i]) m = std::min(m, sites[i].norm());
  }
  return m == INT_MAX ? 0.0 : std::ldexp(1.0, -m);
}

}  // namespace

TEST_CASE("pullback examples") {
  const auto diag = diagonal_system(2, 2);
  CHECK(pullback(CoordinatePartition(sites_1d({0})), LatticeElement{2, 1}, diag).coords == sites_1d({3}));
  CHECK(pullback(CoordinatePartition(sites_1d({0, 4})), LatticeElement{0, 0}, diag).coords ==
        sites_1d({0, 4}));
  const auto field = shift_field(2, 2);
  const SiteSet origin{Site(0, {0, 0})};
  CHECK(pullback(CoordinatePartition(origin), LatticeElement{1, 0}, field).coords ==
        SiteSet{Site(0, {1, 0})});
}

TEST_CASE("pullback invariants") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> step(0, 3), count(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto sys = random_system(rng);
    const CoordinatePartition a(random_sites(sys, rng, count(rng)));
    LatticeElement g = LatticeElement::zero(sys.generators());
    LatticeElement h = g;
    for (auto& x : g.coords) x = step(rng);
    for (auto& x : h.coords) x = step(rng);
    const auto ag = pullback(a, g, sys);
    CHECK(ag.coords.size() == a.coords.size());
    CHECK(pullback(ag, h, sys).coords == pullback(a, g + h, sys).coords);
  }
}

TEST_CASE("join_over examples") {
  const auto a = CoordinatePartition(sites_1d({0}));
  CHECK(join_over(a, standard_system(2, 3), 3, diagonal_system(2, 2)).coords ==
        interval_sites(0, 6));
  const auto triv = trivial_system(2, 2);
  for (int n = 0; n <= 4; ++n) {
    CHECK(join_over(CoordinatePartition(sites_1d({0, 2})), standard_system(2, 4), n, triv).coords ==
          sites_1d({0, 2}));
  }
  SiteSet square;
  for (int i = 0; i <= 2; ++i) {
    for (int j = 0; j <= 2; ++j) square.emplace_back(0, std::vector<int>{i, j});
  }
  CHECK(join_over(CoordinatePartition(SiteSet{Site(0, {0, 0})}), standard_system(2, 2), 2,
                  shift_field(2, 2)).coords == normalized(square));
}

TEST_CASE("join_over invariants") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> count(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const auto sys = random_system(rng);
    const CoordinatePartition a(random_sites(sys, rng, count(rng)));
    const auto gamma = standard_system(sys.generators(), 4);
    for (int n = 0; n <= 4; ++n) {
      const auto an = join_over(a, gamma, n, sys).coords;
      if (n > 0) CHECK(is_subset(join_over(a, gamma, n - 1, sys).coords, an));
      CHECK(an.size() <= a.coords.size() * gamma.size(n));
      // equality iff the translates are pairwise disjoint
      std::size_t total = 0;
      SiteSet all;
      for (const auto& g : gamma.set(n)) {
        const auto t = translate(a.coords, sys, g);
        total += t.size();
        all = site_union(all, t);
      }
      CHECK(total == a.coords.size() * gamma.size(n));
      CHECK((an.size() == total) == (all.size() == total));
    }
  }
}

TEST_CASE("cylinder measure examples") {
  const auto half = MeasureOracle::bernoulli(std::vector<double>{0.5, 0.5});
  CHECK(cylinder_measure(half, sites_1d({0, 1, 2}), {1, 0, 1}) == 0.125);
  const auto quarter = MeasureOracle::bernoulli(std::vector<double>{0.25, 0.75});
  CHECK(cylinder_measure(quarter, sites_1d({0, 5}), {0, 1}) == doctest::Approx(3.0 / 16).epsilon(1e-15));
  const auto exact = MeasureOracle::bernoulli(std::vector<Rational>{Rational(1, 4), Rational(3, 4)});
  CHECK(cylinder_measure_exact(exact, sites_1d({0, 5}), {0, 1}) == Rational(3, 16));
  const auto chain = MeasureOracle::markov({{0.5, 0.5}, {0.5, 0.5}}, {0.5, 0.5});
  CHECK(cylinder_measure(chain, sites_1d({0, 1}), {0, 0}) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("cylinder measures sum to one") {
  const auto sys3 = full_shift(3);
  const auto exact = MeasureOracle::bernoulli(
      std::vector<Rational>{Rational(1, 6), Rational(1, 3), Rational(1, 2)});
  const auto s = sites_1d({0, 2, 3, 7});
  Rational total = 0;
  for_each_word(sys3, s, 1 << 20, [&](const Word& w) { total += cylinder_measure_exact(exact, s, w); });
  CHECK(total == 1);

  const auto chain = MeasureOracle::markov({{0.9, 0.1}, {0.4, 0.6}}, {0.8, 0.2});
  const auto t = sites_1d({0, 1, 4, 5, 9});
  double sum = 0.0;
  for_each_word(full_shift(2), t, 1 << 20, [&](const Word& w) { sum += cylinder_measure(chain, t, w); });
  CHECK(std::fabs(sum - 1.0) <= 1e-12);
}

TEST_CASE("Markov marginals use powers of the transition matrix") {
  const auto chain = MeasureOracle::markov({{0.9, 0.1}, {0.4, 0.6}}, {0.8, 0.2});
  // mu([0 at 0, 1 at 3]) = pi_0 (P^3)_01, P^3 computed by hand
  const double p2_00 = 0.9 * 0.9 + 0.1 * 0.4, p2_01 = 0.9 * 0.1 + 0.1 * 0.6;
  const double p2_10 = 0.4 * 0.9 + 0.6 * 0.4, p2_11 = 0.4 * 0.1 + 0.6 * 0.6;
  (void)p2_10;
  (void)p2_11;
  const double p3_01 = p2_00 * 0.1 + p2_01 * 0.6;
  CHECK(cylinder_measure(chain, sites_1d({0, 3}), {0, 1}) == doctest::Approx(0.8 * p3_01).epsilon(1e-14));
  CHECK(std::isinf(log_cylinder_measure(MeasureOracle::markov({{1.0, 0.0}, {0.0, 1.0}}, {0.5, 0.5}),
                                        sites_1d({0, 1}), {0, 1})));
}

TEST_CASE("measure validation") {
  CHECK_THROWS_AS(MeasureOracle::bernoulli(std::vector<double>{0.5, 0.6}), ConfigError);
  CHECK_THROWS_AS(MeasureOracle::bernoulli(std::vector<double>{-0.5, 1.5}), ConfigError);
  CHECK_THROWS_AS(MeasureOracle::bernoulli(std::vector<Rational>{Rational(1, 3), Rational(1, 3)}),
                  ConfigError);
  CHECK_THROWS_AS(MeasureOracle::markov({{0.9, 0.1}, {0.4, 0.6}}, {0.5, 0.5}), ConfigError);
  try {
    MeasureOracle::from_json(nlohmann::json::parse(R"({"kind":"bernoulli","p":[0.5,0.6]})"));
    FAIL("no error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("measure.p") != std::string::npos);
  }
  const auto m = MeasureOracle::markov({{0.9, 0.1}, {0.4, 0.6}}, {0.8, 0.2});
  CHECK_THROWS(m.check_compatible(shift_field(2, 2)));
  CHECK_THROWS(MeasureOracle::bernoulli(std::vector<double>{0.5, 0.5}).check_compatible(full_shift(3)));
}

TEST_CASE("system validation") {
  CHECK_THROWS_AS(SymbolicSystem(0, 1, {{1}}), ConfigError);
  CHECK_THROWS_AS(SymbolicSystem(2, 1, {{-1}}), ConfigError);
  CHECK_THROWS_AS(SymbolicSystem(2, 1, {}), ConfigError);
  CHECK_THROWS_AS(SymbolicSystem(2, 2, {{1}}), ConfigError);
  CHECK_THROWS_AS(SymbolicSystem::from_json(nlohmann::json::parse(R"({"kind":"nope"})")), ConfigError);
}

TEST_CASE("json round trips") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const auto sys = random_system(rng);
    CHECK(SymbolicSystem::from_json(sys.to_json()) == sys);
    CHECK(SymbolicSystem::from_json(sys.to_json()).hash() == sys.hash());
  }
  const auto m = MeasureOracle::bernoulli(std::vector<Rational>{Rational(1, 4), Rational(3, 4)});
  const auto back = MeasureOracle::from_json(m.to_json());
  CHECK(back.exact());
  CHECK(*back.exact_probabilities(0) == *m.exact_probabilities(0));
  CHECK(full_shift(2).hash() != full_shift(3).hash());
  CHECK(full_shift(2).hash().size() == 16);
}

TEST_CASE("product systems") {
  const auto half = MeasureOracle::bernoulli(std::vector<double>{0.5, 0.5});
  const auto prod = product_system(full_shift(2), full_shift(2), half, half);
  CHECK(prod.system.generators() == 2);
  CHECK(prod.system.layer_count() == 2);
  CHECK(pair_alphabet_vector(prod.measure, 0, 1) == std::vector<double>{0.25, 0.25, 0.25, 0.25});
  // generator i moves factor i only
  CHECK(prod.system.translation(LatticeElement{3, 1}, 0) == std::vector<int>{3});
  CHECK(prod.system.translation(LatticeElement{3, 1}, 1) == std::vector<int>{1});

  const auto point = MeasureOracle::bernoulli(std::vector<double>{1.0});
  const auto with_trivial = product_system(full_shift(2), trivial_system(1, 1), half, point);
  CHECK(with_trivial.system.layer(1).alphabet == 1);
  CHECK(with_trivial.measure.probabilities(1) == std::vector<double>{1.0});
}

TEST_CASE("truncations") {
  const auto fa = truncate(full_shift(2), 3);
  CHECK(fa.size() == 16);
  // patterns differing only at coordinate 2
  std::size_t i = 0, j = 0;
  for (std::size_t a = 0; a < fa.size(); ++a) {
    if (fa.word(a) == Word{0, 0, 0, 0}) i = a;
    if (fa.word(a) == Word{0, 0, 1, 0}) j = a;
  }
  CHECK(fa.distance(i, j) == 0.25);
  CHECK_THROWS_AS(truncate(shift_field(2, 2), 4), BudgetError);
  try {
    truncate(shift_field(2, 2), 4);
  } catch (const BudgetError& e) {
    CHECK(e.requested() == (std::uint64_t{1} << 25));
    CHECK(e.budget() == (std::uint64_t{1} << 20));
  }
}

TEST_CASE("induced metric equals the full-shift metric") {
  for (const auto& sys : {full_shift(2), full_shift(3), shift_field(2, 2)}) {
    const auto fa = truncate(sys, sys.layer(0).dim == 1 ? 5 : 2);
    for (std::size_t a = 0; a < fa.size(); a += 7) {
      for (std::size_t b = 0; b < fa.size(); b += 5) {
        CHECK(fa.distance(a, b) == direct_distance(fa.sites(), fa.word(a), fa.word(b)));
      }
    }
  }
}

TEST_CASE("induced maps and visibility") {
  const auto fa = truncate(full_shift(2), 6);
  CHECK(fa.visible_radius(LatticeElement{0}) == INT_MAX);
  CHECK(fa.visible_radius(LatticeElement{2}) == 5);
  const auto map = fa.shift_map(LatticeElement{2});
  CHECK(map.source[0] == 2);
  CHECK(map.source[4] == 6);
  CHECK(map.source[5] == -1);
}

TEST_CASE("sampling") {
  const auto s = interval_sites(0, 30);
  const auto zero = sample_point(MeasureOracle::bernoulli(std::vector<double>{1.0, 0.0}), s, 4);
  CHECK(zero == Word(s.size(), 0));

  const auto quarter = MeasureOracle::bernoulli(std::vector<double>{0.25, 0.75});
  const auto draws = sample_points(quarter, sites_1d({0}), 10000, 99);
  double ones = 0;
  for (const auto& w : draws) ones += w[0];
  CHECK(std::fabs(ones / 10000 - 0.75) <= 0.02);

  CHECK(sample_point(quarter, s, 123) == sample_point(quarter, s, 123));
  CHECK(sample_points(quarter, s, 5, 8) == sample_points(quarter, s, 5, 8));

  const auto chain = MeasureOracle::markov({{0.9, 0.1}, {0.4, 0.6}}, {0.8, 0.2});
  const auto long_draw = sample_points(chain, interval_sites(0, 1), 20000, 5);
  double same = 0;
  for (const auto& w : long_draw) same += (w[0] == w[1]) ? 1 : 0;
  // P(x0 = x1) = 0.8 * 0.9 + 0.2 * 0.6
  CHECK(std::fabs(same / 20000 - 0.84) <= 0.015);
}

TEST_CASE("relabeling moves the mass with the symbols") {
  const auto m = MeasureOracle::bernoulli(std::vector<double>{0.2, 0.3, 0.5});
  const auto p = m.permuted(0, {1, 2, 0});
  CHECK(p.probabilities(0) == std::vector<double>{0.5, 0.2, 0.3});
  const auto chain = MeasureOracle::markov({{0.9, 0.1}, {0.4, 0.6}}, {0.8, 0.2});
  const auto sw = chain.permuted(0, {1, 0});
  CHECK(cylinder_measure(sw, sites_1d({0, 2}), {1, 0}) == cylinder_measure(chain, sites_1d({0, 2}), {0, 1}));
}
