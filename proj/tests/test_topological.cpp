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

#include "receptive/corpus.hpp"
#include "receptive/error.hpp"
#include "receptive/metric_entropy.hpp"
#include "receptive/topological.hpp"

#include <cmath>
#include <random>
#include <sstream>

using namespace receptive;

namespace {

const double kLog2 = std::log(2.0);

BigInt pow_big(int base, std::size_t e) {
  BigInt out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

double random_eps(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.05, 0.95);
  double e = u(rng);
  while (is_dyadic(e)) e = u(rng);
  return e;
}

// largest subset with pairwise d(gx, gy) > eps for some g, by exhaustive search
std::size_t separated_oracle(const std::vector<std::vector<bool>>& sep) {
  const std::size_t n = sep.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    std::size_t size = 0;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      ++size;
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        if (mask >> j & 1u) ok = sep[i][j];
      }
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

std::size_t min_cover_oracle(std::size_t universe, const std::vector<std::vector<std::uint32_t>>& sets) {
  std::size_t best = sets.size() + 1;
  for (std::uint32_t mask = 1; mask < (1u << sets.size()); ++mask) {
    std::vector<bool> hit(universe, false);
    std::size_t count = 0;
    for (std::size_t s = 0; s < sets.size(); ++s) {
      if (!(mask >> s & 1u)) continue;
      ++count;
      for (auto x : sets[s]) hit[x] = true;
    }
    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) best = std::min(best, count);
  }
  return best;
}

}  // namespace

TEST_CASE("dyadic radius") {
  CHECK(dyadic_radius(0.3) == 1);
  CHECK(dyadic_radius(0.15) == 2);
  CHECK(dyadic_radius(0.1) == 3);
  CHECK(dyadic_radius(0.9) == 0);
  CHECK(dyadic_radius(0.06) == 4);
  CHECK(is_dyadic(0.25));
  CHECK_FALSE(is_dyadic(0.3));
  CHECK_THROWS_AS(dyadic_radius(0.25), DomainError);
  CHECK_THROWS_AS(dyadic_radius(0.0), DomainError);
  CHECK_THROWS_AS(dyadic_radius(1.0), DomainError);
}

TEST_CASE("ball window examples") {
  const auto g = standard_system(1, 5);
  CHECK(ball_window(full_shift(2), g, 2, 0.3) == interval_sites(0, 3));
  CHECK(ball_window(full_shift(2), g, 0, 0.3) == interval_sites(0, 1));
  for (int n = 0; n <= 5; ++n) CHECK(ball_window(trivial_system(2, 1), g, n, 0.3) == interval_sites(0, 1));
  CHECK(required_length(full_shift(2), g, 2, 0.3) == 3);
}

TEST_CASE("ball window monotone in n and eps") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> step(0, 2), k(1, 2), n(0, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const int kk = k(rng);
    std::vector<std::vector<int>> disp;
    for (int i = 0; i < kk; ++i) disp.push_back({step(rng), step(rng)});
    const SymbolicSystem sys(2, 2, disp);
    const auto g = standard_system(kk, 6);
    double e1 = random_eps(rng), e2 = random_eps(rng);
    if (e1 > e2) std::swap(e1, e2);
    const int m = n(rng);
    const auto w = ball_window(sys, g, m, e1);
    CHECK(is_subset(w, ball_window(sys, g, m + 1, e1)));
    CHECK(is_subset(ball_window(sys, g, m, e2), w));
    CHECK(separated_max_closed_form(sys, g, m + 1, e1).count >= separated_max_closed_form(sys, g, m, e1).count);
    CHECK(separated_max_closed_form(sys, g, m, e2).count <= separated_max_closed_form(sys, g, m, e1).count);
  }
}

TEST_CASE("closed-form counts") {
  const auto g = standard_system(1, 5);
  CHECK(separated_max_closed_form(full_shift(2), g, 2, 0.3).count == 16);
  CHECK(separated_max_closed_form(full_shift(2), g, 3, 0.9).count == 16);
  CHECK(separated_max_closed_form(full_shift(3), g, 2, 0.3).count == 81);
  const auto rec = spanning_min_closed_form(full_shift(2), g, 2, 0.3);
  CHECK(rec.count == 16);
  CHECK(rec.quantity == "spanning");
  CHECK(rec.log_count == doctest::Approx(4 * kLog2));
  CHECK(rec.exact());
}

TEST_CASE("brute force equals the closed form, r in {2, 3}") {
  for (int r : {2, 3}) {
    const auto sys = full_shift(r);
    const auto fa = truncate(sys, r == 2 ? 8 : 5);
    const auto g = standard_system(1, 4);
    for (int n = 0; n <= (r == 2 ? 4 : 2); ++n) {
      for (double eps : {0.3, 0.15}) {
        if (required_length(sys, g, n, eps) > fa.length()) continue;
        const auto pair = bruteforce_counts(fa, g, n, eps);
        const auto closed = separated_max_closed_form(sys, g, n, eps);
        CHECK(pair.separated.method == CountMethod::exact_bruteforce);
        CHECK(pair.separated.count == closed.count);
        CHECK(pair.spanning.count == closed.count);
        CHECK(pair.spanning.count <= pair.separated.count);
        CHECK(separated_max_bruteforce(fa, g, n, eps).count == closed.count);
        CHECK(spanning_min(fa, g, n, eps).count == closed.count);
      }
    }
  }
}

TEST_CASE("brute force against exhaustive search on sampled points") {
  std::mt19937_64 rng(43);
  const auto sys = diagonal_system(2, 2);
  const auto g = standard_system(2, 3);
  const auto window = window_sites(sys, 9);
  const auto mu = MeasureOracle::bernoulli(std::vector<double>{0.3, 0.7});
  for (int trial = 0; trial < 20; ++trial) {
    const FiniteApproximation fa(sys, 9, sample_points(mu, window, 14, rng()));
    const int n = static_cast<int>(rng() % 3);
    const double eps = rng() % 2 ? 0.3 : 0.15;
    std::vector<std::vector<bool>> sep(fa.size(), std::vector<bool>(fa.size(), false));
    const auto w = ball_window(sys, g, n, eps);
    for (std::size_t i = 0; i < fa.size(); ++i) {
      for (std::size_t j = 0; j < fa.size(); ++j) {
        // separated iff the words differ somewhere on W(n, eps)
        for (const auto& s : w) {
          const int at = fa.index_of(s);
          if (fa.word(i)[static_cast<std::size_t>(at)] != fa.word(j)[static_cast<std::size_t>(at)]) {
            sep[i][j] = true;
            break;
          }
        }
      }
    }
    const auto pair = bruteforce_counts(fa, g, n, eps);
    CHECK(pair.separated.count == separated_oracle(sep));
    // dynamic balls are cylinders on W: a minimal spanning set has one point per class
    std::vector<std::vector<std::uint32_t>> balls(fa.size());
    for (std::size_t i = 0; i < fa.size(); ++i) {
      for (std::size_t j = 0; j < fa.size(); ++j) {
        if (!sep[i][j]) balls[i].push_back(static_cast<std::uint32_t>(j));
      }
    }
    CHECK(pair.spanning.count == min_cover_oracle(fa.size(), balls));
  }
}

TEST_CASE("degenerate spaces") {
  // points differing only at coordinates >= 1 under the trivial action
  std::vector<Word> pts;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) pts.push_back({0, a, b, 1});
  }
  const FiniteApproximation fa(trivial_system(2, 1), 3, pts);
  const auto g = standard_system(1, 3);
  CHECK(separated_max_bruteforce(fa, g, 3, 0.9).count == 1);
  CHECK(spanning_min(fa, g, 3, 0.9).count == 1);

  const FiniteApproximation single(full_shift(2), 3, {Word{1, 0, 1, 1}});
  CHECK(spanning_min(single, g, 0, 0.3).count == 1);
  CHECK(separated_max_bruteforce(single, g, 0, 0.3).count == 1);

  // n = 0 is plain eps-separation
  const auto fa6 = truncate(full_shift(2), 6);
  std::vector<std::vector<bool>> sep(16, std::vector<bool>(16));
  for (std::size_t i = 0; i < 16; ++i) {
    for (std::size_t j = 0; j < 16; ++j) sep[i][j] = fa6.distance(i * 4, j * 4) > 0.15;
  }
  std::vector<Word> sub;
  for (std::size_t i = 0; i < 16; ++i) sub.push_back(fa6.word(i * 4));
  const FiniteApproximation fsub(full_shift(2), 6, sub);
  CHECK(separated_max_bruteforce(fsub, g, 0, 0.15).count == separated_oracle(sep));
}

TEST_CASE("window errors") {
  const auto fa = truncate(full_shift(2), 4);
  const auto g = standard_system(1, 6);
  CHECK_THROWS_AS(separation_graph(fa, g, 4, 0.3), WindowError);
  try {
    separation_graph(fa, g, 4, 0.3);
  } catch (const WindowError& e) {
    CHECK(e.required_length() == 5);
  }
  CHECK_THROWS_AS(cylinder_cover(fa, interval_sites(0, 5)), WindowError);
}

TEST_CASE("subcover counts") {
  const auto sys = full_shift(2);
  const auto a = CoordinatePartition(sites_1d({0}), CoverRole::cover);
  const auto an = join_over(a, standard_system(1, 6), 6, sys);
  CHECK(minimal_subcover_count(sys, an).count == 128);
  const auto fa = truncate(sys, 8);
  const auto exact = minimal_subcover(cylinder_cover(fa, an.coords), fa.size());
  CHECK(exact.count == 128);
  CHECK(exact.exact());

  auto cover = cylinder_cover(fa, sites_1d({0, 1}));
  const auto base = minimal_subcover(cover, fa.size()).count;
  cover.elements.push_back(cover.elements[1]);
  CHECK(minimal_subcover(cover, fa.size()).count == base);
}

TEST_CASE("N(A join B) <= N(A) N(B) on random covers") {
  std::mt19937_64 rng(47);
  const std::size_t universe = 9;
  auto random_cover = [&] {
    FiniteCover c;
    std::uniform_int_distribution<int> count(2, 5);
    const int m = count(rng);
    std::vector<bool> hit(universe, false);
    for (int i = 0; i < m; ++i) {
      std::vector<std::uint32_t> e;
      for (std::uint32_t x = 0; x < universe; ++x) {
        if (rng() % 3 == 0) {
          e.push_back(x);
          hit[x] = true;
        }
      }
      if (!e.empty()) c.elements.push_back(e);
    }
    for (std::uint32_t x = 0; x < universe; ++x) {
      if (!hit[x]) c.elements.push_back({x});
    }
    return c;
  };
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_cover();
    const auto b = random_cover();
    const auto j = join_covers(a, b, universe);
    const auto na = minimal_subcover(a, universe).count;
    const auto nb = minimal_subcover(b, universe).count;
    const auto nj = minimal_subcover(j, universe).count;
    CHECK(nj <= na * nb);
    CHECK(na == min_cover_oracle(universe, a.elements));
    if (j.elements.size() <= 16) CHECK(nj == min_cover_oracle(universe, j.elements));
  }
}

TEST_CASE("Lebesgue numbers of cylinder covers") {
  const auto fa = truncate(full_shift(2), 6);
  for (int m = 0; m <= 4; ++m) {
    const auto c = CoordinatePartition(interval_sites(0, m), CoverRole::cover);
    CHECK(lebesgue_number(fa, cylinder_cover(fa, c.coords)) == cylinder_lebesgue_number(c));
    CHECK(cylinder_lebesgue_number(c) == std::ldexp(1.0, -m));
  }
  FiniteCover whole;
  whole.elements.push_back({});
  for (std::uint32_t i = 0; i < fa.size(); ++i) whole.elements[0].push_back(i);
  CHECK(lebesgue_number(fa, whole) == 1.0);
}

TEST_CASE("open-cover sequences") {
  const auto a = CoordinatePartition(sites_1d({0}), CoverRole::cover);
  const auto seq = open_cover_entropy_sequence(diagonal_system(2, 2), a, standard_system(2, 50), 50);
  for (int n = 1; n <= 50; ++n) {
    CHECK(seq.at(n).normalized == doctest::Approx((2 * n + 1) * kLog2 / n).epsilon(1e-15));
  }
  CHECK(seq.quantity == "open_cover");
  CHECK(open_cover_entropy_sequence(trivial_system(2, 1), a, standard_system(1, 20), 20).estimate() == 0.0);

  const auto uniform = MeasureOracle::bernoulli(std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3});
  const auto s3 = open_cover_entropy_sequence(full_shift(3), a, standard_system(1, 20), 20);
  const auto m3 = receptive_metric_sequence(full_shift(3), uniform, CoordinatePartition(sites_1d({0})),
                                            standard_system(1, 20), 20);
  for (int n = 1; n <= 20; ++n) {
    CHECK(s3.at(n).raw == m3.at(n).raw);
    CHECK(s3.at(n).normalized == m3.at(n).normalized);
  }
}

TEST_CASE("separated counts equal cover counts of the Ball_t cylinders") {
  for (const auto& e : count_corpus()) {
    const auto g = e.gamma(6);
    for (double eps : {0.3, 0.15, 0.06}) {
      const auto gamma_cover = CoordinatePartition(ball_sites(e.system, dyadic_radius(eps)), CoverRole::cover);
      for (int n = 0; n <= 6; ++n) {
        CHECK(separated_max_closed_form(e.system, g, n, eps).count ==
              minimal_subcover_count(e.system, join_over(gamma_cover, g, n, e.system)).count);
      }
    }
  }
  const auto seq = separated_entropy_sequence(full_shift(2), standard_system(1, 40), 0.3, 40);
  CHECK(seq.at(10).raw == doctest::Approx(12 * kLog2));
  CHECK(seq.slope == doctest::Approx(kLog2).epsilon(1e-12));
}

TEST_CASE("count inequality suite") {
  const auto fa = truncate(full_shift(2), 10);
  const auto rep = count_inequality_suite(fa, standard_system(1, 4),
                                          {CoordinatePartition(sites_1d({0}), CoverRole::cover),
                                           CoordinatePartition(sites_1d({0, 1}), CoverRole::cover)},
                                          {0.3, 0.15, 0.06}, 0, 4);
  CHECK(rep.violations.empty());
  CHECK(rep.checks > 0);
  CHECK(rep.lebesgue == std::vector<double>{1.0, 0.5});

  std::ostringstream out;
  write_csv(out, rep.records);
  CHECK(out.str().rfind("n,epsilon,quantity,value,method,bound_direction\n", 0) == 0);
}

TEST_CASE("greedy bounds respect their direction") {
  std::mt19937_64 rng(53);
  const auto sys = full_shift(2);
  const auto g = standard_system(1, 3);
  const auto window = window_sites(sys, 7);
  const auto mu = MeasureOracle::bernoulli(std::vector<double>{0.5, 0.5});
  for (int trial = 0; trial < 20; ++trial) {
    const FiniteApproximation fa(sys, 7, sample_points(mu, window, 40, rng()));
    const auto graph = separation_graph(fa, g, 2, 0.3);
    const auto exact = max_clique(graph);
    REQUIRE(exact.exact);
    CHECK(greedy_clique(graph).clique.size() <= exact.clique.size());
    const auto bounded = separated_max_bruteforce(fa, g, 2, 0.3, CliqueOptions{4096, 1});
    if (!bounded.exact()) {
      CHECK(bounded.direction == BoundDirection::lower);
      CHECK(bounded.count <= exact.clique.size());
    }
    const auto ex_cover = spanning_min(fa, g, 2, 0.3);
    const auto greedy_cover = spanning_min(fa, g, 2, 0.3, CoverOptions{1});
    if (!greedy_cover.exact()) {
      CHECK(greedy_cover.direction == BoundDirection::upper);
      CHECK(greedy_cover.count >= ex_cover.count);
    }
  }
}
