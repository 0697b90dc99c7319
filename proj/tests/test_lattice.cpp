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
#include "receptive/lattice.hpp"

#include <random>

using namespace receptive;

namespace {

LatticeSet interval(int lo, int hi, int step = 1) {
  LatticeSet s;
  for (int m = lo; m <= hi; m += step) s.push_back(LatticeElement{m});
  return s;
}

LatticeSet box(const std::vector<std::vector<int>>& axes) {
  LatticeSet s{LatticeElement{}};
  for (const auto& axis : axes) {
    LatticeSet next;
    for (const auto& g : s) {
      for (int v : axis) {
        auto h = g;
        h.coords.push_back(v);
        next.push_back(h);
      }
    }
    s = next;
  }
  return normalized(s);
}

RegularSystem random_system(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 5), k(1, 3), n(1, 5), p(1, 3);
  switch (kind(rng)) {
    case 0: return standard_system(k(rng), n(rng));
    case 1: return even_system(n(rng));
    case 2: {
      const int q = p(rng);
      return scaled_system(standard_system(k(rng), q * n(rng)), q);
    }
    case 3: {
      const int kk = k(rng);
      std::vector<int> mod;
      for (int i = 0; i < kk; ++i) mod.push_back(p(rng));
      return restricted_system(standard_system(kk, n(rng)), mod);
    }
    case 4: return dilated_system(standard_system(k(rng), n(rng)), p(rng));
    default: return product_system(standard_system(k(rng), 4), even_system(4));
  }
}

}  // namespace

TEST_CASE("standard system examples") {
  CHECK(standard_system(1, 2).set(2) == interval(0, 2));
  CHECK(standard_system(2, 1).set(1) == box({{0, 1}, {0, 1}}));
  CHECK(standard_system(1, 5).size(5) == 6);
  CHECK(standard_system(3, 2).set(0) == LatticeSet{LatticeElement::zero(3)});
}

TEST_CASE("standard system cardinality (n+1)^k") {
  for (int k = 1; k <= 3; ++k) {
    const auto g = standard_system(k, 6);
    for (int n = 0; n <= 6; ++n) {
      std::size_t expected = 1;
      for (int i = 0; i < k; ++i) expected *= static_cast<std::size_t>(n + 1);
      CHECK(g.size(n) == expected);
    }
  }
}

TEST_CASE("even system") {
  const auto g = even_system(6);
  CHECK(g.set(3) == interval(0, 6, 2));
  LatticeSet sum;
  for (const auto& a : g.set(1)) {
    for (const auto& b : g.set(2)) sum.push_back(a + b);
  }
  CHECK(normalized(sum) == interval(0, 6, 2));
  CHECK(is_subset(normalized(sum), g.set(3)));
}

TEST_CASE("regularity verdicts") {
  CHECK(verify_regular(standard_system(2, 6)).regular);
  CHECK(verify_regular(even_system(6)).regular);

  std::vector<LatticeSet> sets;
  for (int n = 0; n <= 4; ++n) sets.push_back(interval(0, 1 << n));
  const auto rep = verify_regular(RegularSystem::custom(1, sets));
  CHECK_FALSE(rep.regular);
  REQUIRE(rep.i.has_value());
  CHECK(*rep.i == 1);
  CHECK(*rep.j == 0);
  CHECK(*rep.g == LatticeElement{3});

  const auto missing = verify_regular(RegularSystem::custom(1, {interval(1, 1), interval(1, 2)}));
  CHECK_FALSE(missing.regular);
  CHECK(missing.missing_identity);
}

TEST_CASE("folner defects") {
  CHECK(folner_defect(standard_system(1, 9), LatticeElement{1}, 9) == Rational(2, 10));
  CHECK(folner_defect(standard_system(2, 9), LatticeElement{1, 0}, 9) == Rational(1, 5));
  const auto even = even_system(8);
  for (int n = 0; n <= 8; ++n) CHECK(folner_defect(even, LatticeElement{1}, n) == 2);
  CHECK_FALSE(folner_profile(even, LatticeElement{1}).folner_compatible);

  // unit generators of [0,n]^k: |N_n sym.diff (e_i + N_n)| = 2 (n+1)^(k-1)
  for (int k = 1; k <= 3; ++k) {
    const auto g = standard_system(k, 7);
    for (int i = 0; i < k; ++i) {
      auto e = LatticeElement::zero(k);
      e.coords[static_cast<std::size_t>(i)] = 1;
      const auto prof = folner_profile(g, e);
      CHECK(prof.folner_compatible);
      for (int n = 0; n <= 7; ++n) {
        CHECK(prof.defects[static_cast<std::size_t>(n)] == Rational(2, n + 1));
        if (n > 0) CHECK(prof.defects[static_cast<std::size_t>(n)] < prof.defects[static_cast<std::size_t>(n - 1)]);
      }
    }
  }
}

TEST_CASE("scaled systems") {
  CHECK(scaled_system(standard_system(1, 4), 2).set(2) == interval(0, 4));
  const auto g = standard_system(2, 5);
  CHECK(scaled_system(g, 1) == g);
  CHECK(scaled_system(even_system(6), 3).set(1) == interval(0, 6, 2));
  CHECK_THROWS_AS(scaled_system(standard_system(1, 4), 2, 3), DomainError);

  // composing scalings multiplies the factors
  const auto base = standard_system(2, 12);
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      const auto twice = scaled_system(scaled_system(base, p), q);
      const auto once = scaled_system(base, p * q);
      const int top = std::min(twice.n_max(), once.n_max());
      for (int n = 0; n <= top; ++n) CHECK(twice.set(n) == once.set(n));
    }
  }
}

TEST_CASE("restricted systems") {
  CHECK(restricted_system(standard_system(1, 4), {2}).set(4) == interval(0, 4, 2));
  CHECK(restricted_system(standard_system(2, 5), {2, 3}).set(5) == box({{0, 2, 4}, {0, 3}}));
  const auto g = standard_system(2, 4);
  const auto same = restricted_system(g, {1, 1});
  for (int n = 0; n <= 4; ++n) CHECK(same.set(n) == g.set(n));
  CHECK_THROWS(restricted_system(g, {2}));
}

TEST_CASE("dilated and product systems") {
  CHECK(dilated_system(standard_system(1, 3), 2).set(3) == interval(0, 6, 2));
  const auto prod = product_system(standard_system(1, 3), even_system(3));
  CHECK(prod.k() == 2);
  CHECK(prod.set(1) == box({{0, 1}, {0, 2}}));
}

TEST_CASE("nestedness of standard and even systems") {
  for (const auto& g : {standard_system(2, 6), even_system(6), standard_system(1, 9)}) {
    CHECK(g.nested());
    for (int m = 0; m <= g.n_max(); ++m) {
      for (int n = m; n <= g.n_max(); ++n) CHECK(is_subset(g.set(m), g.set(n)));
    }
  }
}

TEST_CASE("every constructed system is regular (random parameters)") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_system(rng);
    const auto rep = verify_regular(g);
    INFO("system " << g.to_json().dump());
    CHECK(rep.regular);
  }
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_system(rng);
    CHECK(RegularSystem::from_json(g.to_json()) == g);
  }
}
