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

#include "receptive/corpus.hpp"
#include "receptive/dimensional.hpp"
#include "receptive/harness.hpp"
#include "receptive/local_entropy.hpp"
#include "receptive/metric_entropy.hpp"
#include "receptive/numeric.hpp"
#include "receptive/topological.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <utility>

namespace receptive {

namespace {

using Family = std::function<void(SuiteResult&, std::ostream&)>;

std::string cell(int n, double eps) {
  return "n=" + std::to_string(n) + " eps=" + nlohmann::json(eps).dump();
}

MeasureOracle coin(double p0) {
  return MeasureOracle::bernoulli(std::vector<double>{p0, 1.0 - p0});
}

bool same_samples(const EntropySequence& a, const EntropySequence& b) {
  if (a.samples.size() != b.samples.size()) return false;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    if (a.samples[i].raw != b.samples[i].raw ||
        a.samples[i].normalized != b.samples[i].normalized) {
      return false;
    }
  }
  return true;
}

void regularity(SuiteResult& r, std::ostream&) {
  const std::string f = "regularity";
  r.expect_true(f, "standard [0,n]^2 accepted", verify_regular(standard_system(2, 12)).regular,
                Origin::definitional);
  r.expect_true(f, "even system accepted", verify_regular(even_system(12)).regular,
                Origin::definitional);
  std::vector<LatticeSet> sets;
  for (int n = 0; n <= 6; ++n) {
    LatticeSet s;
    for (int m = 0; m <= (1 << n); ++m) s.push_back(LatticeElement{m});
    sets.push_back(std::move(s));
  }
  const auto rep = verify_regular(RegularSystem::custom(1, std::move(sets)));
  r.expect_true(f, "[0,2^n] rejected", !rep.regular, Origin::definitional);
  r.expect_true(f, "[0,2^n] witness (1,0,3)",
                rep.i == 1 && rep.j == 0 && rep.g == LatticeElement{3}, Origin::definitional);
}

void example_diagonal(SuiteResult& r, std::ostream& log) {
  const std::string f = "example_diagonal";
  const auto sys = diagonal_system(2, 2);
  const auto mu = MeasureOracle::bernoulli(std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  const auto a = CoordinatePartition(sites_1d({0}));
  const auto gamma = standard_system(2, 100);
  const auto seq = receptive_metric_sequence(sys, mu, a, gamma, 100);
  bool exact = true;
  bool coefficients = true;
  for (const auto& s : seq.samples) {
    exact = exact && s.raw == static_cast<double>(2 * s.n + 1) * std::log(2.0);
    const auto c = bernoulli_entropy_coefficients(mu, join_over(a, gamma, s.n, sys).coords);
    coefficients = coefficients && c[0][0] + c[0][1] == Rational(2 * s.n + 1);
  }
  r.expect_true(f, "raw H = (2n+1) log 2 for n <= 100", exact, Origin::published_closed_form);
  r.expect_true(f, "exact coefficients sum to 2n+1", coefficients, Origin::published_closed_form);
  r.expect_near(f, "headline at n=100 against 2 log 2", 2 * std::log(2.0), seq.headline,
                0.01 * 2 * std::log(2.0), Origin::published_closed_form);
  log << "example_diagonal: headline " << seq.headline << '\n';
}

void oracle_equivalence(SuiteResult& r, std::ostream&) {
  const std::string f = "oracle_equivalence";
  const auto sys = full_shift(2);
  const auto fa = truncate(sys, 10);
  const auto gamma = standard_system(1, 4);
  for (int n = 0; n <= 4; ++n) {
    for (double eps : {0.3, 0.15, 0.06}) {
      const auto brute = separated_max_bruteforce(fa, gamma, n, eps);
      const auto closed = separated_max_closed_form(sys, gamma, n, eps);
      r.expect_true(f, "separated brute force = closed form, " + cell(n, eps),
                    brute.exact() && brute.count == closed.count, Origin::independent_oracle);
    }
  }
}

void lemma_counts(SuiteResult& r, std::ostream& log) {
  const std::string f = "lemma_counts";
  for (const auto& e : count_corpus()) {
    const auto fa = truncate(e.system, e.length);
    const auto suite = count_inequality_suite(fa, e.gamma(e.n_max),
                                              {origin_partition(e.system, CoverRole::cover)},
                                              {0.3, 0.15}, 0, e.n_max);
    r.expect_near(f, e.name + " violations", 0.0, static_cast<double>(suite.violations.size()), 0.0,
                  Origin::published_closed_form);
    r.expect_true(f, e.name + " checks evaluated", suite.checks > 0, Origin::definitional);
    for (const auto& v : suite.violations) {
      log << "lemma_counts: " << e.name << ' ' << v.family << ' ' << cell(v.n, v.epsilon) << ": "
          << v.detail << '\n';
    }
    log << "lemma_counts: " << e.name << ' ' << suite.checks << " checks, " << suite.skipped
        << " skipped\n";
  }
}

void scaling_law(SuiteResult& r, std::ostream&) {
  const std::string f = "scaling_law";
  const auto sys = diagonal_system(2, 2);
  const auto mu = coin(0.25);
  const auto a = CoordinatePartition(sites_1d({0}));
  for (int p : {2, 3}) {
    const auto gamma = standard_system(2, p * 60 + 1);
    const auto rep = verify_scaling_law(sys, mu, a, gamma, p, 60);
    r.expect_true(f, "p=" + std::to_string(p) + " raw at n = raw at pn", rep.identity_holds,
                  Origin::published_closed_form);
    r.expect_near(f, "p=" + std::to_string(p) + " headline ratio", p, rep.headline_ratio, 0.01 * p,
                  Origin::published_closed_form);
    // Off-by-one join: N_{pn+1} in place of N_{pn} must be caught.
    EntropySequence mutated = rep.scaled;
    for (auto& s : mutated.samples) {
      s.raw = partition_entropy(mu, join_over(a, gamma, p * s.n + 1, sys));
    }
    r.expect_true(f, "p=" + std::to_string(p) + " off-by-one join detected",
                  !check_scaling_identity(mutated, rep.base, p), Origin::definitional);
  }
}

void open_cover(SuiteResult& r, std::ostream&) {
  const std::string f = "open_cover";
  const auto sys = full_shift(2);
  const auto a = CoordinatePartition(sites_1d({0}), CoverRole::cover);
  const auto gamma = standard_system(1, 50);
  const auto fa = truncate(sys, 10);
  for (int n = 0; n <= 6; ++n) {
    const auto an = join_over(a, gamma, n, sys);
    const auto exact = minimal_subcover(cylinder_cover(fa, an.coords), fa.size());
    r.expect_true(f, "N(A^n) = 2^(n+1), n=" + std::to_string(n),
                  exact.exact() && exact.count == BigInt(1) << (n + 1), Origin::independent_oracle);
  }
  const auto cover_seq = open_cover_entropy_sequence(sys, a, gamma, 50);
  const auto metric = receptive_metric_sequence(sys, coin(0.5), CoordinatePartition(sites_1d({0})),
                                                gamma, 50);
  r.expect_true(f, "open-cover sequence = uniform metric sequence", same_samples(cover_seq, metric),
                Origin::published_closed_form);
}

void dimensional(SuiteResult& r, std::ostream& log) {
  const std::string f = "dimensional";
  struct Case {
    std::string name;
    SymbolicSystem sys;
    int k;
    double expected;
  };
  const std::vector<Case> cases{{"full_2_shift", full_shift(2), 1, std::log(2.0)},
                                {"trivial", trivial_system(2, 1), 1, 0.0},
                                {"diagonal_k2", diagonal_system(2, 2), 2, 2 * std::log(2.0)}};
  DimensionalConfig cfg;
  for (const auto& c : cases) {
    const auto gamma = standard_system(c.k, std::max(cfg.pesin_depth, cfg.h_n_max));
    const auto rep = b_c_h_comparison(c.sys, gamma, cfg);
    r.expect_near(f, c.name + " Bowen exponent", c.expected, rep.b.lambda, cfg.tol,
                  Origin::published_closed_form);
    r.expect_near(f, c.name + " Pesin exponent", c.expected, rep.c.lambda, cfg.tol,
                  Origin::published_closed_form);
    r.expect_near(f, c.name + " |b - c|", 0.0, std::fabs(rep.b.lambda - rep.c.lambda), cfg.tol,
                  Origin::published_closed_form);
    log << "dimensional: " << c.name << " b " << rep.b.lambda << " c " << rep.c.lambda << " h "
        << rep.h << '\n';
  }
}

SymbolicSystem random_system(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> alpha(2, 3), dim(1, 2), gens(1, 2), step(0, 2);
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

MeasureOracle random_measure(const SymbolicSystem& sys, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> p(static_cast<std::size_t>(sys.layer(0).alphabet));
  double total = 0.0;
  for (auto& x : p) total += (x = u(rng));
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) acc += (p[i] /= total);
  p.back() = 1.0 - acc;
  return MeasureOracle::bernoulli(p);
}

double random_eps(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.02, 0.98);
  double e = u(rng);
  while (is_dyadic(e)) e = u(rng);
  return e;
}

void monotonicity(SuiteResult& r, std::ostream&) {
  const std::string f = "monotonicity";
  std::mt19937_64 rng(20261015);
  int weight_bad = 0, pesin_bad = 0, ball_bad = 0, window_bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> size(1, 12), order(0, 20);
    std::uniform_real_distribution<double> lam(0.0, 3.0);
    CoverCandidate c;
    const int m = size(rng);
    for (int i = 0; i < m; ++i) c.orders.push_back(order(rng));
    double l1 = lam(rng), l2 = lam(rng);
    if (l1 > l2) std::swap(l1, l2);
    if (cover_weight(c, l2) > cover_weight(c, l1)) ++weight_bad;

    const auto sys = random_system(rng);
    const auto gamma = standard_system(sys.generators(), 12);
    double e1 = random_eps(rng), e2 = random_eps(rng);
    if (e1 > e2) std::swap(e1, e2);
    std::uniform_int_distribution<int> scale(1, 6);
    int n1 = scale(rng), n2 = scale(rng);
    if (n1 > n2) std::swap(n1, n2);
    const double lambda = lam(rng);
    const double w_fine = pesin_min_weight(sys, gamma, lambda, n1, e1, 12).log_weight;
    const double w_coarse = pesin_min_weight(sys, gamma, lambda, n1, e2, 12).log_weight;
    const double w_late = pesin_min_weight(sys, gamma, lambda, n2, e1, 12).log_weight;
    if (w_fine < w_coarse || w_late < w_fine) ++pesin_bad;

    const auto mu = random_measure(sys, rng);
    const auto sites = local_window(sys, gamma, 6, {e1, e2});
    const auto x = sample_point(mu, sites, rng());
    std::uniform_int_distribution<int> nn(0, 5);
    const int n = nn(rng);
    const double b_n = ball_measure(mu, sys, gamma, sites, x, n, e1);
    if (ball_measure(mu, sys, gamma, sites, x, n + 1, e1) > b_n ||
        ball_measure(mu, sys, gamma, sites, x, n, e2) < b_n) {
      ++ball_bad;
    }
    const auto w = ball_window(sys, gamma, n, e1);
    if (!is_subset(w, ball_window(sys, gamma, n + 1, e1)) ||
        !is_subset(ball_window(sys, gamma, n, e2), w)) {
      ++window_bad;
    }
  }
  r.expect_near(f, "cover weight non-increasing in lambda, 100 cases", 0, weight_bad, 0,
                Origin::definitional);
  r.expect_near(f, "Pesin weight monotone in eps and N, 100 cases", 0, pesin_bad, 0,
                Origin::definitional);
  r.expect_near(f, "ball measure monotone in n and eps, 100 cases", 0, ball_bad, 0,
                Origin::definitional);
  r.expect_near(f, "W(n, eps) monotone, 100 cases", 0, window_bad, 0, Origin::definitional);
}

void local_entropy(SuiteResult& r, std::ostream& log) {
  const std::string f = "local_entropy";
  const auto sys = full_shift(2);
  const auto mu = coin(0.25);
  LocalSuiteConfig cfg;
  const auto gamma = standard_system(1, std::max({cfg.n_max, cfg.dimensional.pesin_depth,
                                                  cfg.dimensional.h_n_max}));
  const auto rep = inequality_suite_local(sys, mu, gamma, cfg);
  const double h = shannon_entropy(std::vector<double>{0.25, 0.75});
  r.expect_near(f, "integral against H(p)", h, rep.local_integral, 0.05 * h,
                Origin::independent_oracle);
  r.expect_at_most(f, "integral <= metric headline", rep.local_integral, rep.h_mu_headline, cfg.tol,
                   Origin::published_closed_form);
  r.expect_at_most(f, "ess sup <= c", rep.ess_sup, rep.c, cfg.tol, Origin::published_closed_form);
  r.expect_at_most(f, "c <= h", rep.c, rep.h_top, cfg.tol,
                   Origin::published_closed_form);
  log << "local_entropy: integral " << rep.local_integral << " se " << rep.summary.standard_error
      << " ess sup " << rep.ess_sup << '\n';
}

void trivial(SuiteResult& r, std::ostream&) {
  const std::string f = "trivial";
  const auto sys = trivial_system(2, 2);
  const auto mu = coin(0.25);
  const auto a = origin_partition(sys);
  const auto gamma = standard_system(2, 128);
  r.expect_near(f, "metric estimate", 0, receptive_metric_sequence(sys, mu, a, gamma, 40).estimate(),
                0, Origin::definitional);
  r.expect_near(f, "open-cover estimate", 0, open_cover_entropy_sequence(sys, a, gamma, 40).estimate(),
                0, Origin::definitional);
  r.expect_near(f, "separated estimate", 0, separated_entropy_sequence(sys, gamma, 0.3, 40).estimate(),
                0, Origin::definitional);
  r.expect_near(f, "Bowen exponent", 0, bowen_entropy(sys, gamma, a, 1, 64).lambda, 0,
                Origin::definitional);
  r.expect_near(f, "Pesin exponent", 0, pesin_entropy(sys, gamma, 1, 0.3, 128).lambda, 0,
                Origin::definitional);
  const auto s = integrate_local_entropy(mu, sys, gamma, 20, 40, {0.3, 0.15}, 7);
  r.expect_near(f, "local entropy integral", 0, s.integral, 0, Origin::definitional);
  r.expect_near(f, "local entropy ess sup", 0, s.ess_sup, 0, Origin::definitional);
}

void conjugacy(SuiteResult& r, std::ostream&) {
  const std::string f = "conjugacy";
  for (const auto& e : count_corpus()) {
    std::vector<std::vector<int>> perms;
    for (int l = 0; l < e.system.layer_count(); ++l) {
      std::vector<int> p(static_cast<std::size_t>(e.system.layer(l).alphabet));
      for (std::size_t a = 0; a < p.size(); ++a) p[a] = static_cast<int>((a + 1) % p.size());
      perms.push_back(p);
    }
    const auto nu = relabeled(e.measure, perms);
    const auto a = origin_partition(e.system);
    const auto gamma = e.gamma(30);
    r.expect_true(f, e.name + " metric sequence",
                  same_samples(receptive_metric_sequence(e.system, e.measure, a, gamma, 30),
                               receptive_metric_sequence(e.system, nu, a, gamma, 30)),
                  Origin::definitional);
    const auto fa = truncate(e.system, e.length);
    const auto fb = relabeled(fa, perms);
    bool counts = true;
    for (int n = 0; n <= std::min(e.n_max, 2); ++n) {
      const auto p = bruteforce_counts(fa, e.gamma(e.n_max), n, 0.3);
      const auto q = bruteforce_counts(fb, e.gamma(e.n_max), n, 0.3);
      counts = counts && p.separated.count == q.separated.count &&
               p.spanning.count == q.spanning.count;
    }
    r.expect_true(f, e.name + " brute-force counts", counts, Origin::definitional);
    const auto sites = local_window(e.system, gamma, 20, {0.3});
    const auto x = sample_point(e.measure, sites, 3);
    const auto y = relabeled(x, sites, perms);
    const auto lx = local_entropy_record(e.measure, e.system, gamma, sites, x, 20, {0.3});
    const auto ly = local_entropy_record(nu, e.system, gamma, sites, y, 20, {0.3});
    r.expect_true(f, e.name + " local entropy values", lx.values == ly.values,
                  Origin::definitional);
  }
  const auto chain = MeasureOracle::markov({{0.9, 0.1}, {0.4, 0.6}}, {0.8, 0.2});
  const auto swapped = chain.permuted(0, {1, 0});
  const auto sys = full_shift(2);
  const auto gamma = even_system(30);
  r.expect_true(f, "Markov metric sequence",
                same_samples(receptive_metric_sequence(sys, chain, CoordinatePartition(sites_1d({0, 1})), gamma, 30),
                             receptive_metric_sequence(sys, swapped, CoordinatePartition(sites_1d({0, 1})), gamma, 30)),
                Origin::definitional);
}

void classical_divergence(SuiteResult& r, std::ostream& log) {
  const std::string f = "classical_divergence";
  const auto sys = shift_field(2, 2);
  const auto mu = coin(0.5);
  const auto a = origin_partition(sys);
  const auto gamma = standard_system(2, 40);
  const auto rec = receptive_metric_sequence(sys, mu, a, gamma, 40, Normalization::receptive);
  const auto cls = receptive_metric_sequence(sys, mu, a, gamma, 40, Normalization::classical);
  double rel_err = 0.0;
  bool cls_ok = true;
  bool linear = true;
  for (int n = 1; n <= 40; ++n) {
    const double expected = static_cast<double>((n + 1) * (n + 1)) * std::log(2.0) / n;
    rel_err = std::max(rel_err, std::fabs(rec.at(n).normalized - expected) / expected);
    cls_ok = cls_ok && cls.at(n).normalized == std::log(2.0);
    linear = linear && rec.at(n).normalized >= n * std::log(2.0);
  }
  r.expect_near(f, "receptive value (n+1)^2 log 2 / n, relative error", 0.0, rel_err, 1e-14,
                Origin::published_closed_form);
  r.expect_true(f, "classical value log 2", cls_ok, Origin::published_closed_form);
  r.expect_true(f, "receptive value >= n log 2 for n <= 40", linear, Origin::definitional);
  r.expect_true(f, "raw value at 40 exceeds twice the raw value at 20",
                rec.at(40).raw > 2 * rec.at(20).raw, Origin::definitional);
  log << "classical_divergence: receptive " << rec.at(20).normalized << " -> "
      << rec.at(40).normalized << '\n';
}

const std::vector<std::pair<std::string, Family>>& families() {
  static const std::vector<std::pair<std::string, Family>> all{
      {"regularity", regularity},
      {"example_diagonal", example_diagonal},
      {"oracle_equivalence", oracle_equivalence},
      {"lemma_counts", lemma_counts},
      {"scaling_law", scaling_law},
      {"open_cover", open_cover},
      {"dimensional", dimensional},
      {"monotonicity", monotonicity},
      {"local_entropy", local_entropy},
      {"trivial", trivial},
      {"conjugacy", conjugacy},
      {"classical_divergence", classical_divergence},
  };
  return all;
}

}  // namespace

std::vector<std::string> reference_families() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : families()) out.push_back(name);
  return out;
}

SuiteResult run_reference_suite(const std::string& filter, std::ostream& log) {
  SuiteResult r;
  for (const auto& [name, fn] : families()) {
    if (!filter.empty() && name.find(filter) == std::string::npos) continue;
    fn(r, log);
  }
  return r;
}

}  // namespace receptive
