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

#include "receptive/local_entropy.hpp"

#include "receptive/error.hpp"
#include "receptive/metric_entropy.hpp"
#include "receptive/numeric.hpp"
#include "receptive/topological.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace receptive {

namespace {

std::vector<std::size_t> positions(const SiteSet& sites, const SiteSet& w,
                                   int n, double eps) {
  std::vector<std::size_t> out;
  out.reserve(w.size());
  int need = 0;
  bool missing = false;
  for (const auto& s : w) {
    auto it = std::lower_bound(sites.begin(), sites.end(), s);
    need = std::max(need, s.norm());
    if (it == sites.end() || *it != s) {
      missing = true;
      continue;
    }
    out.push_back(static_cast<std::size_t>(it - sites.begin()));
  }
  if (missing) {
    throw WindowError("point too short for W(" + std::to_string(n) + ", " +
                          std::to_string(eps) + ")",
                      need);
  }
  return out;
}

double neg_log_on(const MeasureOracle& mu, const SiteSet& w,
                  const std::vector<std::size_t>& index, const Word& x) {
  Word sub(index.size());
  for (std::size_t i = 0; i < index.size(); ++i) sub[i] = x[index[i]];
  return -log_cylinder_measure(mu, w, sub);
}

// windows[e][n] and their positions in `sites`
struct Windows {
  std::vector<std::vector<SiteSet>> sets;
  std::vector<std::vector<std::vector<std::size_t>>> index;
};

Windows build_windows(const SymbolicSystem& sys, const RegularSystem& gamma,
                      const SiteSet& sites, int n_max,
                      const std::vector<double>& eps_grid) {
  Windows w;
  for (double eps : eps_grid) {
    std::vector<SiteSet> sets;
    std::vector<std::vector<std::size_t>> index;
    for (int n = 0; n <= n_max; ++n) {
      sets.push_back(ball_window(sys, gamma, n, eps));
      index.push_back(positions(sites, sets.back(), n, eps));
    }
    w.sets.push_back(std::move(sets));
    w.index.push_back(std::move(index));
  }
  return w;
}

LocalEntropyRecord record_with(const MeasureOracle& mu, const Windows& w,
                               const SiteSet& sites, const Word& x, int n_max,
                               const std::vector<double>& eps_grid,
                               double tail_fraction) {
  if (x.size() != sites.size()) throw DomainError("point does not match its sites");
  LocalEntropyRecord r;
  r.sites = sites;
  r.point = x;
  r.n_max = n_max;
  r.epsilons = eps_grid;
  r.tail_window = std::max(1, static_cast<int>(std::ceil(tail_fraction * n_max)));
  for (std::size_t e = 0; e < eps_grid.size(); ++e) {
    std::vector<double> b;
    std::vector<double> v;
    for (int n = 0; n <= n_max; ++n) {
      b.push_back(neg_log_on(mu, w.sets[e][static_cast<std::size_t>(n)],
                             w.index[e][static_cast<std::size_t>(n)], x));
      if (n > 0) v.push_back(b.back() / n);
    }
    double lo = 0.0;
    double hi = 0.0;
    for (int n = n_max - r.tail_window + 1; n <= n_max; ++n) {
      const double c = (b[static_cast<std::size_t>(n)] - b[0]) / n;
      if (n == n_max - r.tail_window + 1) {
        lo = hi = c;
      } else {
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
    }
    r.neg_log.push_back(std::move(b));
    r.values.push_back(std::move(v));
    r.liminf.push_back(lo);
    r.limsup.push_back(hi);
  }
  const auto smallest = static_cast<std::size_t>(
      std::min_element(eps_grid.begin(), eps_grid.end()) - eps_grid.begin());
  r.lower = r.liminf[smallest];
  r.upper = r.limsup[smallest];
  return r;
}

void check_grid(const std::vector<double>& eps_grid, int n_max) {
  if (eps_grid.empty()) throw ConfigError("epsilon_grid", "at least one epsilon required");
  for (double e : eps_grid) dyadic_radius(e);
  if (n_max < 1) throw ConfigError("n_max", "n_max must be >= 1");
}

}  // namespace

double neg_log_ball_measure(const MeasureOracle& mu, const SymbolicSystem& sys,
                            const RegularSystem& gamma, const SiteSet& sites,
                            const Word& x, int n, double eps) {
  if (x.size() != sites.size()) throw DomainError("point does not match its sites");
  const auto w = ball_window(sys, gamma, n, eps);
  return neg_log_on(mu, w, positions(sites, w, n, eps), x);
}

double ball_measure(const MeasureOracle& mu, const SymbolicSystem& sys,
                    const RegularSystem& gamma, const SiteSet& sites,
                    const Word& x, int n, double eps) {
  if (x.size() != sites.size()) throw DomainError("point does not match its sites");
  const auto w = ball_window(sys, gamma, n, eps);
  const auto index = positions(sites, w, n, eps);
  Word sub(index.size());
  for (std::size_t i = 0; i < index.size(); ++i) sub[i] = x[index[i]];
  return cylinder_measure(mu, w, sub);
}

SiteSet local_window(const SymbolicSystem& sys, const RegularSystem& gamma,
                     int n_max, const std::vector<double>& eps_grid) {
  check_grid(eps_grid, n_max);
  SiteSet out;
  for (double eps : eps_grid) {
    for (int n = 0; n <= n_max; ++n) out = site_union(out, ball_window(sys, gamma, n, eps));
  }
  return out;
}

LocalEntropyRecord local_entropy_record(const MeasureOracle& mu,
                                        const SymbolicSystem& sys,
                                        const RegularSystem& gamma,
                                        const SiteSet& sites, const Word& x,
                                        int n_max,
                                        const std::vector<double>& eps_grid,
                                        double tail_fraction) {
  check_grid(eps_grid, n_max);
  mu.check_compatible(sys);
  const auto w = build_windows(sys, gamma, sites, n_max, eps_grid);
  return record_with(mu, w, sites, x, n_max, eps_grid, tail_fraction);
}

MeasureSummary integrate_local_entropy(const MeasureOracle& mu,
                                       const SymbolicSystem& sys,
                                       const RegularSystem& gamma,
                                       std::size_t sample_size, int n_max,
                                       const std::vector<double>& eps_grid,
                                       std::uint64_t seed, double quantile,
                                       double tail_fraction) {
  if (sample_size < 1) throw ConfigError("sample_size", "at least one point required");
  if (!(quantile > 0.0 && quantile <= 1.0)) throw ConfigError("quantile", "must lie in (0, 1]");
  mu.check_compatible(sys);
  const auto sites = local_window(sys, gamma, n_max, eps_grid);
  const auto points = sample_points(mu, sites, sample_size, seed);
  const auto w = build_windows(sys, gamma, sites, n_max, eps_grid);
  MeasureSummary s;
  s.seed = seed;
  s.n_max = n_max;
  s.epsilons = eps_grid;
  s.quantile = quantile;
  for (const auto& x : points) {
    s.records.push_back(record_with(mu, w, sites, x, n_max, eps_grid, tail_fraction));
    s.lower_values.push_back(s.records.back().lower);
  }
  const double count = static_cast<double>(sample_size);
  s.integral = order_free_sum(s.lower_values) / count;
  std::vector<double> dev;
  for (double v : s.lower_values) dev.push_back((v - s.integral) * (v - s.integral));
  s.standard_error = sample_size > 1
                         ? std::sqrt(order_free_sum(dev) / (count - 1) / count)
                         : 0.0;
  s.ess_sup = essential_sup_estimate(s);
  s.quantile_value = essential_sup_estimate(s, quantile);
  return s;
}

double essential_sup_estimate(const MeasureSummary& s, std::optional<double> quantile) {
  if (s.lower_values.empty()) throw DomainError("empty sample");
  auto v = s.lower_values;
  std::sort(v.begin(), v.end());
  if (!quantile) return v.back();
  const auto rank = static_cast<std::size_t>(std::ceil(*quantile * static_cast<double>(v.size())));
  return v[std::clamp<std::size_t>(rank, 1, v.size()) - 1];
}

LocalInequalityReport inequality_suite_local(const SymbolicSystem& sys,
                                             const MeasureOracle& mu,
                                             const RegularSystem& gamma,
                                             const LocalSuiteConfig& cfg) {
  LocalInequalityReport r;
  r.summary = integrate_local_entropy(mu, sys, gamma, cfg.sample_size, cfg.n_max,
                                      cfg.eps_grid, cfg.seed);
  r.local_integral = r.summary.integral;
  r.ess_sup = r.summary.ess_sup;
  const CoordinatePartition a(ball_sites(sys, 0));
  const auto metric = receptive_metric_sequence(sys, mu, a, gamma, cfg.n_max);
  r.h_mu_headline = metric.headline;
  r.h_mu_estimate = metric.estimate();
  const auto& d = cfg.dimensional;
  r.c = pesin_entropy(sys, gamma, d.n_scale, d.epsilon, d.pesin_depth, d.bisection_tol).lambda;
  r.h_top = separated_entropy_sequence(sys, gamma, d.epsilon, d.h_n_max).estimate();
  r.local_below_h_mu = r.local_integral <= r.h_mu_headline + cfg.tol;
  r.ess_below_c = r.ess_sup <= r.c + cfg.tol;
  r.c_below_h = r.c + cfg.tol <= r.h_top + 2 * cfg.tol;
  return r;
}

void write_points_csv(std::ostream& out, const MeasureSummary& s, double scale) {
  out << "# seed=" << s.seed << '\n' << "point_id,n,epsilon,value\n";
  const auto old = out.precision(17);
  for (std::size_t i = 0; i < s.records.size(); ++i) {
    const auto& r = s.records[i];
    for (std::size_t e = 0; e < r.epsilons.size(); ++e) {
      for (int n = 1; n <= r.n_max; ++n) {
        out << i << ',' << n << ',' << r.epsilons[e] << ','
            << r.values[e][static_cast<std::size_t>(n - 1)] * scale << '\n';
      }
    }
  }
  out.precision(old);
}

void write_summary_csv(std::ostream& out, const MeasureSummary& s, double scale) {
  out << "# seed=" << s.seed << '\n'
      << "integral,standard_error,ess_sup,quantile,quantile_value\n";
  const auto old = out.precision(17);
  out << s.integral * scale << ',' << s.standard_error * scale << ','
      << s.ess_sup * scale << ',' << s.quantile << ',' << s.quantile_value * scale << '\n';
  out.precision(old);
}

}  // namespace receptive
