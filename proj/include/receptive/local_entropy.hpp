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

#pragma once

// Measures of dynamic balls, pointwise local entropies, their integral and
// essential supremum over a sample.

#include "receptive/dimensional.hpp"
#include "receptive/lattice.hpp"
#include "receptive/symbolic.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace receptive {

/// -log mu(D_n(x, eps)) for x given on `sites`. Throws WindowError when
/// W(n, eps) is not inside `sites`.
double neg_log_ball_measure(const MeasureOracle& mu, const SymbolicSystem& sys,
                            const RegularSystem& gamma, const SiteSet& sites,
                            const Word& x, int n, double eps);
/// mu(D_n(x, eps)), the cylinder measure of x restricted to W(n, eps).
double ball_measure(const MeasureOracle& mu, const SymbolicSystem& sys,
                    const RegularSystem& gamma, const SiteSet& sites,
                    const Word& x, int n, double eps);

/// Union of W(n, eps) over n <= n_max and the grid: the sites a sampled
/// point must carry.
SiteSet local_window(const SymbolicSystem& sys, const RegularSystem& gamma,
                     int n_max, const std::vector<double>& eps_grid);

struct LocalEntropyRecord {
  SiteSet sites;
  Word point;
  int n_max = 0;
  std::vector<double> epsilons;  // as given
  /// b[e][n] = -log mu(D_n(x, eps_e)), n = 0..n_max
  std::vector<std::vector<double>> neg_log;
  /// value[e][n-1] = b[e][n] / n, n = 1..n_max
  std::vector<std::vector<double>> values;
  /// Trailing-window min and max of (b[e][n] - b[e][0]) / n.
  std::vector<double> liminf;
  std::vector<double> limsup;
  int tail_window = 0;
  double lower = 0.0;  // liminf at the smallest eps
  double upper = 0.0;  // limsup at the smallest eps
};

LocalEntropyRecord local_entropy_record(const MeasureOracle& mu,
                                        const SymbolicSystem& sys,
                                        const RegularSystem& gamma,
                                        const SiteSet& sites, const Word& x,
                                        int n_max,
                                        const std::vector<double>& eps_grid,
                                        double tail_fraction = 0.25);

struct MeasureSummary {
  std::uint64_t seed = 0;
  int n_max = 0;
  std::vector<double> epsilons;
  std::vector<LocalEntropyRecord> records;
  std::vector<double> lower_values;  // one per point
  double integral = 0.0;
  double standard_error = 0.0;
  double ess_sup = 0.0;  // sample maximum
  double quantile = 0.95;
  double quantile_value = 0.0;
};

/// Monte Carlo mean of the lower local entropy over mu-i.i.d. points. All
/// words are drawn up front from one seeded stream.
MeasureSummary integrate_local_entropy(const MeasureOracle& mu,
                                       const SymbolicSystem& sys,
                                       const RegularSystem& gamma,
                                       std::size_t sample_size, int n_max,
                                       const std::vector<double>& eps_grid,
                                       std::uint64_t seed, double quantile = 0.95,
                                       double tail_fraction = 0.25);

/// Sample maximum, or the empirical upper quantile (nearest rank) when
/// `quantile` is given. A lower estimate of the essential supremum.
double essential_sup_estimate(const MeasureSummary& s,
                              std::optional<double> quantile = std::nullopt);

struct LocalSuiteConfig {
  std::size_t sample_size = 200;
  int n_max = 200;
  std::vector<double> eps_grid{0.3, 0.15, 0.1};
  std::uint64_t seed = 1;
  double tol = 0.02;
  DimensionalConfig dimensional;
};

struct LocalInequalityReport {
  MeasureSummary summary;
  double local_integral = 0.0;
  double ess_sup = 0.0;
  double h_mu_headline = 0.0;
  double h_mu_estimate = 0.0;
  double c = 0.0;
  double h_top = 0.0;
  bool local_below_h_mu = false;  // integral <= h_mu headline + tol
  bool ess_below_c = false;       // ess_sup <= c + tol
  bool c_below_h = false;         // c + tol <= h_top + 2 tol
};

/// gamma must reach max(n_max, the Pesin depth, the count sequence length).
LocalInequalityReport inequality_suite_local(const SymbolicSystem& sys,
                                             const MeasureOracle& mu,
                                             const RegularSystem& gamma,
                                             const LocalSuiteConfig& cfg = {});

/// point_id, n, epsilon, value; the seed goes in a leading comment line.
void write_points_csv(std::ostream& out, const MeasureSummary& s, double scale = 1.0);
/// integral, standard_error, ess_sup, quantile, quantile_value.
void write_summary_csv(std::ostream& out, const MeasureSummary& s, double scale = 1.0);

}  // namespace receptive
