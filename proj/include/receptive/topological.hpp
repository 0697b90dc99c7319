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

// Dynamic balls, separated and spanning counts, minimal subcovers and the
// count-based topological entropy sequences.

#include "receptive/clique.hpp"
#include "receptive/lattice.hpp"
#include "receptive/rational.hpp"
#include "receptive/sequence.hpp"
#include "receptive/set_cover.hpp"
#include "receptive/symbolic.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace receptive {

/// True when eps = 2^-t for some integer t >= 0.
bool is_dyadic(double eps);

/// t(eps) = max{t >= 0 : 2^-t > eps}. Rejects eps outside (0, 1) and dyadic
/// eps with DomainError.
int dyadic_radius(double eps);

/// Ball_t = {j : |j|_inf <= t} in every layer.
SiteSet ball_sites(const SymbolicSystem& sys, int t);

/// W(n, eps): union over g in N_n of delta(g) + Ball_t(eps). The dynamic
/// ball D_n(x, eps) is the cylinder fixing x on W.
SiteSet ball_window(const SymbolicSystem& sys, const RegularSystem& gamma,
                    int n, double eps);

/// Smallest window length L with W(n, eps) inside [0, L]^d.
int required_length(const SymbolicSystem& sys, const RegularSystem& gamma,
                    int n, double eps);

enum class CountMethod { closed_form, exact_bruteforce, greedy_bound };
enum class BoundDirection { none, lower, upper };

std::string to_string(CountMethod m);
std::string to_string(BoundDirection d);

struct CountRecord {
  int n = 0;
  double epsilon = 0.0;  // 0 for subcover counts
  std::string quantity;  // separated, spanning, subcover
  BigInt count = 0;
  double log_count = 0.0;
  CountMethod method = CountMethod::closed_form;
  BoundDirection direction = BoundDirection::none;

  bool exact() const noexcept { return method != CountMethod::greedy_bound; }
};

/// s_n(eps) = r^|W(n, eps)| on a full shift (product of alphabets over W).
CountRecord separated_max_closed_form(const SymbolicSystem& sys,
                                      const RegularSystem& gamma, int n,
                                      double eps);
/// r_n(eps) on a full shift: dynamic balls are disjoint cylinders on W.
CountRecord spanning_min_closed_form(const SymbolicSystem& sys,
                                     const RegularSystem& gamma, int n,
                                     double eps);

/// Edge {x, y} iff d(gx, gy) > eps for some g in N_n, evaluated with the
/// induced partial maps of the truncation. Throws WindowError when some
/// site of gx within distance t(eps) is not visible.
BitGraph separation_graph(const FiniteApproximation& fa,
                          const RegularSystem& gamma, int n, double eps);

/// Maximum (n, eps)-separated subset of the truncation's points.
CountRecord separated_max_bruteforce(const FiniteApproximation& fa,
                                     const RegularSystem& gamma, int n,
                                     double eps, const CliqueOptions& opts = {});
/// Minimum (n, eps)-spanning subset: a set cover of the points by the
/// dynamic balls around them.
CountRecord spanning_min(const FiniteApproximation& fa,
                         const RegularSystem& gamma, int n, double eps,
                         const CoverOptions& opts = {});

struct CountPair {
  CountRecord separated;
  CountRecord spanning;
};
/// Both counts from one separation graph.
CountPair bruteforce_counts(const FiniteApproximation& fa,
                            const RegularSystem& gamma, int n, double eps,
                            const CliqueOptions& clique = {},
                            const CoverOptions& cover = {});

/// A finite cover of the points 0..size-1 of a truncation.
struct FiniteCover {
  std::vector<std::vector<std::uint32_t>> elements;
};

/// The non-empty cells of the cylinder partition on `coords`, as a cover of
/// the truncation's points. Every site must lie in the window.
FiniteCover cylinder_cover(const FiniteApproximation& fa, const SiteSet& coords);
/// All non-empty intersections A cap B.
FiniteCover join_covers(const FiniteCover& a, const FiniteCover& b,
                        std::size_t universe);

/// N(C) for a cylinder cover of a full shift: r^|S|, every cell non-empty.
CountRecord minimal_subcover_count(const SymbolicSystem& sys,
                                   const CoordinatePartition& c);
/// N(C) on a truncation by exact set cover within budget.
CountRecord minimal_subcover(const FiniteCover& c, std::size_t universe,
                             const CoverOptions& opts = {});

/// min over points x of max over U in C of dist(x, complement of U); the
/// largest delta such that every delta-ball of the truncation lies in some
/// element. Returns 1 when some element is the whole space.
double lebesgue_number(const FiniteApproximation& fa, const FiniteCover& c);
/// 2^-M with M the largest sup-norm among the cover's coordinates.
double cylinder_lebesgue_number(const CoordinatePartition& c);

/// (1/n) log N(A^n_Gamma) from the closed form |coords| log r.
EntropySequence open_cover_entropy_sequence(const SymbolicSystem& sys,
                                            const CoordinatePartition& a,
                                            const RegularSystem& gamma,
                                            int n_max);
/// (1/n) log s_n(eps) from the closed form.
EntropySequence separated_entropy_sequence(const SymbolicSystem& sys,
                                           const RegularSystem& gamma,
                                           double eps, int n_max);

struct CountViolation {
  std::string family;  // a: r<=s, a: s<=r(eps/2), b, c
  int n = 0;
  double epsilon = 0.0;
  std::string detail;
};

struct CountSuiteResult {
  std::vector<CountRecord> records;
  std::vector<CountViolation> violations;
  std::vector<double> lebesgue;  // one per cover
  int checks = 0;
  int skipped = 0;  // inexact or out-of-window cells
};

/// r_n(eps) <= s_n(eps) <= r_n(eps/2); N(A^n) <= r_n(delta/2) for a
/// Lebesgue number delta of each cover (three quarters of the computed
/// value, which keeps delta/2 off the dyadics); s_n(eps) <= N(gamma^n) for
/// gamma the cylinders on Ball_t(eps).
CountSuiteResult count_inequality_suite(const FiniteApproximation& fa,
                                        const RegularSystem& gamma,
                                        const std::vector<CoordinatePartition>& covers,
                                        const std::vector<double>& eps_grid,
                                        int n_min, int n_max,
                                        const CliqueOptions& clique = {},
                                        const CoverOptions& cover = {});

/// Columns: n, epsilon, quantity, value, method, bound_direction.
void write_csv(std::ostream& out, const std::vector<CountRecord>& records,
               bool header = true);

}  // namespace receptive
