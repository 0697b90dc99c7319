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

// Bowen-style and Pesin-style dimensional entropies: orders of cylinder
// sets, cover weights, minimal weights at a fixed scale and the critical
// exponent where the minimal weight crosses 1.

#include "receptive/lattice.hpp"
#include "receptive/symbolic.hpp"

#include <functional>
#include <string>
#include <vector>

namespace receptive {

struct OrderResult {
  int order = 0;
  bool saturated = false;  // the cap was reached
  bool unbounded = false;  // every N_n translate fits: the order is infinite
};

/// n_A(E) for a cylinder E on `window`: the largest n <= n_cap with
/// S + delta(g) inside the window for all g in N_n, 0 when S itself is not
/// inside.
OrderResult order_of_set(const SymbolicSystem& sys, const RegularSystem& gamma,
                         const CoordinatePartition& a, const SiteSet& window,
                         int n_cap);

/// A finite cover given by the orders of its elements.
struct CoverCandidate {
  std::vector<int> orders;
  std::vector<bool> unbounded;  // empty, or one flag per element
};

/// sum_E e^(-lambda n(E)); unbounded orders contribute 0 for lambda > 0.
double cover_weight(const CoverCandidate& c, double lambda);

/// Uniform covers indexed by scale: entry i covers the space with
/// exp(log_count) cylinders of order `order`.
struct ProfileEntry {
  int depth = 0;  // window depth (Bowen) or n (Pesin)
  double log_count = 0.0;
  int order = 0;
  bool unbounded = false;
};

struct WeightProfile {
  std::vector<ProfileEntry> entries;
  bool saturated = false;
  bool upper_bound = false;  // uniform covers only, not a full search
};

struct WeightResult {
  double weight = 0.0;
  double log_weight = 0.0;
  int depth = -1;
  bool saturated = false;
  bool upper_bound = false;
};

/// Least weight over the profile's covers at exponent lambda.
WeightResult min_weight(const WeightProfile& p, double lambda);

/// Window-cylinder covers with depths D in [0, horizon] and order >= n_scale.
/// The recursion f(D) = min(weight of depth D, r^(new sites) f(D+1)) over
/// refinements of a cylinder reduces on full shifts to the uniform depths
/// listed here. horizon < 0 picks the least depth whose order reaches n_cap.
WeightProfile bowen_profile(const SymbolicSystem& sys, const RegularSystem& gamma,
                            const CoordinatePartition& a, int n_scale, int n_cap,
                            int horizon = -1);
WeightResult bowen_min_weight(const SymbolicSystem& sys, const RegularSystem& gamma,
                              const CoordinatePartition& a, double lambda,
                              int n_scale, int n_cap, int horizon = -1);

/// Covers by dynamic balls D_n(x, eps), n in [n_scale, horizon].
WeightProfile pesin_profile(const SymbolicSystem& sys, const RegularSystem& gamma,
                            int n_scale, double eps, int horizon);
WeightResult pesin_min_weight(const SymbolicSystem& sys, const RegularSystem& gamma,
                              double lambda, int n_scale, double eps, int horizon);

struct CriticalExponentResult {
  double lambda = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  double weight_lo = 0.0;  // at lo, >= 1 unless lambda = 0 from the start
  double weight_hi = 0.0;  // at hi, < 1
  double tol = 0.0;
  int evaluations = 0;
  bool saturated = false;
  bool upper_bound = false;
  bool monotone = true;  // weights non-increasing at every evaluated point
  std::string scale;
};

/// Bisection against weight = 1 on [0, hi], doubling hi from hi_start until
/// the weight drops below 1. Returns exactly 0 when no positive exponent
/// keeps the weight at or above 1.
CriticalExponentResult critical_exponent(const std::function<double(double)>& weight_at,
                                         double hi_start, double tol = 1e-6);
CriticalExponentResult critical_exponent(const WeightProfile& profile,
                                         double tol = 1e-6);

CriticalExponentResult bowen_entropy(const SymbolicSystem& sys,
                                     const RegularSystem& gamma,
                                     const CoordinatePartition& a, int n_scale,
                                     int n_cap, double tol = 1e-6);
CriticalExponentResult pesin_entropy(const SymbolicSystem& sys,
                                     const RegularSystem& gamma, int n_scale,
                                     double eps, int horizon, double tol = 1e-6);

struct DimensionalConfig {
  int n_cap = 64;          // Bowen order cap
  int pesin_depth = 128;   // Pesin horizon
  int n_scale = 1;
  double epsilon = 0.3;
  int h_n_max = 128;       // count-based sequence length
  double tol = 0.02;
  double bisection_tol = 1e-6;
};

struct BchReport {
  CriticalExponentResult b;
  CriticalExponentResult c;
  double h = 0.0;  // growth rate of log s_n(eps)
  double gap_bc = 0.0;
  double gap_bh = 0.0;
  double gap_ch = 0.0;
  bool b_below_h = false;  // b <= h + tol
};

/// b, c and h on one system, A the partition at the origin of every layer,
/// gamma a regular system reaching the largest depth used.
BchReport b_c_h_comparison(const SymbolicSystem& sys, const RegularSystem& gamma,
                           const DimensionalConfig& cfg = {});

}  // namespace receptive
