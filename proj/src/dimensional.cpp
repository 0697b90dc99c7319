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

#include "receptive/dimensional.hpp"

#include "receptive/error.hpp"
#include "receptive/numeric.hpp"
#include "receptive/topological.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace receptive {

namespace {

// max over g in N_n, s in S, axes of the coordinate of s + delta(g)
int reach(const SymbolicSystem& sys, const RegularSystem& gamma,
          const SiteSet& s, int n) {
  int out = 0;
  std::vector<std::vector<int>> shift(static_cast<std::size_t>(sys.layer_count()));
  for (const auto& g : gamma.set(n)) {
    for (int l = 0; l < sys.layer_count(); ++l) shift[static_cast<std::size_t>(l)] = sys.translation(g, l);
    for (const auto& site : s) {
      const auto& d = shift[static_cast<std::size_t>(site.layer)];
      for (std::size_t a = 0; a < site.point.size(); ++a) out = std::max(out, site.point[a] + d[a]);
    }
  }
  return out;
}

std::vector<int> all_layers(const SymbolicSystem& sys) {
  std::vector<int> out;
  for (int l = 0; l < sys.layer_count(); ++l) out.push_back(l);
  return out;
}

double log_words(const SymbolicSystem& sys, const std::vector<std::size_t>& per_layer) {
  std::vector<double> terms;
  for (int l = 0; l < sys.layer_count(); ++l) {
    const auto c = per_layer[static_cast<std::size_t>(l)];
    if (c != 0) {
      terms.push_back(static_cast<double>(c) * std::log(static_cast<double>(sys.layer(l).alphabet)));
    }
  }
  return order_free_sum(std::move(terms));
}

std::vector<std::size_t> box_sites(const SymbolicSystem& sys, int depth) {
  std::vector<std::size_t> out;
  for (const auto& l : sys.layers()) {
    std::size_t c = 1;
    for (int i = 0; i < l.dim; ++i) c *= static_cast<std::size_t>(depth + 1);
    out.push_back(c);
  }
  return out;
}

bool uniform_only(const SymbolicSystem& sys) {
  return sys.layer_count() != 1 || sys.layer(0).dim != 1;
}

}  // namespace

OrderResult order_of_set(const SymbolicSystem& sys, const RegularSystem& gamma,
                         const CoordinatePartition& a, const SiteSet& window,
                         int n_cap) {
  OrderResult r;
  const SiteSet w = normalized(window);
  const int cap = std::min(n_cap, gamma.n_max());
  if (!is_subset(a.coords, w)) return r;
  if (sys.translation_free(layers_of(a.coords))) {
    r.order = cap;
    r.saturated = true;
    r.unbounded = true;
    return r;
  }
  for (int n = 0; n <= cap; ++n) {
    bool fits = true;
    for (const auto& g : gamma.set(n)) {
      if (!is_subset(translate(a.coords, sys, g), w)) {
        fits = false;
        break;
      }
    }
    if (fits) r.order = n;
  }
  r.saturated = r.order == cap;
  return r;
}

double cover_weight(const CoverCandidate& c, double lambda) {
  if (lambda < 0) throw DomainError("lambda must be >= 0");
  std::vector<double> terms;
  for (std::size_t i = 0; i < c.orders.size(); ++i) {
    const bool inf = !c.unbounded.empty() && c.unbounded[i];
    if (inf && lambda > 0) continue;
    terms.push_back(std::exp(-lambda * c.orders[i]));
  }
  return compensated_sum(terms);
}

WeightResult min_weight(const WeightProfile& p, double lambda) {
  if (lambda < 0) throw DomainError("lambda must be >= 0");
  if (p.entries.empty()) throw DomainError("empty cover profile");
  WeightResult r;
  r.log_weight = std::numeric_limits<double>::infinity();
  for (const auto& e : p.entries) {
    const double lw = (e.unbounded && lambda > 0)
                          ? -std::numeric_limits<double>::infinity()
                          : e.log_count - lambda * e.order;
    if (lw < r.log_weight) {
      r.log_weight = lw;
      r.depth = e.depth;
    }
  }
  r.weight = std::exp(r.log_weight);
  r.saturated = p.saturated;
  r.upper_bound = p.upper_bound;
  return r;
}

WeightProfile bowen_profile(const SymbolicSystem& sys, const RegularSystem& gamma,
                            const CoordinatePartition& a, int n_scale, int n_cap,
                            int horizon) {
  if (n_cap < 1) throw DomainError("order cap must be >= 1");
  if (gamma.n_max() < n_cap) {
    throw DomainError("regular system shorter than the order cap " + std::to_string(n_cap));
  }
  WeightProfile p;
  p.upper_bound = uniform_only(sys);
  const bool unbounded = sys.translation_free(layers_of(a.coords));
  std::vector<int> reaches;
  for (int n = 0; n <= (unbounded ? 0 : n_cap); ++n) reaches.push_back(reach(sys, gamma, a.coords, n));
  if (horizon < 0) horizon = reaches.back();
  for (int depth = 0; depth <= horizon; ++depth) {
    ProfileEntry e;
    e.depth = depth;
    if (reaches[0] > depth) continue;  // S not inside the window: order 0
    if (unbounded) {
      e.order = n_cap;
      e.unbounded = true;
      p.saturated = true;
    } else {
      for (int n = 0; n <= n_cap; ++n) {
        if (reaches[static_cast<std::size_t>(n)] <= depth) e.order = n;
      }
      if (e.order == n_cap) p.saturated = true;
    }
    if (e.order < n_scale && !e.unbounded) continue;
    e.log_count = log_words(sys, box_sites(sys, depth));
    p.entries.push_back(e);
  }
  if (p.entries.empty()) {
    throw DomainError("horizon " + std::to_string(horizon) +
                      " too small for orders >= " + std::to_string(n_scale));
  }
  return p;
}

WeightResult bowen_min_weight(const SymbolicSystem& sys, const RegularSystem& gamma,
                              const CoordinatePartition& a, double lambda,
                              int n_scale, int n_cap, int horizon) {
  return min_weight(bowen_profile(sys, gamma, a, n_scale, n_cap, horizon), lambda);
}

WeightProfile pesin_profile(const SymbolicSystem& sys, const RegularSystem& gamma,
                            int n_scale, double eps, int horizon) {
  if (n_scale < 0) throw DomainError("scale must be >= 0");
  if (horizon < n_scale) {
    throw DomainError("horizon " + std::to_string(horizon) + " below the scale " +
                      std::to_string(n_scale));
  }
  if (gamma.n_max() < horizon) throw DomainError("regular system shorter than the horizon");
  WeightProfile p;
  p.upper_bound = uniform_only(sys);
  const bool unbounded = sys.translation_free(all_layers(sys));
  for (int n = n_scale; n <= (unbounded ? n_scale : horizon); ++n) {
    std::vector<std::size_t> per_layer(static_cast<std::size_t>(sys.layer_count()), 0);
    for (const auto& s : ball_window(sys, gamma, n, eps)) ++per_layer[static_cast<std::size_t>(s.layer)];
    ProfileEntry e;
    e.depth = n;
    e.order = n;
    e.unbounded = unbounded;
    e.log_count = log_words(sys, per_layer);
    p.entries.push_back(e);
  }
  p.saturated = unbounded;
  return p;
}

WeightResult pesin_min_weight(const SymbolicSystem& sys, const RegularSystem& gamma,
                              double lambda, int n_scale, double eps, int horizon) {
  return min_weight(pesin_profile(sys, gamma, n_scale, eps, horizon), lambda);
}

CriticalExponentResult critical_exponent(const std::function<double(double)>& weight_at,
                                         double hi_start, double tol) {
  if (!(tol > 0)) throw DomainError("tolerance must be > 0");
  CriticalExponentResult r;
  r.tol = tol;
  std::vector<std::pair<double, double>> seen;
  auto eval = [&](double lambda) {
    const double w = weight_at(lambda);
    seen.emplace_back(lambda, w);
    ++r.evaluations;
    return w;
  };
  const double w0 = eval(0.0);
  if (w0 < 1.0) {
    r.weight_lo = r.weight_hi = w0;
    return r;
  }
  double hi = hi_start > 0 ? hi_start : 1.0;
  double whi = eval(hi);
  while (whi >= 1.0) {
    hi *= 2;
    if (hi > 1e9) throw DomainError("weight never drops below 1");
    whi = eval(hi);
  }
  double lo = 0.0;
  double wlo = w0;
  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) / 2;
    const double w = eval(mid);
    if (w < 1.0) {
      hi = mid;
      whi = w;
    } else {
      lo = mid;
      wlo = w;
    }
  }
  r.lo = lo;
  r.hi = hi;
  r.weight_lo = wlo;
  r.weight_hi = whi;
  r.lambda = lo == 0.0 ? 0.0 : lo + (hi - lo) / 2;
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i].second > seen[i - 1].second) r.monotone = false;
  }
  return r;
}

CriticalExponentResult critical_exponent(const WeightProfile& profile, double tol) {
  double hi = 1.0;
  for (const auto& e : profile.entries) {
    if (e.order > 0) hi = std::max(hi, e.log_count / e.order);
  }
  auto r = critical_exponent([&](double lambda) { return min_weight(profile, lambda).weight; },
                             hi, tol);
  r.saturated = profile.saturated;
  r.upper_bound = profile.upper_bound;
  return r;
}

CriticalExponentResult bowen_entropy(const SymbolicSystem& sys,
                                     const RegularSystem& gamma,
                                     const CoordinatePartition& a, int n_scale,
                                     int n_cap, double tol) {
  auto r = critical_exponent(bowen_profile(sys, gamma, a, n_scale, n_cap), tol);
  r.scale = "N=" + std::to_string(n_scale) + ",n_cap=" + std::to_string(n_cap);
  return r;
}

CriticalExponentResult pesin_entropy(const SymbolicSystem& sys,
                                     const RegularSystem& gamma, int n_scale,
                                     double eps, int horizon, double tol) {
  auto r = critical_exponent(pesin_profile(sys, gamma, n_scale, eps, horizon), tol);
  r.scale = "N=" + std::to_string(n_scale) + ",eps=" + std::to_string(eps) +
            ",horizon=" + std::to_string(horizon);
  return r;
}

BchReport b_c_h_comparison(const SymbolicSystem& sys, const RegularSystem& gamma,
                           const DimensionalConfig& cfg) {
  BchReport r;
  const CoordinatePartition a(ball_sites(sys, 0));
  r.b = bowen_entropy(sys, gamma, a, cfg.n_scale, cfg.n_cap, cfg.bisection_tol);
  r.c = pesin_entropy(sys, gamma, cfg.n_scale, cfg.epsilon, cfg.pesin_depth, cfg.bisection_tol);
  r.h = separated_entropy_sequence(sys, gamma, cfg.epsilon, cfg.h_n_max).estimate();
  r.gap_bc = std::fabs(r.b.lambda - r.c.lambda);
  r.gap_bh = std::fabs(r.b.lambda - r.h);
  r.gap_ch = std::fabs(r.c.lambda - r.h);
  r.b_below_h = r.b.lambda <= r.h + cfg.tol;
  return r;
}

}  // namespace receptive
