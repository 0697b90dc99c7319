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

#include "receptive/topological.hpp"

#include "receptive/error.hpp"
#include "receptive/metric_entropy.hpp"
#include "receptive/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <unordered_map>

namespace receptive {

bool is_dyadic(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) return false;
  int e = 0;
  return std::frexp(eps, &e) == 0.5;
}

int dyadic_radius(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("epsilon must lie in (0, 1)");
  if (is_dyadic(eps)) {
    throw DomainError("epsilon " + std::to_string(eps) +
                      " is a metric value 2^-t; the ball boundary is ambiguous");
  }
  int t = 0;
  while (std::ldexp(1.0, -(t + 1)) > eps) ++t;
  return t;
}

SiteSet ball_sites(const SymbolicSystem& sys, int t) { return window_sites(sys, t); }

SiteSet ball_window(const SymbolicSystem& sys, const RegularSystem& gamma,
                    int n, double eps) {
  const auto ball = ball_sites(sys, dyadic_radius(eps));
  SiteSet all;
  for (const auto& g : gamma.set(n)) {
    auto moved = translate(ball, sys, g);
    all.insert(all.end(), moved.begin(), moved.end());
  }
  return normalized(std::move(all));
}

int required_length(const SymbolicSystem& sys, const RegularSystem& gamma,
                    int n, double eps) {
  const int t = dyadic_radius(eps);
  int reach = 0;
  for (const auto& g : gamma.set(n)) {
    for (int l = 0; l < sys.layer_count(); ++l) {
      for (int c : sys.translation(g, l)) reach = std::max(reach, c);
    }
  }
  return reach + t;
}

std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::closed_form: return "closed_form";
    case CountMethod::exact_bruteforce: return "exact_bruteforce";
    case CountMethod::greedy_bound: return "greedy_bound";
  }
  return "?";
}

std::string to_string(BoundDirection d) {
  switch (d) {
    case BoundDirection::none: return "none";
    case BoundDirection::lower: return "lower";
    case BoundDirection::upper: return "upper";
  }
  return "?";
}

namespace {

CountRecord cylinder_count(const SymbolicSystem& sys, const SiteSet& sites) {
  CountRecord r;
  r.count = 1;
  std::vector<std::size_t> per_layer(static_cast<std::size_t>(sys.layer_count()), 0);
  for (const auto& s : sites) {
    r.count *= sys.layer(s.layer).alphabet;
    ++per_layer[static_cast<std::size_t>(s.layer)];
  }
  std::vector<double> terms;
  for (int l = 0; l < sys.layer_count(); ++l) {
    const auto c = per_layer[static_cast<std::size_t>(l)];
    if (c != 0) {
      terms.push_back(static_cast<double>(c) *
                      std::log(static_cast<double>(sys.layer(l).alphabet)));
    }
  }
  r.log_count = order_free_sum(std::move(terms));
  r.method = CountMethod::closed_form;
  return r;
}

CountRecord from_size(std::size_t size, bool exact, BoundDirection dir) {
  CountRecord r;
  r.count = static_cast<unsigned long long>(size);
  r.log_count = std::log(static_cast<double>(size));
  r.method = exact ? CountMethod::exact_bruteforce : CountMethod::greedy_bound;
  r.direction = exact ? BoundDirection::none : dir;
  return r;
}

}  // namespace

CountRecord separated_max_closed_form(const SymbolicSystem& sys,
                                      const RegularSystem& gamma, int n,
                                      double eps) {
  auto r = cylinder_count(sys, ball_window(sys, gamma, n, eps));
  r.n = n;
  r.epsilon = eps;
  r.quantity = "separated";
  return r;
}

CountRecord spanning_min_closed_form(const SymbolicSystem& sys,
                                     const RegularSystem& gamma, int n,
                                     double eps) {
  auto r = separated_max_closed_form(sys, gamma, n, eps);
  r.quantity = "spanning";
  return r;
}

BitGraph separation_graph(const FiniteApproximation& fa,
                          const RegularSystem& gamma, int n, double eps) {
  const int t = dyadic_radius(eps);
  const auto& elements = gamma.set(n);
  const int need = required_length(fa.system(), gamma, n, eps);
  for (const auto& g : elements) {
    if (fa.visible_radius(g) <= t) {
      throw WindowError("truncation too short for n = " + std::to_string(n) +
                            ", eps = " + std::to_string(eps),
                        need);
    }
  }
  const std::size_t count = fa.size();
  const auto& sites = fa.sites();
  // class[g][x]: which pattern gx shows on Ball_t
  std::vector<std::vector<std::uint32_t>> classes;
  for (const auto& g : elements) {
    const auto map = fa.shift_map(g);
    std::vector<int> sources;
    for (std::size_t j = 0; j < sites.size(); ++j) {
      if (sites[j].norm() <= t) sources.push_back(map.source[j]);
    }
    std::unordered_map<std::string, std::uint32_t> ids;
    std::vector<std::uint32_t> cls(count);
    std::string key(sources.size(), '\0');
    for (std::size_t x = 0; x < count; ++x) {
      const auto p = fa.point(x);
      for (std::size_t s = 0; s < sources.size(); ++s) {
        key[s] = static_cast<char>(p[static_cast<std::size_t>(sources[s])]);
      }
      cls[x] = ids.emplace(key, static_cast<std::uint32_t>(ids.size())).first->second;
    }
    classes.push_back(std::move(cls));
  }
  BitGraph graph(count);
  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t y = x + 1; y < count; ++y) {
      for (const auto& cls : classes) {
        if (cls[x] != cls[y]) {
          graph.add_edge(x, y);
          break;
        }
      }
    }
  }
  return graph;
}

namespace {

CountRecord clique_record(const BitGraph& graph, int n, double eps,
                          const CliqueOptions& opts) {
  const auto res = max_clique(graph, opts);
  auto r = from_size(res.clique.size(), res.exact, BoundDirection::lower);
  r.n = n;
  r.epsilon = eps;
  r.quantity = "separated";
  return r;
}

CountRecord cover_record(const BitGraph& graph, int n, double eps,
                         const CoverOptions& opts) {
  std::vector<std::vector<std::uint32_t>> balls(graph.size());
  for (std::size_t x = 0; x < graph.size(); ++x) {
    for (std::size_t y = 0; y < graph.size(); ++y) {
      if (x == y || !graph.adjacent(x, y)) balls[x].push_back(static_cast<std::uint32_t>(y));
    }
  }
  const auto res = min_set_cover(graph.size(), balls, opts);
  auto r = from_size(res.chosen.size(), res.exact, BoundDirection::upper);
  r.n = n;
  r.epsilon = eps;
  r.quantity = "spanning";
  return r;
}

}  // namespace

CountRecord separated_max_bruteforce(const FiniteApproximation& fa,
                                     const RegularSystem& gamma, int n,
                                     double eps, const CliqueOptions& opts) {
  return clique_record(separation_graph(fa, gamma, n, eps), n, eps, opts);
}

CountRecord spanning_min(const FiniteApproximation& fa,
                         const RegularSystem& gamma, int n, double eps,
                         const CoverOptions& opts) {
  return cover_record(separation_graph(fa, gamma, n, eps), n, eps, opts);
}

CountPair bruteforce_counts(const FiniteApproximation& fa,
                            const RegularSystem& gamma, int n, double eps,
                            const CliqueOptions& clique,
                            const CoverOptions& cover) {
  const auto graph = separation_graph(fa, gamma, n, eps);
  return CountPair{clique_record(graph, n, eps, clique),
                   cover_record(graph, n, eps, cover)};
}

FiniteCover cylinder_cover(const FiniteApproximation& fa, const SiteSet& coords) {
  std::vector<std::size_t> index;
  int reach = 0;
  bool missing = false;
  for (const auto& s : coords) {
    const int i = fa.index_of(s);
    reach = std::max(reach, s.norm());
    if (i < 0) missing = true;
    index.push_back(static_cast<std::size_t>(i));
  }
  if (missing) throw WindowError("cover coordinates outside the truncation window", reach);
  std::map<std::string, std::size_t> cell;
  FiniteCover out;
  std::string key(index.size(), '\0');
  for (std::size_t x = 0; x < fa.size(); ++x) {
    const auto p = fa.point(x);
    for (std::size_t s = 0; s < index.size(); ++s) key[s] = static_cast<char>(p[index[s]]);
    auto it = cell.find(key);
    if (it == cell.end()) {
      it = cell.emplace(key, out.elements.size()).first;
      out.elements.emplace_back();
    }
    out.elements[it->second].push_back(static_cast<std::uint32_t>(x));
  }
  return out;
}

FiniteCover join_covers(const FiniteCover& a, const FiniteCover& b,
                        std::size_t universe) {
  FiniteCover out;
  std::map<std::vector<std::uint32_t>, bool> seen;
  for (const auto& u : a.elements) {
    for (const auto& v : b.elements) {
      std::vector<std::uint32_t> x = u;
      std::vector<std::uint32_t> y = v;
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      std::vector<std::uint32_t> both;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both));
      if (both.empty() || both.back() >= universe) continue;
      if (seen.emplace(both, true).second) out.elements.push_back(std::move(both));
    }
  }
  return out;
}

CountRecord minimal_subcover_count(const SymbolicSystem& sys,
                                   const CoordinatePartition& c) {
  auto r = cylinder_count(sys, c.coords);
  r.quantity = "subcover";
  return r;
}

CountRecord minimal_subcover(const FiniteCover& c, std::size_t universe,
                             const CoverOptions& opts) {
  const auto res = min_set_cover(universe, c.elements, opts);
  auto r = from_size(res.chosen.size(), res.exact, BoundDirection::upper);
  r.quantity = "subcover";
  return r;
}

double lebesgue_number(const FiniteApproximation& fa, const FiniteCover& c) {
  const std::size_t count = fa.size();
  if (count == 0) throw DomainError("empty truncation");
  std::vector<std::vector<std::size_t>> member(count);
  std::vector<std::vector<char>> inside(c.elements.size(), std::vector<char>(count, 0));
  for (std::size_t u = 0; u < c.elements.size(); ++u) {
    for (auto x : c.elements[u]) {
      member.at(x).push_back(u);
      inside[u][x] = 1;
    }
  }
  double delta = 1.0;
  for (std::size_t x = 0; x < count; ++x) {
    if (member[x].empty()) throw DomainError("the family does not cover the truncation");
    double best = 0.0;
    for (auto u : member[x]) {
      double gap = 1.0;
      for (std::size_t y = 0; y < count; ++y) {
        if (!inside[u][y]) gap = std::min(gap, fa.distance(x, y));
      }
      best = std::max(best, gap);
    }
    delta = std::min(delta, best);
  }
  return delta;
}

double cylinder_lebesgue_number(const CoordinatePartition& c) {
  int m = 0;
  for (const auto& s : c.coords) m = std::max(m, s.norm());
  return std::ldexp(1.0, -m);
}

EntropySequence open_cover_entropy_sequence(const SymbolicSystem& sys,
                                            const CoordinatePartition& a,
                                            const RegularSystem& gamma,
                                            int n_max) {
  std::vector<double> per_site;
  for (const auto& l : sys.layers()) per_site.push_back(std::log(static_cast<double>(l.alphabet)));
  auto seq = closed_form_sequence(sys, a, gamma, n_max, Normalization::receptive, per_site);
  seq.quantity = "open_cover";
  return seq;
}

EntropySequence separated_entropy_sequence(const SymbolicSystem& sys,
                                           const RegularSystem& gamma,
                                           double eps, int n_max) {
  auto seq = open_cover_entropy_sequence(
      sys, CoordinatePartition(ball_sites(sys, dyadic_radius(eps)), CoverRole::cover),
      gamma, n_max);
  seq.quantity = "separated";
  return seq;
}

CountSuiteResult count_inequality_suite(const FiniteApproximation& fa,
                                        const RegularSystem& gamma,
                                        const std::vector<CoordinatePartition>& covers,
                                        const std::vector<double>& eps_grid,
                                        int n_min, int n_max,
                                        const CliqueOptions& clique,
                                        const CoverOptions& cover) {
  CountSuiteResult out;
  std::map<std::pair<int, double>, std::optional<CountPair>> cache;
  auto counts = [&](int n, double eps) -> const std::optional<CountPair>& {
    auto key = std::make_pair(n, eps);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::optional<CountPair> value;
    try {
      value = bruteforce_counts(fa, gamma, n, eps, clique, cover);
      out.records.push_back(value->separated);
      out.records.push_back(value->spanning);
    } catch (const WindowError&) {
      ++out.skipped;
    }
    return cache.emplace(key, std::move(value)).first->second;
  };
  auto violation = [&](std::string family, int n, double eps, const BigInt& lhs,
                       const BigInt& rhs) {
    ++out.checks;
    if (lhs <= rhs) return;
    out.violations.push_back(CountViolation{std::move(family), n, eps,
                                            lhs.str() + " > " + rhs.str()});
  };
  for (int n = n_min; n <= n_max; ++n) {
    for (double eps : eps_grid) {
      const auto& here = counts(n, eps);
      if (!here || !here->separated.exact() || !here->spanning.exact()) continue;
      const auto& s = here->separated.count;
      violation("a: r_n(eps) <= s_n(eps)", n, eps, here->spanning.count, s);
      const auto& half = counts(n, eps / 2);
      if (half && half->spanning.exact()) {
        violation("a: s_n(eps) <= r_n(eps/2)", n, eps, s, half->spanning.count);
      }
      // gamma = cylinders on Ball_t(eps), diameter 2^-(t+1) <= eps
      const CoordinatePartition g(ball_sites(fa.system(), dyadic_radius(eps)), CoverRole::cover);
      const auto gn = join_over(g, gamma, n, fa.system());
      try {
        auto rec = minimal_subcover(cylinder_cover(fa, gn.coords), fa.size(), cover);
        rec.n = n;
        rec.epsilon = eps;
        out.records.push_back(rec);
        if (rec.exact()) violation("c: s_n(eps) <= N(gamma^n)", n, eps, s, rec.count);
      } catch (const WindowError&) {
        ++out.skipped;
      }
    }
  }
  for (const auto& a : covers) {
    const auto base = cylinder_cover(fa, a.coords);
    const double delta = lebesgue_number(fa, base);
    out.lebesgue.push_back(delta);
    const double eps = 0.75 * delta / 2;
    if (!(eps < 1.0) || is_dyadic(eps)) {
      ++out.skipped;
      continue;
    }
    for (int n = n_min; n <= n_max; ++n) {
      const auto an = join_over(a, gamma, n, fa.system());
      const auto& r = counts(n, eps);
      if (!r || !r->spanning.exact()) continue;
      try {
        auto rec = minimal_subcover(cylinder_cover(fa, an.coords), fa.size(), cover);
        rec.n = n;
        out.records.push_back(rec);
        if (rec.exact()) violation("b: N(A^n) <= r_n(delta/2)", n, eps, rec.count, r->spanning.count);
      } catch (const WindowError&) {
        ++out.skipped;
      }
    }
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<CountRecord>& records,
               bool header) {
  if (header) out << "n,epsilon,quantity,value,method,bound_direction\n";
  const auto old = out.precision(17);
  for (const auto& r : records) {
    out << r.n << ',' << r.epsilon << ',' << r.quantity << ',' << r.count.str()
        << ',' << to_string(r.method) << ',' << to_string(r.direction) << '\n';
  }
  out.precision(old);
}

}  // namespace receptive
