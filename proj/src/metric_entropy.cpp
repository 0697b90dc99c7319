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

#include "receptive/metric_entropy.hpp"

#include "receptive/error.hpp"
#include "receptive/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace receptive {

namespace {

std::vector<std::size_t> sites_per_layer(const MeasureOracle& mu,
                                         const SiteSet& coords) {
  std::vector<std::size_t> sites(static_cast<std::size_t>(mu.layer_count()), 0);
  for (const auto& s : coords) {
    if (s.layer < 0 || s.layer >= mu.layer_count()) {
      throw DomainError("site " + to_string(s) + " outside the measure's layers");
    }
    ++sites[static_cast<std::size_t>(s.layer)];
  }
  return sites;
}

std::vector<double> layer_entropies(const MeasureOracle& mu) {
  std::vector<double> h;
  for (int l = 0; l < mu.layer_count(); ++l) h.push_back(shannon_entropy(mu.probabilities(l)));
  return h;
}

double weighted_layers(const std::vector<std::size_t>& sites,
                       const std::vector<double>& h, double den) {
  std::vector<double> terms;
  for (std::size_t l = 0; l < sites.size(); ++l) {
    if (sites[l] == 0) continue;
    const double c = static_cast<double>(sites[l]);
    terms.push_back((den == 1.0 ? c : c / den) * h[l]);
  }
  return order_free_sum(std::move(terms));
}

double xlogx(double p) { return p > 0.0 ? -p * std::log(p) : 0.0; }

double markov_entropy(const MeasureOracle& mu, const SiteSet& coords) {
  for (const auto& s : coords) {
    if (s.layer != 0 || s.point.size() != 1) {
      throw DomainError("Markov measures are supported on one layer with d = 1 only");
    }
  }
  if (coords.empty()) return 0.0;
  const auto& pi = mu.stationary();
  std::vector<double> terms;
  for (double q : pi) terms.push_back(xlogx(q));
  for (std::size_t i = 1; i < coords.size(); ++i) {
    const int gap = coords[i].point[0] - coords[i - 1].point[0];
    const auto pg = transition_power(mu, gap);
    for (std::size_t a = 0; a < pi.size(); ++a) {
      for (std::size_t b = 0; b < pi.size(); ++b) terms.push_back(pi[a] * xlogx(pg[a][b]));
    }
  }
  return order_free_sum(std::move(terms));
}

}  // namespace

PartitionEntropy partition_entropy_detail(const MeasureOracle& mu,
                                          const SiteSet& coords) {
  PartitionEntropy out;
  if (mu.kind() == MeasureOracle::Kind::markov) {
    out.value = markov_entropy(mu, coords);
    return out;
  }
  out.sites = sites_per_layer(mu, coords);
  out.value = weighted_layers(out.sites, layer_entropies(mu), 1.0);
  return out;
}

double partition_entropy(const MeasureOracle& mu, const CoordinatePartition& a) {
  if (a.role != CoverRole::partition) {
    throw DomainError("partition entropy needs a partition, not a cover");
  }
  return partition_entropy_detail(mu, a.coords).value;
}

double partition_entropy_enumerated(const SymbolicSystem& sys,
                                    const MeasureOracle& mu,
                                    const SiteSet& coords, std::uint64_t budget) {
  mu.check_compatible(sys);
  std::vector<double> terms;
  for_each_word(sys, coords, budget, [&](const Word& w) {
    terms.push_back(xlogx(cylinder_measure(mu, coords, w)));
  });
  return order_free_sum(std::move(terms));
}

EntropyCoefficients bernoulli_entropy_coefficients(const MeasureOracle& mu,
                                                   const SiteSet& coords) {
  if (!mu.exact()) throw DomainError("exact coefficients need rational Bernoulli inputs");
  const auto sites = sites_per_layer(mu, coords);
  EntropyCoefficients out;
  for (int l = 0; l < mu.layer_count(); ++l) {
    std::vector<Rational> row;
    for (const auto& p : *mu.exact_probabilities(l)) {
      row.push_back(Rational(static_cast<long long>(sites[static_cast<std::size_t>(l)])) * p);
    }
    out.push_back(std::move(row));
  }
  return out;
}

EntropyCoefficients enumerated_entropy_coefficients(const SymbolicSystem& sys,
                                                    const MeasureOracle& mu,
                                                    const SiteSet& coords,
                                                    std::uint64_t budget) {
  if (!mu.exact()) throw DomainError("exact coefficients need rational Bernoulli inputs");
  mu.check_compatible(sys);
  EntropyCoefficients out;
  for (int l = 0; l < mu.layer_count(); ++l) {
    out.emplace_back(static_cast<std::size_t>(mu.alphabet(l)), Rational(0));
  }
  for_each_word(sys, coords, budget, [&](const Word& w) {
    const Rational m = cylinder_measure_exact(mu, coords, w);
    if (m == 0) return;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      out[static_cast<std::size_t>(coords[i].layer)][static_cast<std::size_t>(w[i])] += m;
    }
  });
  return out;
}

double diagonal_closed_form(int k, const std::vector<double>& p) {
  return static_cast<double>(k) * shannon_entropy(p);
}

namespace {

void check_range(const RegularSystem& gamma, int n_max) {
  if (n_max < 1 || n_max > gamma.n_max()) {
    throw DomainError("n_max must lie in [1, " + std::to_string(gamma.n_max()) + "]");
  }
}

double denominator(Normalization norm, const RegularSystem& gamma, int n) {
  return norm == Normalization::receptive ? static_cast<double>(n)
                                          : static_cast<double>(gamma.size(n));
}

}  // namespace

EntropySequence closed_form_sequence(const SymbolicSystem& sys,
                                     const CoordinatePartition& a,
                                     const RegularSystem& gamma, int n_max,
                                     Normalization norm,
                                     const std::vector<double>& per_site) {
  check_range(gamma, n_max);
  if (static_cast<int>(per_site.size()) != sys.layer_count()) {
    throw DomainError("one per-site value per layer required");
  }
  EntropySequence seq;
  seq.normalization = norm;
  seq.system_id = sys.hash();
  for (int n = 1; n <= n_max; ++n) {
    const auto coords = join_over(a, gamma, n, sys).coords;
    EntropySample s;
    s.n = n;
    s.coords = coords.size();
    s.sites.assign(per_site.size(), 0);
    for (const auto& site : coords) ++s.sites[static_cast<std::size_t>(site.layer)];
    s.raw = weighted_layers(s.sites, per_site, 1.0);
    s.normalized = weighted_layers(s.sites, per_site, denominator(norm, gamma, n));
    seq.samples.push_back(std::move(s));
  }
  finalize(seq);
  return seq;
}

EntropySequence receptive_metric_sequence(const SymbolicSystem& sys,
                                          const MeasureOracle& mu,
                                          const CoordinatePartition& a,
                                          const RegularSystem& gamma, int n_max,
                                          Normalization norm) {
  mu.check_compatible(sys);
  if (a.role != CoverRole::partition) {
    throw DomainError("metric entropy needs a partition, not a cover");
  }
  if (mu.kind() == MeasureOracle::Kind::bernoulli) {
    return closed_form_sequence(sys, a, gamma, n_max, norm, layer_entropies(mu));
  }
  check_range(gamma, n_max);
  EntropySequence seq;
  seq.normalization = norm;
  seq.system_id = sys.hash();
  for (int n = 1; n <= n_max; ++n) {
    const auto coords = join_over(a, gamma, n, sys).coords;
    EntropySample s;
    s.n = n;
    s.coords = coords.size();
    s.raw = markov_entropy(mu, coords);
    s.normalized = s.raw / denominator(norm, gamma, n);
    seq.samples.push_back(std::move(s));
  }
  finalize(seq);
  return seq;
}

bool check_scaling_identity(const EntropySequence& scaled,
                            const EntropySequence& base, int p,
                            std::optional<int>* first_mismatch) {
  for (const auto& s : scaled.samples) {
    const EntropySample* match = nullptr;
    for (const auto& b : base.samples) {
      if (b.n == p * s.n) {
        match = &b;
        break;
      }
    }
    if (match == nullptr || match->raw != s.raw || match->sites != s.sites) {
      if (first_mismatch != nullptr) *first_mismatch = s.n;
      return false;
    }
  }
  return true;
}

ScalingReport verify_scaling_law(const SymbolicSystem& sys,
                                 const MeasureOracle& mu,
                                 const CoordinatePartition& a,
                                 const RegularSystem& gamma, int p, int n_max) {
  if (p < 1) throw DomainError("scale factor must be >= 1");
  if (static_cast<long long>(p) * n_max > gamma.n_max()) {
    throw DomainError("p * n_max exceeds the regular system's range");
  }
  ScalingReport r;
  r.p = p;
  r.base = receptive_metric_sequence(sys, mu, a, gamma, p * n_max);
  r.scaled = receptive_metric_sequence(sys, mu, a, scaled_system(gamma, p, n_max), n_max);
  r.identity_holds = check_scaling_identity(r.scaled, r.base, p, &r.first_mismatch);
  const double base_value = r.base.at(p * n_max).normalized;
  r.headline_ratio = base_value == 0.0 ? 0.0 : r.scaled.headline / base_value;
  return r;
}

GeneratorReport generator_entropy_report(const SymbolicSystem& sys,
                                         const MeasureOracle& mu,
                                         const CoordinatePartition& a,
                                         const RegularSystem& gamma, int n_max) {
  GeneratorReport r;
  r.action = receptive_metric_sequence(sys, mu, a, gamma, n_max);
  const auto line = standard_system(1, n_max);
  bool first = true;
  for (const auto& g : gamma.set(1)) {
    GeneratorEntry e{g, receptive_metric_sequence(single_map(sys, g), mu, a, line, n_max)};
    r.generator_sup = first ? e.sequence.headline
                            : std::max(r.generator_sup, e.sequence.headline);
    first = false;
    r.generators.push_back(std::move(e));
  }
  r.margin = r.action.headline - r.generator_sup;
  return r;
}

ProductReport product_bounds_report(const SymbolicSystem& sys1,
                                    const SymbolicSystem& sys2,
                                    const MeasureOracle& mu1,
                                    const MeasureOracle& mu2,
                                    const CoordinatePartition& a1,
                                    const CoordinatePartition& a2,
                                    const RegularSystem& gamma1,
                                    const RegularSystem& gamma2, int n_max) {
  ProductReport r;
  r.first = receptive_metric_sequence(sys1, mu1, a1, gamma1, n_max);
  r.second = receptive_metric_sequence(sys2, mu2, a2, gamma2, n_max);
  const auto prod = product_system(sys1, sys2, mu1, mu2);
  SiteSet coords = a1.coords;
  for (auto s : a2.coords) {
    s.layer += sys1.layer_count();
    coords.push_back(std::move(s));
  }
  r.product = receptive_metric_sequence(prod.system, prod.measure,
                                        CoordinatePartition(std::move(coords)),
                                        product_system(gamma1, gamma2), n_max);
  r.identity_holds = true;
  for (std::size_t i = 0; i < r.product.samples.size(); ++i) {
    const auto& p = r.product.samples[i];
    const auto& x = r.first.samples[i];
    const auto& y = r.second.samples[i];
    auto joined = x.sites;
    joined.insert(joined.end(), y.sites.begin(), y.sites.end());
    if (p.raw != x.raw + y.raw || p.sites != joined) r.identity_holds = false;
  }
  r.lower_margin = r.product.headline - std::max(r.first.headline, r.second.headline);
  r.upper_margin = r.first.headline + r.second.headline - r.product.headline;
  return r;
}

SymbolicSystem subaction_system(const SymbolicSystem& sys,
                                const std::vector<int>& moduli) {
  if (static_cast<int>(moduli.size()) != sys.generators()) {
    throw ConfigError("moduli", "one modulus per generator required");
  }
  std::vector<std::vector<std::vector<int>>> gens;
  for (int i = 0; i < sys.generators(); ++i) {
    const int p = moduli[static_cast<std::size_t>(i)];
    if (p < 1) throw ConfigError("moduli", "moduli must be >= 1");
    std::vector<std::vector<int>> gen;
    for (int l = 0; l < sys.layer_count(); ++l) {
      auto d = sys.displacement(i, l);
      for (int& c : d) c *= p;
      gen.push_back(std::move(d));
    }
    gens.push_back(std::move(gen));
  }
  return SymbolicSystem(sys.layers(), std::move(gens));
}

SubactionReport subaction_report(const SymbolicSystem& sys,
                                 const MeasureOracle& mu,
                                 const CoordinatePartition& a,
                                 const RegularSystem& gamma,
                                 const std::vector<int>& moduli, int n_max) {
  SubactionReport r;
  r.full = receptive_metric_sequence(sys, mu, a, gamma, n_max);
  r.restricted = receptive_metric_sequence(sys, mu, a, restricted_system(gamma, moduli), n_max);
  double index = 1.0;
  for (int p : moduli) index *= p;
  r.lower_margin = r.full.headline - r.restricted.headline;
  r.upper_margin = index * r.restricted.headline - r.full.headline;
  if (!moduli.empty() &&
      std::all_of(moduli.begin(), moduli.end(), [&](int p) { return p == moduli[0]; })) {
    r.subaction = receptive_metric_sequence(subaction_system(sys, moduli), mu, a, gamma, n_max);
    r.dilated = receptive_metric_sequence(sys, mu, a, dilated_system(gamma, moduli[0]), n_max);
    bool same = true;
    for (std::size_t i = 0; i < r.subaction->samples.size(); ++i) {
      const auto& x = r.subaction->samples[i];
      const auto& y = r.dilated->samples[i];
      if (x.raw != y.raw || x.sites != y.sites) same = false;
    }
    r.dilation_identity = same;
  }
  return r;
}

}  // namespace receptive
