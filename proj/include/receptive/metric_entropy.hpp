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

// Entropy of cylinder partitions and the receptive / classical metric
// entropy sequences of a translation action.

#include "receptive/lattice.hpp"
#include "receptive/rational.hpp"
#include "receptive/sequence.hpp"
#include "receptive/symbolic.hpp"

#include <optional>
#include <vector>

namespace receptive {

struct PartitionEntropy {
  double value = 0.0;
  /// Bernoulli only: sites per layer, value = sum_l sites[l] * H(p_l).
  std::vector<std::size_t> sites;
};

/// H_mu of the cylinder partition on A.coords, in nats. Bernoulli measures
/// use the product shortcut, Markov measures the chain rule over the gaps.
double partition_entropy(const MeasureOracle& mu, const CoordinatePartition& a);
PartitionEntropy partition_entropy_detail(const MeasureOracle& mu,
                                          const SiteSet& coords);

/// -sum mu(c) log mu(c) over all r^|S| cylinders.
double partition_entropy_enumerated(const SymbolicSystem& sys,
                                    const MeasureOracle& mu,
                                    const SiteSet& coords,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

/// H = sum_{l,a} coeff[l][a] * (-log p_l(a)) with exact rational
/// coefficients; needs a Bernoulli measure with rational inputs.
using EntropyCoefficients = std::vector<std::vector<Rational>>;
EntropyCoefficients bernoulli_entropy_coefficients(const MeasureOracle& mu,
                                                   const SiteSet& coords);
EntropyCoefficients enumerated_entropy_coefficients(
    const SymbolicSystem& sys, const MeasureOracle& mu, const SiteSet& coords,
    std::uint64_t budget = kDefaultEnumerationBudget);

/// k * H(p).
double diagonal_closed_form(int k, const std::vector<double>& p);

/// Samples n = 1..n_max of H_mu(A^n_Gamma), normalized by n or |N_n|.
EntropySequence receptive_metric_sequence(const SymbolicSystem& sys,
                                          const MeasureOracle& mu,
                                          const CoordinatePartition& a,
                                          const RegularSystem& gamma, int n_max,
                                          Normalization norm = Normalization::receptive);

/// a_n = sum_l |coords of A^n in layer l| * per_site[l], the closed form
/// shared by Bernoulli entropies (per_site = H(p_l)) and cylinder-cover
/// counts (per_site = log r_l).
EntropySequence closed_form_sequence(const SymbolicSystem& sys,
                                     const CoordinatePartition& a,
                                     const RegularSystem& gamma, int n_max,
                                     Normalization norm,
                                     const std::vector<double>& per_site);

struct ScalingReport {
  int p = 1;
  EntropySequence base;    // over Gamma, n = 1..p*n_max
  EntropySequence scaled;  // over Gamma' = (N_pn), n = 1..n_max
  bool identity_holds = false;
  std::optional<int> first_mismatch;
  double headline_ratio = 0.0;  // scaled headline / base normalized at p*n_max
};

/// True iff scaled raw at n equals base raw at p*n for every n (exact).
bool check_scaling_identity(const EntropySequence& scaled,
                            const EntropySequence& base, int p,
                            std::optional<int>* first_mismatch = nullptr);

ScalingReport verify_scaling_law(const SymbolicSystem& sys,
                                 const MeasureOracle& mu,
                                 const CoordinatePartition& a,
                                 const RegularSystem& gamma, int p, int n_max);

struct GeneratorEntry {
  LatticeElement g;
  EntropySequence sequence;
};

struct GeneratorReport {
  std::vector<GeneratorEntry> generators;  // every g in N_1
  EntropySequence action;
  double generator_sup = 0.0;  // max generator headline
  double margin = 0.0;         // action headline - generator_sup
};

GeneratorReport generator_entropy_report(const SymbolicSystem& sys,
                                         const MeasureOracle& mu,
                                         const CoordinatePartition& a,
                                         const RegularSystem& gamma, int n_max);

struct ProductReport {
  EntropySequence first;
  EntropySequence second;
  EntropySequence product;
  bool identity_holds = false;  // product raw = first raw + second raw, all n
  double lower_margin = 0.0;    // product - max(first, second), headlines
  double upper_margin = 0.0;    // first + second - product, headlines
};

/// The product action of Z_+^{k1+k2} on X1 x X2 with the product measure,
/// over N^1_n x N^2_n, and the partition A1 x A2.
ProductReport product_bounds_report(const SymbolicSystem& sys1,
                                    const SymbolicSystem& sys2,
                                    const MeasureOracle& mu1,
                                    const MeasureOracle& mu2,
                                    const CoordinatePartition& a1,
                                    const CoordinatePartition& a2,
                                    const RegularSystem& gamma1,
                                    const RegularSystem& gamma2, int n_max);

/// Generator i displaced by moduli[i] times its original displacement: the
/// subaction on H = p_1 Z_+ x ... x p_k Z_+ written as a Z_+^k action.
SymbolicSystem subaction_system(const SymbolicSystem& sys,
                                const std::vector<int>& moduli);

struct SubactionReport {
  EntropySequence full;        // T over Gamma
  EntropySequence restricted;  // T over Gamma_H = (N_n cap H)
  double lower_margin = 0.0;   // full - restricted
  double upper_margin = 0.0;   // prod(moduli) * restricted - full
  /// Equal moduli p only: the subaction over Gamma against T over pGamma,
  /// raw values compared per n.
  std::optional<bool> dilation_identity;
  std::optional<EntropySequence> subaction;
  std::optional<EntropySequence> dilated;
};

SubactionReport subaction_report(const SymbolicSystem& sys,
                                 const MeasureOracle& mu,
                                 const CoordinatePartition& a,
                                 const RegularSystem& gamma,
                                 const std::vector<int>& moduli, int n_max);

}  // namespace receptive
