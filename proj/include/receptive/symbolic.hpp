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

// Phase spaces: full shifts over Z_+^d (possibly several independent layers)
// with the dyadic metric, translation actions of Z_+^k, measure oracles,
// cylinder partitions and finite truncations.
//
// Metric: d(x, y) = 2^-m where m is the least sup-norm of a lattice site at
// which x and y differ (over all layers); d(x, x) = 0.

#include "receptive/error.hpp"
#include "receptive/lattice.hpp"
#include "receptive/rational.hpp"

#include <json.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace receptive {

/// A lattice site: a point of Z_+^d in one layer of the phase space.
struct Site {
  int layer = 0;
  std::vector<int> point;

  Site() = default;
  Site(int l, std::vector<int> p) : layer(l), point(std::move(p)) {}

  int norm() const noexcept;  // sup-norm of `point`

  friend auto operator<=>(const Site&, const Site&) = default;
  friend bool operator==(const Site&, const Site&) = default;
};

std::string to_string(const Site& s);

/// Sorted, duplicate-free set of sites.
using SiteSet = std::vector<Site>;

SiteSet normalized(SiteSet s);
SiteSet site_union(const SiteSet& a, const SiteSet& b);
bool is_subset(const SiteSet& a, const SiteSet& b);

/// Sites of layer 0 in Z_+ given by plain integers.
SiteSet sites_1d(std::initializer_list<int> coords);
SiteSet interval_sites(int first, int last, int layer = 0);

/// A symbol assignment aligned with a SiteSet.
using Word = std::vector<int>;

struct Layer {
  int alphabet = 2;
  int dim = 1;

  friend bool operator==(const Layer&, const Layer&) = default;
};

/// A product of full shifts A_l^{Z_+^{d_l}} with a translation action of
/// Z_+^k: generator i moves layer l by displacement(i, l).
class SymbolicSystem {
 public:
  SymbolicSystem(int alphabet, int dim,
                 std::vector<std::vector<int>> displacements);
  /// displacements[i][l] is the shift of layer l under generator i.
  SymbolicSystem(std::vector<Layer> layers,
                 std::vector<std::vector<std::vector<int>>> displacements);

  int generators() const noexcept { return static_cast<int>(disp_.size()); }
  int layer_count() const noexcept { return static_cast<int>(layers_.size()); }
  const std::vector<Layer>& layers() const noexcept { return layers_; }
  const Layer& layer(int l) const { return layers_.at(static_cast<std::size_t>(l)); }
  const std::vector<int>& displacement(int generator, int layer) const;

  /// delta_l(g) = sum_i g_i * displacement(i, l).
  std::vector<int> translation(const LatticeElement& g, int layer) const;

  /// True when no generator moves any of `layers_used`.
  bool translation_free(const std::vector<int>& layers_used) const;

  /// Short stable descriptor, also used as provenance hash input.
  std::string id() const;
  /// 16 hex digits of a 64-bit FNV-1a hash of id().
  std::string hash() const;

  nlohmann::json to_json() const;
  static SymbolicSystem from_json(const nlohmann::json& doc);

  friend bool operator==(const SymbolicSystem&, const SymbolicSystem&) = default;

 private:
  void validate() const;

  std::vector<Layer> layers_;
  std::vector<std::vector<std::vector<int>>> disp_;
};

/// One-sided full r-shift, k = d = 1.
SymbolicSystem full_shift(int alphabet);
/// T((m_1..m_k), x) = f^{m_1+...+m_k}(x) for the full r-shift f.
SymbolicSystem diagonal_system(int alphabet, int k);
/// Z_+^d acting on A^{Z_+^d} by unit translations.
SymbolicSystem shift_field(int alphabet, int dim);
/// All generators act as the identity.
SymbolicSystem trivial_system(int alphabet, int k, int dim = 1);
/// The Z_+-action generated by the single element g of `sys`.
SymbolicSystem single_map(const SymbolicSystem& sys, const LatticeElement& g);
/// Same action, alphabet of every layer unchanged; used for relabelings.
SymbolicSystem with_alphabet(const SymbolicSystem& sys, int layer, int alphabet);

enum class CoverRole { partition, cover };

/// The cylinder partition of the full shift determined by the sites in
/// `coords`. Also a cover (every cylinder is clopen).
struct CoordinatePartition {
  SiteSet coords;
  CoverRole role = CoverRole::partition;

  CoordinatePartition() = default;
  explicit CoordinatePartition(SiteSet c, CoverRole r = CoverRole::partition);
};

SiteSet translate(const SiteSet& s, const SymbolicSystem& sys,
                  const LatticeElement& g);
CoordinatePartition pullback(const CoordinatePartition& a,
                             const LatticeElement& g,
                             const SymbolicSystem& sys);
/// Coordinates of A^n = join over g in N_n of g^{-1}A.
CoordinatePartition join_over(const CoordinatePartition& a,
                              const RegularSystem& gamma, int n,
                              const SymbolicSystem& sys);
/// Layers touched by a site set.
std::vector<int> layers_of(const SiteSet& s);

// --- measures --------------------------------------------------------------

/// Bernoulli (per layer) or Markov (single layer, d = 1) measure.
class MeasureOracle {
 public:
  enum class Kind { bernoulli, markov };

  static MeasureOracle bernoulli(std::vector<double> p);
  static MeasureOracle bernoulli(std::vector<Rational> p);
  /// Independent product: layer l of the phase space uses factors[l].
  static MeasureOracle product(const std::vector<MeasureOracle>& factors);
  static MeasureOracle markov(std::vector<std::vector<double>> transition,
                              std::vector<double> stationary);

  Kind kind() const noexcept { return kind_; }
  int layer_count() const noexcept;
  int alphabet(int layer) const;

  /// Bernoulli vector of a layer.
  const std::vector<double>& probabilities(int layer) const;
  /// Exact Bernoulli vector when the inputs were rational.
  const std::optional<std::vector<Rational>>& exact_probabilities(int layer) const;
  bool exact() const noexcept;

  const std::vector<std::vector<double>>& transition() const { return transition_; }
  const std::vector<double>& stationary() const { return stationary_; }

  /// Throws ConfigError when the measure does not fit the system (alphabet
  /// or layer mismatch, Markov on d > 1 or several layers).
  void check_compatible(const SymbolicSystem& sys) const;

  /// Relabels symbols of `layer`: symbol s becomes permutation[s].
  MeasureOracle permuted(int layer, const std::vector<int>& permutation) const;

  nlohmann::json to_json() const;
  static MeasureOracle from_json(const nlohmann::json& doc);

 private:
  Kind kind_ = Kind::bernoulli;
  std::vector<std::vector<double>> p_;
  std::vector<std::optional<std::vector<Rational>>> exact_p_;
  std::vector<std::vector<double>> transition_;
  std::vector<double> stationary_;
};

/// P^gap for a Markov measure; entries summed in an order-free way so that
/// relabeling the alphabet permutes the result exactly.
std::vector<std::vector<double>> transition_power(const MeasureOracle& mu,
                                                  int gap);

/// mu(cylinder fixing w on S). Bernoulli: product of marginals; Markov:
/// chain marginal through powers of the transition matrix over the gaps.
double cylinder_measure(const MeasureOracle& mu, const SiteSet& s,
                        const Word& w);
/// log mu(cylinder); -inf for null cylinders. Safe against underflow.
double log_cylinder_measure(const MeasureOracle& mu, const SiteSet& s,
                            const Word& w);
/// Exact cylinder measure; requires a Bernoulli measure with rational inputs.
Rational cylinder_measure_exact(const MeasureOracle& mu, const SiteSet& s,
                                const Word& w);

/// Draws a word on S with law mu restricted to S. Deterministic in `seed`.
Word sample_point(const MeasureOracle& mu, const SiteSet& s,
                  std::uint64_t seed);
/// `count` independent draws from one seeded stream, drawn in order.
std::vector<Word> sample_points(const MeasureOracle& mu, const SiteSet& s,
                                std::size_t count, std::uint64_t seed);

/// Calls fn(word) for every word on S, last site varying fastest.
/// Throws BudgetError if the number of words exceeds `budget`.
template <class Fn>
void for_each_word(const SymbolicSystem& sys, const SiteSet& s,
                   std::uint64_t budget, Fn&& fn);

/// Number of words on S (product of layer alphabets), saturating at
/// UINT64_MAX.
std::uint64_t word_count(const SymbolicSystem& sys, const SiteSet& s);

/// product_system(sys1, sys2, mu1, mu2): layers concatenated, generators of
/// sys1 then sys2 acting componentwise. Both measures must be Bernoulli.
struct ProductSystem {
  SymbolicSystem system;
  MeasureOracle measure;
};
ProductSystem product_system(const SymbolicSystem& first,
                             const SymbolicSystem& second,
                             const MeasureOracle& mu1,
                             const MeasureOracle& mu2);

/// Joint law of the symbol pair at a shared site of two Bernoulli layers,
/// pair (a, b) encoded as a * r2 + b.
std::vector<double> pair_alphabet_vector(const MeasureOracle& product_measure,
                                         int first_layer, int second_layer);

// --- finite truncations ----------------------------------------------------

constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 20;

/// Sites of gx visible from a window: entry j holds the index of the window
/// site j + delta(g), or -1 if that site is outside the window.
struct ShiftMap {
  std::vector<int> source;
};

/// Patterns on the window [0, L]^d of every layer, with the induced metric
/// and the induced (partial) generator maps.
class FiniteApproximation {
 public:
  /// Explicit point list (each aligned with the window sites).
  FiniteApproximation(SymbolicSystem sys, int length,
                      std::vector<Word> points);

  const SymbolicSystem& system() const noexcept { return sys_; }
  int length() const noexcept { return length_; }
  const SiteSet& sites() const noexcept { return sites_; }
  std::size_t size() const noexcept { return count_; }
  std::span<const std::uint8_t> point(std::size_t i) const;
  Word word(std::size_t i) const;
  /// Index of a site in the window, or -1.
  int index_of(const Site& s) const;

  /// Induced metric; agrees with the full-shift metric whenever the
  /// deciding site lies in the window.
  double distance(std::size_t i, std::size_t j) const;

  ShiftMap shift_map(const LatticeElement& g) const;
  /// Smallest sup-norm of a site of gx that is not visible in the window
  /// (INT_MAX if the whole window is visible, i.e. g acts trivially).
  int visible_radius(const LatticeElement& g) const;
  /// Distance between gx and gy measured on the visible sites of gx; 0 if
  /// they agree on all of them (the caller must check visible_radius).
  double shifted_distance(std::size_t i, std::size_t j,
                          const ShiftMap& map) const;

  /// Point table (point_id, site, symbol) and pairwise metric (i, j, d).
  void write_points_csv(std::ostream& out) const;
  void write_metric_csv(std::ostream& out) const;

 private:
  SymbolicSystem sys_;
  int length_;
  SiteSet sites_;
  std::vector<int> norms_;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> symbols_;  // count_ x sites_.size()
};

/// Window [0, L]^d of every layer of `sys`.
SiteSet window_sites(const SymbolicSystem& sys, int length);

/// All r^{|W|} patterns on the window, enumerated in word order.
FiniteApproximation truncate(const SymbolicSystem& sys, int length,
                             std::uint64_t budget = kDefaultEnumerationBudget);

// --- implementation of templates --------------------------------------------

template <class Fn>
void for_each_word(const SymbolicSystem& sys, const SiteSet& s,
                   std::uint64_t budget, Fn&& fn) {
  const auto total = word_count(sys, s);
  if (total > budget) {
    throw BudgetError("cylinder enumeration", total, budget);
  }
  std::vector<int> radix(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    radix[i] = sys.layer(s[i].layer).alphabet;
  }
  Word w(s.size(), 0);
  for (std::uint64_t count = 0; count < total; ++count) {
    fn(static_cast<const Word&>(w));
    for (std::size_t pos = s.size(); pos-- > 0;) {
      if (++w[pos] < radix[pos]) break;
      w[pos] = 0;
    }
  }
}

}  // namespace receptive
