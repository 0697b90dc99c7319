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

// The acting monoid Z_+^k, regular systems in it, and Folner diagnostics.

#include "receptive/rational.hpp"

#include <json.hpp>

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace receptive {

/// An element g of Z_+^k, written additively.
struct LatticeElement {
  std::vector<int> coords;

  LatticeElement() = default;
  explicit LatticeElement(std::vector<int> c) : coords(std::move(c)) {}
  LatticeElement(std::initializer_list<int> c) : coords(c) {}

  static LatticeElement zero(int k) {
    return LatticeElement(std::vector<int>(static_cast<std::size_t>(k), 0));
  }

  int dim() const noexcept { return static_cast<int>(coords.size()); }
  bool is_identity() const noexcept;

  friend LatticeElement operator+(const LatticeElement& a,
                                  const LatticeElement& b);
  friend LatticeElement operator*(int p, const LatticeElement& a);
  friend auto operator<=>(const LatticeElement&,
                          const LatticeElement&) = default;
  friend bool operator==(const LatticeElement&,
                         const LatticeElement&) = default;
};

std::string to_string(const LatticeElement& g);

/// A sorted, duplicate-free finite subset of Z_+^k.
using LatticeSet = std::vector<LatticeElement>;

LatticeSet normalized(LatticeSet s);
bool contains(const LatticeSet& s, const LatticeElement& g);
bool is_subset(const LatticeSet& a, const LatticeSet& b);

enum class SystemKind { standard, even, scaled, restricted, custom };

std::string to_string(SystemKind kind);

/// Result of verify_regular. When `regular` is false and the failure is a
/// sumset violation, (i, j, g) is the witness: g in N_i + N_j but not in
/// N_{i+j}. A missing identity is reported with `missing_identity`.
struct RegularityReport {
  bool regular = true;
  bool missing_identity = false;
  std::optional<int> i;
  std::optional<int> j;
  std::optional<LatticeElement> g;
};

/// A regular system Gamma = (N_0, ..., N_{n_max}) stored extensionally.
/// Instances are immutable once built.
class RegularSystem {
 public:
  /// Explicit sets; kind = custom. Each set is normalized on entry.
  static RegularSystem custom(int k, std::vector<LatticeSet> sets);

  int k() const noexcept { return k_; }
  int n_max() const noexcept { return static_cast<int>(sets_.size()) - 1; }
  SystemKind kind() const noexcept { return kind_; }
  bool nested() const noexcept { return nested_; }

  /// N_n. Throws DomainError past n_max.
  const LatticeSet& set(int n) const;
  std::size_t size(int n) const { return set(n).size(); }

  /// Scale factor for kind = scaled, moduli for kind = restricted.
  int scale() const noexcept { return scale_; }
  const std::vector<int>& moduli() const noexcept { return moduli_; }
  /// Source system for scaled and restricted kinds.
  const RegularSystem* base() const noexcept { return base_.get(); }

  /// Structured form: kind + parameters, or the explicit element lists.
  nlohmann::json to_json() const;
  static RegularSystem from_json(const nlohmann::json& doc);

  friend bool operator==(const RegularSystem& a, const RegularSystem& b) {
    return a.k_ == b.k_ && a.sets_ == b.sets_;
  }

 private:
  friend RegularSystem standard_system(int, int);
  friend RegularSystem even_system(int);
  friend RegularSystem scaled_system(const RegularSystem&, int, int);
  friend RegularSystem restricted_system(const RegularSystem&,
                                         const std::vector<int>&);

  RegularSystem(int k, SystemKind kind, std::vector<LatticeSet> sets);

  int k_ = 1;
  SystemKind kind_ = SystemKind::custom;
  std::vector<LatticeSet> sets_;
  bool nested_ = false;
  int scale_ = 1;
  std::vector<int> moduli_;
  std::shared_ptr<const RegularSystem> base_;
};

/// N_n = [0, n]^k for n = 0..n_max.
RegularSystem standard_system(int k, int n_max);

/// N_n = {0, 2, ..., 2n} in Z_+: regular but not Folner.
RegularSystem even_system(int n_max);

/// N'_n = N_{pn}. With n_max_out < 0 the longest prefix that fits is used;
/// otherwise p * n_max_out must not exceed gamma.n_max().
RegularSystem scaled_system(const RegularSystem& gamma, int p,
                            int n_max_out = -1);

/// M_n = N_n intersected with p_1 Z_+ x ... x p_k Z_+ (ambient coordinates).
RegularSystem restricted_system(const RegularSystem& gamma,
                                const std::vector<int>& moduli);

/// pN_n = {p g : g in N_n}; the image of gamma under g -> pg.
RegularSystem dilated_system(const RegularSystem& gamma, int p);

/// N_n = N^(1)_n x N^(2)_n in Z_+^{k1 + k2}.
RegularSystem product_system(const RegularSystem& first,
                             const RegularSystem& second);

RegularityReport verify_regular(const RegularSystem& gamma);

/// |N_n symmetric-difference (g + N_n)| / |N_n|, exact.
Rational folner_defect(const RegularSystem& gamma, const LatticeElement& g,
                       int n);

struct FolnerProfile {
  std::vector<Rational> defects;  // index n = 0..n_max
  /// Non-increasing over the computed range and strictly smaller at the end
  /// than at the start.
  bool folner_compatible = false;
};

FolnerProfile folner_profile(const RegularSystem& gamma,
                             const LatticeElement& g);

}  // namespace receptive
