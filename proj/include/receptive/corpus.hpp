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

// The fixed system corpus used by the count battery and the relabeling
// checks.

#include "receptive/lattice.hpp"
#include "receptive/symbolic.hpp"

#include <string>
#include <vector>

namespace receptive {

struct CorpusEntry {
  std::string name;
  SymbolicSystem system;
  MeasureOracle measure;
  int k = 1;       // rank of the acting semigroup
  int length = 0;  // truncation window [0, L]^d
  int n_max = 0;   // largest n for brute-force counts

  /// [0, n]^k.
  RegularSystem gamma(int n) const { return standard_system(k, n); }
};

/// Cylinder partition (or cover) on the origin of every layer.
CoordinatePartition origin_partition(const SymbolicSystem& sys,
                                     CoverRole role = CoverRole::partition);

/// Two one-dimensional binary layers, generator i shifting layer i only.
SymbolicSystem layer_product_system(int alphabet = 2);

/// full 2-shift, full 3-shift, diagonal k=2, layer product k=2, trivial.
std::vector<CorpusEntry> count_corpus();

/// Alphabet relabeling of every point of a truncation: symbol a in layer l
/// becomes perms[l][a].
FiniteApproximation relabeled(const FiniteApproximation& fa,
                              const std::vector<std::vector<int>>& perms);

/// Relabels a word aligned with `sites`.
Word relabeled(const Word& w, const SiteSet& sites,
               const std::vector<std::vector<int>>& perms);

/// mu pushed through the relabeling of every layer.
MeasureOracle relabeled(const MeasureOracle& mu,
                        const std::vector<std::vector<int>>& perms);

}  // namespace receptive
