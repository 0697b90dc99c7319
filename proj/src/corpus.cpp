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

#include "receptive/corpus.hpp"

namespace receptive {

CoordinatePartition origin_partition(const SymbolicSystem& sys, CoverRole role) {
  SiteSet s;
  for (int l = 0; l < sys.layer_count(); ++l) {
    s.emplace_back(l, std::vector<int>(static_cast<std::size_t>(sys.layer(l).dim), 0));
  }
  return CoordinatePartition(std::move(s), role);
}

SymbolicSystem layer_product_system(int alphabet) {
  return SymbolicSystem({Layer{alphabet, 1}, Layer{alphabet, 1}},
                        {{{1}, {0}}, {{0}, {1}}});
}

std::vector<CorpusEntry> count_corpus() {
  const auto quarter = MeasureOracle::bernoulli(std::vector<double>{0.25, 0.75});
  std::vector<CorpusEntry> out;
  out.push_back({"full_2_shift", full_shift(2), quarter, 1, 10, 4});
  out.push_back({"full_3_shift", full_shift(3),
                 MeasureOracle::bernoulli(std::vector<double>{0.2, 0.3, 0.5}), 1, 6, 3});
  out.push_back({"diagonal_k2", diagonal_system(2, 2), quarter, 2, 10, 3});
  out.push_back({"layer_product_k2", layer_product_system(),
                 MeasureOracle::product({quarter, MeasureOracle::bernoulli(std::vector<double>{0.5, 0.5})}),
                 2, 5, 2});
  out.push_back({"trivial", trivial_system(2, 1), quarter, 1, 10, 4});
  return out;
}

Word relabeled(const Word& w, const SiteSet& sites,
               const std::vector<std::vector<int>>& perms) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& p = perms.at(static_cast<std::size_t>(sites[i].layer));
    out[i] = p.at(static_cast<std::size_t>(w[i]));
  }
  return out;
}

FiniteApproximation relabeled(const FiniteApproximation& fa,
                              const std::vector<std::vector<int>>& perms) {
  std::vector<Word> points;
  points.reserve(fa.size());
  for (std::size_t i = 0; i < fa.size(); ++i) points.push_back(relabeled(fa.word(i), fa.sites(), perms));
  return FiniteApproximation(fa.system(), fa.length(), std::move(points));
}

MeasureOracle relabeled(const MeasureOracle& mu, const std::vector<std::vector<int>>& perms) {
  MeasureOracle out = mu;
  for (std::size_t l = 0; l < perms.size(); ++l) out = out.permuted(static_cast<int>(l), perms[l]);
  return out;
}

}  // namespace receptive
