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

// Finite records of entropy sequences and their diagnostics.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace receptive {

enum class Normalization { receptive, classical };

std::string to_string(Normalization n);

struct EntropySample {
  int n = 0;
  double raw = 0.0;         // a_n
  double normalized = 0.0;  // a_n / n or a_n / |N_n|
  std::size_t coords = 0;   // size of the coordinate set behind a_n
  /// Per-layer site counts when a_n = sum_l sites[l] * h_l holds exactly.
  std::vector<std::size_t> sites;
};

/// The values a_n for n = 1..n_max. Nothing here claims a limit exists:
/// `headline` is the last normalized value and `slope` the growth rate of
/// a_n over the trailing window.
struct EntropySequence {
  Normalization normalization = Normalization::receptive;
  std::vector<EntropySample> samples;
  double headline = 0.0;
  double slope = 0.0;
  int tail_window = 0;
  bool raw_nondecreasing = true;
  bool normalized_nonincreasing = true;
  std::string system_id;
  std::string quantity = "metric";

  /// Finite-scale estimate of the limit: the trailing growth rate for the
  /// receptive normalization, the headline for the classical one.
  double estimate() const noexcept;
  const EntropySample& at(int n) const;
};

/// Fills headline, slope and the monotonicity flags from `samples`.
/// `tail_fraction` sets the trailing window, ceil(fraction * count) samples
/// but never fewer than two.
void finalize(EntropySequence& seq, double tail_fraction = 0.25);

/// Columns: n, raw_H, normalized, normalization, system_id,
/// partition_coords_size. `scale` converts units at output time only.
void write_csv(std::ostream& out, const EntropySequence& seq,
               double scale = 1.0, bool header = true);

}  // namespace receptive
