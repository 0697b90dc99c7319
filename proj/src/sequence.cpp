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

#include "receptive/sequence.hpp"

#include "receptive/error.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

namespace receptive {

std::string to_string(Normalization n) {
  return n == Normalization::receptive ? "receptive" : "classical";
}

double EntropySequence::estimate() const noexcept {
  return normalization == Normalization::receptive ? slope : headline;
}

const EntropySample& EntropySequence::at(int n) const {
  for (const auto& s : samples) {
    if (s.n == n) return s;
  }
  throw DomainError("no sample at n = " + std::to_string(n));
}

void finalize(EntropySequence& seq, double tail_fraction) {
  auto& s = seq.samples;
  if (s.empty()) throw DomainError("empty entropy sequence");
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i].n <= s[i - 1].n) throw DomainError("samples must increase in n");
  }
  seq.headline = s.back().normalized;
  seq.raw_nondecreasing = true;
  seq.normalized_nonincreasing = true;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i].raw < s[i - 1].raw) seq.raw_nondecreasing = false;
    if (s[i].normalized > s[i - 1].normalized) seq.normalized_nonincreasing = false;
  }
  const auto count = static_cast<int>(s.size());
  int window = static_cast<int>(std::ceil(tail_fraction * count));
  window = std::clamp(window, std::min(2, count), count);
  seq.tail_window = window;
  if (window < 2) {
    seq.slope = 0.0;
    return;
  }
  const auto& first = s[static_cast<std::size_t>(count - window)];
  const auto& last = s.back();
  seq.slope = (last.raw - first.raw) / static_cast<double>(last.n - first.n);
}

void write_csv(std::ostream& out, const EntropySequence& seq, double scale,
               bool header) {
  if (header) {
    out << "n,raw_H,normalized,normalization,system_id,partition_coords_size\n";
  }
  const auto old = out.precision(17);
  for (const auto& s : seq.samples) {
    out << s.n << ',' << s.raw * scale << ',' << s.normalized * scale << ','
        << to_string(seq.normalization) << ',' << seq.system_id << ','
        << s.coords << '\n';
  }
  out.precision(old);
}

}  // namespace receptive
