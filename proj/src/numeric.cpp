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

#include "receptive/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace receptive {

double compensated_sum(std::span<const double> terms) {
  double sum = 0.0;
  double carry = 0.0;
  for (double t : terms) {
    const double next = sum + t;
    if (std::fabs(sum) >= std::fabs(t)) {
      carry += (sum - next) + t;
    } else {
      carry += (t - next) + sum;
    }
    sum = next;
  }
  return sum + carry;
}

double order_free_sum(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end());
  return compensated_sum(terms);
}

double shannon_entropy(std::span<const double> p) {
  if (p.empty()) return 0.0;
  if (std::all_of(p.begin(), p.end(), [&](double q) { return q == p.front(); })) {
    return std::log(static_cast<double>(p.size()));
  }
  std::vector<double> terms;
  terms.reserve(p.size());
  for (double q : p) {
    if (q > 0.0) terms.push_back(-q * std::log(q));
  }
  return order_free_sum(std::move(terms));
}

}  // namespace receptive
