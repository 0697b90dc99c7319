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

#include <span>
#include <vector>

namespace receptive {

/// Neumaier-compensated sum of the terms taken in ascending order, so the
/// result depends only on the multiset of terms, not on their order.
double order_free_sum(std::vector<double> terms);

/// Neumaier-compensated sum in the given order.
double compensated_sum(std::span<const double> terms);

/// -sum p_i log p_i in nats, with 0 log 0 = 0. A uniform vector returns
/// log(size) exactly.
double shannon_entropy(std::span<const double> p);

}  // namespace receptive
