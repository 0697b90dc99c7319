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

// Minimum set cover by branch and bound, with a greedy fallback.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace receptive {

struct CoverOptions {
  std::uint64_t node_budget = std::uint64_t{1} << 20;
};

struct SetCoverResult {
  std::vector<std::size_t> chosen;  // indices into the input list, ascending
  bool exact = false;
  std::uint64_t nodes = 0;
};

/// Smallest subfamily of `sets` covering {0, ..., universe-1}. Duplicate
/// sets are merged first. Throws DomainError if the family does not cover.
/// When the node budget runs out the best cover found so far is returned
/// with exact = false (an upper bound).
SetCoverResult min_set_cover(std::size_t universe,
                             const std::vector<std::vector<std::uint32_t>>& sets,
                             const CoverOptions& opts = {});

/// Largest-gain greedy cover; ties go to the lowest index.
SetCoverResult greedy_set_cover(std::size_t universe,
                                const std::vector<std::vector<std::uint32_t>>& sets);

}  // namespace receptive
