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

// Exact maximum clique on dense bitset graphs.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace receptive {

/// Undirected simple graph stored as adjacency bitsets.
class BitGraph {
 public:
  explicit BitGraph(std::size_t n = 0);

  std::size_t size() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }
  void add_edge(std::size_t i, std::size_t j);
  bool adjacent(std::size_t i, std::size_t j) const;
  std::size_t degree(std::size_t i) const;
  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct CliqueOptions {
  std::size_t vertex_limit = 4096;           // larger graphs go greedy
  std::uint64_t node_budget = std::uint64_t{1} << 22;
};

struct CliqueResult {
  std::vector<std::size_t> clique;  // vertex ids, ascending
  bool exact = false;
  std::uint64_t nodes = 0;
};

/// Branch and bound over vertices in descending-degree order with a greedy
/// colouring bound. Falls back to the best clique found (a lower bound,
/// exact = false) past the vertex limit or the node budget.
CliqueResult max_clique(const BitGraph& g, const CliqueOptions& opts = {});

/// First-fit clique in descending-degree order.
CliqueResult greedy_clique(const BitGraph& g);

}  // namespace receptive
