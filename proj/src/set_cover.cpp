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

#include "receptive/set_cover.hpp"

#include "receptive/error.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace receptive {

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t count(const Bits& b) {
  std::size_t c = 0;
  for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t overlap(const Bits& a, const Bits& b) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) c += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
  return c;
}

struct Family {
  std::size_t universe = 0;
  std::size_t words = 0;
  std::vector<Bits> sets;              // distinct sets
  std::vector<std::size_t> original;   // first input index of each
  std::vector<std::vector<std::size_t>> covering;  // element -> sets
};

Family build(std::size_t universe,
             const std::vector<std::vector<std::uint32_t>>& input) {
  Family f;
  f.universe = universe;
  f.words = (universe + 63) / 64;
  std::map<Bits, std::size_t> seen;
  for (std::size_t i = 0; i < input.size(); ++i) {
    Bits b(f.words, 0);
    for (auto e : input[i]) {
      if (e >= universe) throw DomainError("cover element outside the universe");
      b[e / 64] |= std::uint64_t{1} << (e % 64);
    }
    if (count(b) == 0 || seen.count(b) != 0) continue;
    seen.emplace(b, f.sets.size());
    f.sets.push_back(std::move(b));
    f.original.push_back(i);
  }
  f.covering.resize(universe);
  for (std::size_t s = 0; s < f.sets.size(); ++s) {
    for (std::size_t w = 0; w < f.words; ++w) {
      auto bits = f.sets[s][w];
      while (bits != 0) {
        const auto e = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        f.covering[e].push_back(s);
      }
    }
  }
  for (std::size_t e = 0; e < universe; ++e) {
    if (f.covering[e].empty()) throw DomainError("the family does not cover the universe");
  }
  return f;
}

Bits full(const Family& f) {
  Bits b(f.words, ~std::uint64_t{0});
  if (f.universe % 64 != 0) b.back() = (std::uint64_t{1} << (f.universe % 64)) - 1;
  if (f.universe == 0) b.clear();
  return b;
}

std::vector<std::size_t> greedy(const Family& f) {
  Bits uncovered = full(f);
  std::vector<std::size_t> chosen;
  while (count(uncovered) != 0) {
    std::size_t best = 0;
    std::size_t gain = 0;
    for (std::size_t s = 0; s < f.sets.size(); ++s) {
      const auto g = overlap(f.sets[s], uncovered);
      if (g > gain) {
        gain = g;
        best = s;
      }
    }
    chosen.push_back(best);
    for (std::size_t w = 0; w < f.words; ++w) uncovered[w] &= ~f.sets[best][w];
  }
  return chosen;
}

class Search {
 public:
  Search(const Family& f, std::uint64_t budget, std::vector<std::size_t> incumbent)
      : f_(f), budget_(budget), best_(std::move(incumbent)) {
    for (const auto& s : f_.sets) max_size_ = std::max(max_size_, count(s));
  }

  bool run() {
    expand(full(f_));
    return !aborted_;
  }
  const std::vector<std::size_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void expand(const Bits& uncovered) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    const std::size_t left = count(uncovered);
    if (left == 0) {
      if (current_.size() < best_.size()) best_ = current_;
      return;
    }
    const std::size_t bound = current_.size() + (left + max_size_ - 1) / max_size_;
    if (bound >= best_.size()) return;
    // branch on the uncovered element with the fewest covering sets
    std::size_t pick = f_.universe;
    for (std::size_t w = 0; w < f_.words; ++w) {
      auto bits = uncovered[w];
      while (bits != 0) {
        const auto e = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (pick == f_.universe || f_.covering[e].size() < f_.covering[pick].size()) pick = e;
      }
    }
    auto options = f_.covering[pick];
    std::vector<std::size_t> gain(f_.sets.size());
    for (auto s : options) gain[s] = overlap(f_.sets[s], uncovered);
    std::stable_sort(options.begin(), options.end(),
                     [&](std::size_t a, std::size_t b) { return gain[a] > gain[b]; });
    Bits next(f_.words);
    for (auto s : options) {
      for (std::size_t w = 0; w < f_.words; ++w) next[w] = uncovered[w] & ~f_.sets[s][w];
      current_.push_back(s);
      expand(next);
      current_.pop_back();
      if (aborted_) return;
    }
  }

  const Family& f_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::size_t max_size_ = 1;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

SetCoverResult finish(const Family& f, const std::vector<std::size_t>& chosen,
                      bool exact, std::uint64_t nodes) {
  SetCoverResult r;
  for (auto s : chosen) r.chosen.push_back(f.original[s]);
  std::sort(r.chosen.begin(), r.chosen.end());
  r.exact = exact;
  r.nodes = nodes;
  return r;
}

}  // namespace

SetCoverResult greedy_set_cover(std::size_t universe,
                                const std::vector<std::vector<std::uint32_t>>& sets) {
  const auto f = build(universe, sets);
  const auto chosen = greedy(f);
  return finish(f, chosen, chosen.size() <= 1, 0);
}

SetCoverResult min_set_cover(std::size_t universe,
                             const std::vector<std::vector<std::uint32_t>>& sets,
                             const CoverOptions& opts) {
  const auto f = build(universe, sets);
  if (universe == 0) return SetCoverResult{{}, true, 0};
  Search search(f, opts.node_budget, greedy(f));
  const bool exact = search.run();
  return finish(f, search.best(), exact, search.nodes());
}

}  // namespace receptive
