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

#include "receptive/clique.hpp"

#include "receptive/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace receptive {

BitGraph::BitGraph(std::size_t n)
    : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

void BitGraph::add_edge(std::size_t i, std::size_t j) {
  if (i >= n_ || j >= n_) throw DomainError("vertex out of range");
  if (i == j) return;
  bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  bits_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
}

bool BitGraph::adjacent(std::size_t i, std::size_t j) const {
  return (row(i)[j / 64] >> (j % 64)) & 1U;
}

std::size_t BitGraph::degree(std::size_t i) const {
  std::size_t d = 0;
  const auto* r = row(i);
  for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(r[w]));
  return d;
}

namespace {

using Bits = std::vector<std::uint64_t>;

std::vector<std::size_t> degree_order(const BitGraph& g) {
  std::vector<std::size_t> deg(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) deg[i] = g.degree(i);
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
  return order;
}

// Graph relabelled so that vertex v of the search is order[v] of the input.
class Search {
 public:
  Search(const BitGraph& g, const std::vector<std::size_t>& order,
         std::uint64_t budget)
      : order_(order), words_(g.words()), adj_(g.size() * g.words(), 0),
        budget_(budget) {
    const std::size_t n = g.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && g.adjacent(order[a], order[b])) {
          adj_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
        }
      }
    }
  }

  void seed(std::vector<std::size_t> clique) { best_ = std::move(clique); }

  bool run() {
    Bits p(words_, 0);
    for (std::size_t v = 0; v < order_.size(); ++v) p[v / 64] |= std::uint64_t{1} << (v % 64);
    expand(p);
    return !aborted_;
  }

  const std::vector<std::size_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  const std::uint64_t* adj(std::size_t v) const { return adj_.data() + v * words_; }

  void expand(Bits p) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    std::vector<std::size_t> verts;
    std::vector<std::size_t> colors;
    Bits uncolored = p;
    std::size_t color = 0;
    while (std::any_of(uncolored.begin(), uncolored.end(), [](auto w) { return w != 0; })) {
      ++color;
      Bits q = uncolored;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w] != 0) {
          const auto bit = static_cast<std::size_t>(std::countr_zero(q[w]));
          const std::size_t v = w * 64 + bit;
          q[w] &= q[w] - 1;
          uncolored[w] &= ~(std::uint64_t{1} << bit);
          const auto* a = adj(v);
          for (std::size_t x = w; x < words_; ++x) q[x] &= ~a[x];
          verts.push_back(v);
          colors.push_back(color);
        }
      }
    }
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (current_.size() + colors[i] <= best_.size()) return;
      const std::size_t v = verts[i];
      current_.push_back(v);
      Bits next(words_);
      bool empty = true;
      const auto* a = adj(v);
      for (std::size_t w = 0; w < words_; ++w) {
        next[w] = p[w] & a[w];
        empty = empty && next[w] == 0;
      }
      if (empty) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      if (aborted_) return;
      p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  const std::vector<std::size_t>& order_;
  std::size_t words_;
  Bits adj_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

std::vector<std::size_t> first_fit(const BitGraph& g,
                                   const std::vector<std::size_t>& order) {
  std::vector<std::size_t> clique;
  for (std::size_t v : order) {
    if (std::all_of(clique.begin(), clique.end(),
                    [&](std::size_t u) { return g.adjacent(u, v); })) {
      clique.push_back(v);
    }
  }
  return clique;
}

}  // namespace

CliqueResult greedy_clique(const BitGraph& g) {
  CliqueResult r;
  if (g.size() == 0) {
    r.exact = true;
    return r;
  }
  r.clique = first_fit(g, degree_order(g));
  std::sort(r.clique.begin(), r.clique.end());
  r.exact = g.size() == 1;
  return r;
}

CliqueResult max_clique(const BitGraph& g, const CliqueOptions& opts) {
  if (g.size() == 0) return CliqueResult{{}, true, 0};
  if (g.size() > opts.vertex_limit) return greedy_clique(g);
  const auto order = degree_order(g);
  Search search(g, order, opts.node_budget);
  // seed with the first-fit clique, expressed in search labels
  std::vector<std::size_t> position(g.size());
  for (std::size_t v = 0; v < order.size(); ++v) position[order[v]] = v;
  std::vector<std::size_t> start;
  for (std::size_t v : first_fit(g, order)) start.push_back(position[v]);
  search.seed(std::move(start));
  CliqueResult r;
  r.exact = search.run();
  r.nodes = search.nodes();
  for (std::size_t v : search.best()) r.clique.push_back(order[v]);
  std::sort(r.clique.begin(), r.clique.end());
  return r;
}

}  // namespace receptive
