// Copyright 2026 The dasim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace dasim::topology {

using Adjacency = std::vector<std::vector<int>>;

struct Coloring {
    std::vector<int> color;
    int n_colors = 0;
};

inline bool is_proper_coloring(const Adjacency &adj, const std::vector<int> &color) {
    for (std::size_t v = 0; v < adj.size(); ++v) {
        for (int u : adj[v]) {
            if (color[v] == color[static_cast<std::size_t>(u)]) {
                return false;
            }
        }
    }
    return true;
}

/// Renumber colors by first appearance in vertex order (vertex 0 gets 0).
inline Coloring canonical_colors(const std::vector<int> &color) {
    Coloring out;
    out.color.resize(color.size());
    std::vector<int> map;
    for (std::size_t v = 0; v < color.size(); ++v) {
        const auto c = static_cast<std::size_t>(color[v]);
        if (c >= map.size()) {
            map.resize(c + 1, -1);
        }
        if (map[c] < 0) {
            map[c] = out.n_colors++;
        }
        out.color[v] = map[c];
    }
    return out;
}

/// First-fit coloring in descending-degree order, ties by vertex index.
inline Coloring greedy_coloring(const Adjacency &adj) {
    const std::size_t n = adj.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return adj[a].size() > adj[b].size(); });
    std::vector<int> color(n, -1);
    std::vector<char> taken;
    for (int v : order) {
        taken.assign(adj[v].size() + 1, 0);
        for (int u : adj[v]) {
            const int c = color[static_cast<std::size_t>(u)];
            if (c >= 0 && static_cast<std::size_t>(c) < taken.size()) {
                taken[c] = 1;
            }
        }
        int c = 0;
        while (taken[c]) {
            ++c;
        }
        color[v] = c;
    }
    return canonical_colors(color);
}

namespace detail {

/// Backtracking k-colorability with DSATUR vertex selection. Colors are
/// tried in increasing order and a new color is opened only one at a time,
/// which removes permutation symmetry. Returns false on failure or when the
/// node budget runs out (`exhausted` reports which).
class KColorSearch {
  public:
    KColorSearch(const Adjacency &adj, int k, std::uint64_t budget)
        : adj_(adj), k_(k), budget_(budget), color_(adj.size(), -1),
          forbid_(adj.size(), std::vector<int>(static_cast<std::size_t>(k), 0)), sat_(adj.size(), 0) {}

    bool run() { return step(0, 0); }
    bool exhausted() const noexcept { return exhausted_; }
    const std::vector<int> &color() const noexcept { return color_; }

  private:
    bool step(std::size_t colored, int used) {
        if (colored == adj_.size()) {
            return true;
        }
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        int v = -1;
        for (std::size_t u = 0; u < adj_.size(); ++u) {
            if (color_[u] >= 0) {
                continue;
            }
            if (v < 0 || sat_[u] > sat_[v] || (sat_[u] == sat_[v] && adj_[u].size() > adj_[v].size())) {
                v = static_cast<int>(u);
            }
        }
        const int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (forbid_[v][c] > 0) {
                continue;
            }
            assign(v, c, +1);
            if (step(colored + 1, std::max(used, c + 1))) {
                return true;
            }
            assign(v, c, -1);
            if (exhausted_) {
                return false;
            }
        }
        return false;
    }

    void assign(int v, int c, int sign) {
        color_[v] = sign > 0 ? c : -1;
        for (int u : adj_[v]) {
            int &f = forbid_[u][c];
            if (sign > 0 && f++ == 0) {
                ++sat_[u];
            } else if (sign < 0 && --f == 0) {
                --sat_[u];
            }
        }
    }

    const Adjacency &adj_;
    int k_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<int> color_;
    std::vector<std::vector<int>> forbid_;
    std::vector<int> sat_;
};

} // namespace detail

/**
 * Minimum coloring by exact search, starting from the greedy bound and
 * tightening one color at a time. If the search budget runs out the best
 * coloring found so far is returned, so the result is always proper and
 * never worse than greedy_coloring. Deterministic.
 */
inline Coloring minimum_coloring(const Adjacency &adj, std::uint64_t node_budget = 2'000'000) {
    Coloring best = greedy_coloring(adj);
    for (int k = best.n_colors - 1; k >= 1; --k) {
        detail::KColorSearch search(adj, k, node_budget);
        if (!search.run()) {
            break;
        }
        best = canonical_colors(search.color());
    }
    return best;
}

} // namespace dasim::topology
