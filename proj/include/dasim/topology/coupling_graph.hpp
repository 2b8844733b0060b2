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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dasim/qcore/error.hpp"
#include "dasim/qcore/scalar.hpp"

namespace dasim::topology {

/// Undirected coupling p < q with Ising constant alpha > 0.
template <class S>
struct Edge {
    int p;
    int q;
    S alpha;
};

/**
 * Qubit connectivity with one positive coupling constant per edge. An
 * absent edge means the qubits do not interact at all.
 */
template <class S>
class BasicCouplingGraph {
  public:
    using scalar_type = S;

    BasicCouplingGraph() = default;
    explicit BasicCouplingGraph(int n_qubits) : n_(n_qubits), index_(static_cast<std::size_t>(n_qubits) * n_qubits, kNone) {
        if (n_qubits < 0) {
            throw DomainError("negative qubit count");
        }
    }

    void add_edge(int p, int q, S alpha) {
        if (p == q) {
            throw DomainError("self-loop on qubit " + std::to_string(p));
        }
        if (p < 0 || q < 0 || p >= n_ || q >= n_) {
            throw DomainError("edge (" + std::to_string(p) + "," + std::to_string(q) + ") outside qubit range");
        }
        if (!(alpha > 0)) {
            throw DomainError("coupling on edge (" + std::to_string(p) + "," + std::to_string(q) + ") must be positive");
        }
        if (p > q) {
            std::swap(p, q);
        }
        if (has_edge(p, q)) {
            throw DomainError("duplicate edge (" + std::to_string(p) + "," + std::to_string(q) + ")");
        }
        index_[slot(p, q)] = edges_.size();
        index_[slot(q, p)] = edges_.size();
        edges_.push_back({p, q, std::move(alpha)});
    }

    int n_qubits() const noexcept { return n_; }
    const std::vector<Edge<S>> &edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    bool has_edge(int p, int q) const { return edge_index(p, q).has_value(); }

    std::optional<std::size_t> edge_index(int p, int q) const {
        if (p < 0 || q < 0 || p >= n_ || q >= n_ || p == q) {
            return std::nullopt;
        }
        const std::size_t i = index_[slot(p, q)];
        if (i == kNone) {
            return std::nullopt;
        }
        return i;
    }

    const S &coupling(int p, int q) const {
        const auto i = edge_index(p, q);
        if (!i) {
            throw DomainError("no edge (" + std::to_string(p) + "," + std::to_string(q) + ")");
        }
        return edges_[*i].alpha;
    }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
        for (const auto &e : edges_) {
            adj[e.p].push_back(e.q);
            adj[e.q].push_back(e.p);
        }
        for (auto &a : adj) {
            std::sort(a.begin(), a.end());
        }
        return adj;
    }

    bool uniform_couplings() const {
        return std::all_of(edges_.begin(), edges_.end(), [&](const Edge<S> &e) { return e.alpha == edges_.front().alpha; });
    }

    /// Same topology, couplings replaced edge by edge (same order as edges()).
    BasicCouplingGraph with_couplings(const std::vector<S> &alphas) const {
        if (alphas.size() != edges_.size()) {
            throw DomainError("coupling list length does not match edge count");
        }
        BasicCouplingGraph g(n_);
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            g.add_edge(edges_[i].p, edges_[i].q, alphas[i]);
        }
        return g;
    }

    template <class T>
    BasicCouplingGraph<T> convert() const {
        BasicCouplingGraph<T> g(n_);
        for (const auto &e : edges_) {
            if constexpr (std::is_same_v<T, double>) {
                g.add_edge(e.p, e.q, to_double(e.alpha));
            } else {
                g.add_edge(e.p, e.q, T(e.alpha));
            }
        }
        return g;
    }

  private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::size_t slot(int p, int q) const { return static_cast<std::size_t>(p) * n_ + q; }

    int n_ = 0;
    std::vector<Edge<S>> edges_;
    std::vector<std::size_t> index_;
};

using CouplingGraph = BasicCouplingGraph<double>;
using ExactCouplingGraph = BasicCouplingGraph<Rational>;

// ---------------------------------------------------------------------------
// Built-in generators. All couplings equal `alpha`.

template <class S = double>
BasicCouplingGraph<S> chain(int n, S alpha = S(1)) {
    BasicCouplingGraph<S> g(n);
    for (int q = 0; q + 1 < n; ++q) {
        g.add_edge(q, q + 1, alpha);
    }
    return g;
}

/// Two legs of `n_sites` qubits. Qubit 2i is site i of the first leg and
/// qubit 2i+1 site i of the second; rungs join 2i and 2i+1.
template <class S = double>
BasicCouplingGraph<S> ladder(int n_sites, S alpha = S(1)) {
    BasicCouplingGraph<S> g(2 * n_sites);
    for (int i = 0; i < n_sites; ++i) {
        g.add_edge(2 * i, 2 * i + 1, alpha);
        if (i + 1 < n_sites) {
            g.add_edge(2 * i, 2 * i + 2, alpha);
            g.add_edge(2 * i + 1, 2 * i + 3, alpha);
        }
    }
    return g;
}

/// Position of qubit q in a rows x cols grid numbered boustrophedon-style
/// (row 0 left to right, row 1 right to left, ...), so consecutive qubits
/// are always neighbours.
inline std::pair<int, int> grid_position(int q, int cols) {
    const int r = q / cols;
    const int c = (r % 2 == 0) ? q % cols : cols - 1 - q % cols;
    return {r, c};
}

template <class S = double>
BasicCouplingGraph<S> grid(int rows, int cols, S alpha = S(1)) {
    if (rows <= 0 || cols <= 0) {
        throw DomainError("grid dimensions must be positive");
    }
    const int n = rows * cols;
    std::vector<int> at(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        const auto [r, c] = grid_position(q, cols);
        at[static_cast<std::size_t>(r * cols + c)] = q;
    }
    BasicCouplingGraph<S> g(n);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const int q = at[static_cast<std::size_t>(r * cols + c)];
            if (c + 1 < cols) {
                g.add_edge(q, at[static_cast<std::size_t>(r * cols + c + 1)], alpha);
            }
            if (r + 1 < rows) {
                g.add_edge(q, at[static_cast<std::size_t>((r + 1) * cols + c)], alpha);
            }
        }
    }
    return g;
}

/// Most square rows x cols factorization with rows >= 2 (rows <= cols).
inline std::pair<int, int> grid_shape_for(int n) {
    int best = 0;
    for (int r = 2; r * r <= n; ++r) {
        if (n % r == 0) {
            best = r;
        }
    }
    if (best == 0) {
        throw DomainError("no two-dimensional grid with " + std::to_string(n) + " qubits");
    }
    return {best, n / best};
}

template <class S = double>
BasicCouplingGraph<S> complete(int n, S alpha = S(1)) {
    BasicCouplingGraph<S> g(n);
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            g.add_edge(p, q, alpha);
        }
    }
    return g;
}

} // namespace dasim::topology
