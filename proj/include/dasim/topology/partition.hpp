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
#include <string>
#include <utility>
#include <vector>

#include "dasim/qcore/error.hpp"
#include "dasim/topology/coupling_graph.hpp"

namespace dasim::topology {

/**
 * Split of the qubits into interaction pairs (qubits that should accumulate
 * a ZZ angle) and singles. Entities are numbered by their smallest qubit.
 */
class EntityPartition {
  public:
    EntityPartition() = default;

    static EntityPartition from_pairs(int n_qubits, std::vector<std::pair<int, int>> pairs) {
        EntityPartition part;
        part.n_ = n_qubits;
        part.entity_of_.assign(static_cast<std::size_t>(n_qubits), -1);
        for (auto &[p, q] : pairs) {
            if (p > q) {
                std::swap(p, q);
            }
            if (p == q || p < 0 || q >= n_qubits) {
                throw DomainError("invalid interaction pair (" + std::to_string(p) + "," + std::to_string(q) + ")");
            }
        }
        std::sort(pairs.begin(), pairs.end());
        std::vector<char> used(static_cast<std::size_t>(n_qubits), 0);
        for (const auto &[p, q] : pairs) {
            if (used[p] || used[q]) {
                throw DomainError("interaction pairs overlap at (" + std::to_string(p) + "," + std::to_string(q) + ")");
            }
            used[p] = used[q] = 1;
        }
        part.pairs_ = std::move(pairs);
        for (int q = 0; q < n_qubits; ++q) {
            if (!used[q]) {
                part.singles_.push_back(q);
            }
        }
        // Entities in order of their smallest member.
        std::vector<int> pair_at(static_cast<std::size_t>(n_qubits), -1);
        for (std::size_t i = 0; i < part.pairs_.size(); ++i) {
            pair_at[part.pairs_[i].first] = static_cast<int>(i);
        }
        for (int q = 0; q < n_qubits; ++q) {
            if (part.entity_of_[q] >= 0) {
                continue;
            }
            const int e = static_cast<int>(part.entities_.size());
            if (pair_at[q] >= 0) {
                const auto &pr = part.pairs_[pair_at[q]];
                part.entities_.push_back({pr.first, pr.second});
                part.entity_of_[pr.first] = part.entity_of_[pr.second] = e;
            } else {
                part.entities_.push_back({q});
                part.entity_of_[q] = e;
            }
        }
        return part;
    }

    /// Partition with no pairs.
    static EntityPartition singles_only(int n_qubits) { return from_pairs(n_qubits, {}); }

    int n_qubits() const noexcept { return n_; }
    const std::vector<std::pair<int, int>> &pairs() const noexcept { return pairs_; }
    const std::vector<int> &singles() const noexcept { return singles_; }
    const std::vector<std::vector<int>> &entities() const noexcept { return entities_; }
    int entity_of(int q) const { return entity_of_.at(static_cast<std::size_t>(q)); }

    bool is_pair(int p, int q) const {
        if (p > q) {
            std::swap(p, q);
        }
        return std::binary_search(pairs_.begin(), pairs_.end(), std::make_pair(p, q));
    }

    /// Every pair must be a graph edge and the qubit counts must agree.
    template <class S>
    void validate(const BasicCouplingGraph<S> &g) const {
        if (g.n_qubits() != n_) {
            throw DomainError("partition covers " + std::to_string(n_) + " qubits, graph has " +
                              std::to_string(g.n_qubits()));
        }
        for (const auto &[p, q] : pairs_) {
            if (!g.has_edge(p, q)) {
                throw DomainError("interaction pair (" + std::to_string(p) + "," + std::to_string(q) +
                                  ") is not an edge of the graph");
            }
        }
    }

    friend bool operator==(const EntityPartition &a, const EntityPartition &b) {
        return a.n_ == b.n_ && a.pairs_ == b.pairs_;
    }

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> singles_;
    std::vector<std::vector<int>> entities_;
    std::vector<int> entity_of_;
};

} // namespace dasim::topology
