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
#include <vector>

#include "dasim/topology/coloring.hpp"
#include "dasim/topology/coupling_graph.hpp"
#include "dasim/topology/hadamard.hpp"
#include "dasim/topology/partition.hpp"

namespace dasim::topology {

/// Graph over entities: two entities are adjacent iff some member of one
/// couples to some member of the other. Pair-internal edges vanish.
struct DeformedGraph {
    std::vector<std::vector<int>> members;
    Adjacency adjacency;
};

template <class S>
DeformedGraph deform_graph(const BasicCouplingGraph<S> &g, const EntityPartition &part) {
    part.validate(g);
    DeformedGraph d;
    d.members = part.entities();
    d.adjacency.resize(d.members.size());
    for (const auto &e : g.edges()) {
        const int a = part.entity_of(e.p);
        const int b = part.entity_of(e.q);
        if (a != b) {
            d.adjacency[a].push_back(b);
            d.adjacency[b].push_back(a);
        }
    }
    for (auto &nb : d.adjacency) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return d;
}

/// Hadamard column per entity and per qubit, together with the order m.
struct SequenceAssignment {
    int order = 1;
    int colors_used = 0;
    std::vector<int> entity_column;
    std::vector<int> qubit_column;
};

/**
 * Colors the deformed graph (minimum coloring, canonical labels) and maps
 * color c to column c of H(m), m being the smallest supported order that
 * covers the colors and is at least `min_order`.
 */
template <class S>
SequenceAssignment assign_sequences(const BasicCouplingGraph<S> &g, const EntityPartition &part, int min_order = 1) {
    const DeformedGraph d = deform_graph(g, part);
    const Coloring c = minimum_coloring(d.adjacency);
    SequenceAssignment a;
    a.colors_used = c.n_colors;
    a.order = next_supported_hadamard_order(std::max(c.n_colors, min_order));
    a.entity_column = c.color;
    a.qubit_column.resize(static_cast<std::size_t>(g.n_qubits()));
    for (int q = 0; q < g.n_qubits(); ++q) {
        a.qubit_column[q] = c.color[static_cast<std::size_t>(part.entity_of(q))];
    }
    return a;
}

template <class S>
int required_sequences(const BasicCouplingGraph<S> &g, const EntityPartition &part) {
    return assign_sequences(g, part).order;
}

} // namespace dasim::topology
