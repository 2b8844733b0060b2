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

// Shared scenario builders for the unit and acceptance suites.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "dasim/refocus/compile.hpp"
#include "dasim/topology/hadamard.hpp"

namespace fixtures {

using dasim::Rational;
using dasim::refocus::CompileTarget;
using dasim::refocus::RefocusSchedule;
using dasim::refocus::Segment;
using dasim::topology::EntityPartition;
using dasim::topology::ExactCouplingGraph;

struct Scenario {
    std::string label;
    ExactCouplingGraph graph;
    CompileTarget<Rational> target;
};

struct HandSchedule {
    Scenario scenario;
    RefocusSchedule<Rational> schedule;
    int windows;
};

/**
 * Builds a schedule from a sequence table. Row 0 keeps every pair active;
 * row k > 0 destroys pair destroyed[k-1]. Entries are 1-based column
 * numbers of H(order). Window k lasts tau of its destroyed pair, row 0 gets
 * what is left of T, and each window is cut into `order` equal intervals.
 */
inline HandSchedule from_table(Scenario sc, const std::vector<std::vector<int>> &rows,
                               const std::vector<std::pair<int, int>> &destroyed, int order) {
    const auto &g = sc.graph;
    const auto &pairs = sc.target.partition.pairs();
    Rational total(0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        total = std::max(total, Rational(sc.target.angles[i] / g.coupling(pairs[i].first, pairs[i].second)));
    }
    std::vector<Rational> len(rows.size());
    Rational rest = total;
    for (std::size_t k = 1; k < rows.size(); ++k) {
        const auto [p, q] = destroyed[k - 1];
        const auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(p, q));
        const Rational theta = sc.target.angles[static_cast<std::size_t>(it - pairs.begin())];
        len[k] = total - theta / g.coupling(p, q);
        rest -= len[k];
    }
    len[0] = rest;
    const auto h = dasim::topology::hadamard_matrix(order);
    RefocusSchedule<Rational> s(g.n_qubits());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        for (int i = 0; i < order; ++i) {
            Segment<Rational> seg{len[k] / order, {}};
            for (int col : rows[k]) {
                seg.parity.push_back(h(i, col - 1) < 0 ? 1 : 0);
            }
            s.push_back(std::move(seg));
        }
    }
    return {std::move(sc), std::move(s), static_cast<int>(rows.size())};
}

/// Six-qubit chain, pairs (0,1) (2,3) (4,5), (0,1) weakest; the other two
/// pairs each sit out one window.
inline HandSchedule chain_reference() {
    ExactCouplingGraph g(6);
    g.add_edge(0, 1, Rational(1));
    g.add_edge(1, 2, Rational(3, 2));
    g.add_edge(2, 3, Rational(20, 19));
    g.add_edge(3, 4, Rational(7, 5));
    g.add_edge(4, 5, Rational(10, 9));
    const auto part = EntityPartition::from_pairs(6, {{0, 1}, {2, 3}, {4, 5}});
    Scenario sc{"chain6", g, dasim::refocus::uniform_target(part, Rational(1))};
    return from_table(std::move(sc),
                      {{1, 1, 2, 2, 1, 1}, {1, 1, 2, 1, 2, 2}, {1, 1, 2, 2, 1, 2}},
                      {{2, 3}, {4, 5}}, 2);
}

/// 3 x 4 snake grid, six pairs, (0,1) weakest; every other pair sits out
/// one window.
inline HandSchedule grid_reference() {
    auto g = dasim::topology::grid<Rational>(3, 4, Rational(1));
    const std::vector<std::pair<int, int>> destroyed = {{2, 3}, {5, 6}, {7, 8}, {9, 10}, {4, 11}};
    std::vector<std::pair<int, int>> pairs = {{0, 1}};
    pairs.insert(pairs.end(), destroyed.begin(), destroyed.end());
    ExactCouplingGraph h(12);
    int other = 0;
    for (const auto &e : g.edges()) {
        const auto it = std::find(destroyed.begin(), destroyed.end(), std::make_pair(e.p, e.q));
        Rational a(1);
        if (it != destroyed.end()) {
            a = Rational(20, 20 - (it - destroyed.begin() + 1)); // tau = k/20
        } else if (!(e.p == 0 && e.q == 1)) {
            a = Rational(5, 4) + Rational(other++, 7);
        }
        h.add_edge(e.p, e.q, a);
    }
    const auto part = EntityPartition::from_pairs(12, pairs);
    Scenario sc{"grid3x4", h, dasim::refocus::uniform_target(part, Rational(1))};
    return from_table(std::move(sc),
                      {{1, 1, 2, 2, 4, 3, 3, 2, 2, 1, 1, 4},
                       {1, 1, 2, 1, 4, 3, 3, 2, 2, 1, 1, 4},
                       {1, 1, 2, 2, 4, 3, 4, 2, 2, 1, 1, 4},
                       {1, 1, 2, 2, 4, 3, 3, 2, 4, 1, 1, 4},
                       {1, 1, 2, 2, 4, 3, 3, 2, 2, 1, 2, 4},
                       {1, 1, 2, 2, 4, 3, 3, 2, 2, 1, 1, 2}},
                      destroyed, 4);
}

/**
 * Random chain / ladder / grid / complete graph on at most `max_n` qubits,
 * random matching as pairs, rational couplings in [1, 4] and rational
 * target angles (shared or per pair).
 */
inline Scenario random_scenario(std::uint64_t seed, int max_n = 12) {
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    ExactCouplingGraph shape;
    std::string label;
    switch (pick(0, 3)) {
    case 0: {
        const int n = pick(2, max_n);
        shape = dasim::topology::chain<Rational>(n);
        label = "chain" + std::to_string(n);
        break;
    }
    case 1: {
        const int s = pick(1, max_n / 2);
        shape = dasim::topology::ladder<Rational>(s);
        label = "ladder" + std::to_string(s);
        break;
    }
    case 2: {
        const int r = pick(2, 3);
        const int c = pick(2, max_n / r);
        shape = dasim::topology::grid<Rational>(r, c);
        label = "grid" + std::to_string(r) + "x" + std::to_string(c);
        break;
    }
    default: {
        const int n = pick(2, max_n);
        shape = dasim::topology::complete<Rational>(n);
        label = "complete" + std::to_string(n);
        break;
    }
    }
    ExactCouplingGraph g(shape.n_qubits());
    for (const auto &e : shape.edges()) {
        g.add_edge(e.p, e.q, Rational(8 + pick(0, 24), 8));
    }
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    std::vector<char> used(static_cast<std::size_t>(g.n_qubits()), 0);
    std::vector<std::pair<int, int>> pairs;
    for (const auto &e : edges) {
        if (!used[e.p] && !used[e.q] && pick(0, 3) > 0) {
            used[e.p] = used[e.q] = 1;
            pairs.emplace_back(e.p, e.q);
        }
    }
    const auto part = EntityPartition::from_pairs(g.n_qubits(), pairs);
    CompileTarget<Rational> target{part, {}};
    const bool shared = pick(0, 1) == 0;
    const Rational theta(pick(1, 12), pick(1, 6));
    for (std::size_t i = 0; i < part.pairs().size(); ++i) {
        target.angles.push_back(shared ? theta : Rational(pick(0, 12), pick(1, 6)));
    }
    return {label, std::move(g), std::move(target)};
}

} // namespace fixtures
