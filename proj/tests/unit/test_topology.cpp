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

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "dasim/topology/coloring.hpp"
#include "dasim/topology/coupling_graph.hpp"
#include "dasim/topology/hadamard.hpp"
#include "dasim/topology/partition.hpp"
#include "dasim/topology/sequences.hpp"

using namespace dasim;
using namespace dasim::topology;

namespace {

/// Chromatic number by trying every k-coloring (tiny graphs only).
int brute_chromatic(const Adjacency &adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 0) {
        return 0;
    }
    for (int k = 1; k <= n; ++k) {
        std::vector<int> c(n, 0);
        std::function<bool(int)> go = [&](int v) {
            if (v == n) {
                return true;
            }
            for (int col = 0; col < k; ++col) {
                bool ok = true;
                for (int u : adj[v]) {
                    if (u < v && c[u] == col) {
                        ok = false;
                    }
                }
                if (ok) {
                    c[v] = col;
                    if (go(v + 1)) {
                        return true;
                    }
                }
            }
            return false;
        };
        if (go(0)) {
            return k;
        }
    }
    return n;
}

CouplingGraph random_graph(int n, double p, std::mt19937_64 &rng) {
    std::bernoulli_distribution b(p);
    CouplingGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (b(rng)) {
                g.add_edge(i, j, 1.0);
            }
    return g;
}

/// Random maximal-ish matching on graph edges.
EntityPartition random_pairs(const CouplingGraph &g, std::mt19937_64 &rng) {
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    std::vector<char> used(g.n_qubits(), 0);
    std::vector<std::pair<int, int>> pairs;
    std::bernoulli_distribution take(0.6);
    for (const auto &e : edges) {
        if (!used[e.p] && !used[e.q] && take(rng)) {
            used[e.p] = used[e.q] = 1;
            pairs.emplace_back(e.p, e.q);
        }
    }
    return EntityPartition::from_pairs(g.n_qubits(), pairs);
}

} // namespace

TEST(CouplingGraph, ValidatesEdges) {
    CouplingGraph g(3);
    EXPECT_THROW(g.add_edge(1, 1, 1.0), DomainError);
    EXPECT_THROW(g.add_edge(0, 3, 1.0), DomainError);
    EXPECT_THROW(g.add_edge(0, 1, 0.0), DomainError);
    EXPECT_THROW(g.add_edge(0, 1, -1.0), DomainError);
    g.add_edge(1, 0, 2.0);
    EXPECT_THROW(g.add_edge(0, 1, 1.0), DomainError);
    EXPECT_TRUE(g.has_edge(0, 1));
    EXPECT_EQ(g.edges()[0].p, 0);
    EXPECT_DOUBLE_EQ(g.coupling(1, 0), 2.0);
}

TEST(CouplingGraph, Generators) {
    EXPECT_EQ(chain(6).edge_count(), 5u);
    EXPECT_EQ(complete(5).edge_count(), 10u);
    const auto l = ladder(3);
    EXPECT_EQ(l.n_qubits(), 6);
    EXPECT_EQ(l.edge_count(), 7u);
    EXPECT_TRUE(l.has_edge(0, 1) && l.has_edge(0, 2) && l.has_edge(1, 3) && !l.has_edge(1, 2));
    const auto g = grid(3, 4);
    EXPECT_EQ(g.edge_count(), 17u);
    for (int q = 0; q + 1 < 12; ++q) {
        EXPECT_TRUE(g.has_edge(q, q + 1)) << q;
    }
    EXPECT_TRUE(g.has_edge(0, 7) && g.has_edge(4, 11) && g.has_edge(1, 6) && g.has_edge(5, 10));
    EXPECT_FALSE(g.has_edge(0, 4));
    EXPECT_EQ(grid_shape_for(12), std::make_pair(3, 4));
    EXPECT_EQ(grid_shape_for(8), std::make_pair(2, 4));
    EXPECT_THROW(grid_shape_for(7), DomainError);
}

TEST(Hadamard, SmallOrders) {
    const auto h1 = hadamard_matrix(1);
    EXPECT_EQ(h1(0, 0), 1);
    const auto h2 = hadamard_matrix(2);
    EXPECT_EQ(h2(0, 0), 1);
    EXPECT_EQ(h2(0, 1), 1);
    EXPECT_EQ(h2(1, 0), 1);
    EXPECT_EQ(h2(1, 1), -1);
}

TEST(Hadamard, OrderEightIsTripleKronecker) {
    const int base[2][2] = {{1, 1}, {1, -1}};
    const auto h = hadamard_matrix(8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            int want = 1;
            for (int b = 0; b < 3; ++b) {
                want *= base[(i >> (2 - b)) & 1][(j >> (2 - b)) & 1];
            }
            EXPECT_EQ(h(i, j), want);
        }
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int dot = 0;
            for (int k = 0; k < 8; ++k) {
                dot += h(a, k) * h(b, k);
            }
            EXPECT_EQ(dot, a == b ? 8 : 0);
        }
}

TEST(Hadamard, ColumnsOrthogonalForAllSupportedOrders) {
    for (int m = 1; m <= 64; m *= 2) {
        const auto h = hadamard_matrix(m);
        EXPECT_TRUE(h.verify());
        for (int c1 = 0; c1 < m; ++c1)
            for (int c2 = c1 + 1; c2 < m; ++c2) {
                int dot = 0;
                for (int i = 0; i < m; ++i) {
                    dot += h(i, c1) * h(i, c2);
                }
                EXPECT_EQ(dot, 0);
            }
        for (int i = 0; i < m; ++i) {
            EXPECT_EQ(h(i, 0), 1);
        }
    }
}

TEST(Hadamard, UnsupportedOrderNamesNextOne) {
    try {
        hadamard_matrix(3);
        FAIL();
    } catch (const ConstructionError &e) {
        EXPECT_NE(std::string(e.what()).find("next supported order is 4"), std::string::npos);
    }
    EXPECT_THROW(hadamard_matrix(12), ConstructionError);
    EXPECT_THROW(hadamard_matrix(0), ConstructionError);
}

TEST(Partition, Validation) {
    EXPECT_THROW(EntityPartition::from_pairs(4, {{0, 1}, {1, 2}}), DomainError);
    EXPECT_THROW(EntityPartition::from_pairs(4, {{0, 4}}), DomainError);
    const auto p = EntityPartition::from_pairs(4, {{2, 1}});
    EXPECT_EQ(p.pairs()[0], std::make_pair(1, 2));
    EXPECT_EQ(p.singles(), (std::vector<int>{0, 3}));
    EXPECT_EQ(p.entities().size(), 3u);
    EXPECT_EQ(p.entity_of(2), 1);
    EXPECT_THROW(EntityPartition::from_pairs(4, {{0, 2}}).validate(chain(4)), DomainError);
}

TEST(Deform, NoPairsKeepsGraph) {
    const auto g = grid(2, 3);
    const auto d = deform_graph(g, EntityPartition::singles_only(6));
    EXPECT_EQ(d.adjacency, g.adjacency());
}

TEST(Deform, ChainWithMiddlePair) {
    const auto d = deform_graph(chain(4), EntityPartition::from_pairs(4, {{1, 2}}));
    ASSERT_EQ(d.members.size(), 3u);
    EXPECT_EQ(d.adjacency[0], (std::vector<int>{1}));
    EXPECT_EQ(d.adjacency[1], (std::vector<int>{0, 2}));
    EXPECT_EQ(d.adjacency[2], (std::vector<int>{1}));
}

TEST(Deform, MergedNodeTakesUnionOfNeighbourhoods) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = random_graph(9, 0.4, rng);
        if (!g.has_edge(6, 7)) {
            continue;
        }
        const auto part = EntityPartition::from_pairs(9, {{6, 7}});
        const auto d = deform_graph(g, part);
        std::set<int> want;
        const auto adj = g.adjacency();
        for (int q : {6, 7})
            for (int u : adj[q])
                if (u != 6 && u != 7) {
                    want.insert(part.entity_of(u));
                }
        const auto &got = d.adjacency[part.entity_of(6)];
        EXPECT_EQ(std::set<int>(got.begin(), got.end()), want);
    }
}

TEST(Sequences, ChainOddStageNeedsTwo) {
    const auto part = EntityPartition::from_pairs(6, {{0, 1}, {2, 3}, {4, 5}});
    EXPECT_EQ(required_sequences(chain(6), part), 2);
    const auto a = assign_sequences(chain(6), part);
    EXPECT_EQ(a.qubit_column, (std::vector<int>{0, 0, 1, 1, 0, 0}));
}

TEST(Sequences, GridEvenStageNeedsFour) {
    const auto g = grid(3, 4);
    const auto part = EntityPartition::from_pairs(12, {{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}});
    EXPECT_EQ(required_sequences(g, part), 4);
    const auto a = assign_sequences(g, part);
    std::set<int> triple{a.qubit_column[1], a.qubit_column[3], a.qubit_column[5]};
    EXPECT_EQ(triple.size(), 3u);
}

TEST(Sequences, CompleteFiveEntitiesNeedsEight) {
    const auto part = EntityPartition::from_pairs(7, {{0, 1}, {2, 3}});
    EXPECT_EQ(required_sequences(complete(7), part), 8);
    for (int k = 1; k <= 12; ++k) {
        const int m = required_sequences(complete(k), EntityPartition::singles_only(k));
        EXPECT_GE(m, k);
        EXPECT_LT(m, 2 * k);
    }
}

TEST(Sequences, IsolatedQubitAnyIndex) {
    CouplingGraph g(1);
    const auto a = assign_sequences(g, EntityPartition::singles_only(1));
    EXPECT_EQ(a.order, 1);
    EXPECT_EQ(a.qubit_column[0], 0);
}

TEST(Coloring, ProperAndMinimumOnRandomGraphs) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 3 + trial % 7;
        const auto g = random_graph(n, 0.2 + 0.1 * (trial % 6), rng);
        const auto part = random_pairs(g, rng);
        const auto d = deform_graph(g, part);
        const auto a = assign_sequences(g, part);
        EXPECT_TRUE(is_proper_coloring(d.adjacency, a.entity_column));
        EXPECT_EQ(a.colors_used, brute_chromatic(d.adjacency));
        EXPECT_LE(a.colors_used, a.order);
        for (const auto &[p, q] : part.pairs()) {
            EXPECT_EQ(a.qubit_column[p], a.qubit_column[q]);
        }
    }
}

TEST(Coloring, OddCycleNeedsThreeColoursDespiteCliqueTwo) {
    CouplingGraph g(5);
    for (int q = 0; q < 5; ++q) {
        g.add_edge(q, (q + 1) % 5, 1.0);
    }
    const auto a = assign_sequences(g, EntityPartition::singles_only(5));
    EXPECT_EQ(a.colors_used, 3);
    EXPECT_EQ(a.order, 4);
}

TEST(Sequences, MonotoneUnderEdgeAddition) {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 4 + trial % 6;
        auto g = random_graph(n, 0.3, rng);
        const auto part = random_pairs(g, rng);
        const int before = required_sequences(g, part);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int tries = 0; tries < 20; ++tries) {
            const int a = pick(rng), b = pick(rng);
            if (a != b && !g.has_edge(a, b)) {
                g.add_edge(a, b, 1.0);
                break;
            }
        }
        EXPECT_GE(required_sequences(g, part), before);
    }
}

TEST(Coloring, DeterministicOutput) {
    const auto g = grid(3, 4);
    const auto part = EntityPartition::from_pairs(12, {{0, 1}, {2, 3}, {4, 5}});
    EXPECT_EQ(assign_sequences(g, part).qubit_column, assign_sequences(g, part).qubit_column);
}
