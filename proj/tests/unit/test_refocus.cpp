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

#include <random>

#include "dasim/network/simulate.hpp"
#include "dasim/refocus/compile.hpp"
#include "dasim/refocus/schedule_io.hpp"
#include "dasim/refocus/to_circuit.hpp"
#include "dasim/refocus/verify.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dasim;
using namespace dasim::refocus;
using topology::CouplingGraph;
using topology::EntityPartition;

namespace {

std::vector<std::uint8_t> bits(const std::string &s) {
    std::vector<std::uint8_t> b;
    for (char c : s) {
        b.push_back(c == '1');
    }
    return b;
}

/// Exact target unitary: product over pairs of exp(-i angle Z Z).
qcore::Matrix target_unitary(int n, const CompileTarget<Rational> &t) {
    return qcore::Matrix(target_diagonal(n, t, 1.0).asDiagonal());
}

} // namespace

TEST(CompileUniform, ChainStaggered) {
    const auto g = topology::chain(6);
    const auto part = EntityPartition::from_pairs(6, {{0, 1}, {2, 3}, {4, 5}});
    const auto s = compile_uniform(g, part, 0.8);
    ASSERT_EQ(s.size(), 2u);
    EXPECT_DOUBLE_EQ(s.segments()[0].duration, 0.4);
    EXPECT_DOUBLE_EQ(s.segments()[1].duration, 0.4);
    EXPECT_EQ(s.segments()[0].parity, bits("000000"));
    EXPECT_EQ(s.segments()[1].parity, bits("001100"));
    const auto c = effective_coupling(s, g);
    EXPECT_EQ(c, (std::vector<double>{0.8, 0.0, 0.8, 0.0, 0.8}));
}

TEST(CompileUniform, NoPairsOnCompleteGraphCancelsEverything) {
    for (int n : {2, 3, 4}) {
        const auto g = topology::complete<Rational>(n);
        const auto s = compile_uniform(g, EntityPartition::singles_only(n), Rational(1));
        EXPECT_EQ(static_cast<int>(s.size()), topology::next_supported_hadamard_order(n));
        for (const auto &c : effective_coupling(s, g)) {
            EXPECT_EQ(c, 0);
        }
        EXPECT_TRUE(verify_schedule(s, g, uniform_target(EntityPartition::singles_only(n), Rational(1))).pass);
    }
}

TEST(CompileUniform, SingleEdge) {
    const auto g = topology::chain(2, 1.5);
    const auto s = compile_uniform(g, EntityPartition::from_pairs(2, {{0, 1}}), 2.0);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s.segments()[0].parity, bits("00"));
    EXPECT_DOUBLE_EQ(effective_coupling(s, g)[0], 3.0);
}

TEST(CompileUniform, Errors) {
    CouplingGraph g(3);
    g.add_edge(0, 1, 1.0);
    g.add_edge(1, 2, 2.0);
    EXPECT_THROW(compile_uniform(g, EntityPartition::singles_only(3), 1.0), DomainError);
    const auto c = topology::chain(3);
    EXPECT_THROW(compile_uniform(c, EntityPartition::from_pairs(3, {{0, 2}}), 1.0), DomainError);
    EXPECT_THROW(compile_uniform(c, EntityPartition::singles_only(3), -1.0), DomainError);
    EXPECT_THROW(compile_spread(c, EntityPartition::from_pairs(3, {{0, 1}}), -0.1), DomainError);
}

TEST(EffectiveCoupling, DifferentColumnsCancel) {
    const auto g = topology::chain(2, 1.0);
    RefocusSchedule<double> s(2);
    s.push_back({0.5, bits("00")});
    s.push_back({0.5, bits("01")});
    EXPECT_EQ(effective_coupling(s, g)[0], 0.0);
    RefocusSchedule<double> e(2);
    e.push_back({0.7, bits("00")});
    e.push_back({0.3, bits("11")});
    EXPECT_DOUBLE_EQ(effective_coupling(e, g)[0], 1.0);
}

TEST(EffectiveCoupling, MatchesPhasesOfSimulatedUnitary) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> a(0.5, 2.0), t(0.0, 0.02);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 20; ++trial) {
        CouplingGraph g(4);
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) {
                g.add_edge(p, q, a(rng));
            }
        RefocusSchedule<double> s(4);
        for (int k = 0; k < 4; ++k) {
            Segment<double> seg{t(rng), {}};
            for (int q = 0; q < 4; ++q) {
                seg.parity.push_back(coin(rng));
            }
            s.push_back(seg);
        }
        const auto u = network::circuit_unitary(schedule_to_circuit(s, g)).matrix();
        const auto c = effective_coupling(s, g);
        // Small angles: the phase differences never wrap.
        for (std::size_t e = 0; e < g.edges().size(); ++e) {
            double acc = 0.0;
            for (int x = 0; x < 16; ++x) {
                const int sp = qcore::z_sign(x, 4, g.edges()[e].p) * qcore::z_sign(x, 4, g.edges()[e].q);
                acc += sp * std::arg(u(x, x) / u(0, 0));
            }
            EXPECT_NEAR(-acc / 16, c[e], 1e-12);
        }
    }
}

TEST(CompileSpread, EqualCouplingsReduceToUniform) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto sc = fixtures::random_scenario(seed, 10);
        topology::ExactCouplingGraph g(sc.graph.n_qubits());
        for (const auto &e : sc.graph.edges()) {
            g.add_edge(e.p, e.q, Rational(3, 2));
        }
        const Rational theta(5, 7);
        const auto u = compile_uniform(g, sc.target.partition, theta / Rational(3, 2));
        const auto s = compile_spread(g, sc.target.partition, theta);
        if (sc.target.partition.pairs().empty()) {
            EXPECT_TRUE(s.empty());
            continue;
        }
        EXPECT_EQ(s, u) << sc.label;
    }
}

TEST(CompileSpread, TotalIsSlowestPair) {
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
        const auto sc = fixtures::random_scenario(seed, 10);
        const auto &pairs = sc.target.partition.pairs();
        if (pairs.empty()) {
            continue;
        }
        const Rational theta(3, 4);
        Rational amin = sc.graph.coupling(pairs[0].first, pairs[0].second);
        for (const auto &[p, q] : pairs) {
            amin = std::min(amin, sc.graph.coupling(p, q));
        }
        const auto s = compile_spread(sc.graph, sc.target.partition, theta);
        EXPECT_EQ(s.total_duration(), theta / amin) << sc.label;
    }
}

TEST(CompileSpread, RandomInstancesAreExact) {
    for (std::uint64_t seed = 1000; seed < 1060; ++seed) {
        const auto sc = fixtures::random_scenario(seed, 8);
        const auto s = compile_spread(sc.graph, sc.target);
        const auto rep = verify_schedule(s, sc.graph, sc.target);
        EXPECT_TRUE(rep.pass) << sc.label << ": " << rep.summary();
        if (sc.graph.n_qubits() <= 5) {
            const auto u = network::circuit_unitary(schedule_to_circuit(s, sc.graph)).matrix();
            EXPECT_LT(oracle::phase_distance(u, target_unitary(sc.graph.n_qubits(), sc.target)), 1e-10) << sc.label;
        }
    }
}

TEST(CompileSpread, DegenerateTausShareOneWindow) {
    topology::ExactCouplingGraph g(4);
    g.add_edge(0, 1, Rational(1));
    g.add_edge(1, 2, Rational(1));
    g.add_edge(2, 3, Rational(2));
    const auto part = EntityPartition::from_pairs(4, {{0, 1}, {2, 3}});
    const auto plan = plan_spread(g, uniform_target(part, Rational(1)));
    ASSERT_EQ(plan.windows.size(), 2u);
    EXPECT_EQ(plan.windows[0].duration, Rational(1, 2));
    EXPECT_EQ(plan.windows[0].destroyed, (std::vector<std::pair<int, int>>{{2, 3}}));
    EXPECT_TRUE(plan.windows[1].destroyed.empty());
    // Zero angle on a pair: it sits out the whole operation.
    CompileTarget<Rational> t{part, {Rational(1), Rational(0)}};
    const auto p2 = plan_spread(g, t);
    ASSERT_EQ(p2.windows.size(), 1u);
    EXPECT_EQ(p2.windows[0].destroyed.size(), 1u);
    EXPECT_TRUE(verify_schedule(p2.schedule, g, t).pass);
}

TEST(CompileSpread, DoubleCouplingsPassWithinTolerance) {
    CouplingGraph g(6);
    const double a[] = {1.0, 1.3, 1.1, 2.7, 1.9};
    for (int q = 0; q < 5; ++q) {
        g.add_edge(q, q + 1, a[q]);
    }
    const auto part = EntityPartition::from_pairs(6, {{0, 1}, {2, 3}, {4, 5}});
    const auto t = uniform_target(part, M_PI / 4);
    const auto rep = verify_schedule(compile_spread(g, t), g, t);
    EXPECT_TRUE(rep.pass) << rep.summary();
}

TEST(Verify, FlippedBitNamesIncidentEdges) {
    const auto sc = fixtures::random_scenario(77, 8);
    const auto s = compile_spread(sc.graph, sc.target);
    ASSERT_TRUE(verify_schedule(s, sc.graph, sc.target).pass);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const int q = std::uniform_int_distribution<int>(0, sc.graph.n_qubits() - 1)(rng);
        const auto k = std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng);
        RefocusSchedule<Rational> bad(s.n_qubits());
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto seg = s.segments()[i];
            if (i == k) {
                seg.parity[q] ^= 1;
            }
            bad.push_back(seg);
        }
        const auto rep = verify_schedule(bad, sc.graph, sc.target);
        std::size_t incident = 0;
        for (const auto &e : sc.graph.edges()) {
            incident += (e.p == q || e.q == q);
        }
        EXPECT_EQ(rep.violations.size(), incident);
        EXPECT_EQ(rep.pass, incident == 0);
        for (const auto &v : rep.violations) {
            EXPECT_TRUE(v.p == q || v.q == q);
        }
    }
}

TEST(Verify, HandScheduleChain) {
    const auto ref = fixtures::chain_reference();
    const auto &sc = ref.scenario;
    const auto rep = verify_schedule(ref.schedule, sc.graph, sc.target);
    EXPECT_TRUE(rep.pass) << rep.summary();
    ASSERT_TRUE(rep.unitary_distance.has_value());
    const auto plan = plan_spread(sc.graph, sc.target);
    EXPECT_EQ(plan.windows.size(), 3u);
    for (const auto &w : plan.windows) {
        EXPECT_EQ(w.order, 2);
    }
    EXPECT_TRUE(verify_schedule(plan.schedule, sc.graph, sc.target).pass);
    EXPECT_EQ(plan.schedule.total_duration(), ref.schedule.total_duration());
}

TEST(Verify, HandScheduleGrid) {
    const auto ref = fixtures::grid_reference();
    const auto &sc = ref.scenario;
    const auto rep = verify_schedule(ref.schedule, sc.graph, sc.target);
    EXPECT_TRUE(rep.pass) << rep.summary();
    const auto plan = plan_spread(sc.graph, sc.target);
    EXPECT_EQ(plan.windows.size(), 6u);
    for (const auto &w : plan.windows) {
        EXPECT_LE(w.order, 4);
    }
    EXPECT_TRUE(verify_schedule(plan.schedule, sc.graph, sc.target).pass);
}

TEST(ToCircuit, SingleSegment) {
    RefocusSchedule<double> s(3);
    s.push_back({0.4, bits("000")});
    const auto c = schedule_to_circuit(s, topology::chain(3));
    ASSERT_EQ(c.elements().size(), 1u);
    EXPECT_DOUBLE_EQ(std::get<network::AnalogBlock>(c.elements()[0]).duration, 0.4);
}

TEST(ToCircuit, TwoColumnTrace) {
    RefocusSchedule<double> s(2);
    s.push_back({0.5, bits("00")});
    s.push_back({0.5, bits("01")});
    const auto c = schedule_to_circuit(s, topology::chain(2));
    ASSERT_EQ(c.elements().size(), 4u);
    EXPECT_TRUE(std::holds_alternative<network::AnalogBlock>(c.elements()[0]));
    const auto &x1 = std::get<network::SingleQubitLayer>(c.elements()[1]);
    ASSERT_EQ(x1.gates.size(), 1u);
    EXPECT_EQ(x1.gates[0].qubit, 1);
    EXPECT_EQ(x1.gates[0].kind, network::Gate1Kind::x);
    EXPECT_TRUE(std::holds_alternative<network::AnalogBlock>(c.elements()[2]));
    EXPECT_EQ(std::get<network::SingleQubitLayer>(c.elements()[3]).gates.size(), 1u);
    EXPECT_LT(oracle::phase_distance(network::circuit_unitary(c).matrix(), qcore::Matrix::Identity(4, 4)), 1e-15);
}

TEST(ToCircuit, XLayersOnlyAndParityReturnsEven) {
    const auto sc = fixtures::random_scenario(5, 6);
    const auto s = compile_spread(sc.graph, sc.target);
    const auto c = schedule_to_circuit(s, sc.graph);
    std::vector<int> flips(static_cast<std::size_t>(sc.graph.n_qubits()), 0);
    for (const auto &el : c.elements()) {
        if (const auto *l = std::get_if<network::SingleQubitLayer>(&el)) {
            for (const auto &g : l->gates) {
                EXPECT_EQ(g.kind, network::Gate1Kind::x);
                ++flips[g.qubit];
            }
        }
    }
    for (int f : flips) {
        EXPECT_EQ(f % 2, 0);
    }
}

TEST(ScheduleIo, RoundTrip) {
    const auto ref = fixtures::grid_reference();
    const std::string text = schedule_to_string(ref.schedule);
    EXPECT_EQ(schedule_from_string<Rational>(text), ref.schedule);
    RefocusSchedule<double> d(3);
    d.push_back({0.1, bits("010")});
    d.push_back({1.0 / 3.0, bits("111")});
    EXPECT_EQ(schedule_from_string<double>(schedule_to_string(d)), d);
    // Headerless files infer the width from the first bitstring.
    EXPECT_EQ(schedule_from_string<Rational>("t_i 1/8 parities 0110\n").n_qubits(), 4);
}

TEST(ScheduleIo, Errors) {
    EXPECT_THROW(schedule_from_string<Rational>(""), ParseError);
    EXPECT_THROW(schedule_from_string<Rational>("qubits 2\nt_i 1 parities 012\n"), Error);
    EXPECT_THROW(schedule_from_string<Rational>("qubits 2\nt_i 1 parities 0\n"), Error);
    try {
        schedule_from_string<Rational>("qubits 2\nt_i 1 parities 00\nt_i x parities 01\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 3);
    }
}
