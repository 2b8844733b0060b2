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

#include <cmath>
#include <random>

#include "dasim/qcore/metrics.hpp"
#include "dasim/qcore/scalar.hpp"
#include "dasim/qcore/state.hpp"
#include "dasim/qcore/zz.hpp"
#include "oracles.hpp"

using namespace dasim;
using namespace dasim::qcore;
using topology::CouplingGraph;

namespace {

Matrix zz_oracle(int n, int p, int q, double angle) {
    return oracle::taylor_expm(cplx(0, -angle) *
                               (oracle::embed1(n, p, oracle::pauli('Z')) * oracle::embed1(n, q, oracle::pauli('Z'))));
}

} // namespace

TEST(ZzEvolution, EmptyGraphIsIdentity) {
    CouplingGraph g(3);
    EXPECT_TRUE(zz_evolution(g, 1.234).matrix().isApprox(Matrix::Identity(8, 8), 1e-15));
}

TEST(ZzEvolution, SingleEdgeQuarterPi) {
    CouplingGraph g(2);
    g.add_edge(0, 1, 1.0);
    const Matrix u = zz_evolution(g, M_PI / 4).matrix();
    const cplx m = std::exp(cplx(0, -M_PI / 4));
    const cplx p = std::exp(cplx(0, M_PI / 4));
    EXPECT_NEAR(std::abs(u(0, 0) - m), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(u(1, 1) - p), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(u(2, 2) - p), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(u(3, 3) - m), 0.0, 1e-15);
    EXPECT_NEAR((u - Matrix(u.diagonal().asDiagonal())).norm(), 0.0, 0.0);
}

TEST(ZzEvolution, TwoEdgesMatchProductOracle) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ud(0.2, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
        const double a01 = ud(rng), a12 = ud(rng), t = ud(rng);
        CouplingGraph g(3);
        g.add_edge(0, 1, a01);
        g.add_edge(1, 2, a12);
        const Matrix want_ab = zz_oracle(3, 0, 1, a01 * t) * zz_oracle(3, 1, 2, a12 * t);
        const Matrix want_ba = zz_oracle(3, 1, 2, a12 * t) * zz_oracle(3, 0, 1, a01 * t);
        const Matrix got = zz_evolution(g, t).matrix();
        EXPECT_LT((got - want_ab).norm(), 1e-12);
        EXPECT_LT((got - want_ba).norm(), 1e-12);
    }
}

TEST(ZzEvolution, GroupProperty) {
    auto g = topology::complete(4, 0.7);
    const Matrix a = zz_evolution(g, 0.3).matrix() * zz_evolution(g, 1.1).matrix();
    EXPECT_LT((a - zz_evolution(g, 1.4).matrix()).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(ZzEvolution, XConjugationReversesTime) {
    CouplingGraph g(3);
    g.add_edge(0, 2, 1.3);
    const double t = 0.77;
    const Matrix x0 = embed_1q(3, 0, gates::x());
    const Matrix lhs = x0 * zz_evolution(g, t).matrix() * x0;
    const Matrix rhs = zz_phases(g, -t).asDiagonal();
    EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(ZzEvolution, RejectsTooManyQubits) {
    CouplingGraph g(13);
    EXPECT_THROW(zz_evolution(g, 1.0), ResourceError);
}

TEST(Kernels, EmbeddingsMatchKroneckerOracle) {
    std::mt19937_64 rng(5);
    const Matrix g1 = oracle::random_unitary(2, rng);
    const Matrix g2 = oracle::random_unitary(4, rng);
    for (int q = 0; q < 4; ++q) {
        EXPECT_LT((embed_1q(4, q, Mat2(g1)) - oracle::embed1(4, q, g1)).norm(), 1e-13);
    }
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (a != b) {
                EXPECT_LT((embed_2q(4, a, b, Mat4(g2)) - oracle::embed2(4, a, b, g2)).norm(), 1e-13);
            }
}

TEST(Expm, MatchesTaylorOracle) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix h = oracle::random_hermitian(4, rng);
        const double t = 0.9;
        EXPECT_LT((expm_hermitian(h, t) - oracle::taylor_expm(cplx(0, -t) * h)).norm(), 1e-9);
    }
    Matrix bad = Matrix::Zero(2, 2);
    bad(0, 1) = 1.0;
    EXPECT_THROW(expm_hermitian(bad, 1.0), DomainError);
}

TEST(ProcessFidelity, Examples) {
    std::mt19937_64 rng(9);
    const Matrix u = oracle::random_unitary(4, rng);
    EXPECT_NEAR(process_fidelity(u, u), 1.0, 1e-14);
    EXPECT_NEAR(process_fidelity(Matrix(Matrix::Identity(2, 2)), oracle::pauli('Z')), 0.0, 1e-15);
    EXPECT_THROW(process_fidelity(Matrix(Matrix::Zero(2, 2)), u.topLeftCorner(2, 2)), DomainError);
}

TEST(ProcessFidelity, ColumnMajorFlattening) {
    // [[a, b], [c, d]] flattens to (a, c, b, d); compare with a vector whose
    // overlap only works in that order.
    Matrix a(2, 2), b(2, 2);
    a << 1, 2, 3, 4;
    b << 1, 2, 3, 4;
    const Eigen::Map<const Eigen::VectorXcd> col(a.data(), 4);
    EXPECT_EQ(col(1), cplx(3));
    EXPECT_NEAR(process_fidelity(a, b), 1.0, 1e-15);
}

TEST(ProcessFidelity, SymmetricAndPhaseInvariant) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix a = oracle::random_unitary(4, rng);
        const Matrix b = oracle::random_unitary(4, rng);
        const double f = process_fidelity(a, b);
        EXPECT_NEAR(f, process_fidelity(b, a), 1e-14);
        EXPECT_NEAR(f, process_fidelity(Matrix(a * std::exp(cplx(0, 0.4))), b), 1e-14);
        EXPECT_NEAR(f, process_fidelity(a, Matrix(b * std::exp(cplx(0, -2.1)))), 1e-14);
        EXPECT_NEAR(f, std::norm((a.adjoint() * b).trace()) / 16.0, 1e-12);
    }
}

TEST(StateFidelity, Examples) {
    const auto zero = QuantumState::basis(1, 0);
    const auto one = QuantumState::basis(1, 1);
    EXPECT_NEAR(state_fidelity(zero, zero), 1.0, 1e-15);
    EXPECT_NEAR(state_fidelity(zero.to_density(), one.to_density()), 0.0, 1e-12);
    const auto mixed = QuantumState::from_density(Matrix::Identity(2, 2) / 2.0);
    EXPECT_NEAR(state_fidelity(zero.to_density(), mixed), 0.5, 1e-12);
    EXPECT_NEAR(state_fidelity(mixed, zero.to_density()), 0.5, 1e-12);
    EXPECT_NEAR(state_fidelity(zero, mixed), 0.5, 1e-12);
}

TEST(StateFidelity, SymmetricForMixedStates) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const auto r = QuantumState::from_density(oracle::random_density(4, rng));
        const auto s = QuantumState::from_density(oracle::random_density(4, rng));
        EXPECT_NEAR(state_fidelity(r, s), state_fidelity(s, r), 1e-9);
    }
}

TEST(StateFidelity, BasisStatesAgreeWithOverlap) {
    for (std::uint64_t a = 0; a < 8; ++a)
        for (std::uint64_t b = 0; b < 8; ++b) {
            const auto sa = QuantumState::basis(3, a), sb = QuantumState::basis(3, b);
            const double want = a == b ? 1.0 : 0.0;
            EXPECT_NEAR(state_fidelity(sa, sb), want, 1e-12);
            EXPECT_NEAR(state_fidelity(sa.to_density(), sb.to_density()), want, 1e-12);
        }
}

TEST(StateFidelity, RejectsNonPsd) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.5;
    m(1, 1) = -0.5;
    EXPECT_THROW(QuantumState::from_density(m), DomainError);
}

TEST(StateInvariants, Statevector) {
    Vector v = Vector::Zero(2);
    v(0) = 0.5;
    EXPECT_THROW(QuantumState::from_amplitudes(v), DomainError);
    Vector w = Vector::Zero(3);
    w(0) = 1.0;
    EXPECT_THROW(QuantumState::from_amplitudes(w), DomainError);
}

TEST(Haar, NormAndDeterminism) {
    const auto a = haar_random_state(1, 77);
    EXPECT_NEAR(a.amplitudes().norm(), 1.0, 1e-12);
    const auto b = haar_random_state(5, 123);
    const auto c = haar_random_state(5, 123);
    EXPECT_EQ(b.amplitudes(), c.amplitudes());
    EXPECT_NE(haar_random_state(5, 124).amplitudes(), b.amplitudes());
}

TEST(Haar, MeanBlochVectorNearOrigin) {
    double x = 0, y = 0, z = 0;
    const int n = 10000;
    for (int s = 0; s < n; ++s) {
        const Vector v = haar_random_state(1, derive_seed(2024, s)).amplitudes();
        const cplx c = std::conj(v(0)) * v(1);
        x += 2 * c.real();
        y += 2 * c.imag();
        z += std::norm(v(0)) - std::norm(v(1));
    }
    EXPECT_LT(std::abs(x / n), 0.05);
    EXPECT_LT(std::abs(y / n), 0.05);
    EXPECT_LT(std::abs(z / n), 0.05);
}

TEST(UnitaryDistance, Examples) {
    std::mt19937_64 rng(8);
    const Matrix u = oracle::random_unitary(8, rng);
    EXPECT_NEAR(unitary_distance_up_to_phase(u, u), 0.0, 1e-14);
    EXPECT_NEAR(unitary_distance_up_to_phase(u, Matrix(u * std::exp(cplx(0, M_PI / 7)))), 0.0, 1e-14);
    EXPECT_NEAR(unitary_distance_up_to_phase(Matrix(Matrix::Identity(2, 2)), oracle::pauli('X')), std::sqrt(2.0),
                1e-14);
    const Matrix v = oracle::random_unitary(8, rng);
    EXPECT_NEAR(unitary_distance_up_to_phase(u, v), oracle::phase_distance(u, v), 1e-12);
    EXPECT_NEAR(unitary_distance_up_to_phase(u, v),
                std::sqrt(std::max(0.0, 2.0 - 2.0 * std::abs((u.adjoint() * v).trace()) / 8.0)), 1e-12);
}

TEST(Scalars, Parsing) {
    EXPECT_DOUBLE_EQ(parse_scalar<double>("pi/4"), M_PI / 4);
    EXPECT_DOUBLE_EQ(parse_scalar<double>("3*pi/8"), 3 * M_PI / 8);
    EXPECT_DOUBLE_EQ(parse_scalar<double>("-pi"), -M_PI);
    EXPECT_DOUBLE_EQ(parse_scalar<double>("3/4"), 0.75);
    EXPECT_DOUBLE_EQ(parse_scalar<double>("1.5e-3"), 1.5e-3);
    EXPECT_EQ(parse_scalar<Rational>("6/8"), Rational(3, 4));
    EXPECT_THROW(parse_scalar<Rational>("0.5"), ParseError);
    EXPECT_THROW(parse_scalar<Rational>("1/0"), ParseError);
    EXPECT_THROW(parse_scalar<double>("abc"), ParseError);
    EXPECT_EQ(format_scalar(0.1), "0.1");
    EXPECT_EQ(format_scalar(Rational(3, 8)), "3/8");
}
