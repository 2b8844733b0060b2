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

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dasim/qcore/metrics.hpp"
#include "dasim/qcore/zz.hpp"
#include "dasim/refocus/compile.hpp"

namespace dasim::refocus {

struct EdgeViolation {
    int p;
    int q;
    bool is_pair;
    std::string expected;
    std::string actual;
};

struct VerifyReport {
    static constexpr double kUnitaryTol = 1e-10;

    bool pass = true;
    std::vector<EdgeViolation> violations;
    /// Distance of the simulated schedule to the target, when computed.
    std::optional<double> unitary_distance;

    std::string summary() const {
        std::ostringstream s;
        s << (pass ? "pass" : "FAIL");
        if (unitary_distance) {
            s << " (unitary distance " << *unitary_distance << ")";
        }
        for (const auto &v : violations) {
            s << "\n  edge (" << v.p << "," << v.q << ") " << (v.is_pair ? "pair" : "spectator") << ": expected "
              << v.expected << ", got " << v.actual;
        }
        return s.str();
    }
};

/// Diagonal of the schedule's unitary: product over segments of the ZZ
/// evolution conjugated by X on the odd-parity qubits.
template <class S>
qcore::Vector schedule_diagonal(const RefocusSchedule<S> &sched, const BasicCouplingGraph<S> &g, double time_unit) {
    const int n = g.n_qubits();
    const auto dim = static_cast<Eigen::Index>(qcore::dimension(n));
    const Eigen::VectorXd energy = qcore::zz_energies(g);
    Eigen::VectorXd angle = Eigen::VectorXd::Zero(dim);
    for (const auto &seg : sched.segments()) {
        std::uint64_t mask = 0;
        for (int q = 0; q < n; ++q) {
            if (seg.parity[q]) {
                mask |= std::uint64_t{1} << qcore::bit_of(n, q);
            }
        }
        const double t = to_double(seg.duration) * time_unit;
        for (Eigen::Index i = 0; i < dim; ++i) {
            angle(i) += energy(static_cast<Eigen::Index>(static_cast<std::uint64_t>(i) ^ mask)) * t;
        }
    }
    qcore::Vector d(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        d(i) = std::exp(-qcore::kI * angle(i));
    }
    return d;
}

/// Diagonal of prod over pairs of exp(-i angle Z_p Z_q).
template <class S>
qcore::Vector target_diagonal(int n, const CompileTarget<S> &target, double time_unit) {
    const auto dim = static_cast<Eigen::Index>(qcore::dimension(n));
    qcore::Vector d(dim);
    const auto &pairs = target.partition.pairs();
    for (Eigen::Index i = 0; i < dim; ++i) {
        double a = 0.0;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            const int s = qcore::z_sign(static_cast<std::uint64_t>(i), n, pairs[k].first) *
                          qcore::z_sign(static_cast<std::uint64_t>(i), n, pairs[k].second);
            a += s * to_double(target.angles[k]) * time_unit;
        }
        d(i) = std::exp(-qcore::kI * a);
    }
    return d;
}

/**
 * Checks that every pair edge accumulates exactly its target angle and every
 * other edge exactly zero (rational: exact; double: within 1e-12). For
 * n <= unitary_check_max the schedule unitary is also compared with the
 * target product of ZZ exponentials; durations are scaled by `time_unit`
 * for that check.
 */
template <class S>
VerifyReport verify_schedule(const RefocusSchedule<S> &sched, const BasicCouplingGraph<S> &g,
                             const CompileTarget<S> &target, double time_unit = 1.0, int unitary_check_max = 6) {
    target.partition.validate(g);
    if (target.angles.size() != target.partition.pairs().size()) {
        throw DomainError("target angle list does not match the pair list");
    }
    VerifyReport rep;
    const auto c = effective_coupling(sched, g);
    const auto &edges = g.edges();
    const auto &pairs = target.partition.pairs();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto &e = edges[i];
        S want(0);
        bool is_pair = false;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (pairs[k].first == e.p && pairs[k].second == e.q) {
                want = target.angles[k];
                is_pair = true;
            }
        }
        if (!scalar_equal(c[i], want)) {
            rep.pass = false;
            rep.violations.push_back({e.p, e.q, is_pair, format_scalar(want), format_scalar(c[i])});
        }
    }
    if (g.n_qubits() <= unitary_check_max) {
        const qcore::Vector a = schedule_diagonal(sched, g, time_unit);
        const qcore::Vector b = target_diagonal(g.n_qubits(), target, time_unit);
        const double dist =
            qcore::unitary_distance_up_to_phase(qcore::Matrix(a.asDiagonal()), qcore::Matrix(b.asDiagonal()));
        rep.unitary_distance = dist;
        if (!(dist <= VerifyReport::kUnitaryTol)) {
            rep.pass = false;
        }
    }
    return rep;
}

} // namespace dasim::refocus
