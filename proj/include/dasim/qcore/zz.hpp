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

#include <cmath>
#include <cstdint>

#include "dasim/qcore/linalg.hpp"
#include "dasim/qcore/scalar.hpp"
#include "dasim/qcore/state.hpp"
#include "dasim/topology/coupling_graph.hpp"

namespace dasim::qcore {

/// Diagonal of sum_{(p,q)} alpha_pq Z_p Z_q (the Ising energy per basis state).
template <class S>
Eigen::VectorXd zz_energies(const topology::BasicCouplingGraph<S> &g) {
    const int n = g.n_qubits();
    const auto dim = static_cast<Eigen::Index>(dimension(n));
    Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
    for (const auto &edge : g.edges()) {
        const double a = to_double(edge.alpha);
        const int bp = bit_of(n, edge.p);
        const int bq = bit_of(n, edge.q);
        for (Eigen::Index i = 0; i < dim; ++i) {
            const auto u = static_cast<std::uint64_t>(i);
            e(i) += (((u >> bp) ^ (u >> bq)) & 1U) ? -a : a;
        }
    }
    return e;
}

/// Diagonal of exp(-i t sum alpha_pq Z_p Z_q).
template <class S>
Vector zz_phases(const topology::BasicCouplingGraph<S> &g, double duration) {
    const Eigen::VectorXd e = zz_energies(g);
    Vector d(e.size());
    for (Eigen::Index i = 0; i < e.size(); ++i) {
        d(i) = std::exp(-kI * (e(i) * duration));
    }
    return d;
}

template <class S>
Unitary zz_evolution(const topology::BasicCouplingGraph<S> &g, double duration) {
    if (duration < 0) {
        throw DomainError("negative analog duration");
    }
    return Unitary::unchecked(Matrix(zz_phases(g, duration).asDiagonal()));
}

} // namespace dasim::qcore
