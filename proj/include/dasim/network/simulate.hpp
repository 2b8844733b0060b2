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

#include <optional>

#include "dasim/network/circuit.hpp"
#include "dasim/network/gates.hpp"
#include "dasim/noise/channels.hpp"
#include "dasim/qcore/state.hpp"
#include "dasim/qcore/zz.hpp"

namespace dasim::network {

using qcore::Matrix;
using qcore::QuantumState;
using qcore::Unitary;
using qcore::Vector;

struct SimOptions {
    /// Graph the analog blocks actually evolve under (e.g. perturbed
    /// couplings). Defaults to the circuit's device graph.
    const CouplingGraph *execution_graph = nullptr;
    /// Applied to every qubit after each analog block and each two-qubit
    /// layer. Requires a density-matrix input.
    noise::NoiseModel noise{};
};

namespace detail {

inline const CouplingGraph &analog_graph(const Circuit &c, const SimOptions &opt) {
    if (opt.execution_graph) {
        if (opt.execution_graph->n_qubits() != c.n_qubits()) {
            throw DomainError("execution graph width differs from circuit width");
        }
        return *opt.execution_graph;
    }
    return *c.device();
}

/// Applies every element to the columns of `m` (M <- U M). When `rho` mode
/// is requested, each gate is applied as a conjugation and noise is added.
template <bool Density>
void run(const Circuit &c, Matrix &m, const SimOptions &opt) {
    const int n = c.n_qubits();
    std::optional<Vector> phases;
    double phase_duration = -1.0;
    for (const auto &el : c.elements()) {
        if (const auto *l = std::get_if<SingleQubitLayer>(&el)) {
            for (const auto &g : l->gates) {
                const qcore::Mat2 u = gate1_matrix(g);
                if constexpr (Density) {
                    qcore::conjugate_density(m, [&](Matrix &x) { qcore::apply_1q_columns(x, n, g.qubit, u); });
                } else {
                    qcore::apply_1q_columns(m, n, g.qubit, u);
                }
            }
        } else if (const auto *a = std::get_if<AnalogBlock>(&el)) {
            if (a->duration != phase_duration) {
                phases = qcore::zz_phases(analog_graph(c, opt), a->duration);
                phase_duration = a->duration;
            }
            if constexpr (Density) {
                m = phases->asDiagonal() * m * phases->conjugate().asDiagonal();
                noise::apply_noise_all(m, n, opt.noise);
            } else {
                m = phases->asDiagonal() * m;
            }
        } else {
            for (const auto &g : std::get<TwoQubitLayer>(el).gates) {
                const Mat4 u = gate2_matrix(g);
                if constexpr (Density) {
                    qcore::conjugate_density(m, [&](Matrix &x) { qcore::apply_2q_columns(x, n, g.q0, g.q1, u); });
                } else {
                    qcore::apply_2q_columns(m, n, g.q0, g.q1, u);
                }
            }
            if constexpr (Density) {
                noise::apply_noise_all(m, n, opt.noise);
            }
        }
    }
}

} // namespace detail

/// Runs the circuit on a statevector or a density matrix.
inline QuantumState simulate_circuit(const Circuit &c, const QuantumState &input, const SimOptions &opt = {}) {
    if (input.n_qubits() != c.n_qubits()) {
        throw DomainError("state width differs from circuit width");
    }
    qcore::dimension(c.n_qubits());
    if (!input.is_density()) {
        if (opt.noise.active()) {
            throw DomainError("noisy simulation needs a density-matrix input");
        }
        Matrix v = input.amplitudes();
        detail::run<false>(c, v, opt);
        return QuantumState::from_amplitudes(Vector(v.col(0)));
    }
    Matrix rho = input.density();
    detail::run<true>(c, rho, opt);
    return QuantumState::from_density(std::move(rho));
}

/// Full unitary of a noiseless circuit.
inline Unitary circuit_unitary(const Circuit &c, const CouplingGraph *execution_graph = nullptr) {
    const auto d = static_cast<Eigen::Index>(qcore::dimension(c.n_qubits()));
    Matrix m = Matrix::Identity(d, d);
    SimOptions opt;
    opt.execution_graph = execution_graph;
    detail::run<false>(c, m, opt);
    return Unitary::unchecked(std::move(m));
}

} // namespace dasim::network
