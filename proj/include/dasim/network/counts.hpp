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

#include "dasim/fermion/hamiltonian.hpp"
#include "dasim/network/trotter.hpp"
#include "dasim/refocus/counts.hpp"

namespace dasim::network {

/// Device used for counting: chain, most square snake grid, or complete graph.
inline CouplingGraph count_device(refocus::TopologyKind kind, int n) {
    switch (kind) {
    case refocus::TopologyKind::chain: return topology::chain(n);
    case refocus::TopologyKind::grid: {
        const auto [r, c] = topology::grid_shape_for(n);
        return topology::grid(r, c);
    }
    case refocus::TopologyKind::all_to_all: return topology::complete(n);
    }
    return topology::chain(n);
}

/// Analog blocks in one digital-analog spinless step on `device`.
inline long long measured_entangler_count(const CouplingGraph &device) {
    const auto h = fermion::random_hamiltonian(device.n_qubits(), 1.0, 1);
    return static_cast<long long>(
        trotter_step_spinless(h, 0.05, Backend::digital_analog, device).circuit.analog_block_count());
}

inline long long measured_entangler_count(refocus::TopologyKind kind, int n) {
    return measured_entangler_count(count_device(kind, n));
}

/// CNOTs in one digital spinless step.
inline long long measured_digital_cnot_count(int n) {
    const auto h = fermion::random_hamiltonian(n, 1.0, 1);
    return static_cast<long long>(
        trotter_step_spinless(h, 0.05, Backend::digital).circuit.two_qubit_gate_count(Gate2Kind::cnot));
}

} // namespace dasim::network
