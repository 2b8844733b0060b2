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
#include <vector>

#include "dasim/network/circuit.hpp"
#include "dasim/refocus/schedule.hpp"

namespace dasim::refocus {

/// X on every qubit whose parity differs between `from` and `to`.
inline network::SingleQubitLayer parity_flip_layer(const std::vector<std::uint8_t> &from,
                                                   const std::vector<std::uint8_t> &to) {
    network::SingleQubitLayer l;
    for (std::size_t q = 0; q < from.size(); ++q) {
        if (from[q] != to[q]) {
            l.gates.push_back({network::Gate1Kind::x, static_cast<int>(q)});
        }
    }
    return l;
}

/**
 * X layers at parity changes (starting and ending in all-even parity)
 * interleaved with one analog block per nonzero segment. Durations are
 * multiplied by `time_unit`. Empty X layers are omitted.
 */
template <class S>
void append_schedule(network::Circuit &c, const RefocusSchedule<S> &sched, double time_unit = 1.0) {
    if (sched.n_qubits() != c.n_qubits()) {
        throw DomainError("schedule and circuit widths differ");
    }
    std::vector<std::uint8_t> cur(static_cast<std::size_t>(c.n_qubits()), 0);
    for (const auto &seg : sched.segments()) {
        if (is_zero(seg.duration)) {
            continue;
        }
        auto flip = parity_flip_layer(cur, seg.parity);
        if (!flip.gates.empty()) {
            c.add(std::move(flip));
        }
        c.add(network::AnalogBlock{to_double(seg.duration) * time_unit});
        cur = seg.parity;
    }
    auto flip = parity_flip_layer(cur, std::vector<std::uint8_t>(cur.size(), 0));
    if (!flip.gates.empty()) {
        c.add(std::move(flip));
    }
}

template <class S>
network::Circuit schedule_to_circuit(const RefocusSchedule<S> &sched, const topology::BasicCouplingGraph<S> &g,
                                     double time_unit = 1.0) {
    network::Circuit c(g.n_qubits(), g.template convert<double>());
    append_schedule(c, sched, time_unit);
    return c;
}

} // namespace dasim::refocus
