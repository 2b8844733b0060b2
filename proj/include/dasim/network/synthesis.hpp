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
#include <utility>
#include <vector>

#include "dasim/network/circuit.hpp"
#include "dasim/network/gates.hpp"

namespace dasim::network {

/// Analog time needed for a ZZ angle of pi/4 at coupling alpha.
inline double cnot_duration(double alpha) { return M_PI / (4.0 * alpha); }

/// Non-negative ZZ angle for Cphase(phi), reduced into [0, 2 pi).
inline double cphase_zz_angle(double phi) {
    double t = std::fmod(-phi / 4.0, 2.0 * M_PI);
    if (t < 0) {
        t += 2.0 * M_PI;
    }
    return t;
}

/// Single-qubit dressing of CNOT(c -> t) around exp(-i pi/4 Z_c Z_t).
inline SingleQubitLayer cnot_pre_layer(const std::vector<std::pair<int, int>> &ct) {
    SingleQubitLayer l;
    for (const auto &[c, t] : ct) {
        l.gates.push_back({Gate1Kind::h, t});
    }
    return l;
}

inline SingleQubitLayer cnot_post_layer(const std::vector<std::pair<int, int>> &ct) {
    SingleQubitLayer l;
    for (const auto &[c, t] : ct) {
        l.gates.push_back({Gate1Kind::sdg, c});
        l.gates.push_back({Gate1Kind::sdg, t});
        l.gates.push_back({Gate1Kind::h, t});
    }
    return l;
}

/// CNOT (qubit 0 controls qubit 1) from one analog block on a single edge
/// with coupling alpha; equal to CNOT up to a global phase.
inline Circuit synthesize_cnot(double alpha = 1.0) {
    CouplingGraph g(2);
    g.add_edge(0, 1, alpha);
    Circuit c(2, g);
    c.add(cnot_pre_layer({{0, 1}}));
    c.add(AnalogBlock{cnot_duration(alpha)});
    c.add(cnot_post_layer({{0, 1}}));
    return c;
}

/// Local phases completing Cphase(phi) after the ZZ block.
inline SingleQubitLayer cphase_local_layer(const std::vector<std::pair<int, int>> &pairs,
                                           const std::vector<double> &phis) {
    SingleQubitLayer l;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        l.gates.push_back({Gate1Kind::rz, pairs[k].first, phis[k] / 2.0});
        l.gates.push_back({Gate1Kind::rz, pairs[k].second, phis[k] / 2.0});
    }
    return l;
}

/// diag(1, 1, 1, e^{i phi}) up to phase: ZZ block plus Rz(phi/2) on both.
inline Circuit synthesize_cphase(double phi, double alpha = 1.0) {
    CouplingGraph g(2);
    g.add_edge(0, 1, alpha);
    Circuit c(2, g);
    c.add(AnalogBlock{cphase_zz_angle(phi) / alpha});
    c.add(cphase_local_layer({{0, 1}}, {phi}));
    return c;
}

/**
 * Emits F(phi, theta) on every listed pair (a, b) in parallel as three CNOT
 * layers with single-qubit layers in between. `cnot_layer(ct)` receives the
 * (control, target) list of each CNOT layer and appends its realization.
 *
 * The decomposition is F = N(w, w, v) (Rz(theta/2) x Rz(theta/2)) up to
 * phase, where N(x, y, z) = exp(i(x XX + y YY + z ZZ)), w = (pi - phi)/4
 * and v = (pi + theta)/4; N uses the standard three-CNOT circuit.
 */
template <class CnotLayer>
void append_fsg_layer(Circuit &c, const std::vector<std::pair<int, int>> &pairs, const std::vector<FsgParams> &params,
                      CnotLayer &&cnot_layer) {
    std::vector<std::pair<int, int>> ba, ab;
    SingleQubitLayer l0, l1, l2, l3;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto [a, b] = pairs[k];
        const double w = (M_PI - params[k].phi) / 4.0;
        const double v = (M_PI + params[k].theta) / 4.0;
        ba.emplace_back(b, a);
        ab.emplace_back(a, b);
        l0.gates.push_back({Gate1Kind::rz, a, params[k].theta / 2.0});
        l0.gates.push_back({Gate1Kind::rz, b, params[k].theta / 2.0 - M_PI / 2.0});
        l1.gates.push_back({Gate1Kind::rz, a, M_PI / 2.0 - 2.0 * v});
        l1.gates.push_back({Gate1Kind::ry, b, 2.0 * w - M_PI / 2.0});
        l2.gates.push_back({Gate1Kind::ry, b, M_PI / 2.0 - 2.0 * w});
        l3.gates.push_back({Gate1Kind::rz, a, M_PI / 2.0});
    }
    c.add(std::move(l0));
    cnot_layer(ba);
    c.add(std::move(l1));
    cnot_layer(ab);
    c.add(std::move(l2));
    cnot_layer(ba);
    c.add(std::move(l3));
}

/// Ideal CNOTs as one two-qubit layer.
inline void append_digital_cnot_layer(Circuit &c, const std::vector<std::pair<int, int>> &ct) {
    TwoQubitLayer l;
    for (const auto &[ctl, tgt] : ct) {
        l.gates.push_back({Gate2Kind::cnot, ctl, tgt});
    }
    c.add(std::move(l));
}

/// F(phi, theta) on qubits (0, 1) with exactly three CNOTs.
inline Circuit decompose_fsg(const FsgParams &p) {
    Circuit c(2);
    append_fsg_layer(c, {{0, 1}}, {p}, [&](const auto &ct) { append_digital_cnot_layer(c, ct); });
    return c;
}

} // namespace dasim::network
