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

/**
 * @file
 * Single Trotter steps built from a fermionic SWAP network: n layers of
 * FSGs on neighbouring positions, alternating (0,1),(2,3),... and
 * (1,2),(3,4),..., so every pair of modes meets once and the mode order
 * ends reversed.
 *
 * Backends:
 *  - fsg: ideal FSG gates;
 *  - digital: each FSG as three ideal CNOTs;
 *  - digital_analog: each CNOT layer as a refocusing schedule on the device
 *    graph plus single-qubit dressing.
 */

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dasim/fermion/hamiltonian.hpp"
#include "dasim/fermion/jordan_wigner.hpp"
#include "dasim/network/circuit.hpp"
#include "dasim/network/synthesis.hpp"
#include "dasim/refocus/compile.hpp"
#include "dasim/refocus/to_circuit.hpp"
#include "dasim/topology/sequences.hpp"

namespace dasim::network {

using fermion::FermionHamiltonian;
using fermion::ModeOrder;
using fermion::SpinfulHamiltonian;

enum class Backend { fsg, digital, digital_analog };

inline std::string_view backend_name(Backend b) {
    switch (b) {
    case Backend::fsg: return "fsg";
    case Backend::digital: return "digital";
    case Backend::digital_analog: return "da";
    }
    return "da";
}

inline Backend parse_backend(std::string_view s) {
    if (s == "da" || s == "digital_analog" || s == "digital-analog") return Backend::digital_analog;
    if (s == "digital") return Backend::digital;
    if (s == "fsg") return Backend::fsg;
    throw DomainError("unknown backend '" + std::string(s) + "' (expected da, digital or fsg)");
}

/// Positions paired in swap-network layer l.
inline std::vector<std::pair<int, int>> swap_layer_pairs(int n, int l) {
    std::vector<std::pair<int, int>> out;
    for (int q = l % 2; q + 1 < n; q += 2) {
        out.emplace_back(q, q + 1);
    }
    return out;
}

struct TrotterStep {
    Circuit circuit;
    ModeOrder final_order;
};

namespace detail {

using PairList = std::vector<std::pair<int, int>>;

/// Appends CNOT layers, and optionally Cphase layers, for one backend.
class LayerLowering {
  public:
    LayerLowering(Circuit &c, Backend backend, int min_order) : c_(c), backend_(backend), min_order_(min_order) {}

    void cnot_layer(const PairList &ct) {
        if (backend_ != Backend::digital_analog) {
            append_digital_cnot_layer(c_, ct);
            return;
        }
        const auto &sched = schedule_for(ct);
        c_.add(cnot_pre_layer(ct));
        refocus::append_schedule(c_, sched);
        c_.add(cnot_post_layer(ct));
    }

    /// Simultaneous Cphase(phi_k) on the given pairs.
    void cphase_layer(const PairList &pairs, const std::vector<double> &phis) {
        if (pairs.empty()) {
            return;
        }
        if (backend_ != Backend::digital_analog) {
            TwoQubitLayer l;
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                l.gates.push_back({Gate2Kind::cphase, pairs[k].first, pairs[k].second, phis[k]});
            }
            c_.add(std::move(l));
            return;
        }
        const auto &g = *c_.device();
        refocus::CompileTarget<double> target{topology::EntityPartition::from_pairs(g.n_qubits(), pairs), {}};
        // Angles must follow the partition's (sorted) pair order.
        for (const auto &pr : target.partition.pairs()) {
            const auto it = std::find_if(pairs.begin(), pairs.end(), [&](const auto &x) {
                return std::minmax(x.first, x.second) == std::minmax(pr.first, pr.second);
            });
            target.angles.push_back(cphase_zz_angle(phis[static_cast<std::size_t>(it - pairs.begin())]));
        }
        refocus::append_schedule(c_, refocus::compile_spread(g, target));
        c_.add(cphase_local_layer(pairs, phis));
    }

  private:
    const refocus::RefocusSchedule<double> &schedule_for(const PairList &ct) {
        PairList key;
        for (auto [a, b] : ct) {
            key.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(key.begin(), key.end());
        auto it = cache_.find(key);
        if (it != cache_.end()) {
            return it->second;
        }
        const auto &g = *c_.device();
        const auto part = topology::EntityPartition::from_pairs(g.n_qubits(), key);
        refocus::RefocusSchedule<double> s =
            g.uniform_couplings()
                ? refocus::compile_uniform(g, part, cnot_duration(g.edges().front().alpha), min_order_)
                : refocus::compile_spread(g, part, M_PI / 4.0, min_order_);
        return cache_.emplace(std::move(key), std::move(s)).first->second;
    }

    Circuit &c_;
    Backend backend_;
    int min_order_;
    std::map<PairList, refocus::RefocusSchedule<double>> cache_;
};

/// Largest sequence count over the distinct CNOT pair sets of a step; every
/// CNOT layer of the step then uses this many intervals.
inline int step_sequence_order(const CouplingGraph &g, const std::vector<PairList> &layers) {
    int m = 1;
    for (const auto &pairs : layers) {
        if (!pairs.empty()) {
            m = std::max(m, topology::required_sequences(g, topology::EntityPartition::from_pairs(g.n_qubits(), pairs)));
        }
    }
    return m;
}

inline void require_edges(const CouplingGraph &g, const std::vector<PairList> &layers, const char *what) {
    for (const auto &pairs : layers)
        for (const auto &[a, b] : pairs)
            if (!g.has_edge(a, b)) {
                throw DomainError(std::string(what) + " needs a device edge between qubits " + std::to_string(a) +
                                  " and " + std::to_string(b));
            }
}

/// One FSG layer of the network on the given qubit pairs.
inline void emit_fsg_layer(Circuit &c, Backend backend, LayerLowering &low, const PairList &qpairs,
                           const std::vector<FsgParams> &params) {
    if (qpairs.empty()) {
        return;
    }
    if (backend == Backend::fsg) {
        TwoQubitLayer l;
        for (std::size_t k = 0; k < qpairs.size(); ++k) {
            l.gates.push_back({Gate2Kind::fsg, qpairs[k].first, qpairs[k].second, params[k].phi, params[k].theta});
        }
        c.add(std::move(l));
        return;
    }
    append_fsg_layer(c, qpairs, params, [&](const PairList &ct) { low.cnot_layer(ct); });
}

inline Circuit make_circuit(int n_qubits, Backend backend, const std::optional<CouplingGraph> &device) {
    if (backend == Backend::digital_analog) {
        if (!device) {
            throw DomainError("the digital-analog backend needs a device graph");
        }
        return Circuit(n_qubits, *device);
    }
    Circuit c(n_qubits);
    if (device) {
        c.set_device(*device);
    }
    return c;
}

} // namespace detail

/**
 * One Trotter step of the spinless Hamiltonian starting from mode order
 * `order` (qubit q holds mode order.mode_at(q)). The FSG on the modes
 * (a, b) uses phi = 2 T_ab dt and theta = -(V_ab + V_ba) dt + pi. A
 * leading Rz layer realizes the on-site terms when any U_n is nonzero.
 */
inline TrotterStep trotter_step_spinless(const FermionHamiltonian &h, double dt, Backend backend,
                                         const std::optional<CouplingGraph> &device = std::nullopt,
                                         std::optional<ModeOrder> order = std::nullopt) {
    h.validate();
    const int n = h.n_modes;
    if (n % 2 != 0 || n < 2) {
        throw DomainError("the spinless swap network needs an even number of modes >= 2");
    }
    ModeOrder cur = order.value_or(ModeOrder::identity(n));
    if (cur.size() != n) {
        throw DomainError("mode order size differs from mode count");
    }
    Circuit c = detail::make_circuit(n, backend, device);
    std::vector<detail::PairList> stages = {swap_layer_pairs(n, 0), swap_layer_pairs(n, 1)};
    int m = 1;
    if (backend == Backend::digital_analog) {
        detail::require_edges(*device, stages, "the digital-analog backend");
        m = detail::step_sequence_order(*device, stages);
    }
    detail::LayerLowering low(c, backend, m);

    if (h.U.cwiseAbs().maxCoeff() > 0.0) {
        SingleQubitLayer l;
        for (int q = 0; q < n; ++q) {
            l.gates.push_back({Gate1Kind::rz, q, -h.U(cur.mode_at(q)) * dt});
        }
        c.add(std::move(l));
    }
    for (int layer = 0; layer < n; ++layer) {
        const auto &pairs = stages[layer % 2];
        std::vector<FsgParams> params;
        for (const auto &[p, q] : pairs) {
            const int a = cur.mode_at(p), b = cur.mode_at(q);
            params.push_back(fsg_params_for(h.T(a, b), h.pair_interaction(a, b), dt));
        }
        detail::emit_fsg_layer(c, backend, low, pairs, params);
        for (const auto &[p, q] : pairs) {
            cur = cur.swapped(p);
        }
    }
    return {std::move(c), cur};
}

/**
 * One Trotter step of the spin-1/2 model on the interleaved ladder (site k
 * of the current order: up on qubit 2k, down on 2k+1). A Cphase layer on
 * the rungs realizes exp(-i V_n n_up n_down dt) with phi = -V_n dt; then
 * the two species run identical swap networks on their legs, so their
 * orders stay aligned. Works for any number of sites.
 */
inline TrotterStep trotter_step_spinful(const SpinfulHamiltonian &h, double dt, Backend backend,
                                        const std::optional<CouplingGraph> &device = std::nullopt,
                                        std::optional<ModeOrder> order = std::nullopt) {
    h.validate();
    const int ns = h.n_sites;
    if (ns < 1) {
        throw DomainError("spin-1/2 model needs at least one site");
    }
    ModeOrder cur = order.value_or(ModeOrder::identity(ns));
    Circuit c = detail::make_circuit(2 * ns, backend, device);

    detail::PairList rungs;
    std::vector<double> phis;
    for (int k = 0; k < ns; ++k) {
        const double v = h.V_onsite(cur.mode_at(k));
        if (v != 0.0) {
            rungs.emplace_back(fermion::up_qubit(k), fermion::down_qubit(k));
            phis.push_back(-v * dt);
        }
    }
    auto leg_pairs = [&](int l) {
        detail::PairList out;
        for (const auto &[p, q] : swap_layer_pairs(ns, l)) {
            out.emplace_back(fermion::up_qubit(p), fermion::up_qubit(q));
            out.emplace_back(fermion::down_qubit(p), fermion::down_qubit(q));
        }
        return out;
    };
    std::vector<detail::PairList> stages = {leg_pairs(0), leg_pairs(1)};
    int m = 1;
    if (backend == Backend::digital_analog) {
        detail::PairList all_rungs;
        for (int k = 0; k < ns; ++k) {
            all_rungs.emplace_back(fermion::up_qubit(k), fermion::down_qubit(k));
        }
        detail::require_edges(*device, {stages[0], stages[1], all_rungs}, "the spin-1/2 digital-analog step");
        m = detail::step_sequence_order(*device, stages);
    }
    detail::LayerLowering low(c, backend, m);
    low.cphase_layer(rungs, phis);

    for (int layer = 0; layer < ns; ++layer) {
        const auto site_pairs = swap_layer_pairs(ns, layer);
        const auto &qpairs = stages[layer % 2];
        std::vector<FsgParams> params;
        for (const auto &[p, q] : site_pairs) {
            const int a = cur.mode_at(p), b = cur.mode_at(q);
            params.push_back(fsg_params_for(h.T_up(a, b), 0.0, dt));
            params.push_back(fsg_params_for(h.U_down(a, b), 0.0, dt));
        }
        detail::emit_fsg_layer(c, backend, low, qpairs, params);
        for (const auto &[p, q] : site_pairs) {
            cur = cur.swapped(p);
        }
    }
    return {std::move(c), cur};
}

} // namespace dasim::network
