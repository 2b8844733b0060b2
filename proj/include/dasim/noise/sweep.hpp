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
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dasim/fermion/hamiltonian.hpp"
#include "dasim/network/simulate.hpp"
#include "dasim/network/synthesis.hpp"
#include "dasim/network/trotter.hpp"
#include "dasim/noise/channels.hpp"
#include "dasim/qcore/metrics.hpp"
#include "dasim/qcore/rng.hpp"

namespace dasim::noise {

using topology::CouplingGraph;

/// Per-edge deviations alpha' = omega * u_e with u_e uniform in [-1, 1].
/// The u_e depend only on the seed, so one seed gives a family of graphs
/// scaled by omega.
struct CouplingPerturbation {
    double omega = 0.0;
    std::vector<double> deviation;
};

inline std::pair<CouplingGraph, CouplingPerturbation> perturb_couplings(const CouplingGraph &g, double omega,
                                                                        std::uint64_t seed) {
    if (!(omega >= 0.0)) {
        throw DomainError("coupling spread omega must be >= 0");
    }
    double amin = INFINITY;
    for (const auto &e : g.edges()) {
        amin = std::min(amin, e.alpha);
    }
    if (!g.edges().empty() && !(omega < amin)) {
        throw DomainError("coupling spread omega = " + std::to_string(omega) +
                          " would allow non-positive couplings (smallest coupling " + std::to_string(amin) + ")");
    }
    Rng rng(seed);
    CouplingPerturbation pert{omega, {}};
    std::vector<double> alpha;
    for (const auto &e : g.edges()) {
        const double d = omega * rng.uniform(-1.0, 1.0);
        pert.deviation.push_back(d);
        alpha.push_back(e.alpha + d);
    }
    return {g.with_couplings(alpha), std::move(pert)};
}

/// Process fidelity of a CNOT compiled for alpha = 1 but run with 1 + r.
inline std::vector<std::pair<double, double>> cnot_infidelity_curve(const std::vector<double> &ratios) {
    const network::Circuit c = network::synthesize_cnot(1.0);
    qcore::Matrix ideal = qcore::Matrix::Zero(4, 4);
    ideal(0, 0) = ideal(1, 1) = ideal(2, 3) = ideal(3, 2) = 1.0;
    std::vector<std::pair<double, double>> out;
    for (double r : ratios) {
        CouplingGraph actual(2);
        actual.add_edge(0, 1, 1.0 + r);
        out.emplace_back(r, qcore::process_fidelity(network::circuit_unitary(c, &actual).matrix(), ideal));
    }
    return out;
}

enum class SweepVariable { omega, depolarizing, amplitude_damping, phase_damping };

inline std::string_view sweep_variable_name(SweepVariable v) {
    switch (v) {
    case SweepVariable::omega: return "omega";
    case SweepVariable::depolarizing: return "p";
    case SweepVariable::amplitude_damping: return "gamma";
    case SweepVariable::phase_damping: return "lambda";
    }
    return "omega";
}

inline SweepVariable parse_sweep_variable(std::string_view s) {
    if (s == "omega") return SweepVariable::omega;
    if (s == "p" || s == "depolarizing") return SweepVariable::depolarizing;
    if (s == "gamma" || s == "amplitude_damping") return SweepVariable::amplitude_damping;
    if (s == "lambda" || s == "phase_damping") return SweepVariable::phase_damping;
    throw DomainError("unknown sweep variable '" + std::string(s) + "'");
}

struct SweepConfig {
    int n_qubits = 6;
    network::Backend backend = network::Backend::digital_analog;
    SweepVariable variable = SweepVariable::depolarizing;
    std::vector<double> grid;
    int n_states = 20;
    std::uint64_t seed = 1;
    double dt = 0.05;
    /// Hamiltonian coefficients are drawn from [-bound, bound].
    double bound = 2.0;
    double alpha = 1.0;
};

struct SweepRow {
    double param;
    double mean_fidelity;
    double stderr_fidelity;
    int n_states;
    std::uint64_t seed;
};

/**
 * One Trotter step of a random spinless Hamiltonian on a chain. Each
 * sample k has its own Haar state and (for omega) its own disorder
 * pattern, both from derive_seed(seed, k) and reused at every grid point.
 * The ideal output is the noiseless circuit on the nominal device.
 */
inline std::vector<SweepRow> trotter_fidelity_sweep(const SweepConfig &cfg) {
    const int n = cfg.n_qubits;
    const bool density = cfg.variable != SweepVariable::omega;
    if (density && n > 8) {
        throw ResourceError("density-matrix sweeps are limited to 8 qubits, got " + std::to_string(n));
    }
    if (n > 12) {
        throw ResourceError("statevector sweeps are limited to 12 qubits, got " + std::to_string(n));
    }
    if (cfg.n_states < 1) {
        throw DomainError("n_states must be >= 1");
    }
    const CouplingGraph device = topology::chain(n, cfg.alpha);
    const auto h = fermion::random_hamiltonian(n, cfg.bound, cfg.seed);
    const network::Circuit circuit = network::trotter_step_spinless(h, cfg.dt, cfg.backend, device).circuit;

    std::vector<qcore::QuantumState> inputs, ideal;
    for (int k = 0; k < cfg.n_states; ++k) {
        inputs.push_back(qcore::haar_random_state(n, derive_seed(cfg.seed, static_cast<std::uint64_t>(k))));
        ideal.push_back(network::simulate_circuit(circuit, inputs.back()));
    }

    std::vector<SweepRow> rows;
    for (double x : cfg.grid) {
        std::vector<double> f;
        for (int k = 0; k < cfg.n_states; ++k) {
            network::SimOptions opt;
            if (!density) {
                const auto pert = perturb_couplings(device, x, derive_seed(cfg.seed ^ 0x5bd1e995ULL, k)).first;
                opt.execution_graph = &pert;
                f.push_back(qcore::state_fidelity(ideal[k], network::simulate_circuit(circuit, inputs[k], opt)));
            } else {
                const auto kind = cfg.variable == SweepVariable::depolarizing        ? ChannelKind::depolarizing
                                  : cfg.variable == SweepVariable::amplitude_damping ? ChannelKind::amplitude_damping
                                                                                      : ChannelKind::phase_damping;
                check_probability(x, std::string(sweep_variable_name(cfg.variable)).c_str());
                opt.noise = {kind, x};
                f.push_back(
                    qcore::state_fidelity(ideal[k], network::simulate_circuit(circuit, inputs[k].to_density(), opt)));
            }
        }
        double mean = 0.0;
        for (double v : f) {
            mean += v;
        }
        mean /= static_cast<double>(f.size());
        double var = 0.0;
        for (double v : f) {
            var += (v - mean) * (v - mean);
        }
        const double se = f.size() > 1 ? std::sqrt(var / static_cast<double>(f.size() - 1) / f.size()) : 0.0;
        rows.push_back({x, mean, se, cfg.n_states, cfg.seed});
    }
    return rows;
}

inline void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
    out << "param,mean_fidelity,stderr,n_states,seed\n";
    out.precision(17);
    for (const auto &r : rows) {
        out << r.param << ',' << r.mean_fidelity << ',' << r.stderr_fidelity << ',' << r.n_states << ',' << r.seed
            << '\n';
    }
}

} // namespace dasim::noise
