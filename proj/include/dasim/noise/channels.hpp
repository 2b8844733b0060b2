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
#include <string>
#include <string_view>
#include <vector>

#include "dasim/qcore/linalg.hpp"
#include "dasim/qcore/state.hpp"

namespace dasim::noise {

using qcore::Mat2;
using qcore::Matrix;
using qcore::QuantumState;

enum class ChannelKind { none, depolarizing, amplitude_damping, phase_damping };

inline std::string_view channel_name(ChannelKind k) {
    switch (k) {
    case ChannelKind::none: return "none";
    case ChannelKind::depolarizing: return "depolarizing";
    case ChannelKind::amplitude_damping: return "amplitude_damping";
    case ChannelKind::phase_damping: return "phase_damping";
    }
    return "none";
}

inline ChannelKind parse_channel(std::string_view s) {
    if (s == "none") return ChannelKind::none;
    if (s == "depolarizing" || s == "p") return ChannelKind::depolarizing;
    if (s == "amplitude_damping" || s == "gamma") return ChannelKind::amplitude_damping;
    if (s == "phase_damping" || s == "lambda") return ChannelKind::phase_damping;
    throw DomainError("unknown noise channel '" + std::string(s) + "'");
}

/// One single-qubit channel applied to every qubit after each entangler.
struct NoiseModel {
    ChannelKind kind = ChannelKind::none;
    double param = 0.0;

    bool active() const noexcept { return kind != ChannelKind::none; }
};

inline void check_probability(double x, const char *name) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError(std::string(name) + " = " + std::to_string(x) + " outside [0, 1]");
    }
}

inline std::vector<Mat2> depolarizing_kraus(double p) {
    check_probability(p, "depolarizing p");
    const double w = std::sqrt(p / 3.0);
    return {std::sqrt(1.0 - p) * qcore::gates::identity(), w * qcore::gates::x(), w * qcore::gates::y(),
            w * qcore::gates::z()};
}

inline std::vector<Mat2> amplitude_damping_kraus(double gamma) {
    check_probability(gamma, "amplitude damping gamma");
    Mat2 e0 = Mat2::Zero();
    Mat2 e1 = Mat2::Zero();
    e0(0, 0) = 1.0;
    e0(1, 1) = std::sqrt(1.0 - gamma);
    e1(0, 1) = std::sqrt(gamma);
    return {e0, e1};
}

inline std::vector<Mat2> phase_damping_kraus(double lambda) {
    check_probability(lambda, "phase damping lambda");
    Mat2 e0 = Mat2::Zero();
    Mat2 e1 = Mat2::Zero();
    e0(0, 0) = 1.0;
    e0(1, 1) = std::sqrt(1.0 - lambda);
    e1(1, 1) = std::sqrt(lambda);
    return {e0, e1};
}

inline std::vector<Mat2> kraus_operators(const NoiseModel &m) {
    switch (m.kind) {
    case ChannelKind::depolarizing: return depolarizing_kraus(m.param);
    case ChannelKind::amplitude_damping: return amplitude_damping_kraus(m.param);
    case ChannelKind::phase_damping: return phase_damping_kraus(m.param);
    case ChannelKind::none: break;
    }
    return {qcore::gates::identity()};
}

/// rho <- sum_k K rho K^dagger with K acting on qubit q.
inline void apply_kraus(Matrix &rho, int n_qubits, int q, const std::vector<Mat2> &kraus) {
    if (q < 0 || q >= n_qubits) {
        throw DomainError("qubit " + std::to_string(q) + " out of range");
    }
    Matrix acc = Matrix::Zero(rho.rows(), rho.cols());
    for (const Mat2 &k : kraus) {
        Matrix t = rho;
        qcore::conjugate_density(t, [&](Matrix &m) { qcore::apply_1q_columns(m, n_qubits, q, k); });
        acc += t;
    }
    rho = std::move(acc);
}

inline void apply_noise_all(Matrix &rho, int n_qubits, const NoiseModel &m) {
    if (!m.active()) {
        return;
    }
    const auto kraus = kraus_operators(m);
    for (int q = 0; q < n_qubits; ++q) {
        apply_kraus(rho, n_qubits, q, kraus);
    }
}

namespace detail {
inline QuantumState apply_state_channel(const QuantumState &rho, int q, const std::vector<Mat2> &kraus) {
    Matrix m = rho.density();
    apply_kraus(m, rho.n_qubits(), q, kraus);
    return QuantumState::from_density(std::move(m));
}
} // namespace detail

inline QuantumState apply_depolarizing(const QuantumState &rho, int q, double p) {
    return detail::apply_state_channel(rho, q, depolarizing_kraus(p));
}

inline QuantumState apply_amplitude_damping(const QuantumState &rho, int q, double gamma) {
    return detail::apply_state_channel(rho, q, amplitude_damping_kraus(gamma));
}

inline QuantumState apply_phase_damping(const QuantumState &rho, int q, double lambda) {
    return detail::apply_state_channel(rho, q, phase_damping_kraus(lambda));
}

} // namespace dasim::noise
