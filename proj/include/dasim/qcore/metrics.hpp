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

#include <algorithm>
#include <cmath>

#include "dasim/qcore/linalg.hpp"
#include "dasim/qcore/state.hpp"

namespace dasim::qcore {

/**
 * Process fidelity |Col(A)^dag Col(B)|^2 / (|Col(A)|^2 |Col(B)|^2), where
 * Col stacks the columns of a matrix (column-major flattening, so
 * [[a, b], [c, d]] becomes (a, c, b, d)). Works for unitaries and for any
 * channel matrix of matching shape.
 */
inline double process_fidelity(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DomainError("process fidelity of matrices with different shapes");
    }
    // Eigen storage is column-major, so the flat view is exactly Col(.).
    const Eigen::Map<const Vector> ca(a.data(), a.size());
    const Eigen::Map<const Vector> cb(b.data(), b.size());
    const double na = ca.squaredNorm();
    const double nb = cb.squaredNorm();
    if (na == 0.0 || nb == 0.0) {
        throw DomainError("process fidelity undefined for a zero matrix");
    }
    const double overlap = std::norm(ca.dot(cb));
    return std::clamp(overlap / (na * nb), 0.0, 1.0);
}

inline double process_fidelity(const Unitary &a, const Unitary &b) { return process_fidelity(a.matrix(), b.matrix()); }

/**
 * Phase-insensitive distance between unitaries:
 *   min_phi ||A - e^{i phi} B||_F / sqrt(dim) = sqrt(2 - 2 |tr(A^dag B)| / dim).
 *
 * Evaluated through the left-hand form: the right-hand form cancels
 * catastrophically near zero and cannot resolve distances below ~1e-8.
 */
inline double unitary_distance_up_to_phase(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DomainError("distance between matrices with different shapes");
    }
    const cplx overlap = (a.adjoint() * b).trace();
    const cplx phase = std::abs(overlap) > 0.0 ? std::conj(overlap) / std::abs(overlap) : cplx(1.0);
    return (a - phase * b).norm() / std::sqrt(static_cast<double>(a.rows()));
}

inline double unitary_distance_up_to_phase(const Unitary &a, const Unitary &b) {
    return unitary_distance_up_to_phase(a.matrix(), b.matrix());
}

/**
 * Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
 *
 * Statevector arguments are accepted; when either side is pure the result
 * reduces to <psi|sigma|psi> and the square roots are skipped.
 */
inline double state_fidelity(const QuantumState &rho, const QuantumState &sigma) {
    if (rho.n_qubits() != sigma.n_qubits()) {
        throw DomainError("state fidelity of states with different qubit counts");
    }
    if (!rho.is_density() && !sigma.is_density()) {
        return std::clamp(std::norm(rho.amplitudes().dot(sigma.amplitudes())), 0.0, 1.0);
    }
    if (!rho.is_density() || !sigma.is_density()) {
        const Vector &psi = rho.is_density() ? sigma.amplitudes() : rho.amplitudes();
        const Matrix &m = rho.is_density() ? rho.density() : sigma.density();
        if (rho.is_density() ? rho.min_eigenvalue() < -QuantumState::kPsdTol
                             : sigma.min_eigenvalue() < -QuantumState::kPsdTol) {
            throw DomainError("density matrix is not positive semidefinite");
        }
        return std::clamp(psi.dot(m * psi).real(), 0.0, 1.0);
    }
    const Matrix sr = sqrtm_psd(rho.density(), QuantumState::kPsdTol);
    const Matrix inner = sr * sigma.density() * sr;
    Eigen::SelfAdjointEigenSolver<Matrix> es((inner + inner.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
    double tr = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double w = es.eigenvalues()(i);
        if (w < -QuantumState::kPsdTol) {
            throw DomainError("density matrix is not positive semidefinite");
        }
        tr += std::sqrt(std::max(w, 0.0));
    }
    return std::clamp(tr * tr, 0.0, 1.0);
}

} // namespace dasim::qcore
