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
#include <string>
#include <utility>

#include "dasim/qcore/linalg.hpp"
#include "dasim/qcore/rng.hpp"

namespace dasim::qcore {

enum class StateKind { statevector, density };

/// A statevector or a density matrix over n qubits.
class QuantumState {
  public:
    static constexpr double kNormTol = 1e-12;
    static constexpr double kPsdTol = 1e-10;

    /// |index> with the qubit-0-is-MSB convention.
    static QuantumState basis(int n_qubits, std::uint64_t index) {
        const auto dim = dimension(n_qubits);
        if (index >= dim) {
            throw DomainError("basis index out of range");
        }
        Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
        v(static_cast<Eigen::Index>(index)) = 1.0;
        return QuantumState(n_qubits, std::move(v));
    }

    static QuantumState from_amplitudes(Vector amplitudes) {
        const int n = qubits_for(amplitudes.size());
        QuantumState s(n, std::move(amplitudes));
        s.check_invariants();
        return s;
    }

    static QuantumState from_density(Matrix rho) {
        if (rho.rows() != rho.cols()) {
            throw DomainError("density matrix must be square");
        }
        const int n = qubits_for(rho.rows());
        QuantumState s(n, std::move(rho));
        s.check_invariants();
        return s;
    }

    StateKind kind() const noexcept { return kind_; }
    bool is_density() const noexcept { return kind_ == StateKind::density; }
    int n_qubits() const noexcept { return n_qubits_; }

    const Vector &amplitudes() const {
        if (kind_ != StateKind::statevector) {
            throw DomainError("state is a density matrix, not a statevector");
        }
        return vec_;
    }
    Vector &amplitudes() {
        if (kind_ != StateKind::statevector) {
            throw DomainError("state is a density matrix, not a statevector");
        }
        return vec_;
    }
    const Matrix &density() const {
        if (kind_ != StateKind::density) {
            throw DomainError("state is a statevector, not a density matrix");
        }
        return rho_;
    }
    Matrix &density() {
        if (kind_ != StateKind::density) {
            throw DomainError("state is a statevector, not a density matrix");
        }
        return rho_;
    }

    /// Density-matrix copy of this state (identity for density states).
    QuantumState to_density() const {
        if (is_density()) {
            return *this;
        }
        return QuantumState(n_qubits_, Matrix(vec_ * vec_.adjoint()));
    }

    /// Throws DomainError when the kind-specific invariants fail.
    void check_invariants() const {
        if (kind_ == StateKind::statevector) {
            const double norm = vec_.norm();
            if (std::abs(norm - 1.0) > kNormTol) {
                throw DomainError("statevector norm " + std::to_string(norm) + " differs from 1");
            }
            return;
        }
        if (hermiticity_defect(rho_) > kNormTol) {
            throw DomainError("density matrix is not Hermitian");
        }
        const cplx tr = rho_.trace();
        if (std::abs(tr - 1.0) > kNormTol) {
            throw DomainError("density matrix trace " + std::to_string(tr.real()) + " differs from 1");
        }
        if (min_eigenvalue() < -kPsdTol) {
            throw DomainError("density matrix is not positive semidefinite");
        }
    }

    double min_eigenvalue() const {
        Eigen::SelfAdjointEigenSolver<Matrix> es((rho_ + rho_.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
        return es.eigenvalues().minCoeff();
    }

  private:
    QuantumState(int n, Vector v) : kind_(StateKind::statevector), n_qubits_(n), vec_(std::move(v)) {}
    QuantumState(int n, Matrix m) : kind_(StateKind::density), n_qubits_(n), rho_(std::move(m)) {}

    static int qubits_for(Eigen::Index dim) {
        int n = 0;
        while ((Eigen::Index{1} << n) < dim) {
            ++n;
        }
        if ((Eigen::Index{1} << n) != dim || dim == 0) {
            throw DomainError("dimension " + std::to_string(dim) + " is not a power of two");
        }
        dimension(n);
        return n;
    }

    StateKind kind_;
    int n_qubits_;
    Vector vec_;
    Matrix rho_;
};

/// Normalized vector of i.i.d. standard complex Gaussians (Haar-distributed).
inline QuantumState haar_random_state(int n_qubits, std::uint64_t seed) {
    const auto dim = static_cast<Eigen::Index>(dimension(n_qubits));
    Rng rng(seed);
    Vector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double re = rng.normal();
        const double im = rng.normal();
        v(i) = cplx(re, im);
    }
    v /= v.norm();
    return QuantumState::from_amplitudes(std::move(v));
}

/// Square matrix that should be unitary; the wrapper tracks the qubit count.
class Unitary {
  public:
    static constexpr double kUnitaryTol = 1e-10;

    static Unitary identity(int n_qubits) {
        const auto d = static_cast<Eigen::Index>(dimension(n_qubits));
        return Unitary(n_qubits, Matrix::Identity(d, d));
    }

    /// Wraps `m`, checking U^dagger U = I within 1e-10.
    static Unitary checked(Matrix m) {
        Unitary u = unchecked(std::move(m));
        if (!u.is_unitary()) {
            throw DomainError("matrix is not unitary within 1e-10");
        }
        return u;
    }

    static Unitary unchecked(Matrix m) {
        if (m.rows() != m.cols()) {
            throw DomainError("unitary must be square");
        }
        int n = 0;
        while ((Eigen::Index{1} << n) < m.rows()) {
            ++n;
        }
        if ((Eigen::Index{1} << n) != m.rows()) {
            throw DomainError("unitary dimension is not a power of two");
        }
        return Unitary(n, std::move(m));
    }

    int n_qubits() const noexcept { return n_qubits_; }
    const Matrix &matrix() const noexcept { return m_; }

    bool is_unitary(double tol = kUnitaryTol) const {
        const Matrix d = m_.adjoint() * m_ - Matrix::Identity(m_.rows(), m_.cols());
        return d.cwiseAbs().maxCoeff() <= tol;
    }

    /// Composition: (*this) after `rhs`.
    Unitary operator*(const Unitary &rhs) const {
        if (rhs.n_qubits_ != n_qubits_) {
            throw DomainError("unitary dimension mismatch");
        }
        return Unitary(n_qubits_, m_ * rhs.m_);
    }

  private:
    Unitary(int n, Matrix m) : n_qubits_(n), m_(std::move(m)) {}

    int n_qubits_;
    Matrix m_;
};

} // namespace dasim::qcore
