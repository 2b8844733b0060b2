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
 * Dense complex linear algebra on n <= 12 qubits.
 *
 * Ordering convention: qubit 0 is the most significant bit of a basis
 * index, so |q0 q1 ... q(n-1)> has index sum_q b_q 2^(n-1-q). Two-qubit
 * matrices act on |a b> with `a` the first listed qubit.
 */

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>

#include "dasim/qcore/error.hpp"

namespace dasim::qcore {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

inline constexpr int kMaxQubits = 12;
inline constexpr cplx kI{0.0, 1.0};

/// 2^n, refusing sizes the dense kernels cannot hold.
inline std::size_t dimension(int n_qubits, int limit = kMaxQubits) {
    if (n_qubits < 0 || n_qubits > limit) {
        throw ResourceError("qubit count " + std::to_string(n_qubits) + " outside supported range [0, " +
                            std::to_string(limit) + "]");
    }
    return std::size_t{1} << n_qubits;
}

/// Bit position of qubit q inside a basis index.
inline int bit_of(int n_qubits, int q) { return n_qubits - 1 - q; }

inline bool qubit_set(std::uint64_t index, int n_qubits, int q) {
    return (index >> bit_of(n_qubits, q)) & 1U;
}

/// +1 for |0>, -1 for |1>: eigenvalue of Z_q on a basis state.
inline int z_sign(std::uint64_t index, int n_qubits, int q) { return qubit_set(index, n_qubits, q) ? -1 : 1; }

namespace gates {

inline Mat2 identity() { return Mat2::Identity(); }
inline Mat2 x() { Mat2 m; m << 0, 1, 1, 0; return m; }
inline Mat2 y() { Mat2 m; m << 0, -kI, kI, 0; return m; }
inline Mat2 z() { Mat2 m; m << 1, 0, 0, -1; return m; }
inline Mat2 h() { Mat2 m; m << 1, 1, 1, -1; return m / std::sqrt(2.0); }
inline Mat2 s() { Mat2 m; m << 1, 0, 0, kI; return m; }
inline Mat2 sdg() { Mat2 m; m << 1, 0, 0, -kI; return m; }

/// exp(-i t X / 2)
inline Mat2 rx(double t) {
    Mat2 m;
    m << std::cos(t / 2), -kI * std::sin(t / 2), -kI * std::sin(t / 2), std::cos(t / 2);
    return m;
}
/// exp(-i t Y / 2)
inline Mat2 ry(double t) {
    Mat2 m;
    m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
    return m;
}
/// exp(-i t Z / 2)
inline Mat2 rz(double t) {
    Mat2 m;
    m << std::exp(-kI * (t / 2)), 0, 0, std::exp(kI * (t / 2));
    return m;
}

/// Control is the first qubit.
inline Mat4 cnot() {
    Mat4 m = Mat4::Zero();
    m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
    return m;
}
inline Mat4 cphase(double phi) {
    Mat4 m = Mat4::Identity();
    m(3, 3) = std::exp(kI * phi);
    return m;
}
inline Mat4 cz() { return cphase(M_PI); }
inline Mat4 swap() {
    Mat4 m = Mat4::Zero();
    m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
    return m;
}
/// exp(-i t Z (x) Z)
inline Mat4 zz(double t) {
    Mat4 m = Mat4::Zero();
    m(0, 0) = m(3, 3) = std::exp(-kI * t);
    m(1, 1) = m(2, 2) = std::exp(kI * t);
    return m;
}

inline Mat4 kron(const Mat2 &a, const Mat2 &b) {
    Mat4 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return m;
}

} // namespace gates

// ---------------------------------------------------------------------------
// In-place kernels. `columns` variants act on every column of a matrix, i.e.
// they compute M <- G M with G the gate embedded at the given qubits.

template <class Derived>
void apply_1q_columns(Eigen::MatrixBase<Derived> &m, int n_qubits, int q, const Mat2 &g) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t stride = std::size_t{1} << bit_of(n_qubits, q);
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t off = 0; off < stride; ++off) {
                const std::size_t i0 = base + off;
                const std::size_t i1 = i0 + stride;
                const cplx a = m(i0, c);
                const cplx b = m(i1, c);
                m(i0, c) = g(0, 0) * a + g(0, 1) * b;
                m(i1, c) = g(1, 0) * a + g(1, 1) * b;
            }
        }
    }
}

template <class Derived>
void apply_2q_columns(Eigen::MatrixBase<Derived> &m, int n_qubits, int q0, int q1, const Mat4 &g) {
    if (q0 == q1) {
        throw DomainError("two-qubit gate on a single qubit " + std::to_string(q0));
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t s0 = std::size_t{1} << bit_of(n_qubits, q0);
    const std::size_t s1 = std::size_t{1} << bit_of(n_qubits, q1);
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & s0) || (i & s1)) {
                continue;
            }
            const std::size_t idx[4] = {i, i | s1, i | s0, i | s0 | s1};
            cplx v[4];
            for (int k = 0; k < 4; ++k) {
                v[k] = m(idx[k], c);
            }
            for (int r = 0; r < 4; ++r) {
                cplx acc = 0;
                for (int k = 0; k < 4; ++k) {
                    acc += g(r, k) * v[k];
                }
                m(idx[r], c) = acc;
            }
        }
    }
}

/// rho <- G rho G^dagger for a gate applied by `left` (a columns kernel).
template <class LeftApply>
void conjugate_density(Matrix &rho, LeftApply &&left) {
    left(rho);
    Matrix t = rho.adjoint();
    left(t);
    rho = t.adjoint();
}

/// Full 2^n x 2^n matrix of a single-qubit gate.
inline Matrix embed_1q(int n_qubits, int q, const Mat2 &g) {
    Matrix m = Matrix::Identity(dimension(n_qubits), dimension(n_qubits));
    apply_1q_columns(m, n_qubits, q, g);
    return m;
}

inline Matrix embed_2q(int n_qubits, int q0, int q1, const Mat4 &g) {
    Matrix m = Matrix::Identity(dimension(n_qubits), dimension(n_qubits));
    apply_2q_columns(m, n_qubits, q0, q1, g);
    return m;
}

// ---------------------------------------------------------------------------
// Hermitian matrix functions via eigendecomposition.

inline bool is_hermitian(const Matrix &m, double tol) {
    return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

inline double hermiticity_defect(const Matrix &m) {
    return m.size() == 0 ? 0.0 : (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// exp(-i H t). Throws DomainError if H is not Hermitian within `tol`.
inline Matrix expm_hermitian(const Matrix &h, double t, double tol = 1e-9) {
    if (h.rows() != h.cols()) {
        throw DomainError("exponential of a non-square matrix");
    }
    if (hermiticity_defect(h) > tol) {
        throw DomainError("matrix is not Hermitian (defect " + std::to_string(hermiticity_defect(h)) + ")");
    }
    const Matrix herm = (h + h.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
    const Eigen::VectorXd &w = es.eigenvalues();
    Vector phases(w.size());
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        phases(i) = std::exp(-kI * (w(i) * t));
    }
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

/// Principal square root of a PSD matrix; eigenvalues in [-clamp_tol, 0) are
/// treated as zero, anything more negative is a DomainError.
inline Matrix sqrtm_psd(const Matrix &m, double clamp_tol = 1e-10) {
    const Matrix herm = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
    const Eigen::VectorXd &w = es.eigenvalues();
    Eigen::VectorXd r(w.size());
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (w(i) < -clamp_tol) {
            throw DomainError("matrix is not positive semidefinite (eigenvalue " + std::to_string(w(i)) + ")");
        }
        r(i) = std::sqrt(std::max(w(i), 0.0));
    }
    return es.eigenvectors() * r.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
}

} // namespace dasim::qcore
