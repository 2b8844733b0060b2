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
 * Jordan-Wigner matrices. Qubit q holds mode order.mode_at(q); |1> means
 * occupied, so n = (I - Z)/2, and a_m carries a Z string over all qubits
 * with a smaller position than m's. The basis state with occupied
 * positions q1 < q2 < ... is a^dag_{m(q1)} a^dag_{m(q2)} ... |vac>.
 */

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "dasim/fermion/hamiltonian.hpp"
#include "dasim/qcore/linalg.hpp"
#include "dasim/qcore/state.hpp"

namespace dasim::fermion {

using qcore::Matrix;

inline constexpr int kMaxDenseModes = 10;

namespace detail {

/// Fermion sign and target index of a^dag_{to} a_{from} on basis state i,
/// where positions are qubit indices and `string_mask` selects the qubits
/// that carry Z strings. Returns false when the term annihilates |i>.
inline bool hop(std::uint64_t i, int n_qubits, int pos_to, int pos_from, std::uint64_t string_mask, std::uint64_t &j,
                int &sign) {
    const std::uint64_t bf = std::uint64_t{1} << qcore::bit_of(n_qubits, pos_from);
    const std::uint64_t bt = std::uint64_t{1} << qcore::bit_of(n_qubits, pos_to);
    if (!(i & bf) || (i & bt)) {
        return false;
    }
    // Qubits with smaller position are the more significant bits.
    auto below = [&](std::uint64_t state, int pos) {
        const std::uint64_t higher = ~((std::uint64_t{2} << qcore::bit_of(n_qubits, pos)) - 1);
        return std::popcount(state & higher & string_mask);
    };
    const std::uint64_t mid = i & ~bf;
    const int s = below(i, pos_from) + below(mid, pos_to);
    j = mid | bt;
    sign = (s % 2 == 0) ? 1 : -1;
    return true;
}

} // namespace detail

/// Dense qubit-space matrix of H under the given mode order.
inline Matrix jordan_wigner(const FermionHamiltonian &h, const ModeOrder &order) {
    h.validate();
    const int n = h.n_modes;
    if (n > kMaxDenseModes) {
        throw ResourceError("dense Jordan-Wigner matrix limited to " + std::to_string(kMaxDenseModes) + " modes");
    }
    if (order.size() != n) {
        throw DomainError("mode order size differs from mode count");
    }
    const auto dim = static_cast<std::uint64_t>(qcore::dimension(n));
    const std::uint64_t all = dim - 1;
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t i = 0; i < dim; ++i) {
        double diag = 0.0;
        for (int a = 0; a < n; ++a) {
            if (!qcore::qubit_set(i, n, order.position_of(a))) {
                continue;
            }
            diag += h.U(a);
            for (int b = 0; b < n; ++b) {
                if (b != a && qcore::qubit_set(i, n, order.position_of(b))) {
                    diag += h.V(a, b);
                }
            }
        }
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = diag;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b || h.T(a, b) == 0.0) {
                    continue;
                }
                std::uint64_t j = 0;
                int sign = 0;
                if (detail::hop(i, n, order.position_of(a), order.position_of(b), all, j, sign)) {
                    m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) += sign * h.T(a, b);
                }
            }
    }
    return m;
}

/// Qubit layout of the spin-1/2 model: site order.mode_at(k) up on qubit
/// 2k, down on qubit 2k+1 (the same order for both species).
inline int up_qubit(int k) { return 2 * k; }
inline int down_qubit(int k) { return 2 * k + 1; }

/**
 * Dense matrix of the spin-1/2 Hamiltonian. Each species has its own Z
 * strings, which run only over that species' qubits.
 */
inline Matrix jordan_wigner_spinful(const SpinfulHamiltonian &h, const ModeOrder &order) {
    h.validate();
    const int ns = h.n_sites;
    const int n = 2 * ns;
    if (n > kMaxDenseModes) {
        throw ResourceError("dense Jordan-Wigner matrix limited to " + std::to_string(kMaxDenseModes) + " modes");
    }
    if (order.size() != ns) {
        throw DomainError("mode order size differs from site count");
    }
    const auto dim = static_cast<std::uint64_t>(qcore::dimension(n));
    std::uint64_t mask_up = 0, mask_dn = 0;
    for (int k = 0; k < ns; ++k) {
        mask_up |= std::uint64_t{1} << qcore::bit_of(n, up_qubit(k));
        mask_dn |= std::uint64_t{1} << qcore::bit_of(n, down_qubit(k));
    }
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t i = 0; i < dim; ++i) {
        double diag = 0.0;
        for (int s = 0; s < ns; ++s) {
            const int k = order.position_of(s);
            if (qcore::qubit_set(i, n, up_qubit(k)) && qcore::qubit_set(i, n, down_qubit(k))) {
                diag += h.V_onsite(s);
            }
        }
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = diag;
        for (int up = 0; up < 2; ++up) {
            const Eigen::MatrixXd &t = up ? h.T_up : h.U_down;
            for (int a = 0; a < ns; ++a)
                for (int b = 0; b < ns; ++b) {
                    if (a == b || t(a, b) == 0.0) {
                        continue;
                    }
                    const int qa = up ? up_qubit(order.position_of(a)) : down_qubit(order.position_of(a));
                    const int qb = up ? up_qubit(order.position_of(b)) : down_qubit(order.position_of(b));
                    std::uint64_t j = 0;
                    int sign = 0;
                    if (detail::hop(i, n, qa, qb, up ? mask_up : mask_dn, j, sign)) {
                        m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) += sign * t(a, b);
                    }
                }
        }
    }
    return m;
}

/// exp(-i H dt) of a Hermitian matrix of dimension <= 2^10.
inline qcore::Unitary exact_evolution(const Matrix &h, double dt) {
    if (h.rows() > (Eigen::Index{1} << kMaxDenseModes)) {
        throw ResourceError("exact evolution limited to dimension 2^10");
    }
    return qcore::Unitary::unchecked(qcore::expm_hermitian(h, dt, 1e-9));
}

/// Unitary R with R |state under `from`> = |same Fock state under `to`>,
/// so that jordan_wigner(H, to) = R jordan_wigner(H, from) R^dag. The sign
/// is the parity of the reordering of the occupied modes.
inline Matrix reorder_unitary(const ModeOrder &from, const ModeOrder &to) {
    const int n = from.size();
    if (to.size() != n) {
        throw DomainError("mode orders of different sizes");
    }
    const auto dim = static_cast<std::uint64_t>(qcore::dimension(n));
    Matrix r = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    std::vector<int> seq;
    for (std::uint64_t i = 0; i < dim; ++i) {
        seq.clear();
        std::uint64_t j = 0;
        for (int q = 0; q < n; ++q) {
            if (qcore::qubit_set(i, n, q)) {
                const int p = to.position_of(from.mode_at(q));
                seq.push_back(p);
                j |= std::uint64_t{1} << qcore::bit_of(n, p);
            }
        }
        int inversions = 0;
        for (std::size_t a = 0; a < seq.size(); ++a)
            for (std::size_t b = a + 1; b < seq.size(); ++b) {
                inversions += seq[a] > seq[b] ? 1 : 0;
            }
        r(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = (inversions % 2 == 0) ? 1.0 : -1.0;
    }
    return r;
}

/// reorder_unitary for the spin-1/2 layout: both species reordered alike.
inline Matrix reorder_unitary_spinful(const ModeOrder &from, const ModeOrder &to) {
    const int ns = from.size();
    const int n = 2 * ns;
    const auto dim = static_cast<std::uint64_t>(qcore::dimension(n));
    Matrix r = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t i = 0; i < dim; ++i) {
        std::uint64_t j = 0;
        int inversions = 0;
        for (int species = 0; species < 2; ++species) {
            std::vector<int> seq;
            for (int k = 0; k < ns; ++k) {
                const int q = 2 * k + species;
                if (qcore::qubit_set(i, n, q)) {
                    const int p = to.position_of(from.mode_at(k));
                    seq.push_back(p);
                    j |= std::uint64_t{1} << qcore::bit_of(n, 2 * p + species);
                }
            }
            for (std::size_t a = 0; a < seq.size(); ++a)
                for (std::size_t b = a + 1; b < seq.size(); ++b) {
                    inversions += seq[a] > seq[b] ? 1 : 0;
                }
        }
        r(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = (inversions % 2 == 0) ? 1.0 : -1.0;
    }
    return r;
}

} // namespace dasim::fermion
