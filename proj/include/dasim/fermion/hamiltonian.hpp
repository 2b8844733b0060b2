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

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "dasim/qcore/error.hpp"
#include "dasim/qcore/rng.hpp"

namespace dasim::fermion {

/**
 * H = sum_n U_n n_n + sum_{n != m} T_nm a_n^dag a_m + sum_{n != m} V_nm n_n n_m.
 *
 * Hopping is real symmetric (complex hopping is not supported). V need not
 * be symmetric: the interaction of the pair {n, m} is V_nm + V_mn.
 */
struct FermionHamiltonian {
    int n_modes = 0;
    Eigen::VectorXd U;
    Eigen::MatrixXd T;
    Eigen::MatrixXd V;

    static FermionHamiltonian zero(int n) {
        return {n, Eigen::VectorXd::Zero(n), Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n)};
    }

    double pair_interaction(int n, int m) const { return V(n, m) + V(m, n); }

    void validate() const {
        if (n_modes < 0 || U.size() != n_modes || T.rows() != n_modes || T.cols() != n_modes ||
            V.rows() != n_modes || V.cols() != n_modes) {
            throw DomainError("Hamiltonian coefficient tables have inconsistent sizes");
        }
        if ((T - T.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
            throw DomainError("hopping matrix is not symmetric");
        }
        for (int n = 0; n < n_modes; ++n) {
            if (V(n, n) != 0.0) {
                throw DomainError("interaction matrix must have a zero diagonal");
            }
        }
    }
};

/// Spin-1/2 model on n sites: hopping T (up), hopping Ud (down) and the
/// on-site interaction V_n n_up n_down.
struct SpinfulHamiltonian {
    int n_sites = 0;
    Eigen::MatrixXd T_up;
    Eigen::MatrixXd U_down;
    Eigen::VectorXd V_onsite;

    static SpinfulHamiltonian zero(int n) {
        return {n, Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n), Eigen::VectorXd::Zero(n)};
    }

    void validate() const {
        if (n_sites < 0 || T_up.rows() != n_sites || T_up.cols() != n_sites || U_down.rows() != n_sites ||
            U_down.cols() != n_sites || V_onsite.size() != n_sites) {
            throw DomainError("Hamiltonian coefficient tables have inconsistent sizes");
        }
        if ((T_up - T_up.transpose()).cwiseAbs().maxCoeff() > 1e-12 ||
            (U_down - U_down.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
            throw DomainError("hopping matrix is not symmetric");
        }
    }

    /// The spinless Hamiltonian of one species (no interaction).
    FermionHamiltonian species(bool up) const {
        auto h = FermionHamiltonian::zero(n_sites);
        h.T = up ? T_up : U_down;
        for (int n = 0; n < n_sites; ++n) {
            h.T(n, n) = 0.0;
        }
        return h;
    }
};

/// order[q] is the fermionic mode held by qubit q.
class ModeOrder {
  public:
    ModeOrder() = default;
    explicit ModeOrder(std::vector<int> perm) : perm_(std::move(perm)), pos_(perm_.size(), -1) {
        for (std::size_t q = 0; q < perm_.size(); ++q) {
            const int m = perm_[q];
            if (m < 0 || m >= static_cast<int>(perm_.size()) || pos_[m] >= 0) {
                throw DomainError("mode order is not a permutation");
            }
            pos_[m] = static_cast<int>(q);
        }
    }

    static ModeOrder identity(int n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        return ModeOrder(std::move(p));
    }

    int size() const noexcept { return static_cast<int>(perm_.size()); }
    int mode_at(int q) const { return perm_.at(static_cast<std::size_t>(q)); }
    int position_of(int mode) const { return pos_.at(static_cast<std::size_t>(mode)); }
    const std::vector<int> &modes() const noexcept { return perm_; }

    ModeOrder reversed() const { return ModeOrder(std::vector<int>(perm_.rbegin(), perm_.rend())); }

    /// Order after exchanging the modes held by qubits q and q+1.
    ModeOrder swapped(int q) const {
        auto p = perm_;
        std::swap(p.at(q), p.at(q + 1));
        return ModeOrder(std::move(p));
    }

    friend bool operator==(const ModeOrder &a, const ModeOrder &b) { return a.perm_ == b.perm_; }

  private:
    std::vector<int> perm_;
    std::vector<int> pos_;
};

/// T_nm = T_mn and V_nm uniform on [-bound, bound], U = 0. Draw order: the
/// upper triangle of T row by row, then every off-diagonal V_nm row by row.
inline FermionHamiltonian random_hamiltonian(int n_modes, double bound, std::uint64_t seed) {
    if (bound < 0) {
        throw DomainError("bound must be non-negative");
    }
    Rng rng(seed);
    auto h = FermionHamiltonian::zero(n_modes);
    for (int n = 0; n < n_modes; ++n)
        for (int m = n + 1; m < n_modes; ++m) {
            h.T(n, m) = h.T(m, n) = rng.uniform(-bound, bound);
        }
    for (int n = 0; n < n_modes; ++n)
        for (int m = 0; m < n_modes; ++m)
            if (n != m) {
                h.V(n, m) = rng.uniform(-bound, bound);
            }
    return h;
}

/// Same draws for the spin-1/2 model: T_up, then U_down, then V_n.
inline SpinfulHamiltonian random_spinful_hamiltonian(int n_sites, double bound, std::uint64_t seed) {
    if (bound < 0) {
        throw DomainError("bound must be non-negative");
    }
    Rng rng(seed);
    auto h = SpinfulHamiltonian::zero(n_sites);
    for (Eigen::MatrixXd *t : {&h.T_up, &h.U_down})
        for (int n = 0; n < n_sites; ++n)
            for (int m = n + 1; m < n_sites; ++m) {
                (*t)(n, m) = (*t)(m, n) = rng.uniform(-bound, bound);
            }
    for (int n = 0; n < n_sites; ++n) {
        h.V_onsite(n) = rng.uniform(-bound, bound);
    }
    return h;
}

} // namespace dasim::fermion
