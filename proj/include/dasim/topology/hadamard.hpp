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

#include <bit>
#include <string>
#include <vector>

#include "dasim/qcore/error.hpp"

namespace dasim::topology {

/// Orders we can build: 1 and powers of two (Sylvester construction).
inline bool is_supported_hadamard_order(int m) { return m >= 1 && std::has_single_bit(static_cast<unsigned>(m)); }

/// Smallest supported order >= k.
inline int next_supported_hadamard_order(int k) {
    if (k <= 1) {
        return 1;
    }
    return static_cast<int>(std::bit_ceil(static_cast<unsigned>(k)));
}

/// m x m matrix of +-1 entries with H H^T = m I.
class HadamardMatrix {
  public:
    int order() const noexcept { return m_; }

    /// Entry in row i (time interval) and column j (sequence).
    int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * m_ + j]; }

    std::vector<int> column(int j) const {
        std::vector<int> c(static_cast<std::size_t>(m_));
        for (int i = 0; i < m_; ++i) {
            c[i] = (*this)(i, j);
        }
        return c;
    }

    /// Exact integer check of H H^T = m I and of the +-1 alphabet.
    bool verify() const {
        for (int v : entries_) {
            if (v != 1 && v != -1) {
                return false;
            }
        }
        for (int a = 0; a < m_; ++a) {
            for (int b = 0; b < m_; ++b) {
                long long dot = 0;
                for (int j = 0; j < m_; ++j) {
                    dot += (*this)(a, j) * (*this)(b, j);
                }
                if (dot != (a == b ? m_ : 0)) {
                    return false;
                }
            }
        }
        return true;
    }

  private:
    friend HadamardMatrix hadamard_matrix(int m);
    int m_ = 0;
    std::vector<int> entries_;
};

/// Sylvester construction: entry (i, j) = (-1)^popcount(i & j). H(2) is
/// [[1, 1], [1, -1]]; row 0 and column 0 are all +1.
inline HadamardMatrix hadamard_matrix(int m) {
    if (!is_supported_hadamard_order(m)) {
        throw ConstructionError("no Hadamard matrix construction for order " + std::to_string(m) +
                                "; next supported order is " + std::to_string(next_supported_hadamard_order(m)));
    }
    HadamardMatrix h;
    h.m_ = m;
    h.entries_.resize(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            h.entries_[static_cast<std::size_t>(i) * m + j] =
                (std::popcount(static_cast<unsigned>(i & j)) % 2 == 0) ? 1 : -1;
        }
    }
    return h;
}

} // namespace dasim::topology
