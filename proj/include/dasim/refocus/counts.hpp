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

#include <string>
#include <string_view>

#include "dasim/qcore/error.hpp"

namespace dasim::refocus {

enum class TopologyKind { chain, grid, all_to_all };

inline std::string_view topology_name(TopologyKind k) {
    switch (k) {
    case TopologyKind::chain: return "chain";
    case TopologyKind::grid: return "grid";
    case TopologyKind::all_to_all: return "all-to-all";
    }
    return "chain";
}

inline TopologyKind parse_topology(std::string_view s) {
    if (s == "chain" || s == "linear") return TopologyKind::chain;
    if (s == "grid" || s == "square") return TopologyKind::grid;
    if (s == "all-to-all" || s == "all_to_all" || s == "complete") return TopologyKind::all_to_all;
    throw DomainError("unknown topology '" + std::string(s) + "'");
}

/**
 * Analog entangler applications per spinless Trotter step with equal
 * couplings: n swap layers, three CNOT layers each, m intervals per CNOT
 * layer (m = 2 chain, 4 grid, n/2 + 2 all-to-all).
 */
inline long long entangler_count(TopologyKind kind, int n) {
    if (n < 4 || n % 2 != 0) {
        throw DomainError("entangler counts are defined for even n >= 4, got " + std::to_string(n));
    }
    const long long nn = n;
    switch (kind) {
    case TopologyKind::chain: return 6 * nn;
    case TopologyKind::grid: return 12 * nn;
    case TopologyKind::all_to_all: {
        const int m = n / 2 + 2;
        if ((m & (m - 1)) != 0) {
            throw DomainError("all-to-all count needs n/2 + 2 to be a power of two, got n = " + std::to_string(n));
        }
        return 3 * nn * nn / 2 + 6 * nn;
    }
    }
    return 0;
}

/// Digital baseline: (n^2 - n)/2 FSGs, three CNOTs each.
inline long long fsg_count(int n) {
    if (n < 2 || n % 2 != 0) {
        throw DomainError("the swap network needs an even number of modes >= 2");
    }
    return static_cast<long long>(n) * (n - 1) / 2;
}

inline long long digital_cnot_count(int n) { return 3 * fsg_count(n); }

} // namespace dasim::refocus
