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

#include "dasim/network/circuit.hpp"
#include "dasim/qcore/linalg.hpp"

namespace dasim::network {

using qcore::Mat4;

struct FsgParams {
    double phi = 0.0;
    double theta = 0.0;
};

/// F(phi, theta) on |00>, |01>, |10>, |11>.
inline Mat4 fsg_matrix(const FsgParams &p) {
    const double c = std::cos(p.phi / 2);
    const double s = std::sin(p.phi / 2);
    Mat4 m = Mat4::Zero();
    m(0, 0) = 1.0;
    m(1, 1) = m(2, 2) = -qcore::kI * s;
    m(1, 2) = m(2, 1) = c;
    m(3, 3) = std::exp(qcore::kI * p.theta);
    return m;
}

/// FSG parameters for one Trotter step: hopping t and pair interaction v.
inline FsgParams fsg_params_for(double hopping, double interaction, double dt) {
    return {2.0 * hopping * dt, -interaction * dt + M_PI};
}

inline Mat4 gate2_matrix(const Gate2 &g) {
    switch (g.kind) {
    case Gate2Kind::cnot: return qcore::gates::cnot();
    case Gate2Kind::cphase: return qcore::gates::cphase(g.a);
    case Gate2Kind::fsg: return fsg_matrix({g.a, g.b});
    }
    return Mat4::Identity();
}

} // namespace dasim::network
