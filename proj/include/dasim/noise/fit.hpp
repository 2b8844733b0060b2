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

#include <vector>

#include <Eigen/Dense>

#include "dasim/qcore/error.hpp"

namespace dasim::noise {

/// Least-squares coefficients of y ~ sum_k c_k x^powers[k].
inline std::vector<double> fit_powers(const std::vector<double> &x, const std::vector<double> &y,
                                      const std::vector<int> &powers) {
    if (x.size() != y.size() || x.size() < powers.size()) {
        throw DomainError("not enough points for the requested fit");
    }
    Eigen::MatrixXd a(static_cast<Eigen::Index>(x.size()), static_cast<Eigen::Index>(powers.size()));
    Eigen::VectorXd b(static_cast<Eigen::Index>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t k = 0; k < powers.size(); ++k) {
            a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = std::pow(x[i], powers[k]);
        }
        b(static_cast<Eigen::Index>(i)) = y[i];
    }
    const Eigen::VectorXd c = a.colPivHouseholderQr().solve(b);
    return {c.data(), c.data() + c.size()};
}

struct LinearFit {
    double intercept;
    double slope;
    double r2;
};

/// Ordinary least squares y ~ a + b x with coefficient of determination.
inline LinearFit linear_fit(const std::vector<double> &x, const std::vector<double> &y) {
    const auto c = fit_powers(x, y, {0, 1});
    double mean = 0.0;
    for (double v : y) {
        mean += v;
    }
    mean /= static_cast<double>(y.size());
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (c[0] + c[1] * x[i]);
        ss_res += r * r;
        ss_tot += (y[i] - mean) * (y[i] - mean);
    }
    return {c[0], c[1], ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0};
}

} // namespace dasim::noise
