// SPDX-License-Identifier: Apache-2.0
//
// ris-capacity: large-system analysis and optimization of multi-RIS MIMO links
// Copyright (C) 2026 the ris-capacity authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "riscap/weight_function.hpp"

#include "riscap/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace riscap {

WeightFunction::WeightFunction(const Eigen::Vector3d &direction, double angle_spread_rad,
                               double wavelength_m)
    : angle_spread_(angle_spread_rad), wavelength_(wavelength_m) {
    if (!(wavelength_m > 0.0))
        throw std::invalid_argument("WeightFunction: wavelength must be positive");
    if (!(angle_spread_rad > 0.0))
        throw std::invalid_argument("WeightFunction: angle spread must be positive");
    const double norm = direction.norm();
    if (!(norm > 0.0))
        throw std::invalid_argument("WeightFunction: mean direction must be nonzero");
    k0_ = 2.0 * M_PI / wavelength_m;
    mean_direction_ = direction * (k0_ / norm);

    // On the sphere |k - s0|^2 = 2 k0^2 (1 - cos(angle to s0)), so the density
    // depends only on u = cos(angle) and the normalization integral is
    // one-dimensional: 2*pi * int_{-1}^{1} exp(-(1-u)/sigma^2) du.
    const auto gl = gauss_legendre(256);
    const double inv_s2 = 1.0 / (angle_spread_rad * angle_spread_rad);
    double integral = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i)
        integral += gl.weights[i] * std::exp(-(1.0 - gl.nodes[i]) * inv_s2);
    integral *= 2.0 * M_PI;
    normalization_ = 1.0 / integral;
}

double WeightFunction::density_at_unit(const Eigen::Vector3d &unit_dir) const {
    const double u = unit_dir.dot(mean_direction_) / k0_;
    const double inv_s2 = 1.0 / (angle_spread_ * angle_spread_);
    return normalization_ * std::exp(-(1.0 - u) * inv_s2);
}

} // namespace riscap
