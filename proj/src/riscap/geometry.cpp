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

#include "riscap/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace riscap {

RisGeometry make_ris_geometry(int n_side, double spacing) {
    RisGeometry g;
    g.n_side = n_side;
    g.spacing = spacing;
    validate_geometry(g);
    return g;
}

void validate_geometry(const RisGeometry &g) {
    if (g.n_side < 1)
        throw std::invalid_argument("RisGeometry: n_side must be >= 1");
    if (!(g.spacing > 0.0))
        throw std::invalid_argument("RisGeometry: spacing must be positive");
}

Eigen::Matrix3d SceneGeometry::ris_orientation() const {
    // Local axes in world coordinates: e1 in the scene plane, e2 = world z
    // (out of scene), normal toward the TX-RX line at zero tilt.
    Eigen::Matrix3d m;
    m.col(0) = Eigen::Vector3d(std::cos(tilt), std::sin(tilt), 0.0);
    m.col(1) = Eigen::Vector3d(0.0, 0.0, 1.0);
    m.col(2) = Eigen::Vector3d(std::sin(tilt), -std::cos(tilt), 0.0);
    return m;
}

Eigen::Vector3d SceneGeometry::incoming_direction_local() const {
    const Eigen::Vector3d dir = (ris_center() - tx_position()).normalized();
    return ris_orientation().transpose() * dir;
}

Eigen::Vector3d SceneGeometry::outgoing_direction_local() const {
    const Eigen::Vector3d dir = (rx_position() - ris_center()).normalized();
    return ris_orientation().transpose() * dir;
}

Eigen::Vector3d direction_from_angle(double theta_rad) {
    return {std::sin(theta_rad), 0.0, std::cos(theta_rad)};
}

} // namespace riscap
