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

#pragma once

#include <Eigen/Dense>

namespace riscap {

/// Square lattice of reflecting elements: n_side x n_side elements at local
/// positions (n1*a, n2*a, 0), n1, n2 in [0, n_side). The orientation maps the
/// local frame (e1, e2 in-plane, z along the surface normal) into world
/// coordinates; its columns are the local axes.
struct RisGeometry {
    int n_side = 1;
    double spacing = 0.0;                                 // a, meters
    Eigen::Matrix3d orientation = Eigen::Matrix3d::Identity(); // local -> world
    Eigen::Vector3d origin = Eigen::Vector3d::Zero();

    int element_count() const { return n_side * n_side; }

    /// Lattice integer coordinates of flattened element index.
    Eigen::Vector2i lattice_index(int element) const {
        return {element / n_side, element % n_side};
    }

    /// Element position in the local frame (z = 0 plane).
    Eigen::Vector3d local_position(int element) const {
        const auto n = lattice_index(element);
        return {n.x() * spacing, n.y() * spacing, 0.0};
    }

    Eigen::Vector3d world_position(int element) const {
        return origin + orientation * local_position(element);
    }
};

RisGeometry make_ris_geometry(int n_side, double spacing);

/// Validates counts and spacing; throws std::invalid_argument on violation.
void validate_geometry(const RisGeometry &g);

/// Scene layout on the TX-RX axis: TX at (-d/2, 0, 0), RX at (+d/2, 0, 0),
/// RIS center at (x, h, 0). The surface contains the out-of-scene z axis and
/// an in-scene axis rotated by the tilt angle; at zero tilt the normal points
/// from the surface back toward the TX-RX line.
struct SceneGeometry {
    double d = 1.0;  // TX-RX distance
    double h = 0.5;  // lateral offset of the RIS line
    double x = 0.0;  // RIS position along the TX-RX axis, |x| < d/2
    double tilt = 0.0; // radians

    Eigen::Matrix3d ris_orientation() const;  // local -> world
    Eigen::Vector3d ris_center() const { return {x, h, 0.0}; }
    Eigen::Vector3d tx_position() const { return {-d / 2.0, 0.0, 0.0}; }
    Eigen::Vector3d rx_position() const { return {d / 2.0, 0.0, 0.0}; }

    /// Propagation direction of the wave arriving at the RIS (TX -> RIS),
    /// expressed in the RIS local frame (unit vector).
    Eigen::Vector3d incoming_direction_local() const;

    /// Propagation direction of the wave leaving the RIS (RIS -> RX),
    /// expressed in the RIS local frame (unit vector).
    Eigen::Vector3d outgoing_direction_local() const;
};

/// Local-frame mean direction for a wave whose propagation direction makes
/// polar angle theta with the surface normal, azimuth in the scene plane.
Eigen::Vector3d direction_from_angle(double theta_rad);

} // namespace riscap
