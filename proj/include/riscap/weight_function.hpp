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

/// Angular power density on the wave sphere |k| = k0 = 2*pi/lambda:
///
///   w(k) = normalization * exp(-|k - s0|^2 / (2 sigma^2 k0^2)),
///
/// with mean direction s0 (|s0| = k0) and angle spread sigma in radians.
/// The normalization fixes the solid-angle integral of w to 1.
///
/// The mean direction is expressed in the frame the caller works in; for RIS
/// correlation matrices this is the surface-local frame with z along the
/// surface normal.
class WeightFunction {
  public:
    /// direction need not be normalized; it is scaled to magnitude k0.
    WeightFunction(const Eigen::Vector3d &direction, double angle_spread_rad,
                   double wavelength_m);

    const Eigen::Vector3d &mean_direction() const { return mean_direction_; }
    double angle_spread() const { return angle_spread_; }
    double wavelength() const { return wavelength_; }
    double k0() const { return k0_; }
    double normalization() const { return normalization_; }

    /// Density at a unit direction on the sphere (per unit solid angle).
    double density_at_unit(const Eigen::Vector3d &unit_dir) const;

    /// Density at a wavevector with |k| = k0.
    double density(const Eigen::Vector3d &k) const { return density_at_unit(k / k0_); }

  private:
    Eigen::Vector3d mean_direction_; // scaled to |s0| = k0
    double angle_spread_;
    double wavelength_;
    double k0_;
    double normalization_;
};

} // namespace riscap
