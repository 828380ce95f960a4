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

#include "riscap/correlation.hpp"
#include "riscap/geometry.hpp"
#include "riscap/weight_function.hpp"

#include <string>
#include <vector>

namespace riscap {

/// Limiting eigenvalue density of a lattice correlation matrix, sampled on
/// the natural discrete wavevector grid of the lattice (one point per
/// element, wrapped into the first Brillouin zone [-pi/a, pi/a]^2).
struct SpectralDensity {
    std::vector<Eigen::Vector2d> grid; // wrapped q_m
    std::vector<double> values;        // eta(q_m) >= 0
    double wavelength = 0.0;
    double spacing = 0.0;
};

/// Limiting density at in-plane wavevector q:
///   eta(q) = (lambda/a)^2 [w(q, k_z) + w(q, -k_z)] / sqrt(1 - |q|^2/k0^2)
/// for |q| < k0, and exactly 0 otherwise. k_z = sqrt(k0^2 - |q|^2) is floored
/// at 1e-4 k0 so the integrable edge singularity stays finite.
/// Requires k0 <= pi/a and |q| components within [-pi/a, pi/a].
double eta_density(const WeightFunction &weight, double spacing, const Eigen::Vector2d &q);

/// eta sampled on the q_m = 2*pi*m/(n_side*a) grid, wrapped into the zone.
SpectralDensity spectral_density(const WeightFunction &weight, const RisGeometry &geometry);

/// Fourier lattice mode [u(q_m)]_j = exp(i q_m . n_j a)/sqrt(N_s) for
/// m = (m1, m2), components in 1..n_side.
Vector fourier_mode(const Eigen::Vector2i &m, const RisGeometry &geometry);

struct CirculantApproximation {
    Matrix c;
    double gap = 0.0; // ||S - C||_F^2 / N_s
};

/// Block-circulant wrap-around of the correlation matrix:
/// [C]_{ij} = S((n_i - n_j) mod n_side).
CirculantApproximation circulant_approximation(const CorrelationMatrix &s,
                                               const RisGeometry &geometry);

/// Sorted sample defining the theoretical eigenvalue CDF (the empirical CDF
/// of the eta values); comparable against the sorted eigenvalues of S.
std::vector<double> theoretical_eigen_sample(const SpectralDensity &density);

/// Two-column CSV body (value, cumulative probability) for a sorted sample.
std::string cdf_csv(const std::vector<double> &sorted_sample);

} // namespace riscap
