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

#include <vector>

namespace riscap {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLegendre gauss_legendre(int n);

/// Product rule on the unit sphere: Gauss-Legendre in cos(polar) times a
/// uniform (trapezoidal, spectrally accurate for periodic integrands) rule in
/// azimuth. Integrates d(Omega) = du d(phi).
struct SphereGrid {
    std::vector<double> cos_polar;   // u = cos(theta), Gauss-Legendre nodes
    std::vector<double> polar_weight;
    int n_azimuth = 0;               // phi_j = 2*pi*j/n_azimuth, weight 2*pi/n_azimuth
};

SphereGrid sphere_grid(int n_polar, int n_azimuth);

} // namespace riscap
