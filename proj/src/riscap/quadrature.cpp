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

#include "riscap/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace riscap {

GaussLegendre gauss_legendre(int n) {
    if (n < 1)
        throw std::invalid_argument("gauss_legendre: order must be >= 1");

    GaussLegendre gl;
    gl.nodes.resize(n);
    gl.weights.resize(n);

    // Newton iteration on P_n; nodes are symmetric so only half are solved.
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15)
                break;
        }
        gl.nodes[i] = -x;
        gl.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        gl.weights[i] = w;
        gl.weights[n - 1 - i] = w;
    }
    return gl;
}

SphereGrid sphere_grid(int n_polar, int n_azimuth) {
    if (n_polar < 1 || n_azimuth < 1)
        throw std::invalid_argument("sphere_grid: node counts must be >= 1");
    auto gl = gauss_legendre(n_polar);
    SphereGrid g;
    g.cos_polar = std::move(gl.nodes);
    g.polar_weight = std::move(gl.weights);
    g.n_azimuth = n_azimuth;
    return g;
}

} // namespace riscap
