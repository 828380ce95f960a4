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

#include "riscap/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace riscap {

double eta_density(const WeightFunction &weight, double spacing, const Eigen::Vector2d &q) {
    if (!(spacing > 0.0))
        throw std::invalid_argument("eta_density: spacing must be positive");
    const double k0 = weight.k0();
    const double q_max = M_PI / spacing;
    if (k0 > q_max * (1.0 + 1e-12))
        throw std::invalid_argument("eta_density: requires k0 <= pi/spacing");
    if (std::abs(q.x()) > q_max * (1.0 + 1e-12) || std::abs(q.y()) > q_max * (1.0 + 1e-12))
        throw std::invalid_argument("eta_density: q outside [-pi/a, pi/a]^2");

    const double q2 = q.squaredNorm();
    if (q2 >= k0 * k0)
        return 0.0;
    const double kz = std::max(std::sqrt(k0 * k0 - q2), 1e-4 * k0);
    const Eigen::Vector3d k_up(q.x(), q.y(), kz);
    const Eigen::Vector3d k_dn(q.x(), q.y(), -kz);
    const double ratio = weight.wavelength() / spacing;
    return ratio * ratio * (weight.density(k_up) + weight.density(k_dn)) / (kz / k0);
}

SpectralDensity spectral_density(const WeightFunction &weight, const RisGeometry &geometry) {
    validate_geometry(geometry);
    const int n = geometry.n_side;
    const double a = geometry.spacing;
    const double bz = 2.0 * M_PI / a;

    SpectralDensity d;
    d.wavelength = weight.wavelength();
    d.spacing = a;
    d.grid.reserve(static_cast<std::size_t>(n) * n);
    d.values.reserve(d.grid.capacity());
    for (int m1 = 1; m1 <= n; ++m1)
        for (int m2 = 1; m2 <= n; ++m2) {
            Eigen::Vector2d q(2.0 * M_PI * m1 / (n * a), 2.0 * M_PI * m2 / (n * a));
            // wrap into (-pi/a, pi/a]
            if (q.x() > bz / 2.0)
                q.x() -= bz;
            if (q.y() > bz / 2.0)
                q.y() -= bz;
            d.grid.push_back(q);
            d.values.push_back(eta_density(weight, a, q));
        }
    return d;
}

Vector fourier_mode(const Eigen::Vector2i &m, const RisGeometry &geometry) {
    validate_geometry(geometry);
    const int n = geometry.n_side;
    if (m.x() < 1 || m.x() > n || m.y() < 1 || m.y() > n)
        throw std::invalid_argument("fourier_mode: mode index components must lie in 1..n_side");
    const int ns = geometry.element_count();
    const Eigen::Vector2d q(2.0 * M_PI * m.x() / (n * geometry.spacing),
                            2.0 * M_PI * m.y() / (n * geometry.spacing));
    Vector u(ns);
    const double scale = 1.0 / std::sqrt(static_cast<double>(ns));
    for (int j = 0; j < ns; ++j) {
        const auto nj = geometry.lattice_index(j);
        const double phase = geometry.spacing * (q.x() * nj.x() + q.y() * nj.y());
        u(j) = std::polar(scale, phase);
    }
    return u;
}

CirculantApproximation circulant_approximation(const CorrelationMatrix &s,
                                               const RisGeometry &geometry) {
    const int n = geometry.n_side;
    const int ns = geometry.element_count();
    if (s.m.rows() != ns)
        throw std::invalid_argument("circulant_approximation: dimension mismatch");
    const auto table = correlation_table(s.m, n);

    // Periodic wrap with the centered representative: a lattice difference d
    // is replaced by the equivalent d mod n_side closest to zero, so the
    // generator keeps its decay structure and the wrap perturbs only
    // differences beyond half the lattice span.
    const auto wrap = [n](int d) {
        int r = ((d % n) + n) % n;
        if (r > n / 2)
            r -= n;
        return r;
    };
    Matrix c(ns, ns);
    for (int i = 0; i < ns; ++i) {
        const int i1 = i / n, i2 = i % n;
        for (int j = 0; j < ns; ++j) {
            const int j1 = j / n, j2 = j % n;
            c(i, j) = table.at(wrap(i1 - j1), wrap(i2 - j2));
        }
    }
    CirculantApproximation out;
    out.gap = (s.m - c).squaredNorm() / static_cast<double>(ns);
    out.c = std::move(c);
    return out;
}

std::vector<double> theoretical_eigen_sample(const SpectralDensity &density) {
    std::vector<double> vals = density.values;
    std::sort(vals.begin(), vals.end());
    return vals;
}

std::string cdf_csv(const std::vector<double> &sorted_sample) {
    std::string out = "value,cumulative_probability\n";
    const double n = static_cast<double>(sorted_sample.size());
    char buf[80];
    for (std::size_t i = 0; i < sorted_sample.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", sorted_sample[i],
                      static_cast<double>(i + 1) / n);
        out += buf;
    }
    return out;
}

} // namespace riscap
