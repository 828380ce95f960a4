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
#include "riscap/stats.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace riscap;

namespace {

constexpr double kLambda = 0.12;
inline double deg(double d) { return d * M_PI / 180.0; }

WeightFunction angled_weight(double theta_deg, double sigma_deg) {
    return WeightFunction(Eigen::Vector3d(std::sin(deg(theta_deg)), 0, std::cos(deg(theta_deg))),
                          deg(sigma_deg), kLambda);
}

} // namespace

TEST_CASE("eta vanishes outside the wave sphere and rejects bad input") {
    const double a = kLambda / 2.0;
    WeightFunction w = angled_weight(0.0, 10.0);
    const double k0 = w.k0();
    CHECK(eta_density(w, a, {k0 * 1.0001, 0.0}) == 0.0);
    CHECK(eta_density(w, a, {0.0, 0.0}) > 0.0);
    CHECK_THROWS_AS(eta_density(w, a, {4.0 * M_PI / kLambda, 0.0}), std::invalid_argument);
    // spacing too coarse: k0 > pi/a
    CHECK_THROWS_AS(eta_density(w, 0.7 * kLambda, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("support fraction at half-wavelength spacing is pi/4") {
    WeightFunction w = angled_weight(0.0, 60.0);
    const auto geom = make_ris_geometry(20, kLambda / 2.0);
    const auto density = spectral_density(w, geom);
    int positive = 0;
    for (double v : density.values)
        positive += v > 0.0 ? 1 : 0;
    const double frac = static_cast<double>(positive) / static_cast<double>(density.values.size());
    CHECK(std::abs(frac - M_PI / 4.0) < 0.05);
}

TEST_CASE("zero mass of the theoretical CDF equals 1 - pi/4 at a = lambda/2") {
    WeightFunction w = angled_weight(0.0, 60.0);
    const auto geom = make_ris_geometry(20, kLambda / 2.0);
    const auto sample = theoretical_eigen_sample(spectral_density(w, geom));
    const double zero_mass =
        static_cast<double>(std::count(sample.begin(), sample.end(), 0.0)) /
        static_cast<double>(sample.size());
    CHECK(std::abs(zero_mass - (1.0 - M_PI / 4.0)) < 0.05);
}

TEST_CASE("maximum eta grows as the angle spread shrinks") {
    const auto geom = make_ris_geometry(20, kLambda / 2.0);
    const auto d5 = spectral_density(angled_weight(30.0, 5.0), geom);
    const auto d15 = spectral_density(angled_weight(30.0, 15.0), geom);
    CHECK(*std::max_element(d5.values.begin(), d5.values.end()) >
          *std::max_element(d15.values.begin(), d15.values.end()));
}

TEST_CASE("non-negligible eigenvalue count scales with the squared spread") {
    // sigma^2 a^2 N_s / lambda^2 sets the scale of the count above 1e-3 of
    // the peak; the proportionality constant 2 pi ln(1000) comes from the
    // Gaussian tail cut.
    const auto geom = make_ris_geometry(20, kLambda / 2.0);
    const double sigma = deg(5.0);
    const auto d = spectral_density(angled_weight(0.0, 5.0), geom);
    const double peak = *std::max_element(d.values.begin(), d.values.end());
    int count = 0;
    for (double v : d.values)
        count += v > 1e-3 * peak ? 1 : 0;
    const double scale = sigma * sigma * 0.25 * 400.0; // sigma^2 a^2 N_s / lambda^2
    const double predicted = 2.0 * M_PI * std::log(1000.0) * scale;
    CHECK(count > predicted / 2.0);
    CHECK(count < predicted * 2.0);
}

TEST_CASE("mean of eta approaches the unit trace density") {
    const auto geom = make_ris_geometry(24, kLambda / 2.0);
    const auto d = spectral_density(angled_weight(20.0, 15.0), geom);
    double mean = 0.0;
    for (double v : d.values)
        mean += v;
    mean /= static_cast<double>(d.values.size());
    CHECK(std::abs(mean - 1.0) < 0.02);
}

TEST_CASE("fourier modes are orthonormal and the wrap mode is constant") {
    const auto geom = make_ris_geometry(5, kLambda / 2.0);
    const Vector u1 = fourier_mode({1, 2}, geom);
    const Vector u2 = fourier_mode({3, 4}, geom);
    CHECK(u1.norm() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(u1.dot(u2)) < 1e-12);
    const Vector uc = fourier_mode({5, 5}, geom);
    for (Eigen::Index j = 0; j < uc.size(); ++j)
        CHECK(std::abs(uc(j) - std::complex<double>(0.2, 0.0)) < 1e-12);
    CHECK_THROWS_AS(fourier_mode({0, 1}, geom), std::invalid_argument);
    CHECK_THROWS_AS(fourier_mode({1, 6}, geom), std::invalid_argument);
}

TEST_CASE("single-element lattice: circulant equals the matrix") {
    WeightFunction w = angled_weight(30.0, 20.0);
    const auto geom = make_ris_geometry(1, kLambda / 2.0);
    const auto s = build_correlation(geom, w);
    const auto circ = circulant_approximation(s, geom);
    CHECK(circ.gap == doctest::Approx(0.0));
    CHECK((circ.c - s.m).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("fourier modes diagonalize the circulant wrap") {
    WeightFunction w = angled_weight(30.0, 10.0);
    const auto geom = make_ris_geometry(6, kLambda / 2.0);
    const auto s = build_correlation(geom, w);
    const auto circ = circulant_approximation(s, geom);
    for (int m1 = 1; m1 <= 6; ++m1)
        for (int m2 = 1; m2 <= 6; m2 += 2) {
            const Vector u = fourier_mode({m1, m2}, geom);
            const std::complex<double> rayleigh = u.dot(circ.c * u);
            CHECK((circ.c * u - rayleigh * u).norm() < 1e-8);
        }
}

TEST_CASE("circulant gap shrinks as the lattice grows") {
    WeightFunction w = angled_weight(30.0, 5.0);
    double prev = std::numeric_limits<double>::infinity();
    for (int n : {8, 16, 32}) {
        const auto geom = make_ris_geometry(n, kLambda / 2.0);
        const auto s = build_correlation(geom, w);
        const auto circ = circulant_approximation(s, geom);
        CHECK(circ.gap < prev);
        prev = circ.gap;
    }
}

TEST_CASE("eigenvalue distribution converges to eta (kolmogorov < 0.1)") {
    WeightFunction w = angled_weight(0.0, 5.0);
    const auto geom = make_ris_geometry(20, kLambda / 2.0);
    const auto s = build_correlation(geom, w);
    Eigen::SelfAdjointEigenSolver<Matrix> eig(s.m, Eigen::EigenvaluesOnly);
    std::vector<double> evs(eig.eigenvalues().data(),
                            eig.eigenvalues().data() + eig.eigenvalues().size());
    const auto eta = theoretical_eigen_sample(spectral_density(w, geom));
    CHECK(ks_two_sample(evs, eta) < 0.1);
}

TEST_CASE("in-plane displaced weights give displaced eta surfaces") {
    // Mirrored mean directions differ by an exact in-plane shift on the wave
    // sphere; their eta surfaces are shifted copies up to the curvature of
    // k_z, which is second-order within a 5-degree spread.
    const double a = kLambda / 2.0;
    WeightFunction wr = angled_weight(25.0, 5.0);
    WeightFunction wt = angled_weight(-25.0, 5.0);
    const double k0 = wr.k0();
    const Eigen::Vector2d shift(-2.0 * k0 * std::sin(deg(25.0)), 0.0); // q_t - q_r

    const auto geom = make_ris_geometry(20, a);
    const auto dr = spectral_density(wr, geom);
    double peak = 0.0;
    for (double v : dr.values)
        peak = std::max(peak, v);
    double worst = 0.0;
    for (std::size_t i = 0; i < dr.grid.size(); ++i) {
        if (dr.values[i] < 1e-3 * peak)
            continue;
        const Eigen::Vector2d q_shifted = dr.grid[i] + shift;
        if (std::abs(q_shifted.x()) > M_PI / a || std::abs(q_shifted.y()) > M_PI / a)
            continue;
        const double other = eta_density(wt, a, q_shifted);
        worst = std::max(worst, std::abs(other - dr.values[i]) / dr.values[i]);
    }
    CHECK(worst < 0.05);
}
