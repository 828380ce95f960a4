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

#include "riscap/channel_sampler.hpp"
#include "riscap/detequiv.hpp"
#include "riscap/montecarlo.hpp"
#include "riscap/optimizer.hpp"
#include "riscap/spectra.hpp"

#include <doctest.h>

#include <cmath>

using namespace riscap;

namespace {

inline double deg(double d) { return d * M_PI / 180.0; }

Matrix random_correlation(int n, RandomStream &s) {
    Matrix a = gaussian_matrix(n, n + 2, s);
    Matrix m = hermitize(a * a.adjoint());
    m *= static_cast<double>(n) / m.trace().real();
    return m;
}

// Synthetic scenario with arbitrary PSD correlations; no quadrature involved.
Scenario random_scenario(RandomStream &s, int n_t, int n_r, int n_side, int k_count,
                         double rho, bool direct) {
    Scenario sc;
    sc.n_t = n_t;
    sc.n_r = n_r;
    sc.rho = rho;
    sc.q = random_correlation(n_t, s);
    if (direct) {
        sc.r_d = random_correlation(n_r, s);
        sc.t_d = random_correlation(n_t, s);
    }
    const int n_s = n_side * n_side;
    for (int k = 0; k < k_count; ++k) {
        RisLink link{make_ris_geometry(n_side, 0.06),
                     WeightFunction(Eigen::Vector3d(0, 0, 1), 0.1, 0.12),
                     WeightFunction(Eigen::Vector3d(0, 0, 1), 0.1, 0.12),
                     {},
                     {},
                     random_correlation(n_r, s),
                     random_correlation(n_t, s),
                     0.2 + 1.8 * s.uniform()};
        link.s_t.m = random_correlation(n_s, s);
        link.s_r.m = random_correlation(n_s, s);
        sc.links.push_back(std::move(link));
    }
    return sc;
}

std::vector<PhaseProfile> random_phases(const Scenario &sc, RandomStream &s) {
    std::vector<PhaseProfile> ps;
    for (int k = 0; k < sc.ris_count(); ++k) {
        PhaseProfile p;
        p.ris_index = k;
        p.phases =
            RealVector(sc.links[static_cast<std::size_t>(k)].geometry.element_count());
        for (Eigen::Index i = 0; i < p.phases.size(); ++i)
            p.phases(i) = 2.0 * M_PI * (s.uniform() - 0.5);
        ps.push_back(std::move(p));
    }
    return ps;
}

// Scalar bisection for the legacy iid link: r = rho / (1 + rho beta_r / (1 + r)).
double bisect_iid_r(double rho, double beta_r) {
    double lo = 0.0, hi = rho;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double g = mid - rho / (1.0 + rho * beta_r / (1.0 + mid));
        (g < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

TEST_CASE("sigma with identity correlations is the identity") {
    RandomStream s(1, 0);
    PhaseProfile phi;
    phi.phases = RealVector(9);
    for (int i = 0; i < 9; ++i)
        phi.phases(i) = 2.0 * M_PI * (s.uniform() - 0.5);
    const Matrix sig = sigma_k(Matrix::Identity(9, 9), Matrix::Identity(9, 9), phi);
    CHECK(sig.isApprox(Matrix::Identity(9, 9), 1e-10));
}

TEST_CASE("sigma with identity departure correlation reduces to s_t") {
    RandomStream s(2, 0);
    const Matrix st = random_correlation(9, s);
    PhaseProfile phi;
    phi.phases = RealVector(9);
    for (int i = 0; i < 9; ++i)
        phi.phases(i) = 2.0 * M_PI * (s.uniform() - 0.5);
    const Matrix sig = sigma_k(st, Matrix::Identity(9, 9), phi);
    CHECK(sig.isApprox(st, 1e-9));
    CHECK(sig.trace().real() == doctest::Approx(st.trace().real()).epsilon(1e-12));
}

TEST_CASE("sigma rejects non-unit-modulus coefficients naming the index") {
    Vector coeffs = Vector::Ones(4);
    coeffs(2) = 0.5;
    CHECK_THROWS_WITH_AS(sigma_k(Matrix::Identity(4, 4), Matrix::Identity(4, 4), coeffs),
                         doctest::Contains("coefficient 2"), std::invalid_argument);
}

TEST_CASE("unit-rank correlations with the analytic profile saturate sigma") {
    // Plane-wave unit-rank matrices: the optimal profile aligns every term,
    // giving a rank-1 sigma with eigenvalue N_s^2 along the arrival mode.
    const auto geom = make_ris_geometry(3, 0.06);
    const Vector ut = fourier_mode({1, 2}, geom);
    const Vector ur = fourier_mode({2, 3}, geom);
    const int ns = 9;
    const Matrix st = static_cast<double>(ns) * ut * ut.adjoint();
    const Matrix sr = static_cast<double>(ns) * ur * ur.adjoint();

    const auto ap = analytic_phases(st, sr);
    REQUIRE(!ap.degenerate);
    const Matrix sig = sigma_k(st, sr, ap.profile);

    Eigen::SelfAdjointEigenSolver<Matrix> eig(sig);
    CHECK(eig.eigenvalues()(ns - 1) ==
          doctest::Approx(static_cast<double>(ns) * ns).epsilon(1e-8));
    CHECK(eig.eigenvalues()(ns - 2) < 1e-8 * ns * ns);
    const Vector lead = eig.eigenvectors().col(ns - 1);
    CHECK(std::abs(lead.dot(ut)) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("zero SNR collapses the fixed point and the moments") {
    RandomStream s(3, 0);
    Scenario sc = random_scenario(s, 6, 4, 3, 2, 0.0, true);
    // identity array correlations for the exact beta_r endpoint values
    sc.r_d = Matrix::Identity(4, 4);
    for (auto &link : sc.links)
        link.r = Matrix::Identity(4, 4);
    DetEquiv de(sc, random_phases(sc, s));
    const auto sol = de.solve();
    const double beta_r = 4.0 / 6.0;
    CHECK(sol.r_d == doctest::Approx(0.0));
    CHECK(sol.t_d == doctest::Approx(beta_r).epsilon(1e-9));
    for (int k = 0; k < 2; ++k) {
        CHECK(sol.r1[k] == doctest::Approx(0.0));
        CHECK(sol.r2[k] == doctest::Approx(0.0));
        CHECK(sol.t1[k] == doctest::Approx(beta_r).epsilon(1e-9));
    }
    CHECK(std::abs(de.ergodic_mi(sol)) < 1e-9);
    CHECK(de.variance(sol) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("legacy iid link matches the scalar bisection oracle") {
    for (const auto &[n_t, n_r] : {std::make_pair(8, 8), std::make_pair(8, 4)}) {
        const double rho = 10.0;
        const double beta_r = static_cast<double>(n_r) / n_t;
        Scenario sc;
        sc.n_t = n_t;
        sc.n_r = n_r;
        sc.rho = rho;
        sc.q = Matrix::Identity(n_t, n_t);
        sc.r_d = Matrix::Identity(n_r, n_r);
        sc.t_d = Matrix::Identity(n_t, n_t);

        const double r = bisect_iid_r(rho, beta_r);
        const double t = beta_r / (1.0 + r);

        DetEquiv de(sc, {});
        const auto sol = de.solve();
        CHECK(sol.r_d == doctest::Approx(r).epsilon(1e-8));
        CHECK(sol.t_d == doctest::Approx(t).epsilon(1e-8));

        const double mean_oracle =
            n_r * std::log(1.0 + r) + n_t * std::log(1.0 + rho * t) - n_t * r * t;
        CHECK(de.ergodic_mi(sol) == doctest::Approx(mean_oracle).epsilon(1e-8));

        // variance via the scalar curvature formula for separable iid fading
        const double vt = rho * rho / std::pow(1.0 + rho * t, 2);
        const double vr = beta_r / std::pow(1.0 + r, 2);
        CHECK(de.variance(sol) == doctest::Approx(-std::log(1.0 - vt * vr)).epsilon(1e-8));
    }
}

TEST_CASE("zero surface gain reduces exactly to the direct-only link") {
    RandomStream s(4, 0);
    Scenario with_ris = random_scenario(s, 6, 4, 3, 2, 5.0, true);
    for (auto &link : with_ris.links)
        link.gamma = 0.0;
    Scenario direct_only = with_ris;
    direct_only.links.clear();

    DetEquiv a(with_ris);
    DetEquiv b(direct_only);
    const auto sa = a.solve();
    const auto sb = b.solve();
    CHECK(a.ergodic_mi(sa) == doctest::Approx(b.ergodic_mi(sb)).epsilon(1e-10));
    CHECK(a.variance(sa) == doctest::Approx(b.variance(sb)).epsilon(1e-8));
}

TEST_CASE("fixed point satisfies its own equations on random scenarios") {
    RandomStream s(5, 0);
    const FixedPointOptions opt;
    for (int trial = 0; trial < 12; ++trial) {
        const int n_t = 2 + static_cast<int>(s.uniform() * 6);
        const int n_r = 2 + static_cast<int>(s.uniform() * 4);
        const int n_side = 2 + static_cast<int>(s.uniform() * 3);
        const int k = static_cast<int>(s.uniform() * 3);
        const double rho = 0.2 + 10.0 * s.uniform();
        const bool direct = s.uniform() > 0.3;
        Scenario sc = random_scenario(s, n_t, n_r, n_side, k, rho, direct);
        DetEquiv de(sc, random_phases(sc, s));
        const auto sol = de.solve(opt);
        CHECK(sol.residual <= 10.0 * opt.tol);
        CHECK(sol.t_d >= 0.0);
        CHECK(sol.r_d >= 0.0);
        for (int j = 0; j < k; ++j) {
            CHECK(sol.t1[j] >= 0.0);
            CHECK(sol.r1[j] >= 0.0);
            CHECK(sol.t2[j] >= 0.0);
            CHECK(sol.r2[j] >= 0.0);
        }
        CHECK(de.ergodic_mi(sol) >= 0.0);
        CHECK(de.variance(sol) >= 0.0);
    }
}

TEST_CASE("solver reports the residual trajectory when the budget is exhausted") {
    RandomStream s(6, 0);
    Scenario sc = random_scenario(s, 4, 4, 2, 1, 8.0, true);
    DetEquiv de(sc);
    FixedPointOptions opt;
    opt.max_iter = 2;
    CHECK_THROWS_WITH_AS(de.solve(opt), doctest::Contains("residual trajectory"),
                         std::runtime_error);
}

TEST_CASE("changing one surface's phases moves only its log-det term") {
    RandomStream s(7, 0);
    Scenario sc = random_scenario(s, 6, 4, 3, 2, 5.0, true);
    const auto phases_a = random_phases(sc, s);
    auto phases_b = phases_a;
    phases_b[1] = random_phases(sc, s)[1];

    DetEquiv da(sc, phases_a);
    const auto sol = da.solve();
    const MiTerms ta = da.mi_terms(sol);

    DetEquiv db(sc, phases_b);
    const MiTerms tb = db.mi_terms(sol); // frozen scalars

    CHECK(ta.logdet_r == doctest::Approx(tb.logdet_r).epsilon(1e-12));
    CHECK(ta.logdet_t == doctest::Approx(tb.logdet_t).epsilon(1e-12));
    CHECK(ta.bilinear == doctest::Approx(tb.bilinear).epsilon(1e-12));
    CHECK(ta.per_ris[0] == doctest::Approx(tb.per_ris[0]).epsilon(1e-12));
    CHECK(std::abs(ta.per_ris[1] - tb.per_ris[1]) > 1e-6);
    CHECK(da.ergodic_mi(sol) == doctest::Approx(ta.total()).epsilon(1e-12));
}

TEST_CASE("mean agrees with monte carlo on a small lattice scenario") {
    SystemConfig cfg;
    cfg.n_t = 8;
    cfg.n_r = 4;
    cfg.rho = 10.0;
    cfg.wavelength = 0.11992;
    cfg.direct_link = false;
    RisSpec rs;
    rs.n_side = 10;
    rs.sigma = deg(5.0);
    rs.theta_in = deg(30.0);
    rs.theta_out = deg(70.0);
    rs.gamma_override = 1.0;
    cfg.ris = {rs};
    const Scenario sc = materialize(cfg);

    DetEquiv de(sc);
    const double mean = de.ergodic_mi(de.solve());
    const auto mc = simulate(sc, {PhaseProfile::identity(100, 0)}, 800, 77, 2);
    CHECK(std::abs(mc.mean - mean) / mc.mean < 0.05);
}

TEST_CASE("outage follows the gaussian quantile") {
    MiStatistics st;
    st.mean_nats = 5.0;
    st.variance_nats2 = 4.0;
    CHECK(outage_mi(st, 0.5) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(outage_mi(st, 0.1) < 5.0);
    CHECK(outage_mi(st, 0.9) > 5.0);
    st.variance_nats2 = 0.0;
    for (double p : {0.01, 0.3, 0.77})
        CHECK(outage_mi(st, p) == doctest::Approx(5.0));
    CHECK_THROWS_AS(outage_mi(st, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(outage_mi(st, 1.0), std::invalid_argument);
}
