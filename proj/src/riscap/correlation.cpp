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

#include "riscap/correlation.hpp"

#include "riscap/quadrature.hpp"

#include <cmath>
#include <sstream>

namespace riscap {

namespace {

// Raw quadrature pass: returns the unnormalized S(n) table on the given grid.
// Nodes whose density is negligible relative to the peak are skipped; the cut
// at exp(-41) keeps the truncation far below the refinement tolerance.
Matrix quadrature_table(const RisGeometry &g, const WeightFunction &w, int n_polar,
                        int n_azimuth) {
    const int n = g.n_side;
    const int m = 2 * n - 1;
    const double k0a = w.k0() * g.spacing;
    const double inv_s2 = 1.0 / (w.angle_spread() * w.angle_spread());
    const Eigen::Vector3d s0_unit = w.mean_direction() / w.k0();

    const auto grid = sphere_grid(n_polar, n_azimuth);
    const double dphi = 2.0 * M_PI / n_azimuth;

    Matrix table = Matrix::Zero(m, m);
    Vector p1_pow(m), p2_pow(m);

    for (int i = 0; i < n_polar; ++i) {
        const double u = grid.cos_polar[i];
        const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
        for (int j = 0; j < n_azimuth; ++j) {
            const double phi = dphi * j;
            const Eigen::Vector3d dir(s * std::cos(phi), s * std::sin(phi), u);
            const double expo = (1.0 - dir.dot(s0_unit)) * inv_s2;
            if (expo > 41.0)
                continue;
            const double wq =
                grid.polar_weight[i] * dphi * w.normalization() * std::exp(-expo);

            const std::complex<double> p1 = std::polar(1.0, k0a * dir.x());
            const std::complex<double> p2 = std::polar(1.0, k0a * dir.y());
            std::complex<double> acc = std::pow(p1, -(n - 1));
            for (int t = 0; t < m; ++t) {
                p1_pow(t) = acc;
                acc *= p1;
            }
            acc = std::pow(p2, -(n - 1));
            for (int t = 0; t < m; ++t) {
                p2_pow(t) = acc;
                acc *= p2;
            }
            table.noalias() += wq * (p1_pow * p2_pow.transpose());
        }
    }
    return table;
}

} // namespace

Matrix CorrelationTable::to_matrix() const {
    const int ns = n_side_ * n_side_;
    Matrix s(ns, ns);
    for (int i = 0; i < ns; ++i) {
        const int i1 = i / n_side_, i2 = i % n_side_;
        for (int j = 0; j < ns; ++j) {
            const int j1 = j / n_side_, j2 = j % n_side_;
            s(i, j) = at(i1 - j1, i2 - j2);
        }
    }
    return s;
}

CorrelationMatrix build_correlation(const RisGeometry &geometry, const WeightFunction &weight,
                                    const QuadratureOptions &options) {
    validate_geometry(geometry);

    int n_polar = options.init_polar;
    int n_azimuth = options.init_azimuth;
    Matrix prev = quadrature_table(geometry, weight, n_polar, n_azimuth);
    Matrix cur;
    double err = std::numeric_limits<double>::infinity();
    for (int level = 0; level < options.max_doublings; ++level) {
        n_polar *= 2;
        n_azimuth *= 2;
        cur = quadrature_table(geometry, weight, n_polar, n_azimuth);
        err = (cur - prev).cwiseAbs().maxCoeff();
        prev = cur;
        if (err <= options.tol)
            break;
    }
    if (err > options.fail_threshold) {
        std::ostringstream msg;
        msg << "build_correlation: quadrature did not converge (achieved " << err
            << " at " << n_polar << "x" << n_azimuth << " nodes, required "
            << options.fail_threshold << ")";
        throw QuadratureError(msg.str(), err);
    }

    // Exact Hermitian symmetry of the table, then trace normalization. The
    // diagonal entry is the integral of w (= 1 up to quadrature bias), so
    // dividing by it pins the trace to N_s exactly.
    const int m = 2 * geometry.n_side - 1;
    const int c = geometry.n_side - 1;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= i; ++j) {
            const std::complex<double> avg =
                0.5 * (prev(i, j) + std::conj(prev(2 * c - i, 2 * c - j)));
            prev(i, j) = avg;
            prev(2 * c - i, 2 * c - j) = std::conj(avg);
        }
    const double diag = prev(c, c).real();
    if (!(diag > 0.0))
        throw QuadratureError("build_correlation: non-positive diagonal value", err);
    prev /= diag;

    CorrelationMatrix out;
    out.m = CorrelationTable(geometry.n_side, prev).to_matrix();
    out.quad_error = err;
    return out;
}

CorrelationTable correlation_table(const Matrix &s, int n_side) {
    if (s.rows() != n_side * n_side || s.cols() != s.rows())
        throw std::invalid_argument("correlation_table: dimension is not n_side^2");
    const int m = 2 * n_side - 1;
    Matrix vals(m, m);
    for (int d1 = -(n_side - 1); d1 <= n_side - 1; ++d1)
        for (int d2 = -(n_side - 1); d2 <= n_side - 1; ++d2) {
            const int i1 = d1 > 0 ? d1 : 0, i2 = d2 > 0 ? d2 : 0;
            const int j1 = i1 - d1, j2 = i2 - d2;
            vals(d1 + n_side - 1, d2 + n_side - 1) =
                s(i1 * n_side + i2, j1 * n_side + j2);
        }
    return {n_side, std::move(vals)};
}

Matrix exponential_correlation(int n, double coeff) {
    if (!(coeff > -1.0 && coeff < 1.0))
        throw std::invalid_argument("exponential_correlation: |coeff| must be < 1");
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = std::pow(coeff, std::abs(i - j));
    return m;
}

void validate_correlation(const Matrix &m, double herm_tol, double psd_tol, double trace_tol) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("correlation: matrix must be square");
    if (!is_hermitian(m, herm_tol))
        throw std::invalid_argument("correlation: matrix is not Hermitian");
    const double n = static_cast<double>(m.rows());
    if (std::abs(m.trace().real() - n) > trace_tol * n)
        throw std::invalid_argument("correlation: trace must equal the dimension");
    Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitize(m), Eigen::EigenvaluesOnly);
    const double max_ev = eig.eigenvalues().maxCoeff();
    if (eig.eigenvalues().minCoeff() < -psd_tol * std::max(1.0, max_ev))
        throw std::invalid_argument("correlation: matrix is not positive semidefinite");
}

} // namespace riscap
