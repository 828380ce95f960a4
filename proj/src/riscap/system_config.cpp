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

#include "riscap/system_config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace riscap {

double pathloss_gamma(double d, double h, double x, double exponent) {
    const double d1 = std::hypot(h, d / 2.0 - x);
    const double d2 = std::hypot(h, d / 2.0 + x);
    if (d1 <= 0.0 || d2 <= 0.0)
        throw std::invalid_argument(
            "pathloss_gamma: coincident node positions; far-field model invalid");
    return std::pow((d * d / 4.0 + h * h) / (d1 * d2), exponent);
}

double pathloss_gamma(const SystemConfig &config, int ris_index) {
    if (ris_index < 0 || ris_index >= config.ris_count())
        throw std::invalid_argument("pathloss_gamma: ris index out of range");
    const auto &rs = config.ris[static_cast<std::size_t>(ris_index)];
    if (rs.gamma_override)
        return *rs.gamma_override;
    return pathloss_gamma(config.d, config.h, rs.x_offset, config.pathloss_exponent);
}

Matrix load_complex_csv(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("load_complex_csv: cannot open " + path);
    std::vector<std::vector<std::complex<double>>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::vector<std::complex<double>> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            // "re" or "re+imj" / "re-imj"
            double re = 0.0, im = 0.0;
            char j = 0;
            std::stringstream cs(cell);
            cs >> re;
            if (cs >> im >> j && j != 'j')
                throw std::invalid_argument("load_complex_csv: bad cell '" + cell + "'");
            row.emplace_back(re, im);
        }
        if (!row.empty())
            rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw std::invalid_argument("load_complex_csv: no data in " + path);
    const std::size_t cols = rows.front().size();
    Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("load_complex_csv: ragged rows in " + path);
        for (std::size_t j = 0; j < cols; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
    return m;
}

Matrix correlation_from_spec(const CorrelationSpec &spec, int n) {
    switch (spec.kind) {
    case CorrelationSpec::Kind::Identity:
        return Matrix::Identity(n, n);
    case CorrelationSpec::Kind::Exponential:
        return exponential_correlation(n, spec.coeff);
    case CorrelationSpec::Kind::File: {
        Matrix m = load_complex_csv(spec.path);
        if (m.rows() != n || m.cols() != n)
            throw std::invalid_argument("correlation_from_spec: file dimension mismatch");
        // normalize to the exact trace before validating
        m *= static_cast<double>(n) / m.trace().real();
        validate_correlation(m);
        return m;
    }
    }
    throw std::logic_error("correlation_from_spec: unreachable");
}

Matrix input_covariance_from_spec(const InputCovarianceSpec &spec, int n_t) {
    if (spec.kind == InputCovarianceSpec::Kind::Identity)
        return Matrix::Identity(n_t, n_t);
    Matrix q = load_complex_csv(spec.path);
    if (q.rows() != n_t || q.cols() != n_t)
        throw std::invalid_argument("input_covariance: file dimension mismatch");
    if (!is_hermitian(q))
        throw std::invalid_argument("input_covariance: matrix is not Hermitian");
    if (std::abs(q.trace().real() - n_t) > 1e-9 * n_t)
        throw std::invalid_argument("input_covariance: trace must equal n_t");
    return q;
}

Scenario materialize(const SystemConfig &config) {
    if (config.n_t < 1 || config.n_r < 1)
        throw std::invalid_argument("materialize: antenna counts must be >= 1");
    if (config.rho < 0.0)
        throw std::invalid_argument("materialize: rho must be nonnegative");

    Scenario sc;
    sc.n_t = config.n_t;
    sc.n_r = config.n_r;
    sc.rho = config.rho;
    sc.name = config.name;
    sc.q = input_covariance_from_spec(config.input_covariance, config.n_t);

    const Matrix rx = correlation_from_spec(config.rx_correlation, config.n_r);
    const Matrix tx = correlation_from_spec(config.tx_correlation, config.n_t);
    if (config.direct_link) {
        sc.r_d = rx;
        sc.t_d = tx;
    }

    for (int k = 0; k < config.ris_count(); ++k) {
        const auto &rs = config.ris[static_cast<std::size_t>(k)];
        if (!(rs.sigma > 0.0))
            throw std::invalid_argument("materialize: angle spread must be positive");
        const double a = rs.spacing > 0.0 ? rs.spacing : config.wavelength / 2.0;

        RisGeometry geom = make_ris_geometry(rs.n_side, a);
        SceneGeometry scene{config.d, config.h, rs.x_offset, rs.tilt};
        geom.orientation = scene.ris_orientation();
        geom.origin = scene.ris_center();

        // Mean directions in the surface-local frame: explicit angles win,
        // otherwise they follow from the scene geometry at this position.
        const Eigen::Vector3d dir_in = rs.theta_in ? direction_from_angle(*rs.theta_in)
                                                   : scene.incoming_direction_local();
        const Eigen::Vector3d dir_out = rs.theta_out ? direction_from_angle(*rs.theta_out)
                                                     : scene.outgoing_direction_local();

        RisLink link{geom,
                     WeightFunction(dir_in, rs.sigma, config.wavelength),
                     WeightFunction(dir_out, rs.sigma, config.wavelength),
                     {},
                     {},
                     rx,
                     tx,
                     pathloss_gamma(config, k)};
        link.s_t = build_correlation(geom, link.weight_in);
        link.s_r = build_correlation(geom, link.weight_out);
        sc.links.push_back(std::move(link));
    }
    return sc;
}

} // namespace riscap
