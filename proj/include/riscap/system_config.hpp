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

#include <optional>
#include <string>
#include <vector>

namespace riscap {

/// How an array-side correlation matrix is specified.
struct CorrelationSpec {
    enum class Kind { Identity, Exponential, File } kind = Kind::Identity;
    double coeff = 0.0;    // Exponential
    std::string path;      // File (CSV of complex entries "re" or "re+imj")
};

struct InputCovarianceSpec {
    enum class Kind { Identity, File } kind = Kind::Identity;
    std::string path;
};

/// Per-surface description. Angles are the polar angles of the mean
/// propagation directions measured from the surface normal; when absent they
/// are derived from the scene geometry at the surface position.
struct RisSpec {
    int n_side = 20;
    double spacing = 0.0;           // meters; 0 means lambda/2
    double sigma = 0.0;             // angle spread, radians
    std::optional<double> theta_in;  // radians
    std::optional<double> theta_out; // radians
    double x_offset = 0.0;          // position along the TX-RX axis
    double tilt = 0.0;              // radians
    std::optional<double> gamma_override; // bypass the pathloss model
};

/// Full scenario in linear units and radians.
struct SystemConfig {
    std::string name = "scenario";
    int n_t = 8;
    int n_r = 4;
    double rho = 10.0;              // linear SNR
    double wavelength = 0.11992;    // meters
    bool direct_link = false;

    double d = 1.0;                 // TX-RX distance
    double h = 0.5;                 // RIS line offset
    double pathloss_exponent = 2.0;

    CorrelationSpec tx_correlation;
    CorrelationSpec rx_correlation;
    InputCovarianceSpec input_covariance;

    std::vector<RisSpec> ris;       // size K

    int ris_count() const { return static_cast<int>(ris.size()); }
};

/// Relative pathloss factor of one surface:
///   gamma = ((d^2/4 + h^2) / (d1 d2))^b,
/// d1, d2 the TX-RIS and RIS-RX distances. Normalized to 1 at x = 0.
/// Coincident node positions (d1 = 0 or d2 = 0) are rejected; the far-field
/// model does not apply there.
double pathloss_gamma(double d, double h, double x, double exponent);

double pathloss_gamma(const SystemConfig &config, int ris_index);

/// One surface with everything the solvers need.
struct RisLink {
    RisGeometry geometry;
    WeightFunction weight_in;   // TX -> RIS arrival
    WeightFunction weight_out;  // RIS -> RX departure
    CorrelationMatrix s_t;      // arrival-side element correlation
    CorrelationMatrix s_r;      // departure-side element correlation
    Matrix r;                   // RX array correlation for this link
    Matrix t;                   // TX array correlation for this link
    double gamma = 1.0;
};

/// Materialized scenario: all matrices built, ready for the deterministic
/// equivalent, the Monte Carlo sampler, and the optimizers.
struct Scenario {
    int n_t = 0;
    int n_r = 0;
    double rho = 0.0;
    Matrix q;
    std::optional<Matrix> r_d; // absent when the direct link is disabled
    std::optional<Matrix> t_d;
    std::vector<RisLink> links;
    std::string name;

    int ris_count() const { return static_cast<int>(links.size()); }
};

/// Builds every correlation matrix (spherical quadrature for the surfaces)
/// and resolves pathloss factors and mean angles from the configuration.
Scenario materialize(const SystemConfig &config);

Matrix load_complex_csv(const std::string &path);
Matrix correlation_from_spec(const CorrelationSpec &spec, int n);
Matrix input_covariance_from_spec(const InputCovarianceSpec &spec, int n_t);

} // namespace riscap
