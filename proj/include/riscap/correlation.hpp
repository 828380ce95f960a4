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

#include "riscap/geometry.hpp"
#include "riscap/linalg.hpp"
#include "riscap/weight_function.hpp"

#include <complex>
#include <stdexcept>

namespace riscap {

/// Hermitian PSD correlation matrix normalized to trace = dimension.
struct CorrelationMatrix {
    Matrix m;
    double quad_error = 0.0; // refinement disagreement when built by quadrature

    Eigen::Index dim() const { return m.rows(); }
};

struct QuadratureOptions {
    int init_polar = 128;
    int init_azimuth = 256;
    double tol = 1e-6;           // accept when two refinements agree this well
    int max_doublings = 4;
    double fail_threshold = 1e-5; // above this after the last refinement: error
};

class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string &msg, double achieved)
        : std::runtime_error(msg), achieved_error(achieved) {}
    double achieved_error;
};

/// Generator values S(n) for lattice difference vectors n in
/// [-(n_side-1), n_side-1]^2. Entries of the full matrix depend only on the
/// lattice difference, so the table is the compact representation.
class CorrelationTable {
  public:
    CorrelationTable(int n_side, Matrix values) : n_side_(n_side), values_(std::move(values)) {}

    int n_side() const { return n_side_; }

    std::complex<double> at(int d1, int d2) const {
        return values_(d1 + n_side_ - 1, d2 + n_side_ - 1);
    }

    /// Expands the table into the full element-pair matrix.
    Matrix to_matrix() const;

  private:
    int n_side_;
    Matrix values_; // (2n-1) x (2n-1)
};

/// Spherical-quadrature evaluation of the correlation of a planar lattice
/// under the given angular power density, renormalized to trace = N_s.
/// Entries with equal lattice differences are exactly equal, and the result
/// is exactly Hermitian. Throws QuadratureError when successive grid
/// refinements fail to agree.
CorrelationMatrix build_correlation(const RisGeometry &geometry, const WeightFunction &weight,
                                    const QuadratureOptions &options = {});

/// Recovers the lattice-difference table from a built correlation matrix.
CorrelationTable correlation_table(const Matrix &s, int n_side);

/// Classic single-parameter family for antenna arrays: [m]_{ij} = c^{|i-j|}.
Matrix exponential_correlation(int n, double coeff);

/// Checks Hermitian symmetry, PSD up to numerical noise, and the fixed trace;
/// throws std::invalid_argument naming the violated constraint.
void validate_correlation(const Matrix &m, double herm_tol = 1e-10, double psd_tol = 1e-8,
                          double trace_tol = 1e-6);

} // namespace riscap
