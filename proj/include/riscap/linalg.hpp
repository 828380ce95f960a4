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

#include <Eigen/Dense>
#include <complex>

namespace riscap {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

bool is_hermitian(const Matrix &m, double tol = 1e-10);

/// (m + m^H)/2; removes accumulated round-off asymmetry.
Matrix hermitize(const Matrix &m);

/// Hermitian PSD square root via eigendecomposition; negative eigenvalues are
/// clipped to zero. Rejects non-Hermitian input.
Matrix psd_sqrt(const Matrix &m);

/// log det of a Hermitian positive definite matrix via Cholesky.
double logdet_hpd(const Matrix &m);

struct SignedLogDet {
    int sign = 0; // -1, 0, +1
    double log_abs = 0.0;
};

/// Determinant of a real square matrix as (sign, log |det|) via LU.
SignedLogDet signed_logdet(const RealMatrix &m);

} // namespace riscap
