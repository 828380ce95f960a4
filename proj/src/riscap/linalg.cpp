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

#include "riscap/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace riscap {

bool is_hermitian(const Matrix &m, double tol) {
    if (m.rows() != m.cols())
        return false;
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

Matrix hermitize(const Matrix &m) { return 0.5 * (m + m.adjoint()); }

Matrix psd_sqrt(const Matrix &m) {
    if (!is_hermitian(m))
        throw std::invalid_argument("psd_sqrt: input is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitize(m));
    if (eig.info() != Eigen::Success)
        throw std::runtime_error("psd_sqrt: eigendecomposition failed");
    Eigen::VectorXd w = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return eig.eigenvectors() * w.asDiagonal() * eig.eigenvectors().adjoint();
}

double logdet_hpd(const Matrix &m) {
    Eigen::LLT<Matrix> llt(m);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("logdet_hpd: matrix is not positive definite");
    return 2.0 * llt.matrixL().toDenseMatrix().diagonal().real().array().log().sum();
}

SignedLogDet signed_logdet(const RealMatrix &m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("signed_logdet: matrix must be square");
    Eigen::PartialPivLU<RealMatrix> lu(m);
    SignedLogDet out;
    out.sign = lu.permutationP().determinant() > 0 ? 1 : -1;
    out.log_abs = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const double d = lu.matrixLU()(i, i);
        if (d == 0.0)
            return {0, -std::numeric_limits<double>::infinity()};
        if (d < 0.0)
            out.sign = -out.sign;
        out.log_abs += std::log(std::abs(d));
    }
    return out;
}

} // namespace riscap
