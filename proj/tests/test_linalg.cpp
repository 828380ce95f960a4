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
#include "riscap/linalg.hpp"
#include "riscap/rng.hpp"

#include <doctest.h>

using namespace riscap;

namespace {

Matrix random_psd(int n, RandomStream &s) {
    const Matrix a = gaussian_matrix(n, n + 2, s);
    return hermitize(a * a.adjoint());
}

} // namespace

TEST_CASE("psd_sqrt basics") {
    CHECK(psd_sqrt(Matrix::Identity(5, 5)).isApprox(Matrix::Identity(5, 5), 1e-14));

    // rank-1: sqrt(N u u^H) = sqrt(N) u u^H for unit u
    RandomStream s(11, 0);
    Vector u = gaussian_matrix(6, 1, s);
    u.normalize();
    // eigenvalue noise of order eps*||m|| turns into sqrt(eps) after the
    // square root, so the comparison tolerance is ~1e-7, not 1e-15
    const double n = 6.0;
    const Matrix m = n * u * u.adjoint();
    CHECK(psd_sqrt(m).isApprox(std::sqrt(n) * u * u.adjoint(), 1e-6));
}

TEST_CASE("psd_sqrt squares back to the input") {
    RandomStream s(12, 0);
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix m = random_psd(8, s);
        const Matrix r = psd_sqrt(m);
        CHECK(is_hermitian(r, 1e-12));
        CHECK((r * r - m).norm() <= 1e-8 * m.norm());
    }
}

TEST_CASE("psd_sqrt rejects non-hermitian input") {
    Matrix m = Matrix::Zero(3, 3);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(psd_sqrt(m), std::invalid_argument);
}

TEST_CASE("logdet helpers agree with direct determinants") {
    RandomStream s(13, 0);
    const Matrix m = random_psd(6, s) + Matrix::Identity(6, 6);
    CHECK(logdet_hpd(m) == doctest::Approx(std::log(m.determinant().real())).epsilon(1e-10));

    RealMatrix r(3, 3);
    r << 2, 1, 0, 1, -3, 2, 0, 2, 1;
    const auto sld = signed_logdet(r);
    const double det = r.determinant();
    CHECK(sld.sign == (det > 0 ? 1 : -1));
    CHECK(sld.log_abs == doctest::Approx(std::log(std::abs(det))).epsilon(1e-12));
}
