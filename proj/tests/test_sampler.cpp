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

#include <doctest.h>

#include <cmath>

using namespace riscap;

namespace {

Matrix random_correlation(int n, RandomStream &s) {
    Matrix a = gaussian_matrix(n, n + 2, s);
    Matrix m = hermitize(a * a.adjoint());
    m *= static_cast<double>(n) / m.trace().real();
    return m;
}

} // namespace

TEST_CASE("identity covariance gives iid entries with power 1/N_t") {
    const int n_t = 4;
    KroneckerSampler sampler(Matrix::Identity(2, 2), Matrix::Identity(n_t, n_t), n_t);
    const int draws = 20000;
    double p = 0.0;
    int count = 0;
    for (int i = 0; i < draws; ++i) {
        RandomStream s(99, static_cast<std::uint64_t>(i));
        const Matrix g = sampler.draw(s);
        p += g.squaredNorm();
        count += static_cast<int>(g.size());
    }
    p /= count;
    // each |entry|^2 has mean 1/N_t and sd 1/N_t
    CHECK(std::abs(p - 1.0 / n_t) < 3.0 / n_t / std::sqrt(static_cast<double>(count)));
}

TEST_CASE("unit-rank receive correlation forces columns onto the eigenvector") {
    RandomStream init(5, 0);
    Vector u = gaussian_matrix(6, 1, init);
    u.normalize();
    const Matrix r = 6.0 * u * u.adjoint();
    KroneckerSampler sampler(r, Matrix::Identity(3, 3), 3);
    RandomStream s(7, 0);
    const Matrix g = sampler.draw(s);
    for (int c = 0; c < 3; ++c) {
        const Vector col = g.col(c);
        const Vector residual = col - u * (u.adjoint() * col);
        CHECK(residual.norm() < 1e-7 * col.norm());
    }
}

TEST_CASE("empirical covariance matches (1/N_t) r_ij t_mn") {
    RandomStream init(21, 0);
    const int n_r = 3, n_t = 4;
    const Matrix r = random_correlation(n_r, init);
    const Matrix t = random_correlation(n_t, init);
    KroneckerSampler sampler(r, t, n_t);

    const int draws = 100000;
    // a handful of index tuples, including off-diagonal complex pairs
    struct Tuple {
        int i, m, j, n;
    };
    const Tuple tuples[] = {{0, 0, 0, 0}, {0, 1, 1, 2}, {2, 3, 1, 0}, {1, 2, 1, 3}};
    std::complex<double> acc[4] = {};
    double acc2[4] = {}; // second moment of the product magnitude
    for (int d = 0; d < draws; ++d) {
        RandomStream s(2024, static_cast<std::uint64_t>(d));
        const Matrix g = sampler.draw(s);
        for (int q = 0; q < 4; ++q) {
            const auto &tp = tuples[q];
            const std::complex<double> prod = g(tp.i, tp.m) * std::conj(g(tp.j, tp.n));
            acc[q] += prod;
            acc2[q] += std::norm(prod);
        }
    }
    for (int q = 0; q < 4; ++q) {
        const auto &tp = tuples[q];
        const std::complex<double> mean = acc[q] / static_cast<double>(draws);
        const std::complex<double> expect = r(tp.i, tp.j) * t(tp.m, tp.n) / double(n_t);
        const double sd =
            std::sqrt((acc2[q] / draws - std::norm(mean)) / draws); // per-component-ish
        CHECK(std::abs(mean - expect) < 6.0 * sd + 1e-12);
    }
}

TEST_CASE("one-shot sample_channel is reproducible") {
    RandomStream init(31, 0);
    const Matrix r = random_correlation(3, init);
    const Matrix t = random_correlation(3, init);
    RandomStream s1(77, 5, 2), s2(77, 5, 2);
    const Matrix a = sample_channel(r, t, 3, s1);
    const Matrix b = sample_channel(r, t, 3, s2);
    CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
}
