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

#include <cmath>
#include <stdexcept>

namespace riscap {

Matrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, RandomStream &stream) {
    Matrix x(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c)
        for (Eigen::Index r = 0; r < rows; ++r)
            x(r, c) = stream.gaussian();
    return x;
}

namespace {

bool is_identity(const Matrix &m) {
    return (m - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() == 0.0;
}

} // namespace

KroneckerSampler::KroneckerSampler(const Matrix &r, const Matrix &t, int n_t_norm)
    : rows_(r.rows()), cols_(t.rows()), scale_(1.0 / std::sqrt(static_cast<double>(n_t_norm))) {
    if (r.rows() != r.cols() || t.rows() != t.cols())
        throw std::invalid_argument("KroneckerSampler: correlation matrices must be square");
    if (n_t_norm < 1)
        throw std::invalid_argument("KroneckerSampler: n_t_norm must be >= 1");
    left_identity_ = is_identity(r);
    right_identity_ = is_identity(t);
    if (!left_identity_)
        left_ = psd_sqrt(r);
    if (!right_identity_)
        right_ = psd_sqrt(t);
}

Matrix KroneckerSampler::draw(RandomStream &stream) const {
    Matrix g = gaussian_matrix(rows_, cols_, stream);
    if (!left_identity_)
        g = left_ * g;
    if (!right_identity_)
        g = g * right_;
    return scale_ * g;
}

Matrix sample_channel(const Matrix &r, const Matrix &t, int n_t_norm, RandomStream &stream) {
    return KroneckerSampler(r, t, n_t_norm).draw(stream);
}

} // namespace riscap
