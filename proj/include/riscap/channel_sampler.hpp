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

#include "riscap/linalg.hpp"
#include "riscap/rng.hpp"

namespace riscap {

/// Fills a matrix with iid standard complex Gaussians in a fixed
/// (column-major) order, so a given substream always yields the same matrix.
Matrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, RandomStream &stream);

/// Kronecker-correlated channel draw for one link, with the Hermitian
/// square-root factors precomputed: G = (1/sqrt(N_t)) r^{1/2} X t^{1/2}.
/// The entrywise covariance is E[G_im G*_jn] = (1/N_t) [r]_ij [t]_nm, which
/// coincides with [r]_ij [t]_mn whenever t is real-symmetric. This is the
/// law under which the analytic surface coupling S_t^{1/2} Phi^H S_r Phi
/// S_t^{1/2} describes the cascaded product exactly.
class KroneckerSampler {
  public:
    /// r: receive-side correlation (rows x rows), t: transmit-side
    /// correlation (cols x cols); n_t_norm is the N_t of the system, which
    /// sets the 1/sqrt(N_t) power normalization shared by all links.
    KroneckerSampler(const Matrix &r, const Matrix &t, int n_t_norm);

    Matrix draw(RandomStream &stream) const;

    Eigen::Index rows() const { return rows_; }
    Eigen::Index cols() const { return cols_; }

  private:
    Eigen::Index rows_, cols_;
    double scale_;
    bool left_identity_, right_identity_;
    Matrix left_;   // r^{1/2}
    Matrix right_;  // t^{1/2}
};

/// One-shot draw (1/sqrt(N_t)) r^{1/2} X t^{1/2} with X iid CN(0,1).
Matrix sample_channel(const Matrix &r, const Matrix &t, int n_t_norm, RandomStream &stream);

} // namespace riscap
