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

#include "riscap/phase_profile.hpp"
#include "riscap/system_config.hpp"

#include <vector>

namespace riscap {

/// The six scalar families solving the large-system self-consistency
/// equations, plus convergence metadata.
struct FixedPointSolution {
    double t_d = 0.0;
    double r_d = 0.0;
    std::vector<double> t1, r1, t2, r2; // one entry per surface
    int iterations = 0;
    double residual = 0.0; // max |rhs - value| at exit
};

struct FixedPointOptions {
    double tol = 1e-10;
    int max_iter = 2000;
    double damping = 0.5; // new = (1 - damping) old + damping rhs
};

/// First two moments of the mutual information (nats, nats^2).
struct MiStatistics {
    double mean_nats = 0.0;
    double variance_nats2 = 0.0;
    int lambda_dim = 0; // 4K + 2
};

/// Term-by-term decomposition of the mean; the per-surface terms are the only
/// ones that depend on that surface's phase profile once the scalars are
/// frozen.
struct MiTerms {
    std::vector<double> per_ris; // log det(I + gamma_k t1k r2k Sigma_k)
    double logdet_r = 0.0;
    double logdet_t = 0.0;
    double bilinear = 0.0; // N_t (r_d t_d + sum_k (r1k t1k + r2k t2k))

    double total() const;
};

/// Effective surface coupling matrix
///   Sigma = S_t^{1/2} Phi^H S_r Phi S_t^{1/2}.
Matrix sigma_k(const Matrix &s_t, const Matrix &s_r, const PhaseProfile &phi);

/// Overload taking explicit reflection coefficients; rejects non-unit-modulus
/// entries naming the offending index.
Matrix sigma_k(const Matrix &s_t, const Matrix &s_r, const Vector &coeffs);

/// Deterministic-equivalent evaluator for one scenario at fixed phases.
/// Precomputes the spectral data the fixed point and the variance need, so
/// repeated solves (e.g. inside optimization sweeps) stay cheap.
class DetEquiv {
  public:
    DetEquiv(const Scenario &scenario, const std::vector<PhaseProfile> &phases);

    /// Scenario with identity phases on every surface.
    explicit DetEquiv(const Scenario &scenario);

    /// Damped fixed-point iteration over all 4K+2 scalars simultaneously.
    /// Throws std::runtime_error with the residual trajectory when max_iter
    /// is exceeded.
    FixedPointSolution solve(const FixedPointOptions &options = {}) const;

    /// Mean mutual information E[I] in nats (= N_t times the per-antenna
    /// rate).
    double ergodic_mi(const FixedPointSolution &sol) const;

    MiTerms mi_terms(const FixedPointSolution &sol) const;

    /// Asymptotic variance of I from the negative log determinant of the
    /// (4K+2)-dimensional fluctuation matrix. Throws std::runtime_error if
    /// the determinant sign is inconsistent with a converged fixed point.
    double variance(const FixedPointSolution &sol) const;

    /// Convenience: solve + mean + variance.
    MiStatistics statistics(const FixedPointOptions &options = {}) const;

    int ris_count() const { return static_cast<int>(sigma_eigs_.size()); }
    const RealVector &sigma_eigenvalues(int k) const { return sigma_eigs_[k]; }

  private:
    int n_t_, n_r_;
    double rho_;
    bool direct_;
    Matrix r_d_;              // zero when the direct link is absent
    Matrix b_d_;              // Q^{1/2} T_d Q^{1/2}, zero when absent
    std::vector<Matrix> r_k_;
    std::vector<Matrix> b_k_; // Q^{1/2} T_k Q^{1/2}
    std::vector<RealVector> sigma_eigs_;
    std::vector<double> gamma_;

    struct Rhs {
        double t_d, r_d;
        std::vector<double> t1, r1, t2, r2;
    };
    Rhs evaluate_rhs(const FixedPointSolution &point) const;
    Matrix r_tilde(const FixedPointSolution &sol) const;
    Matrix b_tilde(const FixedPointSolution &sol) const;
};

/// Mutual information achievable with outage probability p, from the
/// Gaussian limit: mean + sqrt(variance) * Phi^{-1}(p).
double outage_mi(const MiStatistics &stats, double outage_prob);

} // namespace riscap
