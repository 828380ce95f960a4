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

#include "riscap/detequiv.hpp"

#include "riscap/stats.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace riscap {

Vector PhaseProfile::coefficients() const {
    Vector c(phases.size());
    for (Eigen::Index i = 0; i < phases.size(); ++i)
        c(i) = std::polar(1.0, phases(i));
    return c;
}

void PhaseProfile::wrap() {
    for (Eigen::Index i = 0; i < phases.size(); ++i) {
        double p = std::remainder(phases(i), 2.0 * M_PI); // [-pi, pi]
        if (p <= -M_PI)
            p = M_PI;
        phases(i) = p;
    }
}

PhaseProfile phase_profile_from_coefficients(const Vector &coeffs, int ris_index, double tol) {
    for (Eigen::Index i = 0; i < coeffs.size(); ++i)
        if (std::abs(std::abs(coeffs(i)) - 1.0) > tol) {
            std::ostringstream msg;
            msg << "phase profile: coefficient " << i << " has modulus "
                << std::abs(coeffs(i)) << ", expected 1";
            throw std::invalid_argument(msg.str());
        }
    PhaseProfile p;
    p.ris_index = ris_index;
    p.phases = RealVector(coeffs.size());
    for (Eigen::Index i = 0; i < coeffs.size(); ++i)
        p.phases(i) = std::arg(coeffs(i));
    p.wrap();
    return p;
}

Matrix sigma_k(const Matrix &s_t, const Matrix &s_r, const Vector &coeffs) {
    if (s_t.rows() != s_r.rows() || s_t.rows() != coeffs.size())
        throw std::invalid_argument("sigma_k: dimension mismatch");
    for (Eigen::Index i = 0; i < coeffs.size(); ++i)
        if (std::abs(std::abs(coeffs(i)) - 1.0) > 1e-9) {
            std::ostringstream msg;
            msg << "sigma_k: reflection coefficient " << i << " has modulus "
                << std::abs(coeffs(i)) << ", expected 1";
            throw std::invalid_argument(msg.str());
        }
    const Matrix a = psd_sqrt(s_t);
    const Matrix phased = coeffs.asDiagonal() * a; // Phi S_t^{1/2}
    return hermitize(phased.adjoint() * s_r * phased);
}

Matrix sigma_k(const Matrix &s_t, const Matrix &s_r, const PhaseProfile &phi) {
    return sigma_k(s_t, s_r, phi.coefficients());
}

double MiTerms::total() const {
    return std::accumulate(per_ris.begin(), per_ris.end(), 0.0) + logdet_r + logdet_t -
           bilinear;
}

DetEquiv::DetEquiv(const Scenario &scenario, const std::vector<PhaseProfile> &phases)
    : n_t_(scenario.n_t), n_r_(scenario.n_r), rho_(scenario.rho),
      direct_(scenario.r_d.has_value()) {
    const int k_count = scenario.ris_count();
    if (static_cast<int>(phases.size()) != k_count)
        throw std::invalid_argument("DetEquiv: one phase profile per surface required");

    const Matrix q_sqrt = psd_sqrt(scenario.q);
    r_d_ = direct_ ? *scenario.r_d : Matrix::Zero(n_r_, n_r_);
    b_d_ = direct_ ? hermitize(q_sqrt * (*scenario.t_d) * q_sqrt)
                   : Matrix::Zero(n_t_, n_t_);

    for (int k = 0; k < k_count; ++k) {
        const auto &link = scenario.links[static_cast<std::size_t>(k)];
        r_k_.push_back(link.r);
        b_k_.push_back(hermitize(q_sqrt * link.t * q_sqrt));
        gamma_.push_back(link.gamma);
        const Matrix sig =
            sigma_k(link.s_t.m, link.s_r.m, phases[static_cast<std::size_t>(k)]);
        Eigen::SelfAdjointEigenSolver<Matrix> eig(sig, Eigen::EigenvaluesOnly);
        sigma_eigs_.push_back(eig.eigenvalues().cwiseMax(0.0));
    }
}

DetEquiv::DetEquiv(const Scenario &scenario)
    : DetEquiv(scenario, [&] {
          std::vector<PhaseProfile> ps;
          for (int k = 0; k < scenario.ris_count(); ++k)
              ps.push_back(PhaseProfile::identity(
                  scenario.links[static_cast<std::size_t>(k)].geometry.element_count(), k));
          return ps;
      }()) {}

Matrix DetEquiv::r_tilde(const FixedPointSolution &sol) const {
    Matrix rt = sol.r_d * r_d_;
    for (std::size_t k = 0; k < r_k_.size(); ++k)
        rt += sol.r1[k] * r_k_[k];
    return rt;
}

Matrix DetEquiv::b_tilde(const FixedPointSolution &sol) const {
    Matrix bt = sol.t_d * b_d_;
    for (std::size_t k = 0; k < b_k_.size(); ++k)
        bt += sol.t2[k] * b_k_[k];
    return bt;
}

DetEquiv::Rhs DetEquiv::evaluate_rhs(const FixedPointSolution &p) const {
    const int k_count = ris_count();
    const double nt = static_cast<double>(n_t_);

    // Receive side: resolvent of I + R~.
    Eigen::LDLT<Matrix> fr((Matrix::Identity(n_r_, n_r_) + r_tilde(p)).eval());
    // Transmit side in the symmetrized representation: I + rho Q^{1/2} T~ Q^{1/2}.
    Eigen::LDLT<Matrix> ft((Matrix::Identity(n_t_, n_t_) + rho_ * b_tilde(p)).eval());

    Rhs rhs;
    rhs.t_d = direct_ ? fr.solve(r_d_).trace().real() / nt : 0.0;
    rhs.r_d = direct_ ? rho_ * ft.solve(b_d_).trace().real() / nt : 0.0;
    rhs.t1.resize(k_count);
    rhs.r1.resize(k_count);
    rhs.t2.resize(k_count);
    rhs.r2.resize(k_count);
    for (int k = 0; k < k_count; ++k) {
        rhs.t1[k] = fr.solve(r_k_[k]).trace().real() / nt;
        rhs.r2[k] = rho_ * ft.solve(b_k_[k]).trace().real() / nt;
        const double c = gamma_[k] * p.t1[k] * p.r2[k];
        const auto &s = sigma_eigs_[k];
        double tr = 0.0;
        for (Eigen::Index i = 0; i < s.size(); ++i)
            tr += s(i) / (1.0 + c * s(i));
        rhs.r1[k] = gamma_[k] * p.r2[k] * tr / nt;
        rhs.t2[k] = gamma_[k] * p.t1[k] * tr / nt;
    }
    return rhs;
}

FixedPointSolution DetEquiv::solve(const FixedPointOptions &options) const {
    if (!(options.tol > 0.0))
        throw std::invalid_argument("solve: tol must be positive");
    const int k_count = ris_count();

    FixedPointSolution p;
    p.t_d = 1.0;
    p.t1.assign(k_count, 1.0);
    p.t2.assign(k_count, 1.0);
    p.r_d = 0.0;
    p.r1.assign(k_count, 0.0);
    p.r2.assign(k_count, 0.0);
    {
        // r-family initialized from its own right-hand sides at the unit
        // t-point; keeps the start in the positive interior.
        const Rhs r0 = evaluate_rhs(p);
        p.r_d = r0.r_d;
        p.r1 = r0.r1;
        p.r2 = r0.r2;
    }

    std::vector<double> trail;
    const double a = options.damping;
    for (int it = 1; it <= options.max_iter; ++it) {
        const Rhs rhs = evaluate_rhs(p);
        double res = std::max(std::abs(rhs.t_d - p.t_d), std::abs(rhs.r_d - p.r_d));
        for (int k = 0; k < k_count; ++k) {
            res = std::max(res, std::abs(rhs.t1[k] - p.t1[k]));
            res = std::max(res, std::abs(rhs.r1[k] - p.r1[k]));
            res = std::max(res, std::abs(rhs.t2[k] - p.t2[k]));
            res = std::max(res, std::abs(rhs.r2[k] - p.r2[k]));
        }
        p.iterations = it;
        p.residual = res;
        if (res < options.tol)
            return p;
        trail.push_back(res);

        p.t_d += a * (rhs.t_d - p.t_d);
        p.r_d += a * (rhs.r_d - p.r_d);
        for (int k = 0; k < k_count; ++k) {
            p.t1[k] += a * (rhs.t1[k] - p.t1[k]);
            p.r1[k] += a * (rhs.r1[k] - p.r1[k]);
            p.t2[k] += a * (rhs.t2[k] - p.t2[k]);
            p.r2[k] += a * (rhs.r2[k] - p.r2[k]);
        }
    }

    std::ostringstream msg;
    msg << "solve: fixed point did not converge within " << options.max_iter
        << " iterations (tol " << options.tol << "); residual trajectory tail:";
    const std::size_t tail = std::min<std::size_t>(trail.size(), 8);
    for (std::size_t i = trail.size() - tail; i < trail.size(); ++i)
        msg << " " << trail[i];
    throw std::runtime_error(msg.str());
}

MiTerms DetEquiv::mi_terms(const FixedPointSolution &sol) const {
    const int k_count = ris_count();
    MiTerms t;
    t.per_ris.resize(k_count);
    for (int k = 0; k < k_count; ++k) {
        const double c = gamma_[k] * sol.t1[k] * sol.r2[k];
        const auto &s = sigma_eigs_[k];
        double ld = 0.0;
        for (Eigen::Index i = 0; i < s.size(); ++i)
            ld += std::log1p(c * s(i));
        t.per_ris[k] = ld;
    }
    t.logdet_r = logdet_hpd(Matrix::Identity(n_r_, n_r_) + r_tilde(sol));
    t.logdet_t = logdet_hpd(Matrix::Identity(n_t_, n_t_) + rho_ * b_tilde(sol));
    double bil = sol.r_d * sol.t_d;
    for (int k = 0; k < k_count; ++k)
        bil += sol.r1[k] * sol.t1[k] + sol.r2[k] * sol.t2[k];
    t.bilinear = static_cast<double>(n_t_) * bil;
    return t;
}

double DetEquiv::ergodic_mi(const FixedPointSolution &sol) const {
    return mi_terms(sol).total();
}

double DetEquiv::variance(const FixedPointSolution &sol) const {
    const int k_count = ris_count();
    const double nt = static_cast<double>(n_t_);

    Eigen::LDLT<Matrix> fr((Matrix::Identity(n_r_, n_r_) + r_tilde(sol)).eval());
    Eigen::LDLT<Matrix> ft((Matrix::Identity(n_t_, n_t_) + rho_ * b_tilde(sol)).eval());

    const Matrix xd = fr.solve(r_d_);
    const Matrix yd = ft.solve(b_d_);
    std::vector<Matrix> xk(k_count), yk(k_count);
    for (int k = 0; k < k_count; ++k) {
        xk[k] = fr.solve(r_k_[k]);
        yk[k] = ft.solve(b_k_[k]);
    }

    const double rho2 = rho_ * rho_;
    const double v_dr = -(xd * xd).trace().real() / nt;
    const double v_dt = -rho2 * (yd * yd).trace().real() / nt;

    RealVector mu_1dr(k_count), mu_2dt(k_count);
    RealMatrix m_1r(k_count, k_count), m_2t(k_count, k_count);
    RealVector m_1t(k_count), m_2r(k_count), m_12(k_count);
    for (int k = 0; k < k_count; ++k) {
        mu_1dr(k) = -(xk[k] * xd).trace().real() / nt;
        mu_2dt(k) = -rho2 * (yk[k] * yd).trace().real() / nt;
        for (int j = 0; j <= k; ++j) {
            m_1r(k, j) = m_1r(j, k) = -(xk[k] * xk[j]).trace().real() / nt;
            m_2t(k, j) = m_2t(j, k) = -rho2 * (yk[k] * yk[j]).trace().real() / nt;
        }
        const double c = gamma_[k] * sol.t1[k] * sol.r2[k];
        const auto &s = sigma_eigs_[k];
        double tr1 = 0.0, tr2 = 0.0; // Tr{Sigma (I+c Sigma)^-2}, Tr{Sigma^2 (I+c Sigma)^-2}
        for (Eigen::Index i = 0; i < s.size(); ++i) {
            const double den = 1.0 + c * s(i);
            tr1 += s(i) / (den * den);
            tr2 += s(i) * s(i) / (den * den);
        }
        const double g = gamma_[k];
        m_2r(k) = -g * g * sol.t1[k] * sol.t1[k] * tr2 / nt;
        m_1t(k) = -g * g * sol.r2[k] * sol.r2[k] * tr2 / nt;
        m_12(k) = g * tr1 / nt;
    }

    // Fluctuation matrix in block order (t_d, t1, t2, r_d, r1, r2).
    const int dim = 4 * k_count + 2;
    RealMatrix lambda = RealMatrix::Zero(dim, dim);
    const int i_td = 0, i_t1 = 1, i_t2 = 1 + k_count;
    const int i_rd = 1 + 2 * k_count, i_r1 = 2 + 2 * k_count, i_r2 = 2 + 3 * k_count;

    lambda(i_td, i_td) = v_dt;
    lambda(i_rd, i_rd) = v_dr;
    lambda(i_td, i_rd) = lambda(i_rd, i_td) = -1.0;
    for (int k = 0; k < k_count; ++k) {
        lambda(i_td, i_t2 + k) = lambda(i_t2 + k, i_td) = mu_2dt(k);
        lambda(i_rd, i_r1 + k) = lambda(i_r1 + k, i_rd) = mu_1dr(k);
        lambda(i_t1 + k, i_t1 + k) = m_1t(k);
        lambda(i_r2 + k, i_r2 + k) = m_2r(k);
        lambda(i_t1 + k, i_r1 + k) = lambda(i_r1 + k, i_t1 + k) = -1.0;
        lambda(i_t2 + k, i_r2 + k) = lambda(i_r2 + k, i_t2 + k) = -1.0;
        lambda(i_t1 + k, i_r2 + k) = lambda(i_r2 + k, i_t1 + k) = m_12(k);
        for (int j = 0; j < k_count; ++j) {
            lambda(i_t2 + k, i_t2 + j) = m_2t(k, j);
            lambda(i_r1 + k, i_r1 + j) = m_1r(k, j);
        }
    }

    // The saddle-point contours run along the imaginary axis for the 2K+1
    // r-type variables, which contributes a factor (-1)^(2K+1) to the
    // fluctuation determinant relative to det(Lambda) as assembled above.
    const SignedLogDet sld = signed_logdet(lambda);
    const int expected_sign = (2 * k_count + 1) % 2 == 0 ? 1 : -1;
    if (sld.sign != expected_sign) {
        std::ostringstream msg;
        msg << "variance: fluctuation determinant has sign " << sld.sign << " (expected "
            << expected_sign << "); fixed point is inconsistent";
        throw std::runtime_error(msg.str());
    }
    double var = -sld.log_abs;
    if (var < 0.0) {
        if (var < -1e-9)
            throw std::runtime_error("variance: negative variance beyond tolerance");
        var = 0.0;
    }
    return var;
}

MiStatistics DetEquiv::statistics(const FixedPointOptions &options) const {
    const FixedPointSolution sol = solve(options);
    MiStatistics st;
    st.mean_nats = ergodic_mi(sol);
    st.variance_nats2 = variance(sol);
    st.lambda_dim = 4 * ris_count() + 2;
    return st;
}

double outage_mi(const MiStatistics &stats, double outage_prob) {
    if (!(outage_prob > 0.0 && outage_prob < 1.0))
        throw std::invalid_argument("outage_mi: outage probability must lie in (0, 1)");
    if (stats.variance_nats2 < 0.0)
        throw std::invalid_argument("outage_mi: variance must be nonnegative");
    if (stats.variance_nats2 == 0.0)
        return stats.mean_nats;
    return stats.mean_nats + std::sqrt(stats.variance_nats2) * normal_quantile(outage_prob);
}

} // namespace riscap
