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

#include "riscap/optimizer.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace riscap {

namespace {

// Rotates an eigenvector so its first non-negligible element is real and
// positive, removing the global-phase ambiguity of the decomposition.
void fix_global_phase(Vector &v) {
    const double scale = v.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > 1e-12 * scale) {
            v *= std::polar(1.0, -std::arg(v(i)));
            return;
        }
    }
}

struct LeadingPair {
    Vector vec;
    double value = 0.0;
    double gap = 0.0; // relative isolation of the leading eigenvalue
};

LeadingPair leading_eigenvector(const Matrix &s) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitize(s));
    if (eig.info() != Eigen::Success)
        throw std::runtime_error("leading_eigenvector: eigendecomposition failed");
    const Eigen::Index n = s.rows();
    LeadingPair out;
    out.value = eig.eigenvalues()(n - 1);
    out.vec = eig.eigenvectors().col(n - 1);
    const double second = n > 1 ? eig.eigenvalues()(n - 2) : 0.0;
    out.gap = out.value > 0.0 ? (out.value - second) / out.value : 0.0;
    fix_global_phase(out.vec);
    return out;
}

} // namespace

AnalyticPhaseResult analytic_phases(const Matrix &s_t, const Matrix &s_r, int ris_index,
                                    double gap_tol) {
    if (s_t.rows() != s_r.rows())
        throw std::invalid_argument("analytic_phases: dimension mismatch");
    const auto lt = leading_eigenvector(s_t);
    const auto lr = leading_eigenvector(s_r);

    AnalyticPhaseResult out;
    out.profile.ris_index = ris_index;
    out.profile.phases = RealVector::Zero(s_t.rows());
    if (lt.gap <= gap_tol || lr.gap <= gap_tol) {
        out.degenerate = true;
        return out;
    }
    for (Eigen::Index n = 0; n < s_t.rows(); ++n)
        out.profile.phases(n) = std::arg(lr.vec(n) * std::conj(lt.vec(n)));
    out.profile.wrap();
    return out;
}

Matrix kappa_matrix(const Matrix &s_t, const Matrix &s_r, const PhaseProfile &phi) {
    if (s_t.rows() != s_r.rows() || s_t.rows() != phi.size())
        throw std::invalid_argument("kappa_matrix: dimension mismatch");
    Eigen::SelfAdjointEigenSolver<Matrix> et(hermitize(s_t));
    Eigen::SelfAdjointEigenSolver<Matrix> er(hermitize(s_r));
    // reorder ascending -> descending so (0,0) is the leading pair
    const Matrix ut = et.eigenvectors().rowwise().reverse();
    const Matrix ur = er.eigenvectors().rowwise().reverse();
    return ur.adjoint() * phi.coefficients().asDiagonal() * ut;
}

NumericPhaseResult numeric_phases(const Matrix &s_t, const Matrix &s_r, double coupling,
                                  const PhaseProfile &init, const NumericPhaseOptions &options) {
    const Eigen::Index n = s_t.rows();
    if (s_r.rows() != n || init.size() != n)
        throw std::invalid_argument("numeric_phases: dimension mismatch");
    if (!(coupling > 0.0))
        throw std::invalid_argument("numeric_phases: coupling must be positive");

    // Work with f = log det(I + c S_r^{1/2} Phi S_t Phi^H S_r^{1/2}), which
    // has the same value as log det(I + c Phi^H S_r Phi S_t) and a Hermitian
    // positive definite argument.
    const Matrix rh = std::sqrt(coupling) * psd_sqrt(s_r);
    Vector v = init.coefficients();

    NumericPhaseResult out;
    out.profile = init;

    auto refresh = [&](Matrix &minv, double &f) {
        const Matrix rv = rh * v.asDiagonal();
        const Matrix m = Matrix::Identity(n, n) + rv * s_t * rv.adjoint();
        Eigen::LLT<Matrix> llt(hermitize(m));
        if (llt.info() != Eigen::Success)
            throw std::runtime_error("numeric_phases: objective matrix not positive definite");
        minv = llt.solve(Matrix::Identity(n, n));
        f = 2.0 * llt.matrixL().toDenseMatrix().diagonal().real().array().log().sum();
    };

    Matrix minv;
    double f = 0.0;
    refresh(minv, f);

    Eigen::Matrix2cd eye2 = Eigen::Matrix2cd::Identity();
    for (int sweep = 1; sweep <= options.max_sweeps; ++sweep) {
        const double f_start = f;
        for (Eigen::Index idx = 0; idx < n; ++idx) {
            const std::complex<double> v_old = v(idx);

            // Rank-2 structure of the single-element dependence:
            //   M(v_n) = A + v_n p q^H + conj(v_n) q p^H.
            Vector h = v.asDiagonal() * s_t.col(idx);
            h(idx) = 0.0; // remove the diagonal term, which is v_n-independent
            const Vector p = rh.col(idx);
            const Vector q = rh * h;

            const Vector mp = minv * p;
            const Vector mq = minv * q;
            Eigen::Matrix2cd wm;
            wm(0, 0) = p.dot(mp);
            wm(0, 1) = p.dot(mq);
            wm(1, 0) = q.dot(mp);
            wm(1, 1) = q.dot(mq);

            // Overlap matrix with the current element removed (Woodbury
            // downdate in the 2x2 algebra).
            Eigen::Matrix2cd cd;
            cd << 0.0, -v_old, -std::conj(v_old), 0.0;
            const Eigen::Matrix2cd wa = wm - wm * (eye2 + cd * wm).inverse() * cd * wm;

            const std::complex<double> b = wa(0, 1);
            const double b_scale =
                std::sqrt(std::abs(wa(0, 0).real() * wa(1, 1).real())) + 1e-300;
            if (std::abs(b) <= 1e-11 * b_scale)
                continue; // objective is flat in this element; keep the phase

            const std::complex<double> v_new = b / std::abs(b);

            const double spread = std::norm(b) - wa(0, 0).real() * wa(1, 1).real();
            const double factor_old = 1.0 + 2.0 * (std::conj(v_old) * b).real() + spread;
            const double factor_new = 1.0 + 2.0 * std::abs(b) + spread;
            const double delta_f = std::log(factor_new) - std::log(factor_old);
            if (delta_f < -1e-12 * (1.0 + std::abs(f))) {
                std::ostringstream msg;
                msg << "numeric_phases: objective decreased by " << -delta_f
                    << " in a single-element update (coefficient extraction bug)";
                throw std::runtime_error(msg.str());
            }

            // Apply M <- M + dv p q^H + conj(dv) q p^H to the inverse.
            const std::complex<double> dv = v_new - v_old;
            Eigen::Matrix2cd cu;
            cu << 0.0, dv, std::conj(dv), 0.0;
            const Eigen::Matrix2cd core = (eye2 + cu * wm).inverse() * cu;
            Matrix u(n, 2);
            u.col(0) = mp;
            u.col(1) = mq;
            minv.noalias() -= u * core * u.adjoint();

            v(idx) = v_new;
            f += delta_f;
        }

        out.sweeps = sweep;
        // Fresh factorization: kills the drift of the incremental updates
        // and gives an exact sweep-improvement measurement.
        refresh(minv, f);
        if (f - f_start < options.tol)
            break;
    }

    out.profile = phase_profile_from_coefficients(v, init.ris_index);
    out.objective = f;
    return out;
}

AlternatingResult alternating_optimize(const Scenario &scenario,
                                       const AlternatingOptions &options) {
    const int k_count = scenario.ris_count();

    std::vector<PhaseProfile> phases;
    for (int k = 0; k < k_count; ++k) {
        const auto &link = scenario.links[static_cast<std::size_t>(k)];
        if (options.analytic_init) {
            phases.push_back(analytic_phases(link.s_t.m, link.s_r.m, k).profile);
        } else {
            phases.push_back(PhaseProfile::identity(link.geometry.element_count(), k));
        }
    }

    AlternatingResult best;
    best.mi = -std::numeric_limits<double>::infinity();
    double prev_mi = -std::numeric_limits<double>::infinity();

    AlternatingResult cur;
    for (int outer = 1; outer <= options.max_outer; ++outer) {
        DetEquiv de(scenario, phases);
        cur.solution = de.solve(options.fixed_point);
        cur.mi = de.ergodic_mi(cur.solution);
        cur.phases = phases;
        cur.outer_iterations = outer;
        best.mi_trace.push_back(cur.mi);

        const double scale = std::max(1.0, std::abs(best.mi));
        if (cur.mi < best.mi - 10.0 * options.mi_rel_tol * scale) {
            best.oscillation_warning = true;
            break;
        }
        if (cur.mi > best.mi) {
            best.phases = cur.phases;
            best.solution = cur.solution;
            best.mi = cur.mi;
            best.outer_iterations = outer;
        }
        if (std::abs(cur.mi - prev_mi) < options.mi_rel_tol * std::max(1.0, std::abs(prev_mi)))
            break;
        prev_mi = cur.mi;
        if (outer == options.max_outer)
            break;

        for (int k = 0; k < k_count; ++k) {
            const auto &link = scenario.links[static_cast<std::size_t>(k)];
            const double c = link.gamma * cur.solution.t1[static_cast<std::size_t>(k)] *
                             cur.solution.r2[static_cast<std::size_t>(k)];
            if (c > 0.0)
                phases[static_cast<std::size_t>(k)] =
                    numeric_phases(link.s_t.m, link.s_r.m, c,
                                   phases[static_cast<std::size_t>(k)], options.inner)
                        .profile;
        }
    }
    return best;
}

std::vector<double> optimal_placement(double d, double h) {
    if (!(d > 0.0))
        throw std::invalid_argument("optimal_placement: d must be positive");
    if (h == 0.0)
        throw std::invalid_argument("optimal_placement: h must be nonzero");
    if (std::abs(h) >= d / 2.0)
        return {0.0};
    const double x = std::sqrt(d * d / 4.0 - h * h);
    return {x, -x};
}

std::vector<PlacementPoint> placement_scan(const SystemConfig &config,
                                           const std::vector<double> &x_grid) {
    std::vector<PlacementPoint> points;
    points.reserve(x_grid.size());
    for (const double x : x_grid) {
        if (!(std::abs(x) < config.d / 2.0))
            throw std::invalid_argument("placement_scan: x must lie inside (-d/2, d/2)");
        SystemConfig local = config;
        for (auto &rs : local.ris) {
            rs.x_offset = x;
            rs.theta_in.reset(); // angles follow from the geometry at x
            rs.theta_out.reset();
            rs.gamma_override.reset();
        }
        const Scenario sc = materialize(local);

        PlacementPoint pt;
        pt.x = x;
        pt.gamma = sc.links.front().gamma;
        {
            DetEquiv de(sc);
            pt.mi_unoptimized = de.ergodic_mi(de.solve());
        }
        {
            std::vector<PhaseProfile> phases;
            for (int k = 0; k < sc.ris_count(); ++k) {
                const auto &link = sc.links[static_cast<std::size_t>(k)];
                phases.push_back(analytic_phases(link.s_t.m, link.s_r.m, k).profile);
            }
            DetEquiv de(sc, phases);
            pt.mi_optimized = de.ergodic_mi(de.solve());
        }
        points.push_back(pt);
    }
    return points;
}

} // namespace riscap
