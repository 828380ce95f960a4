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

#include "riscap/detequiv.hpp"
#include "riscap/phase_profile.hpp"
#include "riscap/system_config.hpp"

#include <vector>

namespace riscap {

struct AnalyticPhaseResult {
    PhaseProfile profile;
    bool degenerate = false; // leading eigenvalue not isolated; profile is zero
};

/// Closed-form profile from the leading eigenvectors of the two element
/// correlation matrices: phi_n is the element-wise phase difference of the
/// departure-side and arrival-side leading eigenvectors. For lattice
/// correlations those eigenvectors are plane waves, so the profile realizes
/// the in-plane wavevector shift between the two sides. Falls back to a zero
/// profile with a degeneracy flag when the leading eigenvalue is not isolated
/// (relative spectral gap below gap_tol).
AnalyticPhaseResult analytic_phases(const Matrix &s_t, const Matrix &s_r, int ris_index = 0,
                                    double gap_tol = 1e-8);

/// Overlap coefficients between the phase-rotated arrival-side eigenbasis and
/// the departure-side eigenbasis, both ordered by descending eigenvalue:
/// kappa(l, m) = u_r,l^H Phi u_t,m. Unitary, so rows and columns have unit
/// norm and every entry has modulus <= 1.
Matrix kappa_matrix(const Matrix &s_t, const Matrix &s_r, const PhaseProfile &phi);

struct NumericPhaseResult {
    PhaseProfile profile;
    double objective = 0.0; // log det(I + c Phi^H S_r Phi S_t) at exit
    int sweeps = 0;
};

struct NumericPhaseOptions {
    double tol = 1e-9;    // stop when a full sweep improves f by less
    int max_sweeps = 200;
};

/// Cyclic coordinate ascent on f(Phi) = log det(I + c Phi^H S_r Phi S_t)
/// under unit-modulus constraints. Each single-element subproblem is solved
/// exactly: f depends on e^{i phi_n} through one complex coefficient, and the
/// update is its phase. The objective is nondecreasing at every update; a
/// detected decrease aborts with a diagnostic.
NumericPhaseResult numeric_phases(const Matrix &s_t, const Matrix &s_r, double coupling,
                                  const PhaseProfile &init,
                                  const NumericPhaseOptions &options = {});

struct AlternatingOptions {
    double mi_rel_tol = 1e-8;
    int max_outer = 100;
    NumericPhaseOptions inner;
    FixedPointOptions fixed_point;
    bool analytic_init = true;
};

struct AlternatingResult {
    std::vector<PhaseProfile> phases;
    FixedPointSolution solution;
    double mi = 0.0;
    std::vector<double> mi_trace; // one entry per outer iteration
    int outer_iterations = 0;
    bool oscillation_warning = false;
};

/// Alternates (i) the fixed-point solve at the current phases with (ii)
/// per-surface coordinate ascent at frozen scalars, until the mean MI
/// stabilizes. Returns the best iterate; an MI decrease beyond 10x the
/// tolerance stops early with a warning flag.
AlternatingResult alternating_optimize(const Scenario &scenario,
                                       const AlternatingOptions &options = {});

/// Positions maximizing the surface pathloss factor on the line at offset h:
/// {0} when |h| >= d/2, otherwise {+sqrt(d^2/4 - h^2), -sqrt(...)}.
std::vector<double> optimal_placement(double d, double h);

struct PlacementPoint {
    double x = 0.0;
    double gamma = 0.0;
    double mi_unoptimized = 0.0;
    double mi_optimized = 0.0; // analytic profile from the position's angles
};

/// Sweeps the surface position along the TX-RX axis, re-deriving the mean
/// arrival/departure angles from the geometry at every x (angle spread held
/// fixed), and evaluates the mean MI with identity and with analytic phases.
std::vector<PlacementPoint> placement_scan(const SystemConfig &config,
                                           const std::vector<double> &x_grid);

} // namespace riscap
