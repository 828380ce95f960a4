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

namespace riscap {

/// Per-element reflection phases of one surface. Angles are stored in
/// (-pi, pi]; the reflection coefficients e^{i phi} are unit-modulus by
/// construction.
struct PhaseProfile {
    RealVector phases; // radians
    int ris_index = 0;

    static PhaseProfile identity(int n_elements, int ris_index = 0) {
        PhaseProfile p;
        p.phases = RealVector::Zero(n_elements);
        p.ris_index = ris_index;
        return p;
    }

    Eigen::Index size() const { return phases.size(); }

    /// Unit-modulus reflection coefficients e^{i phi_n}.
    Vector coefficients() const;

    /// Wraps every angle into (-pi, pi].
    void wrap();
};

/// Builds a profile from complex reflection coefficients, rejecting any entry
/// whose modulus deviates from 1 (the index of the first offender is named).
PhaseProfile phase_profile_from_coefficients(const Vector &coeffs, int ris_index = 0,
                                             double tol = 1e-9);

} // namespace riscap
