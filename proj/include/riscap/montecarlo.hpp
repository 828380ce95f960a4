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

#include <cstdint>
#include <vector>

namespace riscap {

struct MonteCarloResult {
    std::vector<double> samples; // per-draw mutual information, nats
    std::uint64_t seed = 0;
    std::size_t n = 0;           // requested sample count
    std::size_t excluded = 0;    // draws dropped for non-finite log det
    double mean = 0.0;
    double variance = 0.0;       // unbiased
};

/// Draws full channel realizations
///   G = G_d + sum_k sqrt(gamma_k) G_{r,k} Phi_k G_{t,k}
/// and evaluates I = log det(I + rho G Q G^H) per draw. Sample i uses the
/// substream (seed, i), so the returned vector is identical for any worker
/// thread count. Non-finite draws are excluded and counted.
MonteCarloResult simulate(const Scenario &scenario, const std::vector<PhaseProfile> &phases,
                          std::size_t n_samples, std::uint64_t seed, int threads = 1);

/// Right-continuous empirical CDF evaluated on the grid. Requires at least
/// 100 samples.
std::vector<double> empirical_cdf(const MonteCarloResult &result,
                                  const std::vector<double> &grid);

} // namespace riscap
