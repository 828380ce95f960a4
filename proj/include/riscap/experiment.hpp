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

#include "riscap/system_config.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace riscap {

enum class ExperimentKind {
    Spectrum,
    Mi,
    Variance,
    MonteCarlo,
    Optimize,
    Placement,
    Figure2,
    Figure3,
    Figure4,
    Figure5,
    Figure6,
};

ExperimentKind experiment_kind_from_string(const std::string &s);
std::string to_string(ExperimentKind kind);

/// How phases are chosen for evaluation kinds (mi, variance, montecarlo).
enum class PhaseMode { Identity, Analytic, Numeric };

PhaseMode phase_mode_from_string(const std::string &s);
std::string to_string(PhaseMode mode);

/// One batch experiment: a scenario, an optional single-parameter sweep, and
/// output/reproducibility settings. Units here are already linear/radians;
/// sweep values stay in the user-facing unit of the named parameter.
struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::Mi;
    SystemConfig scenario;
    std::string sweep_name;           // "" = no sweep
    std::vector<double> sweep_values; // user-facing units (deg, dB, x/d)
    std::string output_path;
    std::uint64_t seed = 1;
    std::size_t samples = 2000;
    int threads = 1;
    PhaseMode phases = PhaseMode::Identity;
    bool include_numeric = true;                  // figure3/figure4 numeric column
    std::vector<int> k_values = {1, 2, 4};        // figure3/figure6 curves
    std::vector<double> sigma_values_deg = {5.0, 15.0}; // figure2/figure4 curves
    std::vector<double> h_over_d_values = {0.3, 0.7};   // figure5 curves
    double theta_total_deg = 100.0;                     // figure4 constraint
};

/// Recognized sweep parameter names (user-facing units).
const std::vector<std::string> &known_sweep_parameters();

/// Returns a copy of the scenario with the named parameter set.
SystemConfig apply_sweep_value(const SystemConfig &base, const std::string &name, double value);

struct Diagnostic {
    std::string field;
    std::string message;
};

/// All constraint violations, without executing anything.
std::vector<Diagnostic> validate(const ExperimentSpec &spec);

/// Executes the experiment: validates, runs the mapped pipeline, writes CSV
/// artifacts with a manifest comment header, and prints the manifest to
/// stdout. Returns a process exit status (0 on success).
int run(const ExperimentSpec &spec);

} // namespace riscap
