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

#include "riscap/config_parse.hpp"
#include "riscap/experiment.hpp"
#include "riscap/version.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv) {
    CLI::App app{"ris-capacity: mutual-information statistics and phase/placement "
                 "optimization for multi-surface MIMO links"};
    app.set_version_flag("--version", RISCAP_VERSION);

    std::string kind;
    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::size_t samples = 0;
    bool samples_set = false;
    int threads = 0;

    app.add_option("kind", kind,
                   "experiment kind: spectrum | mi | variance | montecarlo | optimize | "
                   "placement | figure2..figure6 | validate")
        ->required();
    app.add_option("--config", config_path, "experiment config file")->required();
    app.add_option("--out", out_path, "output CSV path (overrides the config)");
    app.add_option("--seed", seed, "master seed (overrides the config)")
        ->each([&](const std::string &) { seed_set = true; });
    app.add_option("--samples", samples, "Monte Carlo sample count (overrides the config)")
        ->each([&](const std::string &) { samples_set = true; });
    app.add_option("--threads", threads, "worker thread count (overrides the config)");

    CLI11_PARSE(app, argc, argv);

    try {
        riscap::ExperimentSpec spec = riscap::parse_experiment_file(config_path);
        if (kind != "validate")
            spec.kind = riscap::experiment_kind_from_string(kind);
        if (!out_path.empty())
            spec.output_path = out_path;
        if (seed_set)
            spec.seed = seed;
        if (samples_set)
            spec.samples = samples;
        if (threads > 0)
            spec.threads = threads;

        if (kind == "validate") {
            const auto diags = riscap::validate(spec);
            for (const auto &d : diags)
                std::cout << d.field << ": " << d.message << "\n";
            if (diags.empty())
                std::cout << "ok\n";
            return diags.empty() ? 0 : 1;
        }
        return riscap::run(spec);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
