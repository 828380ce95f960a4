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
#include "riscap/csv.hpp"
#include "riscap/experiment.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace riscap;

namespace {

const char *kFig3Config = R"(
# reference scenario
[scenario]
name = fig3
n_t = 8
n_r = 4
snr_db = 10
carrier_ghz = 2.5
direct_link = false

[geometry]
d = 1.0
h = 0.35

[ris]
count = 1
n_side = 20
spacing_over_lambda = 0.5
sigma_deg = 5
theta1_deg = 30
theta2_deg = 70

[experiment]
kind = mi
output = out.csv
seed = 7
)";

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("config parsing converts units at the boundary") {
    const ExperimentSpec spec = parse_experiment_text(kFig3Config);
    const auto &c = spec.scenario;
    CHECK(c.name == "fig3");
    CHECK(c.n_t == 8);
    CHECK(c.n_r == 4);
    CHECK(c.rho == doctest::Approx(10.0));                       // 10 dB
    CHECK(c.wavelength == doctest::Approx(0.11991698).epsilon(1e-6)); // 2.5 GHz
    CHECK(!c.direct_link);
    REQUIRE(c.ris.size() == 1);
    CHECK(c.ris[0].n_side == 20);
    CHECK(c.ris[0].spacing == doctest::Approx(c.wavelength / 2.0));
    CHECK(c.ris[0].sigma == doctest::Approx(5.0 * M_PI / 180.0));
    CHECK(*c.ris[0].theta_in == doctest::Approx(30.0 * M_PI / 180.0));
    CHECK(*c.ris[0].theta_out == doctest::Approx(70.0 * M_PI / 180.0));
    CHECK(spec.kind == ExperimentKind::Mi);
    CHECK(spec.seed == 7);
    CHECK(validate(spec).empty());
}

TEST_CASE("parse errors carry line numbers and field names") {
    try {
        parse_experiment_text("[scenario]\nn_t 8\n", "cfg");
        FAIL("expected ConfigError");
    } catch (const ConfigError &e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("cfg:2") != std::string::npos);
    }
    CHECK_THROWS_WITH_AS(parse_experiment_text("[scenario]\nn_t = x\n"),
                         doctest::Contains("expected a number"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_experiment_text("[scenario]\nn_t = 4\nn_t = 5\n"),
                         doctest::Contains("duplicate"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_experiment_text("[scenario]\nbogus_key = 4\n"),
                         doctest::Contains("unknown key"), ConfigError);
}

TEST_CASE("validation names the violated constraint") {
    ExperimentSpec spec = parse_experiment_text(kFig3Config);

    SUBCASE("spacing precondition") {
        spec.scenario.ris[0].spacing = spec.scenario.wavelength; // k0 > pi/a
        const auto diags = validate(spec);
        REQUIRE(!diags.empty());
        bool found = false;
        for (const auto &d : diags)
            found = found || d.message.find("k0 <= pi/a") != std::string::npos;
        CHECK(found);
    }

    SUBCASE("input covariance trace") {
        const std::string path = "q_bad_trace.csv";
        {
            std::ofstream f(path);
            f << "1.5,0\n0,1.0\n"; // trace 2.5 != n_t
        }
        spec.scenario.n_t = 2;
        spec.scenario.input_covariance.kind = InputCovarianceSpec::Kind::File;
        spec.scenario.input_covariance.path = path;
        const auto diags = validate(spec);
        bool found = false;
        for (const auto &d : diags)
            found = found || d.field == "scenario.q";
        CHECK(found);
        std::remove(path.c_str());
    }

    SUBCASE("empty monte carlo run is rejected before execution") {
        spec.kind = ExperimentKind::MonteCarlo;
        spec.samples = 0;
        spec.output_path = "never_written.csv";
        const auto diags = validate(spec);
        bool found = false;
        for (const auto &d : diags)
            found = found || d.field == "experiment.samples";
        CHECK(found);
        CHECK(run(spec) != 0);
        std::ifstream f(spec.output_path);
        CHECK(!f.good()); // no output artifact on validation failure
    }

    SUBCASE("unknown sweep parameter") {
        spec.sweep_name = "bandwidth";
        spec.sweep_values = {1.0};
        const auto diags = validate(spec);
        bool found = false;
        for (const auto &d : diags)
            found = found || d.field == "experiment.sweep";
        CHECK(found);
    }
}

TEST_CASE("sweep application touches exactly the named parameter") {
    const ExperimentSpec spec = parse_experiment_text(kFig3Config);
    auto swept = apply_sweep_value(spec.scenario, "sigma_deg", 15.0);
    CHECK(swept.ris[0].sigma == doctest::Approx(15.0 * M_PI / 180.0));
    swept = apply_sweep_value(spec.scenario, "snr_db", 20.0);
    CHECK(swept.rho == doctest::Approx(100.0));
    swept = apply_sweep_value(spec.scenario, "x_over_d", 0.25);
    CHECK(swept.ris[0].x_offset == doctest::Approx(0.25));
    swept = apply_sweep_value(spec.scenario, "ris_count", 3.0);
    CHECK(swept.ris.size() == 3);
    CHECK_THROWS_AS(apply_sweep_value(spec.scenario, "nope", 1.0), std::invalid_argument);
}

TEST_CASE("csv formatting is deterministic 12-significant-digit") {
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(M_PI) == "3.14159265359");
    CHECK(format_number(1234567890123.0) == "1.23456789012e+12");

    CsvWriter w;
    w.add_manifest("tool 1.0");
    w.set_header({"a", "b"});
    w.add_row(std::vector<double>{1.5, 2.5});
    CHECK(w.str() == "# tool 1.0\na,b\n1.5,2.5\n");
}

TEST_CASE("identical specs produce byte-identical artifacts") {
    // small scenario so the run is quick
    ExperimentSpec spec = parse_experiment_text(R"(
[scenario]
n_t = 3
n_r = 2
snr_db = 6
[ris]
count = 1
n_side = 4
sigma_deg = 20
theta1_deg = 25
theta2_deg = 50
[geometry]
d = 1.0
h = 0.35
[experiment]
kind = mi
sweep = snr_db
values = 0, 6
output = unused.csv
)");
    spec.output_path = "repro_a.csv";
    CHECK(run(spec) == 0);
    spec.output_path = "repro_b.csv";
    CHECK(run(spec) == 0);
    const std::string a = slurp("repro_a.csv");
    const std::string b = slurp("repro_b.csv");
    CHECK(!a.empty());
    CHECK(a == b);
    // manifest comments present
    CHECK(a.rfind("# ris-capacity", 0) == 0);
    std::remove("repro_a.csv");
    std::remove("repro_b.csv");
}

TEST_CASE("montecarlo kind writes the sample dump and the prefixed summary") {
    ExperimentSpec spec = parse_experiment_text(R"(
[scenario]
n_t = 3
n_r = 2
snr_db = 6
[ris]
count = 1
n_side = 3
sigma_deg = 30
theta1_deg = 25
theta2_deg = 50
[geometry]
d = 1.0
h = 0.35
[experiment]
kind = montecarlo
samples = 120
seed = 5
output = unused.csv
)");
    spec.output_path = "mc_dump.csv";
    CHECK(run(spec) == 0);
    const std::string dump = slurp("mc_dump.csv");
    CHECK(dump.find("mi_nats") != std::string::npos);
    const std::string summary = slurp("mc_dump.csv.summary.csv");
    CHECK(summary.find("mc_mean_nats") != std::string::npos);
    CHECK(summary.find("mc_variance_nats2") != std::string::npos);
    std::remove("mc_dump.csv");
    std::remove("mc_dump.csv.summary.csv");
}
