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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace riscap {

namespace {

constexpr double kSpeedOfLight = 299792458.0;

inline double deg2rad(double d) { return d * M_PI / 180.0; }
inline double db2lin(double db) { return std::pow(10.0, db / 10.0); }

struct Entry {
    std::string value;
    int line = 0;
    mutable bool used = false;
};

struct ParsedFile {
    std::string origin;
    std::map<std::string, Entry> entries; // "section.key"
};

std::string trim(const std::string &s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

ParsedFile tokenize(const std::string &text, const std::string &origin) {
    ParsedFile pf;
    pf.origin = origin;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(origin, lineno, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ConfigError(origin, lineno, "empty section name");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin, lineno, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(origin, lineno, "empty key");
        const std::string full = section.empty() ? key : section + "." + key;
        if (pf.entries.count(full))
            throw ConfigError(origin, lineno, "duplicate key '" + full + "'");
        pf.entries[full] = Entry{value, lineno, false};
    }
    return pf;
}

class Reader {
  public:
    explicit Reader(const ParsedFile &pf) : pf_(pf) {}

    bool has(const std::string &key) const { return pf_.entries.count(key) > 0; }

    std::string get_string(const std::string &key) const {
        const auto it = pf_.entries.find(key);
        if (it == pf_.entries.end())
            throw ConfigError(pf_.origin, 0, "missing required key '" + key + "'");
        it->second.used = true;
        return it->second.value;
    }

    std::string get_string(const std::string &key, const std::string &fallback) const {
        return has(key) ? get_string(key) : fallback;
    }

    double get_double(const std::string &key) const {
        return parse_double(key, get_string(key));
    }

    double get_double(const std::string &key, double fallback) const {
        return has(key) ? get_double(key) : fallback;
    }

    int get_int(const std::string &key, int fallback) const {
        if (!has(key))
            return fallback;
        const double v = get_double(key);
        if (v != std::floor(v))
            fail(key, "expected an integer");
        return static_cast<int>(v);
    }

    bool get_bool(const std::string &key, bool fallback) const {
        if (!has(key))
            return fallback;
        std::string v = get_string(key);
        std::transform(v.begin(), v.end(), v.begin(), ::tolower);
        if (v == "true" || v == "yes" || v == "1")
            return true;
        if (v == "false" || v == "no" || v == "0")
            return false;
        fail(key, "expected a boolean");
        return false;
    }

    std::vector<double> get_list(const std::string &key) const {
        std::vector<double> out;
        std::stringstream ss(get_string(key));
        std::string cell;
        while (std::getline(ss, cell, ','))
            out.push_back(parse_double(key, trim(cell)));
        if (out.empty())
            fail(key, "expected a comma-separated value list");
        return out;
    }

    std::vector<double> get_list(const std::string &key, std::vector<double> fallback) const {
        return has(key) ? get_list(key) : fallback;
    }

    [[noreturn]] void fail(const std::string &key, const std::string &msg) const {
        const auto it = pf_.entries.find(key);
        throw ConfigError(pf_.origin, it == pf_.entries.end() ? 0 : it->second.line,
                          "field '" + key + "': " + msg);
    }

    void check_all_used() const {
        for (const auto &[key, entry] : pf_.entries)
            if (!entry.used)
                throw ConfigError(pf_.origin, entry.line, "unknown key '" + key + "'");
    }

  private:
    double parse_double(const std::string &key, const std::string &s) const {
        try {
            std::size_t pos = 0;
            const double v = std::stod(s, &pos);
            if (pos != s.size())
                fail(key, "trailing characters after number '" + s + "'");
            return v;
        } catch (const std::logic_error &) {
            fail(key, "expected a number, got '" + s + "'");
        }
    }

    const ParsedFile &pf_;
};

CorrelationSpec parse_correlation(const Reader &r, const std::string &key) {
    CorrelationSpec spec;
    const std::string v = r.get_string(key, "identity");
    if (v == "identity")
        return spec;
    if (v.rfind("exponential:", 0) == 0) {
        spec.kind = CorrelationSpec::Kind::Exponential;
        spec.coeff = std::stod(v.substr(12));
        return spec;
    }
    if (v.rfind("file:", 0) == 0) {
        spec.kind = CorrelationSpec::Kind::File;
        spec.path = v.substr(5);
        return spec;
    }
    r.fail(key, "expected identity | exponential:<c> | file:<path>");
}

} // namespace

ConfigError::ConfigError(const std::string &origin, int line, const std::string &what_arg)
    : std::runtime_error(origin + (line > 0 ? ":" + std::to_string(line) : "") + ": " +
                         what_arg),
      line_(line) {}

ExperimentSpec parse_experiment_text(const std::string &text, const std::string &origin) {
    const ParsedFile pf = tokenize(text, origin);
    const Reader r(pf);

    ExperimentSpec spec;
    SystemConfig &sc = spec.scenario;

    sc.name = r.get_string("scenario.name", "scenario");
    sc.n_t = r.get_int("scenario.n_t", 8);
    sc.n_r = r.get_int("scenario.n_r", 4);
    sc.rho = db2lin(r.get_double("scenario.snr_db", 10.0));
    if (r.has("scenario.wavelength_m"))
        sc.wavelength = r.get_double("scenario.wavelength_m");
    else
        sc.wavelength = kSpeedOfLight / (r.get_double("scenario.carrier_ghz", 2.5) * 1e9);
    sc.direct_link = r.get_bool("scenario.direct_link", false);
    sc.tx_correlation = parse_correlation(r, "scenario.tx_correlation");
    sc.rx_correlation = parse_correlation(r, "scenario.rx_correlation");
    {
        const std::string q = r.get_string("scenario.q", "identity");
        if (q == "identity") {
            sc.input_covariance.kind = InputCovarianceSpec::Kind::Identity;
        } else if (q.rfind("file:", 0) == 0) {
            sc.input_covariance.kind = InputCovarianceSpec::Kind::File;
            sc.input_covariance.path = q.substr(5);
        } else {
            r.fail("scenario.q", "expected identity | file:<path>");
        }
    }

    sc.d = r.get_double("geometry.d", 1.0);
    sc.h = r.get_double("geometry.h", 0.5 * sc.d);
    sc.pathloss_exponent = r.get_double("geometry.pathloss_exponent", 2.0);
    const double tilt = deg2rad(r.get_double("geometry.tilt_deg", 0.0));

    const int k_count = r.get_int("ris.count", 1);
    if (k_count < 0)
        r.fail("ris.count", "must be nonnegative");
    RisSpec base;
    base.n_side = r.get_int("ris.n_side", 20);
    if (r.has("ris.spacing_m"))
        base.spacing = r.get_double("ris.spacing_m");
    else
        base.spacing = r.get_double("ris.spacing_over_lambda", 0.5) * sc.wavelength;
    base.sigma = deg2rad(r.get_double("ris.sigma_deg", 5.0));
    if (r.has("ris.theta1_deg"))
        base.theta_in = deg2rad(r.get_double("ris.theta1_deg"));
    if (r.has("ris.theta2_deg"))
        base.theta_out = deg2rad(r.get_double("ris.theta2_deg"));
    base.tilt = tilt;
    if (r.has("ris.gamma"))
        base.gamma_override = r.get_double("ris.gamma");

    std::vector<double> xs(static_cast<std::size_t>(std::max(k_count, 0)), 0.0);
    if (r.has("ris.x")) {
        const auto list = r.get_list("ris.x");
        if (list.size() == 1)
            std::fill(xs.begin(), xs.end(), list[0]);
        else if (static_cast<int>(list.size()) == k_count)
            xs.assign(list.begin(), list.end());
        else
            r.fail("ris.x", "expected 1 or ris.count values");
    }
    for (int k = 0; k < k_count; ++k) {
        RisSpec rs = base;
        rs.x_offset = xs[static_cast<std::size_t>(k)];
        sc.ris.push_back(rs);
    }

    spec.kind = experiment_kind_from_string(r.get_string("experiment.kind", "mi"));
    spec.sweep_name = r.get_string("experiment.sweep", "");
    if (r.has("experiment.values"))
        spec.sweep_values = r.get_list("experiment.values");
    spec.output_path = r.get_string("experiment.output", "");
    spec.seed = static_cast<std::uint64_t>(r.get_double("experiment.seed", 1.0));
    spec.samples = static_cast<std::size_t>(r.get_double("experiment.samples", 2000.0));
    spec.threads = r.get_int("experiment.threads", 1);
    spec.phases = phase_mode_from_string(r.get_string("experiment.phases", "identity"));
    spec.include_numeric = r.get_bool("experiment.numeric", true);
    if (r.has("experiment.k_values")) {
        spec.k_values.clear();
        for (double v : r.get_list("experiment.k_values"))
            spec.k_values.push_back(static_cast<int>(v));
    }
    spec.sigma_values_deg = r.get_list("experiment.sigma_values_deg", spec.sigma_values_deg);
    spec.h_over_d_values = r.get_list("experiment.h_over_d_values", spec.h_over_d_values);
    spec.theta_total_deg = r.get_double("experiment.theta_total_deg", spec.theta_total_deg);

    r.check_all_used();
    return spec;
}

ExperimentSpec parse_experiment_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError(path, 0, "cannot open config file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_experiment_text(ss.str(), path);
}

} // namespace riscap
