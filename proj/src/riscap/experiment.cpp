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

#include "riscap/experiment.hpp"

#include "riscap/csv.hpp"
#include "riscap/detequiv.hpp"
#include "riscap/montecarlo.hpp"
#include "riscap/optimizer.hpp"
#include "riscap/spectra.hpp"
#include "riscap/stats.hpp"
#include "riscap/version.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace riscap {

namespace {

inline double deg2rad(double d) { return d * M_PI / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / M_PI; }
inline double db2lin(double db) { return std::pow(10.0, db / 10.0); }
inline double lin2db(double lin) { return 10.0 * std::log10(lin); }

void parallel_ordered(std::size_t n, int threads, const std::function<void(std::size_t)> &work) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const int used = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(threads), n));
    pool.reserve(static_cast<std::size_t>(used));
    std::atomic<bool> failed{false};
    std::string error;
    std::mutex error_mutex;
    for (int t = 0; t < used; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n || failed.load())
                    return;
                try {
                    work(i);
                } catch (const std::exception &e) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    error = e.what();
                    failed.store(true);
                    return;
                }
            }
        });
    for (auto &th : pool)
        th.join();
    if (failed.load())
        throw std::runtime_error(error);
}

std::vector<PhaseProfile> identity_phases(const Scenario &sc) {
    std::vector<PhaseProfile> ps;
    for (int k = 0; k < sc.ris_count(); ++k)
        ps.push_back(PhaseProfile::identity(
            sc.links[static_cast<std::size_t>(k)].geometry.element_count(), k));
    return ps;
}

std::vector<PhaseProfile> analytic_phase_set(const Scenario &sc) {
    std::vector<PhaseProfile> ps;
    for (int k = 0; k < sc.ris_count(); ++k) {
        const auto &link = sc.links[static_cast<std::size_t>(k)];
        ps.push_back(analytic_phases(link.s_t.m, link.s_r.m, k).profile);
    }
    return ps;
}

std::vector<PhaseProfile> phases_for_mode(const Scenario &sc, PhaseMode mode) {
    switch (mode) {
    case PhaseMode::Identity:
        return identity_phases(sc);
    case PhaseMode::Analytic:
        return analytic_phase_set(sc);
    case PhaseMode::Numeric:
        return alternating_optimize(sc).phases;
    }
    throw std::logic_error("phases_for_mode: unreachable");
}

// Angles reported in the detequiv CSV row; geometry-derived when no explicit
// angle is configured.
std::pair<double, double> report_angles_deg(const SystemConfig &cfg) {
    if (cfg.ris.empty())
        return {std::nan(""), std::nan("")};
    const auto &rs = cfg.ris.front();
    SceneGeometry scene{cfg.d, cfg.h, rs.x_offset, rs.tilt};
    const double t1 = rs.theta_in
                          ? *rs.theta_in
                          : std::acos(std::abs(scene.incoming_direction_local().z()));
    const double t2 = rs.theta_out
                          ? *rs.theta_out
                          : std::acos(std::abs(scene.outgoing_direction_local().z()));
    return {rad2deg(t1), rad2deg(t2)};
}

std::vector<std::string> detequiv_row(const SystemConfig &cfg, double mean, double variance) {
    const auto [t1, t2] = report_angles_deg(cfg);
    const double sigma = cfg.ris.empty() ? std::nan("") : rad2deg(cfg.ris.front().sigma);
    const double xd = cfg.ris.empty() ? std::nan("") : cfg.ris.front().x_offset / cfg.d;
    return {cfg.name,
            std::to_string(cfg.ris_count()),
            format_number(sigma),
            format_number(t1),
            format_number(t2),
            format_number(xd),
            format_number(mean),
            format_number(variance)};
}

std::vector<std::string> manifest_lines(const ExperimentSpec &spec) {
    std::vector<std::string> m;
    m.push_back(std::string("ris-capacity ") + RISCAP_VERSION);
    {
        std::ostringstream s;
        s << "kind=" << to_string(spec.kind) << " seed=" << spec.seed
          << " samples=" << spec.samples << " threads=" << spec.threads
          << " phases=" << to_string(spec.phases);
        m.push_back(s.str());
    }
    {
        const auto &c = spec.scenario;
        std::ostringstream s;
        s << "scenario name=" << c.name << " n_t=" << c.n_t << " n_r=" << c.n_r
          << " rho=" << format_number(c.rho) << " lambda_m=" << format_number(c.wavelength)
          << " direct_link=" << (c.direct_link ? 1 : 0) << " d=" << format_number(c.d)
          << " h=" << format_number(c.h) << " b=" << format_number(c.pathloss_exponent);
        m.push_back(s.str());
    }
    if (!spec.scenario.ris.empty()) {
        const auto &rs = spec.scenario.ris.front();
        const auto [t1, t2] = report_angles_deg(spec.scenario);
        std::ostringstream s;
        s << "ris count=" << spec.scenario.ris_count() << " n_side=" << rs.n_side
          << " spacing_m=" << format_number(rs.spacing)
          << " sigma_deg=" << format_number(rad2deg(rs.sigma))
          << " theta1_deg=" << format_number(t1) << " theta2_deg=" << format_number(t2)
          << " tilt_deg=" << format_number(rad2deg(rs.tilt));
        m.push_back(s.str());
    }
    m.push_back("tolerances fp_tol=1e-10 fp_max_iter=2000 quad_tol=1e-06 "
                "alt_mi_rel_tol=1e-08 ascent_tol=1e-09");
    if (!spec.sweep_name.empty()) {
        std::ostringstream s;
        s << "sweep name=" << spec.sweep_name << " values=";
        for (std::size_t i = 0; i < spec.sweep_values.size(); ++i)
            s << (i ? "," : "") << format_number(spec.sweep_values[i]);
        m.push_back(s.str());
    }
    return m;
}

CsvWriter make_writer(const ExperimentSpec &spec) {
    CsvWriter w;
    for (const auto &line : manifest_lines(spec))
        w.add_manifest(line);
    return w;
}

// ---- kind pipelines --------------------------------------------------

int run_point_kind(const ExperimentSpec &spec) {
    // mi / variance over an optional sweep.
    std::vector<SystemConfig> points;
    if (spec.sweep_name.empty()) {
        points.push_back(spec.scenario);
    } else {
        for (double v : spec.sweep_values)
            points.push_back(apply_sweep_value(spec.scenario, spec.sweep_name, v));
    }

    const bool with_outage = spec.kind == ExperimentKind::Variance;
    CsvWriter w = make_writer(spec);
    std::vector<std::string> header = {"scenario",   "k",          "sigma_deg",
                                       "theta1_deg", "theta2_deg", "x_over_d",
                                       "mean_nats",  "variance_nats2"};
    if (with_outage) {
        header.push_back("outage_p10_nats");
        header.push_back("outage_p50_nats");
        header.push_back("outage_p90_nats");
    }
    w.set_header(header);

    std::vector<std::vector<std::string>> rows(points.size());
    parallel_ordered(points.size(), spec.threads, [&](std::size_t i) {
        const Scenario sc = materialize(points[i]);
        DetEquiv de(sc, phases_for_mode(sc, spec.phases));
        const MiStatistics st = de.statistics();
        auto row = detequiv_row(points[i], st.mean_nats, st.variance_nats2);
        if (with_outage) {
            row.push_back(format_number(outage_mi(st, 0.1)));
            row.push_back(format_number(outage_mi(st, 0.5)));
            row.push_back(format_number(outage_mi(st, 0.9)));
        }
        rows[i] = std::move(row);
    });
    for (auto &r : rows)
        w.add_row(r);
    w.write(spec.output_path);
    return 0;
}

int run_montecarlo(const ExperimentSpec &spec) {
    const Scenario sc = materialize(spec.scenario);
    const auto phases = phases_for_mode(sc, spec.phases);
    const MonteCarloResult res = simulate(sc, phases, spec.samples, spec.seed, spec.threads);

    CsvWriter samples = make_writer(spec);
    samples.set_header({"mi_nats"});
    for (double s : res.samples)
        samples.add_row(std::vector<double>{s});
    samples.write(spec.output_path);

    CsvWriter summary = make_writer(spec);
    summary.set_header({"scenario", "k", "sigma_deg", "theta1_deg", "theta2_deg", "x_over_d",
                        "mc_mean_nats", "mc_variance_nats2"});
    summary.add_row(detequiv_row(spec.scenario, res.mean, res.variance));
    summary.write(spec.output_path + ".summary.csv");

    if (res.excluded > 0)
        std::cerr << "montecarlo: excluded " << res.excluded << " non-finite samples\n";
    return 0;
}

int run_optimize(const ExperimentSpec &spec) {
    const Scenario sc = materialize(spec.scenario);
    const AlternatingResult res = alternating_optimize(sc);

    CsvWriter profiles = make_writer(spec);
    profiles.set_header({"ris", "n", "phi_n"});
    for (std::size_t k = 0; k < res.phases.size(); ++k)
        for (Eigen::Index n = 0; n < res.phases[k].size(); ++n)
            profiles.add_row(std::vector<double>{static_cast<double>(k),
                                                 static_cast<double>(n),
                                                 res.phases[k].phases(n)});
    profiles.write(spec.output_path);

    CsvWriter trace = make_writer(spec);
    trace.set_header({"iteration", "mi_nats"});
    for (std::size_t i = 0; i < res.mi_trace.size(); ++i)
        trace.add_row(std::vector<double>{static_cast<double>(i + 1), res.mi_trace[i]});
    trace.write(spec.output_path + ".trace.csv");

    std::cout << "optimize: mi=" << format_number(res.mi)
              << " outer_iterations=" << res.outer_iterations
              << (res.oscillation_warning ? " (oscillation warning)" : "") << "\n";
    return 0;
}

int run_spectrum(const ExperimentSpec &spec) {
    const Scenario sc = materialize(spec.scenario);
    if (sc.links.empty())
        throw std::invalid_argument("spectrum: scenario has no surface");
    const auto &link = sc.links.front();

    Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitize(link.s_t.m), Eigen::EigenvaluesOnly);
    std::vector<double> evs(eig.eigenvalues().data(),
                            eig.eigenvalues().data() + eig.eigenvalues().size());
    std::sort(evs.begin(), evs.end());
    const auto density = spectral_density(link.weight_in, link.geometry);
    const auto eta = theoretical_eigen_sample(density);

    CsvWriter w = make_writer(spec);
    w.set_header({"source", "value", "cumulative_probability"});
    for (std::size_t i = 0; i < evs.size(); ++i)
        w.add_row({"s_eigenvalues", format_number(evs[i]),
                   format_number(static_cast<double>(i + 1) / static_cast<double>(evs.size()))});
    for (std::size_t i = 0; i < eta.size(); ++i)
        w.add_row({"eta", format_number(eta[i]),
                   format_number(static_cast<double>(i + 1) / static_cast<double>(eta.size()))});
    w.write(spec.output_path);
    return 0;
}

int run_figure2(const ExperimentSpec &spec) {
    CsvWriter w = make_writer(spec);
    w.set_header({"sigma_deg", "spacing_over_lambda", "source", "value",
                  "cumulative_probability"});
    const double lambda = spec.scenario.wavelength;
    const int n_side = spec.scenario.ris.empty() ? 20 : spec.scenario.ris.front().n_side;

    for (double sigma_deg : spec.sigma_values_deg)
        for (double aol : {0.5, 0.25}) {
            // Normal-incidence weight, per the reference setup for this plot.
            WeightFunction wf(Eigen::Vector3d(0, 0, 1), deg2rad(sigma_deg), lambda);
            const RisGeometry geom = make_ris_geometry(n_side, aol * lambda);
            const CorrelationMatrix s = build_correlation(geom, wf);
            Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitize(s.m), Eigen::EigenvaluesOnly);
            std::vector<double> evs(eig.eigenvalues().data(),
                                    eig.eigenvalues().data() + eig.eigenvalues().size());
            std::sort(evs.begin(), evs.end());
            const auto eta = theoretical_eigen_sample(spectral_density(wf, geom));
            const double n = static_cast<double>(evs.size());
            for (std::size_t i = 0; i < evs.size(); ++i)
                w.add_row({format_number(sigma_deg), format_number(aol), "s_eigenvalues",
                           format_number(evs[i]), format_number((i + 1) / n)});
            for (std::size_t i = 0; i < eta.size(); ++i)
                w.add_row({format_number(sigma_deg), format_number(aol), "eta",
                           format_number(eta[i]), format_number((i + 1) / n)});
        }
    w.write(spec.output_path);
    return 0;
}

int run_figure3(const ExperimentSpec &spec) {
    std::vector<double> sigmas = spec.sweep_values;
    if (sigmas.empty())
        sigmas = {1, 2, 3, 5, 7, 10, 15, 20, 30, 45, 60};

    struct Point {
        int k;
        double sigma_deg;
    };
    std::vector<Point> points;
    for (int k : spec.k_values)
        for (double s : sigmas)
            points.push_back({k, s});

    CsvWriter w = make_writer(spec);
    w.set_header({"sigma_deg", "k", "mi_unopt", "mi_analytic", "mi_numeric", "mi_mc"});
    std::vector<std::vector<double>> rows(points.size());

    parallel_ordered(points.size(), spec.threads, [&](std::size_t i) {
        SystemConfig cfg = apply_sweep_value(spec.scenario, "ris_count",
                                             static_cast<double>(points[i].k));
        cfg = apply_sweep_value(cfg, "sigma_deg", points[i].sigma_deg);
        const Scenario sc = materialize(cfg);

        DetEquiv unopt(sc);
        const double mi_unopt = unopt.ergodic_mi(unopt.solve());

        const auto analytic = analytic_phase_set(sc);
        DetEquiv an(sc, analytic);
        const double mi_analytic = an.ergodic_mi(an.solve());

        double mi_numeric = std::nan("");
        if (spec.include_numeric)
            mi_numeric = alternating_optimize(sc).mi;

        const auto mc_phases = spec.phases == PhaseMode::Identity ? identity_phases(sc)
                                                                  : analytic;
        const MonteCarloResult mc = simulate(sc, mc_phases, spec.samples, spec.seed, 1);

        rows[i] = {points[i].sigma_deg, static_cast<double>(points[i].k), mi_unopt,
                   mi_analytic, mi_numeric, mc.mean};
    });
    for (auto &r : rows)
        w.add_row(r);
    w.write(spec.output_path);
    return 0;
}

int run_figure4(const ExperimentSpec &spec) {
    std::vector<double> thetas = spec.sweep_values;
    if (thetas.empty())
        for (double t = 5.0; t <= 95.0; t += 5.0)
            thetas.push_back(t);

    struct Point {
        double theta1_deg;
        double sigma_deg;
    };
    std::vector<Point> points;
    for (double s : spec.sigma_values_deg)
        for (double t : thetas)
            points.push_back({t, s});

    CsvWriter w = make_writer(spec);
    w.set_header({"theta1_deg", "sigma_deg", "mi_unopt", "mi_analytic", "mi_numeric"});
    std::vector<std::vector<double>> rows(points.size());

    parallel_ordered(points.size(), spec.threads, [&](std::size_t i) {
        SystemConfig cfg = spec.scenario;
        for (auto &rs : cfg.ris) {
            rs.theta_in = deg2rad(points[i].theta1_deg);
            rs.theta_out = deg2rad(spec.theta_total_deg - points[i].theta1_deg);
            rs.sigma = deg2rad(points[i].sigma_deg);
        }
        const Scenario sc = materialize(cfg);

        DetEquiv unopt(sc);
        const double mi_unopt = unopt.ergodic_mi(unopt.solve());
        DetEquiv an(sc, analytic_phase_set(sc));
        const double mi_analytic = an.ergodic_mi(an.solve());
        double mi_numeric = std::nan("");
        if (spec.include_numeric)
            mi_numeric = alternating_optimize(sc).mi;

        rows[i] = {points[i].theta1_deg, points[i].sigma_deg, mi_unopt, mi_analytic,
                   mi_numeric};
    });
    for (auto &r : rows)
        w.add_row(r);
    w.write(spec.output_path);
    return 0;
}

int run_figure5(const ExperimentSpec &spec) {
    std::vector<double> xods = spec.sweep_values;
    if (xods.empty())
        for (double x = -0.45; x <= 0.451; x += 0.05)
            xods.push_back(x);

    CsvWriter w = make_writer(spec);
    w.set_header({"x_over_d", "h_over_d", "gamma_db", "mi_unopt", "mi_opt"});

    for (double hod : spec.h_over_d_values) {
        SystemConfig cfg = spec.scenario;
        cfg.h = hod * cfg.d;
        std::vector<double> xs;
        for (double xod : xods)
            xs.push_back(xod * cfg.d);
        std::vector<PlacementPoint> pts(xs.size());
        parallel_ordered(xs.size(), spec.threads, [&](std::size_t i) {
            pts[i] = placement_scan(cfg, {xs[i]}).front();
        });
        for (const auto &pt : pts)
            w.add_row(std::vector<double>{pt.x / cfg.d, hod, lin2db(pt.gamma),
                                          pt.mi_unoptimized, pt.mi_optimized});
    }
    w.write(spec.output_path);
    return 0;
}

int run_placement(const ExperimentSpec &spec) {
    std::vector<double> xods = spec.sweep_values;
    if (xods.empty())
        for (double x = -0.45; x <= 0.451; x += 0.05)
            xods.push_back(x);
    std::vector<double> xs;
    for (double xod : xods)
        xs.push_back(xod * spec.scenario.d);

    std::vector<PlacementPoint> pts(xs.size());
    parallel_ordered(xs.size(), spec.threads, [&](std::size_t i) {
        pts[i] = placement_scan(spec.scenario, {xs[i]}).front();
    });

    CsvWriter w = make_writer(spec);
    w.set_header({"x_over_d", "gamma_db", "mi_unopt", "mi_opt"});
    for (const auto &pt : pts)
        w.add_row(std::vector<double>{pt.x / spec.scenario.d, lin2db(pt.gamma),
                                      pt.mi_unoptimized, pt.mi_optimized});
    w.write(spec.output_path);
    return 0;
}

int run_figure6(const ExperimentSpec &spec) {
    CsvWriter w = make_writer(spec);
    w.set_header({"k", "phases", "mi_nats", "cdf_mc", "cdf_gauss"});

    for (int k : spec.k_values)
        for (const bool optimized : {false, true}) {
            const SystemConfig cfg =
                apply_sweep_value(spec.scenario, "ris_count", static_cast<double>(k));
            const Scenario sc = materialize(cfg);
            const auto phases = optimized ? analytic_phase_set(sc) : identity_phases(sc);

            DetEquiv de(sc, phases);
            const MiStatistics st = de.statistics();
            const MonteCarloResult mc =
                simulate(sc, phases, spec.samples, spec.seed, spec.threads);

            const double sd = std::sqrt(std::max(st.variance_nats2, 0.0));
            const double lo = std::min(st.mean_nats - 4.0 * sd,
                                       *std::min_element(mc.samples.begin(), mc.samples.end()));
            const double hi = std::max(st.mean_nats + 4.0 * sd,
                                       *std::max_element(mc.samples.begin(), mc.samples.end()));
            std::vector<double> grid;
            const int n_grid = 201;
            for (int i = 0; i < n_grid; ++i)
                grid.push_back(lo + (hi - lo) * i / (n_grid - 1));
            const auto cdf = empirical_cdf(mc, grid);
            for (int i = 0; i < n_grid; ++i) {
                const double g = sd > 0.0 ? normal_cdf((grid[static_cast<std::size_t>(i)] -
                                                        st.mean_nats) /
                                                       sd)
                                          : (grid[static_cast<std::size_t>(i)] >= st.mean_nats
                                                 ? 1.0
                                                 : 0.0);
                w.add_row({std::to_string(k), optimized ? "analytic" : "identity",
                           format_number(grid[static_cast<std::size_t>(i)]),
                           format_number(cdf[static_cast<std::size_t>(i)]),
                           format_number(g)});
            }
        }
    w.write(spec.output_path);
    return 0;
}

} // namespace

ExperimentKind experiment_kind_from_string(const std::string &s) {
    if (s == "spectrum")
        return ExperimentKind::Spectrum;
    if (s == "mi")
        return ExperimentKind::Mi;
    if (s == "variance")
        return ExperimentKind::Variance;
    if (s == "montecarlo")
        return ExperimentKind::MonteCarlo;
    if (s == "optimize")
        return ExperimentKind::Optimize;
    if (s == "placement")
        return ExperimentKind::Placement;
    if (s == "figure2")
        return ExperimentKind::Figure2;
    if (s == "figure3")
        return ExperimentKind::Figure3;
    if (s == "figure4")
        return ExperimentKind::Figure4;
    if (s == "figure5")
        return ExperimentKind::Figure5;
    if (s == "figure6")
        return ExperimentKind::Figure6;
    throw std::invalid_argument("unknown experiment kind '" + s + "'");
}

std::string to_string(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::Spectrum:
        return "spectrum";
    case ExperimentKind::Mi:
        return "mi";
    case ExperimentKind::Variance:
        return "variance";
    case ExperimentKind::MonteCarlo:
        return "montecarlo";
    case ExperimentKind::Optimize:
        return "optimize";
    case ExperimentKind::Placement:
        return "placement";
    case ExperimentKind::Figure2:
        return "figure2";
    case ExperimentKind::Figure3:
        return "figure3";
    case ExperimentKind::Figure4:
        return "figure4";
    case ExperimentKind::Figure5:
        return "figure5";
    case ExperimentKind::Figure6:
        return "figure6";
    }
    return "?";
}

PhaseMode phase_mode_from_string(const std::string &s) {
    if (s == "identity")
        return PhaseMode::Identity;
    if (s == "analytic")
        return PhaseMode::Analytic;
    if (s == "numeric")
        return PhaseMode::Numeric;
    throw std::invalid_argument("unknown phase mode '" + s + "'");
}

std::string to_string(PhaseMode mode) {
    switch (mode) {
    case PhaseMode::Identity:
        return "identity";
    case PhaseMode::Analytic:
        return "analytic";
    case PhaseMode::Numeric:
        return "numeric";
    }
    return "?";
}

const std::vector<std::string> &known_sweep_parameters() {
    static const std::vector<std::string> names = {
        "sigma_deg", "snr_db", "theta1_deg", "theta2_deg", "x_over_d", "n_side", "ris_count"};
    return names;
}

SystemConfig apply_sweep_value(const SystemConfig &base, const std::string &name, double value) {
    SystemConfig cfg = base;
    if (name == "sigma_deg") {
        for (auto &rs : cfg.ris)
            rs.sigma = deg2rad(value);
    } else if (name == "snr_db") {
        cfg.rho = db2lin(value);
    } else if (name == "theta1_deg") {
        for (auto &rs : cfg.ris)
            rs.theta_in = deg2rad(value);
    } else if (name == "theta2_deg") {
        for (auto &rs : cfg.ris)
            rs.theta_out = deg2rad(value);
    } else if (name == "x_over_d") {
        for (auto &rs : cfg.ris)
            rs.x_offset = value * cfg.d;
    } else if (name == "n_side") {
        for (auto &rs : cfg.ris)
            rs.n_side = static_cast<int>(value);
    } else if (name == "ris_count") {
        const int k = static_cast<int>(value);
        if (k < 0)
            throw std::invalid_argument("apply_sweep_value: ris_count must be >= 0");
        if (cfg.ris.empty() && k > 0)
            throw std::invalid_argument("apply_sweep_value: no surface template to replicate");
        const RisSpec tpl = cfg.ris.empty() ? RisSpec{} : cfg.ris.front();
        cfg.ris.assign(static_cast<std::size_t>(k), tpl);
    } else {
        throw std::invalid_argument("apply_sweep_value: unknown parameter '" + name + "'");
    }
    return cfg;
}

std::vector<Diagnostic> validate(const ExperimentSpec &spec) {
    std::vector<Diagnostic> diags;
    const auto &c = spec.scenario;
    auto add = [&](const std::string &field, const std::string &msg) {
        diags.push_back({field, msg});
    };

    if (c.n_t < 1)
        add("scenario.n_t", "antenna count must be >= 1");
    if (c.n_r < 1)
        add("scenario.n_r", "antenna count must be >= 1");
    if (!(c.rho >= 0.0))
        add("scenario.snr_db", "SNR must be finite");
    if (!(c.wavelength > 0.0))
        add("scenario.wavelength", "wavelength must be positive");
    if (!(c.d > 0.0))
        add("geometry.d", "TX-RX distance must be positive");
    if (c.tx_correlation.kind == CorrelationSpec::Kind::Exponential &&
        std::abs(c.tx_correlation.coeff) >= 1.0)
        add("scenario.tx_correlation", "exponential coefficient must satisfy |c| < 1");
    if (c.rx_correlation.kind == CorrelationSpec::Kind::Exponential &&
        std::abs(c.rx_correlation.coeff) >= 1.0)
        add("scenario.rx_correlation", "exponential coefficient must satisfy |c| < 1");

    if (c.input_covariance.kind == InputCovarianceSpec::Kind::File) {
        try {
            input_covariance_from_spec(c.input_covariance, c.n_t);
        } catch (const std::exception &e) {
            add("scenario.q", std::string("Tr{Q} = N_t constraint violated or unreadable: ") +
                                  e.what());
        }
    }
    for (const auto &kind_spec :
         {std::make_pair(std::string("scenario.tx_correlation"), c.tx_correlation),
          std::make_pair(std::string("scenario.rx_correlation"), c.rx_correlation)}) {
        if (kind_spec.second.kind == CorrelationSpec::Kind::File) {
            try {
                correlation_from_spec(kind_spec.second,
                                      kind_spec.first == "scenario.tx_correlation" ? c.n_t
                                                                                   : c.n_r);
            } catch (const std::exception &e) {
                add(kind_spec.first, e.what());
            }
        }
    }

    const double k0 = 2.0 * M_PI / c.wavelength;
    for (std::size_t k = 0; k < c.ris.size(); ++k) {
        const auto &rs = c.ris[k];
        const std::string field = "ris[" + std::to_string(k) + "]";
        if (rs.n_side < 1)
            add(field + ".n_side", "element count per side must be >= 1");
        const double a = rs.spacing > 0.0 ? rs.spacing : c.wavelength / 2.0;
        if (!(a > 0.0))
            add(field + ".spacing", "spacing must be positive");
        else if (k0 > M_PI / a * (1.0 + 1e-12))
            add(field + ".spacing",
                "spectral model precondition k0 <= pi/a violated (spacing > lambda/2)");
        if (!(rs.sigma > 0.0))
            add(field + ".sigma_deg", "angle spread must be positive");
        for (const auto &[angle, name] :
             {std::make_pair(rs.theta_in, ".theta1_deg"),
              std::make_pair(rs.theta_out, ".theta2_deg")}) {
            if (angle && !(*angle >= 0.0 && *angle < M_PI / 2.0))
                add(field + name, "angle must lie in [0, 90) degrees");
        }
        if (!(std::abs(rs.x_offset) < c.d / 2.0))
            add(field + ".x", "surface position must lie strictly inside (-d/2, d/2)");
        if (rs.gamma_override && !(*rs.gamma_override > 0.0))
            add(field + ".gamma", "pathloss factor must be positive");
        else if (!rs.gamma_override) {
            try {
                if (!(pathloss_gamma(c.d, c.h, rs.x_offset, c.pathloss_exponent) > 0.0))
                    add(field + ".gamma", "pathloss factor must be positive");
            } catch (const std::exception &e) {
                add(field + ".gamma", e.what());
            }
        }
    }

    if (!spec.sweep_name.empty()) {
        const auto &known = known_sweep_parameters();
        if (std::find(known.begin(), known.end(), spec.sweep_name) == known.end())
            add("experiment.sweep", "unknown sweep parameter '" + spec.sweep_name + "'");
        else if (spec.sweep_values.empty())
            add("experiment.values", "sweep requires a nonempty value list");
        const bool sweepable = spec.kind == ExperimentKind::Mi ||
                               spec.kind == ExperimentKind::Variance ||
                               spec.kind == ExperimentKind::Figure3 ||
                               spec.kind == ExperimentKind::Figure4 ||
                               spec.kind == ExperimentKind::Figure5 ||
                               spec.kind == ExperimentKind::Placement;
        if (!sweepable)
            add("experiment.sweep",
                "kind '" + to_string(spec.kind) + "' does not take a sweep");
    }
    if (spec.kind == ExperimentKind::MonteCarlo || spec.kind == ExperimentKind::Figure3 ||
        spec.kind == ExperimentKind::Figure6) {
        if (spec.samples < 1)
            add("experiment.samples", "sample count must be >= 1");
    }
    if (spec.output_path.empty())
        add("experiment.output", "output path required");
    if (spec.kind == ExperimentKind::Figure4 &&
        !(spec.theta_total_deg > 0.0 && spec.theta_total_deg < 180.0))
        add("experiment.theta_total_deg", "total angle must lie in (0, 180) degrees");
    if ((spec.kind == ExperimentKind::Spectrum || spec.kind == ExperimentKind::Figure2 ||
         spec.kind == ExperimentKind::Figure3 || spec.kind == ExperimentKind::Figure4 ||
         spec.kind == ExperimentKind::Figure6 || spec.kind == ExperimentKind::Optimize ||
         spec.kind == ExperimentKind::Placement || spec.kind == ExperimentKind::Figure5) &&
        c.ris.empty())
        add("ris.count", "kind '" + to_string(spec.kind) + "' needs at least one surface");
    return diags;
}

int run(const ExperimentSpec &spec) {
    const auto diags = validate(spec);
    if (!diags.empty()) {
        for (const auto &d : diags)
            std::cerr << "validation: " << d.field << ": " << d.message << "\n";
        return 1;
    }
    for (const auto &line : manifest_lines(spec))
        std::cout << "# " << line << "\n";

    switch (spec.kind) {
    case ExperimentKind::Mi:
    case ExperimentKind::Variance:
        return run_point_kind(spec);
    case ExperimentKind::MonteCarlo:
        return run_montecarlo(spec);
    case ExperimentKind::Optimize:
        return run_optimize(spec);
    case ExperimentKind::Spectrum:
        return run_spectrum(spec);
    case ExperimentKind::Placement:
        return run_placement(spec);
    case ExperimentKind::Figure2:
        return run_figure2(spec);
    case ExperimentKind::Figure3:
        return run_figure3(spec);
    case ExperimentKind::Figure4:
        return run_figure4(spec);
    case ExperimentKind::Figure5:
        return run_figure5(spec);
    case ExperimentKind::Figure6:
        return run_figure6(spec);
    }
    return 1;
}

} // namespace riscap
