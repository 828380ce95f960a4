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

#include "riscap/montecarlo.hpp"

#include "riscap/channel_sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace riscap {

MonteCarloResult simulate(const Scenario &scenario, const std::vector<PhaseProfile> &phases,
                          std::size_t n_samples, std::uint64_t seed, int threads) {
    if (n_samples < 1)
        throw std::invalid_argument("simulate: need at least one sample");
    const int k_count = scenario.ris_count();
    if (static_cast<int>(phases.size()) != k_count)
        throw std::invalid_argument("simulate: one phase profile per surface required");
    if (threads < 1)
        threads = 1;

    const bool direct = scenario.r_d.has_value();
    const Matrix q_sqrt = psd_sqrt(scenario.q);

    // Per-link samplers with the correlation square roots precomputed.
    std::optional<KroneckerSampler> direct_sampler;
    if (direct)
        direct_sampler.emplace(*scenario.r_d, *scenario.t_d, scenario.n_t);
    std::vector<KroneckerSampler> tx_side, rx_side; // TX->RIS, RIS->RX
    std::vector<Vector> coeffs;
    std::vector<double> sqrt_gamma;
    for (int k = 0; k < k_count; ++k) {
        const auto &link = scenario.links[static_cast<std::size_t>(k)];
        tx_side.emplace_back(link.s_t.m, link.t, scenario.n_t);
        rx_side.emplace_back(link.r, link.s_r.m, scenario.n_t);
        coeffs.push_back(phases[static_cast<std::size_t>(k)].coefficients());
        sqrt_gamma.push_back(std::sqrt(link.gamma));
    }

    std::vector<double> samples(n_samples, 0.0);
    std::vector<char> bad(n_samples, 0);

    auto run_sample = [&](std::size_t i) {
        // Slot layout inside sample i's stream: 0 direct, then (1+2k, 2+2k)
        // for the k-th surface's TX-side and RX-side draws.
        Matrix g;
        if (direct) {
            RandomStream s(seed, i, 0);
            g = direct_sampler->draw(s);
        } else {
            g = Matrix::Zero(scenario.n_r, scenario.n_t);
        }
        for (int k = 0; k < k_count; ++k) {
            RandomStream st(seed, i, static_cast<std::uint32_t>(1 + 2 * k));
            RandomStream sr(seed, i, static_cast<std::uint32_t>(2 + 2 * k));
            const Matrix gt = tx_side[static_cast<std::size_t>(k)].draw(st);
            const Matrix gr = rx_side[static_cast<std::size_t>(k)].draw(sr);
            g.noalias() += sqrt_gamma[static_cast<std::size_t>(k)] *
                           (gr * coeffs[static_cast<std::size_t>(k)].asDiagonal() * gt);
        }
        const Matrix m = g * q_sqrt;
        const Matrix gram = Matrix::Identity(scenario.n_r, scenario.n_r) +
                            scenario.rho * (m * m.adjoint());
        Eigen::LLT<Matrix> llt(hermitize(gram));
        if (llt.info() != Eigen::Success) {
            bad[i] = 1;
            return;
        }
        const double v =
            2.0 * llt.matrixL().toDenseMatrix().diagonal().real().array().log().sum();
        if (!std::isfinite(v)) {
            bad[i] = 1;
            return;
        }
        samples[i] = v;
    };

    if (threads == 1) {
        for (std::size_t i = 0; i < n_samples; ++i)
            run_sample(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= n_samples)
                        return;
                    run_sample(i);
                }
            });
        for (auto &th : pool)
            th.join();
    }

    MonteCarloResult res;
    res.seed = seed;
    res.n = n_samples;
    res.samples.reserve(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        if (bad[i])
            ++res.excluded;
        else
            res.samples.push_back(samples[i]);
    }
    if (res.samples.empty())
        throw std::runtime_error("simulate: every sample was non-finite");

    double s = 0.0;
    for (double x : res.samples)
        s += x;
    res.mean = s / static_cast<double>(res.samples.size());
    double v = 0.0;
    for (double x : res.samples)
        v += (x - res.mean) * (x - res.mean);
    res.variance = res.samples.size() > 1
                       ? v / static_cast<double>(res.samples.size() - 1)
                       : 0.0;
    return res;
}

std::vector<double> empirical_cdf(const MonteCarloResult &result,
                                  const std::vector<double> &grid) {
    if (result.samples.size() < 100)
        throw std::invalid_argument("empirical_cdf: need at least 100 samples");
    std::vector<double> sorted = result.samples;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> cdf(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto it = std::upper_bound(sorted.begin(), sorted.end(), grid[i]);
        cdf[i] = static_cast<double>(it - sorted.begin()) /
                 static_cast<double>(sorted.size());
    }
    return cdf;
}

} // namespace riscap
