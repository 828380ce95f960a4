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

#include <vector>

namespace riscap {

/// Standard normal CDF.
double normal_cdf(double x);

/// Standard normal quantile, p in (0, 1). Rational approximation refined by
/// one Halley step against erfc, accurate to ~1e-13.
double normal_quantile(double p);

double sample_mean(const std::vector<double> &v);
double sample_variance(const std::vector<double> &v); // unbiased, n-1
double sample_skewness(const std::vector<double> &v);

/// Two-sample Kolmogorov distance between the empirical CDFs of a and b.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Kolmogorov distance between the empirical CDF of the samples and the
/// Gaussian with the given mean and standard deviation.
double ks_vs_gaussian(std::vector<double> samples, double mean, double stddev);

} // namespace riscap
