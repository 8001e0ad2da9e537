// SPDX-License-Identifier: Apache-2.0
//
// fdtc - transmission capacity toolkit for full-duplex MIMO ad-hoc networks
// Copyright (C) 2026 The fdtc authors
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

#include "fdtc/validation.hpp"

#include "fdtc/bounds.hpp"
#include "fdtc/error.hpp"
#include "fdtc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fdtc
{

double bisection_density(int order, double omega, double epsilon, double rel_tol)
{
    if (order < 1 || !(omega > 0.0) || !(epsilon > 0.0 && epsilon < 1.0))
        throw domain_error("bisection_density: invalid arguments");
    auto q = [&](double lambda) {
        return regularized_lower_gamma(order, lambda * std::numbers::pi * omega);
    };
    double lo = 0.0;
    double hi = 1.0;
    while (q(hi) <= epsilon)
        hi *= 2.0;
    for (int k = 0; k < 2000 && (hi - lo) > rel_tol * hi; ++k)
    {
        const double mid = 0.5 * (lo + hi);
        (q(mid) > epsilon ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

double nearest_distance_ks(int n, double lambda, double radius, std::uint64_t samples,
                           std::uint64_t seed)
{
    if (n < 1 || samples < 1)
        throw domain_error("nearest_distance_ks: invalid arguments");
    const auto params = DeploymentParams::with_radius(lambda, radius, 1.0);
    std::vector<double> r;
    r.reserve(samples);
    for (std::uint64_t s = 0; s < samples; ++s)
    {
        Rng rng = substream(seed, s, StreamTag::validation);
        const NetworkRealization net = sample_network(params, rng);
        const auto idx = static_cast<std::size_t>(n);
        // Fewer than n points on the disk: the n-th neighbour lies beyond the radius.
        r.push_back(net.interferer_count() >= idx ? net.distance[net.by_distance[idx - 1]]
                                                  : std::numeric_limits<double>::infinity());
    }
    std::sort(r.begin(), r.end());
    const double count = static_cast<double>(samples);
    double ks = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i)
    {
        const double cdf = std::isinf(r[i]) ? 1.0
                                            : regularized_lower_gamma(n, lambda * std::numbers::pi * r[i] * r[i]);
        ks = std::max({ks, (i + 1) / count - cdf, cdf - i / count});
    }
    return ks;
}

double root_finder_cross_check()
{
    double worst = 0.0;
    for (double omega : {0.1, 0.3334, 1.0, 4.0})
        for (int l : {0, 2, 4, 6, 8})
            for (double eps : {0.01, 0.05, 0.1, 0.2, 0.5})
            {
                const double newton = newton_raphson_density_fd(omega, l, eps).lambda;
                const double reference = bisection_density(l / 2 + 1, omega, eps);
                worst = std::max(worst, std::abs(newton - reference) / reference);
            }
    return worst;
}

std::vector<CheckResult> run_validation_suite(std::uint64_t seed)
{
    std::vector<CheckResult> out;

    const double estimate = moment_psi_power_oracle(4.0, 1000000, seed);
    const auto selected = select_psi_moment_form(4.0, estimate);
    const double pinned = psi_power_moment(4.0, kPsiMomentForm);
    out.push_back({"psi_moment_alpha4", std::abs(estimate - pinned) / pinned, 0.01,
                   selected.has_value() && *selected == kPsiMomentForm});

    const double gap = root_finder_cross_check();
    out.push_back({"newton_vs_bisection", gap, 1e-6, gap <= 1e-6});

    const double lambda = 0.1;
    const double radius = std::sqrt(200.0 / (lambda * std::numbers::pi));
    for (int n = 1; n <= 3; ++n)
    {
        const double ks = nearest_distance_ks(n, lambda, radius, 10000, seed + n);
        out.push_back({"nearest_distance_ks_n" + std::to_string(n), ks, 0.02, ks <= 0.02});
    }
    return out;
}

} // namespace fdtc
