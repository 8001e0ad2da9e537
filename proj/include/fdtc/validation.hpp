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

#pragma once

#include "fdtc/numerics.hpp"
#include "fdtc/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fdtc
{

/// Plain bisection for gamma(order, lambda*pi*omega) / Gamma(order) = epsilon. Shares no
/// code with the Newton solver beyond the incomplete gamma evaluation.
double bisection_density(int order, double omega, double epsilon, double rel_tol = 1e-13);

/// Kolmogorov-Smirnov statistic of the n-th nearest interferer distance against
/// P(n, lambda*pi*r^2), over `samples` deployments at density lambda and radius `radius`.
double nearest_distance_ks(int n, double lambda, double radius, std::uint64_t samples,
                           std::uint64_t seed);

/// Largest relative gap between the Newton solver and bisection on a grid of
/// (omega, l, epsilon).
double root_finder_cross_check();

struct CheckResult
{
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

/// Oracle suite behind `fdtc validate`.
std::vector<CheckResult> run_validation_suite(std::uint64_t seed);

} // namespace fdtc
