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

#include <cstddef>

namespace fdtc
{

/// Stopping rules for the density root finder.
struct SolverConfig
{
    int max_iterations = 50;
    double abs_tolerance = 1e-10; ///< on |q(lambda) - epsilon|
    double min_density = 1e-12;   ///< floor applied when a Newton step leaves the positive axis

    void validate() const;
};

// ---- Special functions ------------------------------------------------------

/// Gamma function for a > 0.
double gamma_fn(double a);

/// Lower incomplete gamma function gamma(a, x) = int_0^x t^(a-1) e^(-t) dt.
double lower_incomplete_gamma(double a, double x);

/// Upper incomplete gamma function Gamma(a, x) = int_x^inf t^(a-1) e^(-t) dt.
double upper_incomplete_gamma(double a, double x);

/// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a), computed without
/// forming Gamma(a) so it stays finite for large a.
double regularized_lower_gamma(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double regularized_upper_gamma(double a, double x);

// ---- Outage lower bound and its inversion ----------------------------------

/// Nearest-neighbour outage approximation gamma(n, lambda*pi*omega) / Gamma(n).
///
/// `order` is the index of the first interferer that survives cancellation
/// (l/2 + 1 for full duplex, l + 1 for half duplex). lambda = +inf is allowed and maps to 1.
double op_lb_approx(double lambda, int order, double omega);

/// Literal variant gamma(order, x) / Gamma(order + 1); saturates at 1/order.
double op_lb_approx_shifted(double lambda, int order, double omega);

/// Shape of the function being inverted: gamma(order, x) / normalization.
struct OutageCurve
{
    int order = 1;
    double normalization = 1.0; ///< Gamma(order) for the standard law

    static OutageCurve standard(int order);
    static OutageCurve shifted(int order); ///< normalization Gamma(order + 1)

    double value(double lambda, double omega) const;
    double derivative(double lambda, double omega) const;
    double supremum() const; ///< limit as lambda -> inf
};

/// Closed-form single-term starting point for the Newton iteration.
double newton_initial_guess(double omega, int order, double epsilon);

struct DensitySolution
{
    double lambda = 0.0;
    int iterations = 0;          ///< Newton steps taken (bisection steps are counted separately)
    int bisection_steps = 0;     ///< non-zero only when the bisection fallback ran
    double residual = 0.0;       ///< |q(lambda) - epsilon|
    bool used_fallback = false;
    bool convexity_warning = false; ///< order - 1 > lambda * pi * omega at the root
};

/// Solve q(lambda) = epsilon for q(lambda) = gamma(order, lambda*pi*omega) / Gamma(order).
///
/// Newton-Raphson from the closed-form initial guess, written in the upper incomplete
/// gamma form; falls back to bisection when Newton stalls. Throws convergence_error if
/// neither reaches `cfg.abs_tolerance`.
DensitySolution newton_raphson_density(double omega, int order, double epsilon,
                                       const SolverConfig &cfg = {});

/// Same solver for an arbitrary curve (used by the literal half-duplex law).
DensitySolution solve_density(const OutageCurve &curve, double omega, double epsilon,
                              const SolverConfig &cfg = {});

/// Convenience overload in terms of the number of cancelled interferer nodes l (even):
/// order = l/2 + 1.
DensitySolution newton_raphson_density_fd(double omega, int cancelled_nodes, double epsilon,
                                          const SolverConfig &cfg = {});

} // namespace fdtc
