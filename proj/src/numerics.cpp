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

#include "fdtc/numerics.hpp"

#include "fdtc/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace fdtc
{

namespace
{

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxTerms = 10000;

void check_args(double a, double x, const char *who)
{
    if (!(a > 0.0) || std::isnan(x) || x < 0.0)
        throw domain_error(std::string(who) + ": requires a > 0 and x >= 0");
}

// sum_{k>=0} x^k / (a (a+1) ... (a+k)); gamma(a, x) = x^a e^-x * series.
double lower_series(double a, double x)
{
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int k = 0; k < kMaxTerms; ++k)
    {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps)
            break;
    }
    return sum;
}

// Modified Lentz evaluation of the Legendre continued fraction;
// Gamma(a, x) = x^a e^-x * fraction, valid for x >= a + 1.
double upper_fraction(double a, double x)
{
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxTerms; ++i)
    {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny)
            d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kEps)
            break;
    }
    return h;
}

bool use_series(double a, double x) { return x < a + 1.0; }

} // namespace

void SolverConfig::validate() const
{
    if (max_iterations < 1)
        throw domain_error("SolverConfig: max_iterations must be >= 1");
    if (!(abs_tolerance > 0.0))
        throw domain_error("SolverConfig: abs_tolerance must be > 0");
    if (!(min_density > 0.0))
        throw domain_error("SolverConfig: min_density must be > 0");
}

double gamma_fn(double a)
{
    if (!(a > 0.0))
        throw domain_error("gamma_fn: requires a > 0");
    return std::tgamma(a);
}

double lower_incomplete_gamma(double a, double x)
{
    check_args(a, x, "lower_incomplete_gamma");
    if (x == 0.0)
        return 0.0;
    if (std::isinf(x))
        return gamma_fn(a);
    if (use_series(a, x))
        return std::exp(a * std::log(x) - x) * lower_series(a, x);
    return gamma_fn(a) - std::exp(a * std::log(x) - x) * upper_fraction(a, x);
}

double upper_incomplete_gamma(double a, double x)
{
    check_args(a, x, "upper_incomplete_gamma");
    if (x == 0.0)
        return gamma_fn(a);
    if (std::isinf(x))
        return 0.0;
    if (use_series(a, x))
        return gamma_fn(a) - std::exp(a * std::log(x) - x) * lower_series(a, x);
    return std::exp(a * std::log(x) - x) * upper_fraction(a, x);
}

double regularized_lower_gamma(double a, double x)
{
    check_args(a, x, "regularized_lower_gamma");
    if (x == 0.0)
        return 0.0;
    if (std::isinf(x))
        return 1.0;
    const double prefactor = std::exp(a * std::log(x) - x - std::lgamma(a));
    if (use_series(a, x))
        return std::min(1.0, prefactor * lower_series(a, x));
    return std::max(0.0, 1.0 - prefactor * upper_fraction(a, x));
}

double regularized_upper_gamma(double a, double x)
{
    check_args(a, x, "regularized_upper_gamma");
    if (x == 0.0)
        return 1.0;
    if (std::isinf(x))
        return 0.0;
    const double prefactor = std::exp(a * std::log(x) - x - std::lgamma(a));
    if (use_series(a, x))
        return std::max(0.0, 1.0 - prefactor * lower_series(a, x));
    return std::min(1.0, prefactor * upper_fraction(a, x));
}

// ---- Outage curve ------------------------------------------------------------

OutageCurve OutageCurve::standard(int order)
{
    if (order < 1)
        throw domain_error("OutageCurve: order must be >= 1");
    return {order, gamma_fn(order)};
}

OutageCurve OutageCurve::shifted(int order)
{
    if (order < 1)
        throw domain_error("OutageCurve: order must be >= 1");
    return {order, gamma_fn(order + 1.0)};
}

double OutageCurve::value(double lambda, double omega) const
{
    if (std::isnan(lambda) || lambda < 0.0 || !(omega > 0.0))
        throw domain_error("outage curve: requires lambda >= 0 and omega > 0");
    const double x = lambda * std::numbers::pi * omega;
    return regularized_lower_gamma(order, x) * (gamma_fn(order) / normalization);
}

double OutageCurve::derivative(double lambda, double omega) const
{
    const double scale = std::numbers::pi * omega;
    const double x = lambda * scale;
    if (x <= 0.0)
        return order == 1 ? scale / normalization : 0.0;
    return scale * std::exp((order - 1) * std::log(x) - x) / normalization;
}

double OutageCurve::supremum() const { return gamma_fn(order) / normalization; }

double op_lb_approx(double lambda, int order, double omega)
{
    return OutageCurve::standard(order).value(lambda, omega);
}

double op_lb_approx_shifted(double lambda, int order, double omega)
{
    return OutageCurve::shifted(order).value(lambda, omega);
}

// ---- Density solver ----------------------------------------------------------

namespace
{

double initial_guess(const OutageCurve &curve, double omega, double epsilon)
{
    const double n = curve.order;
    return std::pow(epsilon * curve.normalization * n, 1.0 / n) / (std::numbers::pi * omega);
}

void check_solver_args(const OutageCurve &curve, double omega, double epsilon)
{
    if (!(omega > 0.0) || std::isinf(omega))
        throw domain_error("density solver: omega must be finite and > 0");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw domain_error("density solver: epsilon must lie in (0, 1)");
    if (epsilon >= curve.supremum())
        throw domain_error("density solver: target outage not reachable by this curve");
}

// lambda + lambda e^x x^-n (Gamma(n, x) + eps*G - Gamma(n)); for G = Gamma(n) this is
// the usual (eps - 1) Gamma(n) form and equals lambda - (q - eps) / q'.
double newton_update(const OutageCurve &curve, double lambda, double omega, double epsilon)
{
    const double n = curve.order;
    const double x = lambda * std::numbers::pi * omega;
    const double bracket =
        upper_incomplete_gamma(n, x) + epsilon * curve.normalization - gamma_fn(n);
    return lambda + lambda * std::exp(x) * std::pow(x, -n) * bracket;
}

} // namespace

double newton_initial_guess(double omega, int order, double epsilon)
{
    const auto curve = OutageCurve::standard(order);
    check_solver_args(curve, omega, epsilon);
    return initial_guess(curve, omega, epsilon);
}

DensitySolution solve_density(const OutageCurve &curve, double omega, double epsilon,
                              const SolverConfig &cfg)
{
    cfg.validate();
    check_solver_args(curve, omega, epsilon);

    DensitySolution out;
    auto residual_at = [&](double lambda) { return std::abs(curve.value(lambda, omega) - epsilon); };
    auto finish = [&](DensitySolution s) {
        s.convexity_warning = (curve.order - 1) > s.lambda * std::numbers::pi * omega;
        return s;
    };

    double lambda = initial_guess(curve, omega, epsilon);
    double residual = residual_at(lambda);
    while (residual > cfg.abs_tolerance && out.iterations < cfg.max_iterations)
    {
        double next = newton_update(curve, lambda, omega, epsilon);
        ++out.iterations;
        if (!std::isfinite(next))
            break;
        if (next <= 0.0)
            next = cfg.min_density;
        lambda = next;
        residual = residual_at(lambda);
    }
    if (std::isfinite(lambda) && residual <= cfg.abs_tolerance)
    {
        out.lambda = lambda;
        out.residual = residual;
        return finish(out);
    }

    // Bisection fallback on [min_density, hi] with hi doubled until q(hi) > eps.
    out.used_fallback = true;
    double lo = cfg.min_density;
    if (curve.value(lo, omega) > epsilon)
        throw convergence_error("density solver: root lies below min_density", lo, residual_at(lo));
    double hi = std::max(2.0 * lo, initial_guess(curve, omega, epsilon));
    for (int k = 0; curve.value(hi, omega) <= epsilon; ++k)
    {
        if (k > 2000)
            throw convergence_error("density solver: cannot bracket root", hi, residual_at(hi));
        lo = hi;
        hi *= 2.0;
    }
    constexpr int kMaxBisection = 400;
    for (int k = 0; k < kMaxBisection; ++k)
    {
        const double mid = 0.5 * (lo + hi);
        ++out.bisection_steps;
        const double q = curve.value(mid, omega);
        if (std::abs(q - epsilon) <= cfg.abs_tolerance)
        {
            out.lambda = mid;
            out.residual = std::abs(q - epsilon);
            return finish(out);
        }
        (q > epsilon ? hi : lo) = mid;
        if (hi - lo <= kEps * hi)
            break;
    }
    const double mid = 0.5 * (lo + hi);
    throw convergence_error("density solver: tolerance not reached", mid, residual_at(mid));
}

DensitySolution newton_raphson_density(double omega, int order, double epsilon,
                                       const SolverConfig &cfg)
{
    return solve_density(OutageCurve::standard(order), omega, epsilon, cfg);
}

DensitySolution newton_raphson_density_fd(double omega, int cancelled_nodes, double epsilon,
                                          const SolverConfig &cfg)
{
    if (cancelled_nodes < 0 || cancelled_nodes % 2 != 0)
        throw domain_error("newton_raphson_density_fd: cancelled node count must be even and >= 0");
    return newton_raphson_density(omega, cancelled_nodes / 2 + 1, epsilon, cfg);
}

} // namespace fdtc
