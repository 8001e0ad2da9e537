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

#include "fdtc/bounds.hpp"

#include "fdtc/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace fdtc
{

namespace
{

constexpr std::uint64_t kBlock = 1024;

// Runs `body(rng, first, last)` over fixed-size blocks with one substream per block, so
// the result does not depend on thread count or scheduling.
template <typename Body>
void for_each_block(std::uint64_t samples, std::uint64_t seed, StreamTag tag, Body &&body)
{
    const auto blocks = static_cast<long long>((samples + kBlock - 1) / kBlock);
#pragma omp parallel for schedule(dynamic)
    for (long long b = 0; b < blocks; ++b)
    {
        const auto block = static_cast<std::uint64_t>(b);
        Rng rng = substream(seed, block, tag);
        const std::uint64_t first = block * kBlock;
        body(rng, first, std::min(samples, first + kBlock));
    }
}

double exp_power(Rng &rng, double mean)
{
    // |CN(0, mean)|^2 ~ Exp(mean)
    std::normal_distribution<double> normal(0.0, std::sqrt(mean / 2.0));
    const double re = normal(rng);
    const double im = normal(rng);
    return re * re + im * im;
}

double ordered_sum(const std::vector<double> &values)
{
    double sum = 0.0;
    for (double v : values)
        sum += v;
    return sum;
}

} // namespace

double psi_power_moment(double alpha, PsiMomentForm form)
{
    if (!(alpha > 0.0))
        throw domain_error("psi_power_moment: alpha must be > 0");
    const double direct = gamma_fn(2.0 + 2.0 / alpha);
    return form == PsiMomentForm::direct ? direct : direct / 2.0;
}

std::optional<PsiMomentForm> select_psi_moment_form(double alpha, double estimate, double rel_tol)
{
    const double direct = psi_power_moment(alpha, PsiMomentForm::direct);
    const double halved = psi_power_moment(alpha, PsiMomentForm::halved);
    const bool near_direct = std::abs(estimate - direct) <= rel_tol * direct;
    const bool near_halved = std::abs(estimate - halved) <= rel_tol * halved;
    if (near_direct == near_halved)
        return std::nullopt;
    return near_direct ? PsiMomentForm::direct : PsiMomentForm::halved;
}

double gain_moment(Strategy strategy, const AntennaConfig &config, HdGainMoment hd)
{
    config.validate();
    const double nt = config.n_tx;
    const double nr = config.n_rx;
    switch (strategy)
    {
    case Strategy::proposed_fd:
        return config.transmit_heavy() ? nr * (nt - nr) : nt * nr;
    case Strategy::svd_only_fd:
    case Strategy::svd_partial_zf_fd:
        return nt * nr;
    case Strategy::partial_zf_only_fd:
        return nr;
    case Strategy::half_duplex:
        return hd == HdGainMoment::frobenius_upper ? nt * nr : nr;
    }
    return 0.0;
}

MomentTable make_moment_table(const SystemParams &params, HdGainMoment hd)
{
    params.validate();
    MomentTable m;
    m.e_residual_si = params.sigma2_si;
    m.e_psi = 2.0;
    m.e_psi_pow = psi_power_moment(params.alpha, kPsiMomentForm);
    m.e_gamma_ub = gain_moment(params.strategy, params.config, hd);
    m.e_h_pow_hd = gamma_fn(1.0 + 2.0 / params.alpha);
    return m;
}

double moment_psi_power_oracle(double alpha, std::uint64_t mc_samples, std::uint64_t seed)
{
    if (mc_samples < 100000)
        throw domain_error("moment_psi_power_oracle: needs at least 1e5 samples");
    if (!(alpha > 0.0))
        throw domain_error("moment_psi_power_oracle: alpha must be > 0");
    const double exponent = 2.0 / alpha;
    std::vector<double> values(mc_samples);
    for_each_block(mc_samples, seed, StreamTag::moment_oracle,
                   [&](Rng &rng, std::uint64_t first, std::uint64_t last) {
                       for (std::uint64_t s = first; s < last; ++s)
                       {
                           const double psi = exp_power(rng, 1.0) + exp_power(rng, 1.0);
                           values[s] = std::pow(psi, exponent);
                       }
                   });
    return ordered_sum(values) / static_cast<double>(mc_samples);
}

// ---- Dominating region --------------------------------------------------------

double dominating_radius(double gamma, double psi, double residual_si, double noise, double beta,
                         double L, double alpha, double P)
{
    if (gamma < 0.0 || psi < 0.0 || residual_si < 0.0 || noise < 0.0)
        throw domain_error("dominating_radius: samples must be >= 0");
    const double margin = std::pow(L, -alpha) * gamma - beta * (residual_si + noise / P);
    if (!(margin > 0.0))
        return std::numeric_limits<double>::infinity();
    return std::pow(beta * psi / margin, 1.0 / alpha);
}

double dominating_radius(double gamma, double psi, double residual_si, double noise,
                         const SystemParams &params)
{
    return dominating_radius(gamma, psi, residual_si, noise, params.threshold(), params.L,
                             params.alpha, params.P);
}

namespace
{

OutageCurve curve_for(const SystemParams &params, const BoundOptions &options)
{
    if (is_full_duplex(params.strategy))
        return OutageCurve::standard(cancellable_pairs(params.strategy, params.config) + 1);
    const int nodes = cancellable_pairs(params.strategy, params.config);
    if (options.hd_literal_gamma_order)
    {
        if (nodes < 1)
            throw capability_error("half duplex: literal gamma order needs at least one cancelled node");
        return OutageCurve::shifted(nodes);
    }
    return OutageCurve::standard(nodes + 1);
}

} // namespace

double op_lb_exact(const SystemParams &params, std::uint64_t mc_samples, std::uint64_t seed,
                   const BoundOptions &options)
{
    params.validate();
    if (mc_samples < 1)
        throw domain_error("op_lb_exact: need at least one sample");
    const OutageCurve curve = curve_for(params, options);
    const bool fd = is_full_duplex(params.strategy);
    const auto &cfg = params.config;

    std::vector<double> values(mc_samples);
    for_each_block(mc_samples, seed, StreamTag::bound_samples,
                   [&](Rng &rng, std::uint64_t first, std::uint64_t last) {
                       for (std::uint64_t s = first; s < last; ++s)
                       {
                           const CMatrix link = draw_rayleigh(cfg.n_rx, cfg.n_tx, rng);
                           const CMatrix si = draw_rayleigh(cfg.n_rx, cfg.n_tx, rng);
                           const double gamma = design_transmit(params.strategy, cfg, link, si).gain;
                           const double residual = fd ? exp_power(rng, params.sigma2_si) : 0.0;
                           double psi = exp_power(rng, 1.0);
                           if (fd)
                               psi += exp_power(rng, 1.0);
                           const double noise = options.include_noise ? exp_power(rng, 1.0) : 0.0;
                           const double rd = dominating_radius(gamma, psi, residual, noise, params);
                           values[s] = std::isinf(rd) ? 1.0
                                                      : curve.value(params.lambda, rd * rd);
                       }
                   });
    return ordered_sum(values) / static_cast<double>(mc_samples);
}

// ---- Omega and capacity ----------------------------------------------------------

OmegaResult omega_from(double threshold, double interference_moment, double gain, double loss,
                       double L, double alpha)
{
    if (threshold < 0.0 || interference_moment < 0.0 || gain < 0.0 || loss < 0.0)
        throw domain_error("omega: inputs must be >= 0");
    if (threshold == 0.0)
        return {0.0, false};
    const double margin = gain / std::pow(L, alpha) - threshold * loss;
    if (!(margin > 0.0))
        return {0.0, true};
    const double e = 2.0 / alpha;
    return {std::pow(threshold, e) * interference_moment * std::pow(margin, -e), false};
}

OmegaResult compute_omega(const SystemParams &params, const MomentTable &moments, bool include_noise)
{
    const double loss = moments.e_residual_si + (include_noise ? 1.0 / params.P : 0.0);
    return omega_from(params.beta, moments.e_psi_pow, moments.e_gamma_ub, loss, params.L,
                      params.alpha);
}

BoundResult solve_bound(const BoundInputs &in, const SolverConfig &solver)
{
    BoundResult out;
    out.order = in.curve.order;
    const OmegaResult omega =
        omega_from(in.threshold, in.interference_moment, in.gain, in.loss, in.L, in.alpha);
    out.omega = omega.omega;
    if (omega.zero_tc)
    {
        out.zero_tc = true;
        out.converged = true;
        return out;
    }
    if (!(omega.omega > 0.0))
        throw domain_error("solve_bound: omega must be > 0 for a density solve");
    try
    {
        const DensitySolution sol = solve_density(in.curve, omega.omega, in.epsilon, solver);
        out.lambda_solved = sol.lambda;
        out.iterations = sol.iterations;
        out.used_fallback = sol.used_fallback;
        out.convexity_warning = sol.convexity_warning;
        out.converged = true;
    }
    catch (const convergence_error &e)
    {
        out.lambda_solved = e.last_iterate();
        out.converged = false;
    }
    out.op_lb_at_lambda = in.curve.value(out.lambda_solved, omega.omega);
    out.tc_ub = in.rate_multiplier * out.lambda_solved * (1.0 - in.epsilon) * in.rate;
    return out;
}

BoundInputs fd_bound_inputs(const SystemParams &params, const BoundOptions &options)
{
    params.validate();
    if (!is_full_duplex(params.strategy))
        throw domain_error("fd_bound_inputs: strategy is half duplex");
    const MomentTable m = make_moment_table(params, options.hd_gain);
    BoundInputs in;
    in.threshold = params.beta;
    in.interference_moment = m.e_psi_pow;
    in.gain = m.e_gamma_ub;
    in.loss = m.e_residual_si + (options.include_noise ? 1.0 / params.P : 0.0);
    in.L = params.L;
    in.alpha = params.alpha;
    in.curve = curve_for(params, options);
    in.epsilon = params.epsilon;
    in.rate = params.rate();
    in.rate_multiplier = 1.0;
    return in;
}

BoundInputs hd_bound_inputs(const SystemParams &params, const BoundOptions &options)
{
    SystemParams hd = params;
    hd.strategy = Strategy::half_duplex;
    hd.validate();
    const MomentTable m = make_moment_table(hd, options.hd_gain);
    BoundInputs in;
    in.threshold = hd.threshold();
    in.interference_moment = m.e_h_pow_hd;
    in.gain = m.e_gamma_ub;
    in.loss = options.include_noise ? 1.0 / hd.P : 0.0;
    in.L = hd.L;
    in.alpha = hd.alpha;
    in.curve = curve_for(hd, options);
    in.epsilon = hd.epsilon;
    in.rate = hd.rate();
    in.rate_multiplier = 2.0;
    return in;
}

BoundResult tc_upper_bound_fd(const SystemParams &params, const BoundOptions &options)
{
    return solve_bound(fd_bound_inputs(params, options), options.solver);
}

BoundResult tc_upper_bound_hd(const SystemParams &params, const BoundOptions &options)
{
    return solve_bound(hd_bound_inputs(params, options), options.solver);
}

BoundResult tc_upper_bound(const SystemParams &params, const BoundOptions &options)
{
    return is_full_duplex(params.strategy) ? tc_upper_bound_fd(params, options)
                                           : tc_upper_bound_hd(params, options);
}

double op_lb_analytic(const SystemParams &params, const BoundOptions &options)
{
    const BoundInputs in = is_full_duplex(params.strategy) ? fd_bound_inputs(params, options)
                                                          : hd_bound_inputs(params, options);
    const OmegaResult omega =
        omega_from(in.threshold, in.interference_moment, in.gain, in.loss, in.L, in.alpha);
    if (omega.zero_tc)
        return 1.0;
    if (omega.omega == 0.0)
        return 0.0;
    return in.curve.value(params.lambda, omega.omega);
}

} // namespace fdtc
