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

#include "fdtc/simulator.hpp"

#include "fdtc/error.hpp"

#include <json.hpp>

#include <cmath>
#include <ostream>

namespace fdtc
{

double hd_threshold(double rate) { return std::pow(2.0, 2.0 * rate) - 1.0; }

double SystemParams::rate() const { return std::log2(1.0 + beta); }

double SystemParams::threshold() const
{
    return strategy == Strategy::half_duplex ? hd_threshold(rate()) : beta;
}

void SystemParams::validate() const
{
    config.validate();
    if (!(L > 0.0))
        throw domain_error("SystemParams: L must be > 0");
    if (!(P > 0.0))
        throw domain_error("SystemParams: P must be > 0");
    if (!(alpha > 2.0))
        throw domain_error("SystemParams: alpha must exceed 2");
    if (!(beta > 0.0))
        throw domain_error("SystemParams: beta must be > 0");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw domain_error("SystemParams: epsilon must lie in (0, 1)");
    if (std::isnan(sigma2_si) || sigma2_si < 0.0)
        throw domain_error("SystemParams: sigma2_si must be >= 0");
    if (std::isnan(lambda) || lambda < 0.0)
        throw domain_error("SystemParams: lambda must be >= 0");
    if (!(mean_pairs >= 0.0))
        throw domain_error("SystemParams: mean_pairs must be >= 0");
}

DeploymentParams SystemParams::deployment() const
{
    return DeploymentParams::with_mean_pairs(lambda, mean_pairs, L);
}

namespace
{

CVector interferer_vector(const SystemParams &params, const SimulationOptions &options, Rng &rng)
{
    const auto &cfg = params.config;
    if (options.model == InterferenceModel::effective)
        return draw_rayleigh_vector(cfg.n_rx, rng);
    // The interferer's own partner link and SI estimate fix its precoder; the channel
    // towards the typical receiver is drawn independently.
    const CMatrix own_link = draw_rayleigh(cfg.n_rx, cfg.n_tx, rng);
    const CMatrix own_si = draw_rayleigh(cfg.n_rx, cfg.n_tx, rng);
    const CMatrix towards_typical = draw_rayleigh(cfg.n_rx, cfg.n_tx, rng);
    const CVector w = design_transmit(params.strategy, cfg, own_link, own_si).w;
    return towards_typical * w;
}

} // namespace

TrialInputs draw_trial(const SystemParams &params, const SimulationOptions &options, Rng &rng)
{
    params.validate();
    TrialInputs in;
    in.network = sample_network(params.deployment(), rng);
    in.channels = draw_channel_set(params.config, params.sigma2_si, 0, rng);

    const bool fd = is_full_duplex(params.strategy);
    const std::size_t pairs = in.network.pair_count();
    in.from_a.resize(pairs);
    in.from_b.resize(pairs);
    for (std::size_t k = 1; k < pairs; ++k)
    {
        in.from_a[k] = interferer_vector(params, options, rng);
        if (fd)
            in.from_b[k] = interferer_vector(params, options, rng);
    }

    const auto wanted = static_cast<std::size_t>(cancellable_pairs(params.strategy, params.config));
    in.cancelled = nearest_pairs(in.network, std::min(wanted, in.network.interferer_count()));

    std::vector<CVector> constraints;
    for (std::size_t k : in.cancelled)
    {
        if (fd)
            constraints.push_back(in.from_b[k]);
        constraints.push_back(in.from_a[k]);
    }
    in.beams = build_beamformers(params.strategy, in.channels, constraints, params.config);
    in.noise = draw_rayleigh_vector(params.config.n_rx, rng);
    return in;
}

TrialOutcome trial_sinr(const SystemParams &params, const TrialInputs &in)
{
    const CVector &z = in.beams.z_typical_rx;
    const bool fd = is_full_duplex(params.strategy);
    auto power = [&](const CVector &g) { return std::norm(z.dot(g)); };

    TrialOutcome out;
    out.gamma = in.beams.gamma;
    out.degenerate = in.beams.degenerate;
    out.desired_power = std::pow(params.L, -params.alpha) * in.beams.gamma;

    std::vector<bool> is_cancelled(in.network.pair_count(), false);
    for (std::size_t k : in.cancelled)
        is_cancelled[k] = true;

    for (std::size_t k = 1; k < in.network.pair_count(); ++k)
    {
        const double path = std::pow(in.network.distance[k], -params.alpha);
        double received = power(in.from_a[k]);
        if (fd)
            received += power(in.from_b[k]);
        (is_cancelled[k] ? out.cancelled_residual_power : out.interference_power) += path * received;
    }

    if (fd)
        out.residual_si_power = std::norm(z.dot(in.channels.si_typical.error * in.beams.w_typical_tx));
    out.noise_power = std::norm(z.dot(in.noise)) / params.P;

    const double denominator = out.interference_power + out.residual_si_power + out.noise_power;
    out.sinr = denominator > 0.0 ? out.desired_power / denominator
                                 : std::numeric_limits<double>::infinity();
    out.outage = out.sinr < params.threshold();
    return out;
}

TrialOutcome run_trial(const SystemParams &params, const SimulationOptions &options,
                       std::uint64_t seed, std::uint64_t index)
{
    Rng rng = substream(seed, index, StreamTag::trial);
    return trial_sinr(params, draw_trial(params, options, rng));
}

std::string trial_to_json(const TrialOutcome &o, std::uint64_t index)
{
    nlohmann::json j{{"trial", index},
                     {"sinr", o.sinr},
                     {"outage", o.outage},
                     {"desired_power", o.desired_power},
                     {"interference_power", o.interference_power},
                     {"residual_si_power", o.residual_si_power},
                     {"noise_power", o.noise_power},
                     {"degenerate", o.degenerate}};
    return j.dump();
}

OutageEstimate estimate_outage(const SystemParams &params, std::uint64_t trials, std::uint64_t seed,
                               const SimulationOptions &options, std::ostream *dump)
{
    params.validate();
    if (trials < 1)
        throw domain_error("estimate_outage: need at least one trial");

    std::vector<TrialOutcome> outcomes(trials);
    const auto n = static_cast<long long>(trials);
#pragma omp parallel for schedule(dynamic, 64)
    for (long long t = 0; t < n; ++t)
        outcomes[static_cast<std::size_t>(t)] =
            run_trial(params, options, seed, static_cast<std::uint64_t>(t));

    OutageEstimate est;
    est.trials = trials;
    for (std::size_t t = 0; t < outcomes.size(); ++t)
    {
        est.outages += outcomes[t].outage ? 1 : 0;
        est.degenerate_trials += outcomes[t].degenerate ? 1 : 0;
        if (dump)
            *dump << trial_to_json(outcomes[t], t) << '\n';
    }
    est.p_hat = static_cast<double>(est.outages) / static_cast<double>(trials);
    est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(trials));
    return est;
}

double capacity_from_density(double lambda, double epsilon, double rate, bool half_duplex)
{
    return (half_duplex ? 2.0 : 1.0) * lambda * (1.0 - epsilon) * rate;
}

std::string_view to_string(SimulatedTc::Status status)
{
    switch (status)
    {
    case SimulatedTc::Status::ok:
        return "ok";
    case SimulatedTc::Status::zero_tc:
        return "zero_tc";
    case SimulatedTc::Status::bracket_failure:
        return "bracket_failure";
    }
    return "unknown";
}

SimulatedTc simulated_tc(const SystemParams &params, std::uint64_t trials, std::uint64_t seed,
                         const TcSearch &search, const SimulationOptions &options)
{
    params.validate();
    if (!(search.lambda_lo > 0.0) || search.max_doublings < 0 || search.bisection_steps < 0)
        throw domain_error("simulated_tc: invalid search settings");

    // Every probe reuses the same seed so neighbouring densities see common random numbers.
    auto outage_at = [&](double lambda) {
        SystemParams p = params;
        p.lambda = lambda;
        return estimate_outage(p, trials, seed, options).p_hat;
    };

    SimulatedTc out;
    double lo = search.lambda_lo;
    out.outage_at_lo = outage_at(lo);
    if (out.outage_at_lo > params.epsilon)
    {
        out.status = SimulatedTc::Status::zero_tc;
        return out;
    }

    double hi = lo;
    double q_hi = out.outage_at_lo;
    for (int k = 0; k < search.max_doublings && q_hi <= params.epsilon; ++k)
    {
        lo = hi;
        hi *= 2.0;
        q_hi = outage_at(hi);
    }
    out.lambda_hi = hi;
    out.outage_at_hi = q_hi;
    if (q_hi <= params.epsilon)
    {
        out.status = SimulatedTc::Status::bracket_failure;
        out.capacity = std::numeric_limits<double>::quiet_NaN();
        return out;
    }

    for (int k = 0; k < search.bisection_steps; ++k)
    {
        const double mid = 0.5 * (lo + hi);
        (outage_at(mid) > params.epsilon ? hi : lo) = mid;
    }
    out.lambda = 0.5 * (lo + hi);
    out.capacity = capacity_from_density(out.lambda, params.epsilon, params.rate(),
                                         params.strategy == Strategy::half_duplex);
    return out;
}

} // namespace fdtc
