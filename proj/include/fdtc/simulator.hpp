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

#include "fdtc/beamforming.hpp"
#include "fdtc/geometry.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fdtc
{

struct SystemParams
{
    AntennaConfig config{};
    double L = 1.0;          ///< link distance
    double P = 1.0;          ///< transmit power (linear, unit-variance noise)
    double alpha = 4.0;      ///< path-loss exponent
    double beta = 1.0;       ///< full-duplex SINR threshold (linear)
    double epsilon = 0.1;    ///< target outage
    double sigma2_si = 0.1;  ///< SI estimation error variance
    double lambda = 0.1;     ///< pair density
    double mean_pairs = 200; ///< expected pair count on the simulation disk
    Strategy strategy = Strategy::proposed_fd;

    /// Target rate R = log2(1 + beta).
    double rate() const;
    /// Threshold applied at the receiver: beta in full duplex, 2^(2R) - 1 in half duplex.
    double threshold() const;
    void validate() const;

    DeploymentParams deployment() const;
};

/// Half-duplex threshold for the same target rate: 2^(2R) - 1.
double hd_threshold(double rate);

/// How the interference vectors H_{i,x} w_x of non-typical nodes are produced. Every
/// interferer's precoder depends only on its own channels, which are independent of
/// H_{i,x}, so H_{i,x} w_x is CN(0, I) either way; `effective` draws it directly.
enum class InterferenceModel
{
    effective,
    full,
};

struct SimulationOptions
{
    InterferenceModel model = InterferenceModel::effective;
};

struct TrialOutcome
{
    double sinr = 0.0;
    bool outage = false;
    double desired_power = 0.0;
    double interference_power = 0.0;
    double residual_si_power = 0.0;
    double noise_power = 0.0;
    double cancelled_residual_power = 0.0; ///< power left over from zero-forced interferers
    double gamma = 0.0;
    bool degenerate = false;
};

/// Everything random in one trial.
struct TrialInputs
{
    NetworkRealization network;
    ChannelSet channels;
    std::vector<CVector> from_a; ///< H_{i,a_k} w_{a_k}, index 0 unused
    std::vector<CVector> from_b; ///< H_{i,b_k} w_{b_k}, index 0 unused (unused in half duplex)
    std::vector<std::size_t> cancelled; ///< pair indices zero-forced at the typical receiver
    BeamformerSet beams;
    CVector noise; ///< v ~ CN(0, I)
};

TrialInputs draw_trial(const SystemParams &params, const SimulationOptions &options, Rng &rng);

/// SINR at the typical receiver for fixed inputs.
TrialOutcome trial_sinr(const SystemParams &params, const TrialInputs &inputs);

/// Trial `index` of the run seeded with `seed`.
TrialOutcome run_trial(const SystemParams &params, const SimulationOptions &options,
                       std::uint64_t seed, std::uint64_t index);

struct OutageEstimate
{
    double p_hat = 0.0;
    double std_err = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t outages = 0;
    std::uint64_t degenerate_trials = 0;
};

/// Fraction of independent trials (fresh network and channels each) in outage.
/// When `dump` is set, one JSON object per trial is written to it, in trial order.
OutageEstimate estimate_outage(const SystemParams &params, std::uint64_t trials, std::uint64_t seed,
                               const SimulationOptions &options = {}, std::ostream *dump = nullptr);

std::string trial_to_json(const TrialOutcome &outcome, std::uint64_t index);

struct TcSearch
{
    double lambda_lo = 1e-4;
    int max_doublings = 10;
    int bisection_steps = 20;
};

struct SimulatedTc
{
    enum class Status
    {
        ok,
        zero_tc,         ///< outage at lambda_lo already exceeds epsilon
        bracket_failure, ///< outage never exceeded epsilon up to the density cap
    };

    Status status = Status::ok;
    double capacity = 0.0;
    double lambda = 0.0;
    double outage_at_lo = 0.0;
    double outage_at_hi = 0.0;
    double lambda_hi = 0.0;
};

std::string_view to_string(SimulatedTc::Status status);

/// Empirical inversion of the outage curve by bisection over lambda, then
/// c = lambda * (1 - epsilon) * R (times 2 for half duplex).
SimulatedTc simulated_tc(const SystemParams &params, std::uint64_t trials, std::uint64_t seed,
                         const TcSearch &search = {}, const SimulationOptions &options = {});

/// c = lambda (1 - epsilon) R, doubled for half duplex.
double capacity_from_density(double lambda, double epsilon, double rate, bool half_duplex);

} // namespace fdtc
