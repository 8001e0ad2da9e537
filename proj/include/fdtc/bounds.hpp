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
#include "fdtc/simulator.hpp"

#include <cstdint>

namespace fdtc
{

// ---- Moments ----------------------------------------------------------------

/// Closed forms for E{psi^(2/alpha)} with psi ~ Gamma(2, 1). `direct` is
/// Gamma(2 + 2/alpha); `halved` is the same value divided by two.
enum class PsiMomentForm
{
    direct,
    halved,
};

double psi_power_moment(double alpha, PsiMomentForm form);

/// Form used by MomentTable. Pinned by the Monte-Carlo oracle (see tests and `fdtc validate`).
inline constexpr PsiMomentForm kPsiMomentForm = PsiMomentForm::direct;

/// Pick the candidate within `rel_tol` of a Monte-Carlo estimate; nullopt if none or both match.
std::optional<PsiMomentForm> select_psi_moment_form(double alpha, double estimate, double rel_tol = 0.01);

/// Which Frobenius-norm bound stands in for E{gamma} in the half-duplex chain.
enum class HdGainMoment
{
    frobenius_lower, ///< E{||H||^2} / n_tx = n_rx
    frobenius_upper, ///< E{||H||^2} = n_tx * n_rx
};

struct MomentTable
{
    double e_residual_si = 0.0; ///< E|h'|^2 = sigma2_si
    double e_psi = 2.0;         ///< E{psi}
    double e_psi_pow = 0.0;     ///< E{psi^(2/alpha)}
    double e_gamma_ub = 0.0;    ///< bound on E{gamma} for the strategy and antenna split
    double e_h_pow_hd = 0.0;    ///< E{|h|^(4/alpha)} = Gamma(1 + 2/alpha)
};

/// Upper bound on E{gamma} for a full-duplex strategy: n_rx (n_tx - n_rx) for the proposed
/// design with n_tx > n_rx, n_tx n_rx for SVD-based precoding, n_rx for a fixed precoder.
double gain_moment(Strategy strategy, const AntennaConfig &config,
                   HdGainMoment hd = HdGainMoment::frobenius_lower);

MomentTable make_moment_table(const SystemParams &params,
                              HdGainMoment hd = HdGainMoment::frobenius_lower);

/// Monte-Carlo estimate of E{psi^(2/alpha)}, psi = |x|^2 + |y|^2 with x, y ~ CN(0, 1).
double moment_psi_power_oracle(double alpha, std::uint64_t mc_samples, std::uint64_t seed);

// ---- Dominating interferer region -------------------------------------------

/// Radius inside which one interfering pair alone causes outage. +inf when the
/// desired power cannot beat residual SI and noise at threshold `beta`.
double dominating_radius(double gamma, double psi, double residual_si, double noise,
                         const SystemParams &params);
double dominating_radius(double gamma, double psi, double residual_si, double noise, double beta,
                         double L, double alpha, double P);

struct BoundOptions
{
    bool include_noise = false;          ///< add threshold / P to the subtracted loss term
    bool hd_literal_gamma_order = false; ///< use gamma(l, .) / Gamma(l + 1) for half duplex
    HdGainMoment hd_gain = HdGainMoment::frobenius_lower;
    SolverConfig solver{};
};

/// Outage lower bound averaged over the fading of the dominating pair (Monte Carlo over
/// gamma, |h'|^2, psi and, with noise enabled, |v|^2).
double op_lb_exact(const SystemParams &params, std::uint64_t mc_samples, std::uint64_t seed,
                   const BoundOptions &options = {});

// ---- Omega and the capacity bound -------------------------------------------

struct OmegaResult
{
    double omega = 0.0;
    bool zero_tc = false; ///< desired gain cannot beat the interference-free loss
};

/// Omega = beta^(2/a) m (gain/L^a - beta*loss)^(-2/a) for the generic inputs.
OmegaResult omega_from(double threshold, double interference_moment, double gain, double loss,
                       double L, double alpha);

/// Full-duplex Omega from a moment table.
OmegaResult compute_omega(const SystemParams &params, const MomentTable &moments, bool include_noise);

struct BoundResult
{
    double omega = 0.0;
    double lambda_solved = 0.0;
    double op_lb_at_lambda = 0.0;
    double tc_ub = 0.0;
    bool converged = false;
    bool convexity_warning = false;
    bool zero_tc = false;
    int order = 1;
    int iterations = 0;
    bool used_fallback = false;
};

/// Inputs shared by the full- and half-duplex chains.
struct BoundInputs
{
    double threshold = 1.0;
    double interference_moment = 1.0;
    double gain = 1.0;
    double loss = 0.0;
    double L = 1.0;
    double alpha = 4.0;
    OutageCurve curve = OutageCurve::standard(1);
    double epsilon = 0.1;
    double rate = 1.0;
    double rate_multiplier = 1.0;
};

BoundResult solve_bound(const BoundInputs &inputs, const SolverConfig &solver = {});

BoundInputs fd_bound_inputs(const SystemParams &params, const BoundOptions &options = {});
BoundInputs hd_bound_inputs(const SystemParams &params, const BoundOptions &options = {});

/// Transmission-capacity upper bound for a full-duplex strategy.
BoundResult tc_upper_bound_fd(const SystemParams &params, const BoundOptions &options = {});

/// Half-duplex counterpart: threshold 2^(2R) - 1, one interferer per pair, capacity doubled.
BoundResult tc_upper_bound_hd(const SystemParams &params, const BoundOptions &options = {});

/// Dispatch on params.strategy.
BoundResult tc_upper_bound(const SystemParams &params, const BoundOptions &options = {});

/// Analytic outage approximation at params.lambda for the strategy's Omega and order.
double op_lb_analytic(const SystemParams &params, const BoundOptions &options = {});

} // namespace fdtc
