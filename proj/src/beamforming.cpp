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

#include "fdtc/beamforming.hpp"

#include <array>
#include <utility>

namespace fdtc
{

namespace
{

constexpr std::array<std::pair<Strategy, std::string_view>, 5> kNames{{
    {Strategy::proposed_fd, "proposed_fd"},
    {Strategy::svd_only_fd, "svd_only_fd"},
    {Strategy::svd_partial_zf_fd, "svd_partial_zf_fd"},
    {Strategy::partial_zf_only_fd, "partial_zf_only_fd"},
    {Strategy::half_duplex, "half_duplex"},
}};

void require_rx(const AntennaConfig &config, int minimum, Strategy s)
{
    if (config.n_rx < minimum)
        throw capability_error(std::string(to_string(s)) + ": needs at least " +
                               std::to_string(minimum) + " receive antennas");
}

} // namespace

std::string_view to_string(Strategy s)
{
    for (const auto &[value, name] : kNames)
        if (value == s)
            return name;
    return "unknown";
}

std::optional<Strategy> parse_strategy(std::string_view name)
{
    for (const auto &[value, n] : kNames)
        if (n == name)
            return value;
    return std::nullopt;
}

bool receiver_nulls_si(Strategy strategy, const AntennaConfig &config)
{
    switch (strategy)
    {
    case Strategy::proposed_fd:
        return !config.transmit_heavy();
    case Strategy::half_duplex:
        return false;
    default:
        return true;
    }
}

int cancellable_pairs(Strategy strategy, const AntennaConfig &config)
{
    config.validate();
    const int nr = config.n_rx;
    switch (strategy)
    {
    case Strategy::proposed_fd:
        if (config.transmit_heavy())
            return (nr - 1) / 2;
        require_rx(config, 2, strategy);
        return (nr - 2) / 2;
    case Strategy::svd_only_fd:
        require_rx(config, 2, strategy);
        return 0;
    case Strategy::svd_partial_zf_fd:
    case Strategy::partial_zf_only_fd:
        require_rx(config, 2, strategy);
        return (nr - 2) / 2;
    case Strategy::half_duplex:
        return nr - 1;
    }
    return 0;
}

int cancelled_vector_count(Strategy strategy, const AntennaConfig &config)
{
    const int count = cancellable_pairs(strategy, config);
    return is_full_duplex(strategy) ? 2 * count : count;
}

TransmitDesign design_transmit(Strategy strategy, const AntennaConfig &config, const CMatrix &link,
                               const CMatrix &si_estimated)
{
    TransmitDesign out;
    if (strategy == Strategy::partial_zf_only_fd)
    {
        out.w = CVector::Unit(config.n_tx, 0);
        const CVector h = link * out.w;
        out.gain = h.squaredNorm();
        if (!(out.gain > 0.0))
            throw degenerate_error("design_transmit: zero effective desired channel");
        out.rx_direction = h / std::sqrt(out.gain);
        return out;
    }
    if (strategy == Strategy::proposed_fd && config.transmit_heavy())
    {
        const CMatrix basis = null_space(si_estimated);
        if (basis.cols() == 0)
            throw rank_deficiency_error("design_transmit: estimated SI channel has no null space");
        const auto triple = dominant_singular_triple(link * basis);
        out.w = basis * triple.v;
        out.w.normalize();
        out.rx_direction = triple.u;
        out.gain = triple.sigma * triple.sigma;
        return out;
    }
    const auto triple = dominant_singular_triple(link);
    out.w = triple.v;
    out.rx_direction = triple.u;
    out.gain = triple.sigma * triple.sigma;
    return out;
}

ReceiveCombiner zero_forcing_combiner(const CVector &desired_direction,
                                      std::span<const CVector> constraints)
{
    const Eigen::Index nr = desired_direction.size();
    CMatrix rows(static_cast<Eigen::Index>(constraints.size()), nr);
    for (std::size_t k = 0; k < constraints.size(); ++k)
    {
        if (constraints[k].size() != nr)
            throw domain_error("zero_forcing_combiner: constraint dimension mismatch");
        rows.row(static_cast<Eigen::Index>(k)) = constraints[k].adjoint();
    }
    const CMatrix basis = null_space(rows);

    ReceiveCombiner out;
    out.null_dimension = basis.cols();
    if (basis.cols() == 0)
        throw rank_deficiency_error("zero_forcing_combiner: no receive degrees of freedom left");

    // Among unit vectors in the null space, the projection of d maximizes |s^H d|.
    CVector s = basis * (basis.adjoint() * desired_direction);
    double projection = s.norm();
    if (projection < kAlignmentFloor)
    {
        s = basis.col(0);
        out.degenerate = true;
    }
    else
    {
        s /= projection;
    }
    const std::complex<double> overlap = s.dot(desired_direction); // s^H d
    out.alignment = std::abs(overlap);
    if (out.alignment < kAlignmentFloor)
        out.degenerate = true;
    out.z = s / std::conj(overlap);
    return out;
}

namespace
{

void check_dims(const ChannelSet &channels, const AntennaConfig &config)
{
    config.validate();
    auto ok = [&](const CMatrix &m) { return m.rows() == config.n_rx && m.cols() == config.n_tx; };
    if (!ok(channels.desired) || !ok(channels.reverse) || !ok(channels.si_typical.estimated) ||
        !ok(channels.si_partner.estimated))
        throw domain_error("beamforming: channel dimensions do not match antenna configuration");
}

void check_interference(Strategy strategy, const AntennaConfig &config,
                        std::span<const CVector> interference)
{
    const auto capacity = static_cast<std::size_t>(cancelled_vector_count(strategy, config));
    if (interference.size() > capacity)
        throw capability_error("beamforming: more interference vectors than receive DoFs allow");
    if (is_full_duplex(strategy) && interference.size() % 2 != 0)
        throw domain_error("beamforming: full-duplex interference vectors come in pairs");
}

// Shared construction: both transmit designs, then the typical receiver's ZF combiner.
BeamformerSet assemble(Strategy strategy, const ChannelSet &channels,
                       std::span<const CVector> interference, const AntennaConfig &config)
{
    check_dims(channels, config);
    check_interference(strategy, config, interference);

    const TransmitDesign partner =
        design_transmit(strategy, config, channels.desired, channels.si_partner.estimated);
    const TransmitDesign typical =
        design_transmit(strategy, config, channels.reverse, channels.si_typical.estimated);

    BeamformerSet set;
    set.strategy = strategy;
    set.w_partner_tx = partner.w;
    set.w_typical_tx = typical.w;
    set.desired_direction = partner.rx_direction;
    set.gamma = partner.gain;

    std::vector<CVector> constraints;
    constraints.reserve(interference.size() + 1);
    if (receiver_nulls_si(strategy, config))
    {
        set.nulled_si_vector = channels.si_typical.estimated * typical.w;
        constraints.push_back(*set.nulled_si_vector);
    }
    constraints.insert(constraints.end(), interference.begin(), interference.end());

    const auto combiner = zero_forcing_combiner(partner.rx_direction, constraints);
    set.z_typical_rx = combiner.z;
    set.degenerate = combiner.degenerate;
    set.cancelled_pair_count = static_cast<int>(is_full_duplex(strategy) ? interference.size() / 2
                                                                         : interference.size());
    return set;
}

} // namespace

BeamformerSet build_proposed_fd(const ChannelSet &channels,
                                std::span<const CVector> cancelled_interference,
                                const AntennaConfig &config)
{
    return assemble(Strategy::proposed_fd, channels, cancelled_interference, config);
}

BeamformerSet build_baseline(Strategy strategy, const ChannelSet &channels,
                             std::span<const CVector> cancelled_interference,
                             const AntennaConfig &config)
{
    if (strategy == Strategy::proposed_fd || strategy == Strategy::half_duplex)
        throw domain_error("build_baseline: not a baseline strategy");
    return assemble(strategy, channels, cancelled_interference, config);
}

BeamformerSet build_hd(const ChannelSet &channels, std::span<const CVector> cancelled_interference,
                       const AntennaConfig &config)
{
    return assemble(Strategy::half_duplex, channels, cancelled_interference, config);
}

BeamformerSet build_beamformers(Strategy strategy, const ChannelSet &channels,
                                std::span<const CVector> cancelled_interference,
                                const AntennaConfig &config)
{
    switch (strategy)
    {
    case Strategy::proposed_fd:
        return build_proposed_fd(channels, cancelled_interference, config);
    case Strategy::half_duplex:
        return build_hd(channels, cancelled_interference, config);
    default:
        return build_baseline(strategy, channels, cancelled_interference, config);
    }
}

} // namespace fdtc
