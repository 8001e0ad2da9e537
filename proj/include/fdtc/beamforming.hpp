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

#include "fdtc/channel.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fdtc
{

enum class Strategy
{
    proposed_fd,        ///< SI nulled at the transmitter when n_tx > n_rx, else at the receiver
    svd_only_fd,        ///< dominant singular vector; receiver spends one DoF on SI only
    svd_partial_zf_fd,  ///< dominant singular vector; receiver nulls SI plus nearest pairs
    partial_zf_only_fd, ///< fixed transmit direction; receiver nulls SI plus nearest pairs
    half_duplex,        ///< dominant singular vector; receiver nulls nearest single transmitters
};

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);
inline bool is_full_duplex(Strategy s) { return s != Strategy::half_duplex; }

/// Number of nearest interferers the typical receiver zero-forces: pairs for full-duplex
/// strategies, individual transmitters for half duplex.
/// Throws capability_error when the receive array is too small for the strategy.
int cancellable_pairs(Strategy strategy, const AntennaConfig &config);

/// Number of individual interference vectors handed to the receive null-space solver.
int cancelled_vector_count(Strategy strategy, const AntennaConfig &config);

/// True when the receiver (rather than the transmitter) has to null the estimated SI.
bool receiver_nulls_si(Strategy strategy, const AntennaConfig &config);

/// Transmit side of one link: the precoder and what it delivers at the far receiver.
struct TransmitDesign
{
    CVector w;           ///< unit-norm precoder
    CVector rx_direction; ///< unit direction of H w at the receiver
    double gain = 0.0;   ///< |H w|^2, the largest eigenvalue of the effective channel Gram matrix
};

/// Precoder a node uses towards its own partner. `link` is the partner's receive channel
/// from this node, `si_estimated` this node's own estimated SI channel.
TransmitDesign design_transmit(Strategy strategy, const AntennaConfig &config, const CMatrix &link,
                               const CMatrix &si_estimated);

/// Zero-forcing receive combiner z with z^H d = 1 for the unit desired direction d and
/// z^H c = 0 for every constraint vector c.
struct ReceiveCombiner
{
    CVector z;
    Eigen::Index null_dimension = 0;
    double alignment = 0.0; ///< |s^H d| before normalization
    bool degenerate = false;
};

/// Alignment |s^H d| below this marks the combiner degenerate.
inline constexpr double kAlignmentFloor = 1e-10;

ReceiveCombiner zero_forcing_combiner(const CVector &desired_direction,
                                      std::span<const CVector> constraints);

struct BeamformerSet
{
    Strategy strategy = Strategy::proposed_fd;
    CVector w_typical_tx; ///< w_i
    CVector w_partner_tx; ///< w_j
    CVector z_typical_rx; ///< z_i, z^H (desired direction) = 1
    CVector desired_direction;
    int cancelled_pair_count = 0; ///< pairs (FD) or single nodes (HD) actually nulled
    double gamma = 0.0;           ///< effective desired gain
    bool degenerate = false;

    /// Receive-side SI vector actually nulled, if the strategy nulls it at the receiver.
    std::optional<CVector> nulled_si_vector;
};

/// Proposed design. `cancelled_interference` holds the effective vectors H_{i,x} w_x of the
/// nearest interfering nodes, two per pair (b then a), at most 2 * cancellable_pairs.
BeamformerSet build_proposed_fd(const ChannelSet &channels,
                                std::span<const CVector> cancelled_interference,
                                const AntennaConfig &config);

/// Baseline full-duplex designs (svd_only_fd, svd_partial_zf_fd, partial_zf_only_fd).
BeamformerSet build_baseline(Strategy strategy, const ChannelSet &channels,
                             std::span<const CVector> cancelled_interference,
                             const AntennaConfig &config);

/// Half-duplex design: one vector per cancelled node, at most n_rx - 1.
BeamformerSet build_hd(const ChannelSet &channels, std::span<const CVector> cancelled_interference,
                       const AntennaConfig &config);

/// Dispatch on strategy.
BeamformerSet build_beamformers(Strategy strategy, const ChannelSet &channels,
                                std::span<const CVector> cancelled_interference,
                                const AntennaConfig &config);

} // namespace fdtc
