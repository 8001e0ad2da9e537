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

#include "fdtc/channel.hpp"

namespace fdtc
{

SiChannel draw_si_channel(const AntennaConfig &config, double sigma2_si, Rng &rng)
{
    config.validate();
    if (std::isnan(sigma2_si) || sigma2_si < 0.0)
        throw domain_error("draw_si_channel: error variance must be >= 0");
    SiChannel si;
    si.estimated = draw_rayleigh(config.n_rx, config.n_tx, rng);
    if (sigma2_si > 0.0)
        si.error = draw_complex_gaussian<double>(config.n_rx, config.n_tx, sigma2_si, rng);
    else
        si.error = CMatrix::Zero(config.n_rx, config.n_tx);
    si.actual = si.estimated + si.error;
    return si;
}

ChannelSet draw_channel_set(const AntennaConfig &config, double sigma2_si, std::size_t interferers,
                            Rng &rng)
{
    ChannelSet set;
    set.sigma2_si = sigma2_si;
    set.desired = draw_rayleigh(config.n_rx, config.n_tx, rng);
    set.reverse = draw_rayleigh(config.n_rx, config.n_tx, rng);
    set.si_typical = draw_si_channel(config, sigma2_si, rng);
    set.si_partner = draw_si_channel(config, sigma2_si, rng);
    set.from_a.reserve(interferers);
    set.from_b.reserve(interferers);
    for (std::size_t k = 0; k < interferers; ++k)
    {
        set.from_a.push_back(draw_rayleigh(config.n_rx, config.n_tx, rng));
        set.from_b.push_back(draw_rayleigh(config.n_rx, config.n_tx, rng));
    }
    return set;
}

} // namespace fdtc
