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

#include <cstdint>
#include <random>

namespace fdtc
{

using Rng = std::mt19937_64;

/// Stream tags keep independent consumers of one (seed, index) pair apart.
enum class StreamTag : std::uint32_t
{
    trial = 1,
    bound_samples = 2,
    moment_oracle = 3,
    validation = 4,
};

/// Deterministic substream for (seed, index, tag). Results never depend on the
/// order in which substreams are created or consumed.
inline Rng substream(std::uint64_t seed, std::uint64_t index, StreamTag tag = StreamTag::trial)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                      static_cast<std::uint32_t>(tag)};
    return Rng(seq);
}

} // namespace fdtc
