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

#include "fdtc/rng.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fdtc
{

using Point2 = Eigen::Vector2d;

/// Deployment of transceiver pairs on a disk. Either the disk radius or the mean
/// number of pairs may be given; the other follows from lambda * pi * r^2 = mean_pairs.
struct DeploymentParams
{
    double lambda = 0.0;
    std::optional<double> disk_radius;
    std::optional<double> mean_pairs;
    double pair_distance = 1.0; // L

    /// Disk radius implied by the parameters; throws domain_error if inconsistent or unset.
    double resolved_radius() const;
    /// Expected number of interfering pairs.
    double expected_pairs() const;
    void validate() const;

    static DeploymentParams with_mean_pairs(double lambda, double mean_pairs, double pair_distance);
    static DeploymentParams with_radius(double lambda, double radius, double pair_distance);
};

/// One Poisson deployment. Index 0 is the typical pair, whose receiving node a_0 sits at
/// the disk centre; b_0 is its partner. For k >= 1, `distance[k]` is |a_k - a_0|, which
/// also stands for |b_k - a_0|.
struct NetworkRealization
{
    std::vector<Point2> a_positions;
    std::vector<Point2> b_positions;
    std::vector<double> distance;     ///< distance[0] == 0 for the typical pair
    std::vector<std::size_t> by_distance; ///< interferer indices (>= 1) in ascending distance
    double disk_radius = 0.0;
    double pair_distance = 0.0;

    std::size_t pair_count() const { return a_positions.size(); }
    std::size_t interferer_count() const { return a_positions.empty() ? 0 : a_positions.size() - 1; }
};

/// Sample pairs: Poisson(lambda*pi*R^2) interferers uniform on the disk plus the typical
/// pair at the centre, each partner at distance L in a uniform direction.
NetworkRealization sample_network(const DeploymentParams &params, Rng &rng);

/// Indices of the `count` nearest interfering pairs, ties broken by lower index.
/// Throws range_error if fewer interferers exist.
std::vector<std::size_t> nearest_pairs(const NetworkRealization &net, std::size_t count);

/// Realization dump {seed, lambda, disk_radius, L, pairs:[{ax,ay,bx,by,r}]}.
std::string realization_to_json(const NetworkRealization &net, std::uint64_t seed, double lambda);

} // namespace fdtc
