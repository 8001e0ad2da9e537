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

#include "fdtc/geometry.hpp"

#include "fdtc/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace fdtc
{

DeploymentParams DeploymentParams::with_mean_pairs(double lambda, double mean_pairs,
                                                   double pair_distance)
{
    DeploymentParams p;
    p.lambda = lambda;
    p.mean_pairs = mean_pairs;
    p.pair_distance = pair_distance;
    return p;
}

DeploymentParams DeploymentParams::with_radius(double lambda, double radius, double pair_distance)
{
    DeploymentParams p;
    p.lambda = lambda;
    p.disk_radius = radius;
    p.pair_distance = pair_distance;
    return p;
}

void DeploymentParams::validate() const
{
    if (std::isnan(lambda) || lambda < 0.0)
        throw domain_error("DeploymentParams: lambda must be >= 0");
    if (!(pair_distance > 0.0))
        throw domain_error("DeploymentParams: pair distance must be > 0");
    if (disk_radius && !(*disk_radius > 0.0))
        throw domain_error("DeploymentParams: disk radius must be > 0");
    if (mean_pairs && (std::isnan(*mean_pairs) || *mean_pairs < 0.0))
        throw domain_error("DeploymentParams: mean pair count must be >= 0");
    if (!disk_radius && !mean_pairs)
        throw domain_error("DeploymentParams: need disk radius or mean pair count");
    if (disk_radius && mean_pairs)
    {
        const double implied = lambda * std::numbers::pi * *disk_radius * *disk_radius;
        if (std::abs(implied - *mean_pairs) > 1e-9 * std::max(1.0, *mean_pairs))
            throw domain_error("DeploymentParams: radius and mean pair count are inconsistent");
    }
}

double DeploymentParams::resolved_radius() const
{
    validate();
    if (disk_radius)
        return *disk_radius;
    if (lambda == 0.0)
        throw domain_error("DeploymentParams: radius undefined for lambda = 0 without explicit radius");
    return std::sqrt(*mean_pairs / (lambda * std::numbers::pi));
}

double DeploymentParams::expected_pairs() const
{
    validate();
    if (mean_pairs)
        return lambda == 0.0 ? 0.0 : *mean_pairs;
    return lambda * std::numbers::pi * *disk_radius * *disk_radius;
}

NetworkRealization sample_network(const DeploymentParams &params, Rng &rng)
{
    params.validate();
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double L = params.pair_distance;

    NetworkRealization net;
    net.pair_distance = L;
    net.disk_radius = (params.lambda == 0.0 && !params.disk_radius) ? 0.0 : params.resolved_radius();

    std::size_t interferers = 0;
    const double mean = params.expected_pairs();
    if (mean > 0.0)
        interferers = std::poisson_distribution<std::size_t>(mean)(rng);

    net.a_positions.reserve(interferers + 1);
    net.b_positions.reserve(interferers + 1);
    net.distance.reserve(interferers + 1);

    auto place_partner = [&](const Point2 &a) {
        const double phi = 2.0 * std::numbers::pi * unit(rng);
        return Point2(a.x() + L * std::cos(phi), a.y() + L * std::sin(phi));
    };

    const Point2 origin = Point2::Zero();
    net.a_positions.push_back(origin);
    net.b_positions.push_back(place_partner(origin));
    net.distance.push_back(0.0);

    for (std::size_t k = 0; k < interferers; ++k)
    {
        const double r = net.disk_radius * std::sqrt(unit(rng));
        const double theta = 2.0 * std::numbers::pi * unit(rng);
        const Point2 a(r * std::cos(theta), r * std::sin(theta));
        net.a_positions.push_back(a);
        net.b_positions.push_back(place_partner(a));
        net.distance.push_back(a.norm());
    }

    net.by_distance.resize(interferers);
    std::iota(net.by_distance.begin(), net.by_distance.end(), std::size_t{1});
    std::stable_sort(net.by_distance.begin(), net.by_distance.end(),
                     [&](std::size_t i, std::size_t j) { return net.distance[i] < net.distance[j]; });
    return net;
}

std::vector<std::size_t> nearest_pairs(const NetworkRealization &net, std::size_t count)
{
    if (count > net.interferer_count())
        throw range_error("nearest_pairs: requested " + std::to_string(count) + " of " +
                          std::to_string(net.interferer_count()) + " interferers");
    return {net.by_distance.begin(), net.by_distance.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::string realization_to_json(const NetworkRealization &net, std::uint64_t seed, double lambda)
{
    nlohmann::json j;
    j["seed"] = seed;
    j["lambda"] = lambda;
    j["disk_radius"] = net.disk_radius;
    j["L"] = net.pair_distance;
    auto &pairs = j["pairs"] = nlohmann::json::array();
    for (std::size_t k = 0; k < net.pair_count(); ++k)
    {
        pairs.push_back({{"ax", net.a_positions[k].x()},
                         {"ay", net.a_positions[k].y()},
                         {"bx", net.b_positions[k].x()},
                         {"by", net.b_positions[k].y()},
                         {"r", net.distance[k]}});
    }
    return j.dump();
}

} // namespace fdtc
