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

#include <catch_amalgamated.hpp>

#include "fdtc/bounds.hpp"
#include "fdtc/error.hpp"
#include "fdtc/simulator.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

using namespace fdtc;
using Catch::Approx;

namespace
{

SystemParams fig2(int nt, int nr)
{
    SystemParams p;
    p.config = {nt, nr};
    p.L = 1.0;
    p.P = 1.0;
    p.alpha = 4.0;
    p.lambda = 0.1;
    p.sigma2_si = 0.1;
    p.beta = 1.0;
    return p;
}

} // namespace

TEST_CASE("thresholds and rates", "[simulator]")
{
    CHECK(hd_threshold(1.0) == Approx(3.0));
    CHECK(hd_threshold(0.5) == Approx(1.0));
    SystemParams p;
    p.beta = 3.0;
    CHECK(p.rate() == Approx(2.0));
    CHECK(p.threshold() == 3.0);
    p.strategy = Strategy::half_duplex;
    CHECK(p.threshold() == Approx(15.0));
    CHECK(capacity_from_density(0.1, 0.1, 1.0, false) == Approx(0.09));
    CHECK(capacity_from_density(0.1, 0.1, 1.0, true) == Approx(0.18));

    SystemParams bad;
    bad.alpha = 2.0;
    CHECK_THROWS_AS(bad.validate(), domain_error);
    bad = {};
    bad.epsilon = 1.0;
    CHECK_THROWS_AS(bad.validate(), domain_error);
}

TEST_CASE("sinr arithmetic", "[simulator]")
{
    SystemParams p;
    p.config = {2, 2};
    p.sigma2_si = 0.0;
    p.lambda = 0.0;

    TrialInputs in;
    in.network.a_positions = {Point2::Zero()};
    in.network.b_positions = {Point2(1, 0)};
    in.network.distance = {0.0};
    in.channels.si_typical.error = CMatrix::Zero(2, 2);
    in.beams.z_typical_rx = CVector::Unit(2, 0);
    in.beams.w_typical_tx = CVector::Unit(2, 0);
    in.beams.gamma = 4.0;
    in.noise = CVector::Unit(2, 0);
    in.from_a.resize(1);
    in.from_b.resize(1);

    const auto out = trial_sinr(p, in);
    CHECK(out.sinr == Approx(4.0).epsilon(1e-15));
    CHECK(out.desired_power == 4.0);
    CHECK(out.noise_power == 1.0);
    CHECK_FALSE(out.outage);

    p.P = 4.0;
    CHECK(trial_sinr(p, in).sinr == Approx(16.0));
    p.beta = 17.0;
    CHECK(trial_sinr(p, in).outage);
}

TEST_CASE("threshold limits", "[simulator]")
{
    SystemParams p = fig2(7, 3);
    p.beta = 1e-12;
    for (std::uint64_t t = 0; t < 50; ++t)
        REQUIRE_FALSE(run_trial(p, {}, 3, t).outage);

    p.beta = 1e12;
    CHECK(estimate_outage(p, 300, 3).p_hat == 1.0);

    SystemParams quiet = fig2(7, 3);
    quiet.lambda = 0.0;
    quiet.sigma2_si = 0.0;
    quiet.P = 1e12;
    quiet.beta = 0.01;
    CHECK(estimate_outage(quiet, 2000, 4).p_hat == 0.0);
}

TEST_CASE("cancelled pairs leave no residual", "[simulator]")
{
    for (auto [nt, nr] : {std::pair{9, 5}, std::pair{6, 6}, std::pair{7, 3}})
    {
        SystemParams p = fig2(nt, nr);
        for (std::uint64_t t = 0; t < 100; ++t)
        {
            const auto o = run_trial(p, {}, 8, t);
            REQUIRE(o.cancelled_residual_power <= 1e-20 * (o.interference_power + o.cancelled_residual_power));
        }
    }
}

TEST_CASE("outage grows with density", "[simulator][statistical]")
{
    SystemParams p = fig2(8, 2);
    p.lambda = 0.02;
    const auto low = estimate_outage(p, 3000, 9);
    p.lambda = 0.3;
    const auto high = estimate_outage(p, 3000, 9);
    CHECK(high.p_hat > low.p_hat + 3.0 * std::hypot(low.std_err, high.std_err));
}

TEST_CASE("estimates are deterministic", "[simulator]")
{
    const SystemParams p = fig2(6, 6);
    std::ostringstream a, b;
    const auto e1 = estimate_outage(p, 500, 42, {}, &a);
    const auto e2 = estimate_outage(p, 500, 42, {}, &b);
    CHECK(e1.outages == e2.outages);
    CHECK(a.str() == b.str());
    std::istringstream lines(a.str());
    std::string line;
    int count = 0;
    while (std::getline(lines, line))
    {
        const auto j = nlohmann::json::parse(line);
        REQUIRE(j["trial"] == count);
        ++count;
    }
    CHECK(count == 500);
    CHECK(e1.std_err == Approx(std::sqrt(e1.p_hat * (1 - e1.p_hat) / 500)));
}

TEST_CASE("effective and full interference models agree", "[simulator][statistical]")
{
    for (auto [nt, nr] : {std::pair{8, 2}, std::pair{5, 5}})
    {
        const SystemParams p = fig2(nt, nr);
        const auto eff = estimate_outage(p, 3000, 10, {InterferenceModel::effective});
        const auto full = estimate_outage(p, 3000, 11, {InterferenceModel::full});
        INFO("N_t=" << nt << " N_r=" << nr << " eff=" << eff.p_hat << " full=" << full.p_hat);
        CHECK(std::abs(eff.p_hat - full.p_hat) <= 4.0 * std::hypot(eff.std_err, full.std_err));
    }
}

TEST_CASE("simulation sits above the analytic bound", "[simulator][statistical]")
{
    for (auto [nt, nr] : {std::pair{8, 2}, std::pair{5, 5}, std::pair{7, 7}})
    {
        const SystemParams p = fig2(nt, nr);
        const auto est = estimate_outage(p, 3000, 12);
        CHECK(est.p_hat >= op_lb_analytic(p) - 3.0 * est.std_err);
    }
}

TEST_CASE("half duplex simulation", "[simulator]")
{
    SystemParams p = fig2(7, 3);
    p.strategy = Strategy::half_duplex;
    for (std::uint64_t t = 0; t < 50; ++t)
    {
        const auto o = run_trial(p, {}, 13, t);
        REQUIRE(o.residual_si_power == 0.0);
    }
}

TEST_CASE("simulated capacity search", "[simulator]")
{
    SystemParams pzf = fig2(7, 5);
    pzf.strategy = Strategy::partial_zf_only_fd;
    const auto zero = simulated_tc(pzf, 400, 14);
    CHECK(zero.status == SimulatedTc::Status::zero_tc);
    CHECK(zero.capacity == 0.0);
    CHECK(zero.outage_at_lo > pzf.epsilon);

    SystemParams svd = fig2(7, 5);
    svd.strategy = Strategy::svd_only_fd;
    const auto tc = simulated_tc(svd, 400, 14);
    REQUIRE(tc.status == SimulatedTc::Status::ok);
    CHECK(tc.capacity == Approx(tc.lambda * 0.9 * svd.rate()));
    CHECK(tc.outage_at_hi > svd.epsilon);

    TcSearch tiny;
    tiny.max_doublings = 0;
    CHECK(simulated_tc(svd, 200, 14, tiny).status == SimulatedTc::Status::bracket_failure);
    tiny.lambda_lo = 0.0;
    CHECK_THROWS_AS(simulated_tc(svd, 200, 14, tiny), domain_error);
}
