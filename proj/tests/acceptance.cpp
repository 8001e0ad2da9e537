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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "fdtc/bounds.hpp"
#include "fdtc/experiment.hpp"
#include "fdtc/validation.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

using namespace fdtc;

namespace
{

constexpr std::uint64_t kSeed = 20260101;

struct Verdict
{
    bool pass = false;
    std::string detail;
};

std::string fmt(const char *f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

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
    p.epsilon = 0.1;
    return p;
}

double relative_power(const CVector &z, const CVector &g)
{
    return std::norm(z.dot(g)) / (z.squaredNorm() * g.squaredNorm());
}

// 1: Newton root for (omega=1, l=2, eps=0.1)
Verdict root_solver()
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto sol = newton_raphson_density_fd(1.0, 2, 0.1);
    const double elapsed = seconds_since(t0);
    const double residual = std::abs(op_lb_approx(sol.lambda, 2, 1.0) - 0.1);
    const double oracle = bisection_density(2, 1.0, 0.1);
    const bool pass = residual <= 1e-8 && std::abs(sol.lambda - 0.16915) <= 1e-3 &&
                      std::abs(sol.lambda - oracle) <= 1e-3 && elapsed < 1.0;
    return {pass, fmt("lambda=%.6f bisection=%.6f |q-eps|=%.2e t=%.4fs", sol.lambda, oracle,
                      residual, elapsed)};
}

// 2: initial guess
Verdict initial_guess()
{
    const double l0 = newton_initial_guess(1.0, 2, 0.1);
    const double expected = std::sqrt(0.2) / std::numbers::pi;
    return {std::abs(l0 - expected) <= 1e-6 && std::abs(l0 - 0.14235) <= 1e-5,
            fmt("lambda0=%.8f direct=%.8f", l0, expected)};
}

// 3: moment oracles at 1e6 samples
Verdict moments()
{
    constexpr std::uint64_t n = 1000000;
    const double sigma2 = 0.1;
    Rng rng = substream(kSeed, 0, StreamTag::validation);

    const CMatrix hp = draw_complex_gaussian<double>(1000, 1000, sigma2, rng);
    const double e_hp = hp.cwiseAbs2().mean();

    const CMatrix g = draw_rayleigh(2, 1000000, rng);
    const double e_psi = g.cwiseAbs2().colwise().sum().mean();

    const double e_psi_half = moment_psi_power_oracle(4.0, n, kSeed);
    const bool near_direct = std::abs(e_psi_half - psi_power_moment(4.0, PsiMomentForm::direct)) <=
                             0.01 * psi_power_moment(4.0, PsiMomentForm::direct);
    const bool near_halved = std::abs(e_psi_half - psi_power_moment(4.0, PsiMomentForm::halved)) <=
                             0.01 * psi_power_moment(4.0, PsiMomentForm::halved);
    const auto selected = select_psi_moment_form(4.0, e_psi_half);
    const auto table = make_moment_table(fig2(7, 3));
    const bool table_ok = selected && table.e_psi_pow == psi_power_moment(4.0, *selected);

    const AntennaConfig cfg{7, 3};
    double frob = 0.0;
    for (std::uint64_t k = 0; k < n; ++k)
        frob += draw_rayleigh(cfg.n_rx, cfg.n_tx, rng).squaredNorm();
    frob /= static_cast<double>(n);

    const CMatrix h = draw_rayleigh(1000, 1000, rng);
    const double e_power = h.cwiseAbs2().array().pow(4.0 / 4.0).mean(); // (|h|^2)^(4/alpha)
    const double e_amplitude = h.cwiseAbs().array().pow(4.0 / 4.0).mean(); // |h|^(4/alpha)

    const bool pass = std::abs(e_hp - sigma2) <= 0.01 * sigma2 && std::abs(e_psi - 2.0) <= 0.02 &&
                      (near_direct != near_halved) && table_ok &&
                      std::abs(frob - 21.0) <= 0.21 && std::abs(e_power - std::tgamma(2.0)) <= 0.01 &&
                      std::abs(e_amplitude - table.e_h_pow_hd) <= 0.01 * table.e_h_pow_hd;
    return {pass, fmt("E|h'|^2=%.5f Epsi=%.5f Epsi^0.5=%.5f (%s) table=%.5f E||H||^2=%.4f "
                      "E(|h|^2)^1=%.5f E|h|^1=%.5f table_hd=%.5f",
                      e_hp, e_psi, e_psi_half,
                      selected ? (*selected == PsiMomentForm::direct ? "Gamma(2.5)" : "Gamma(2.5)/2")
                               : "ambiguous",
                      table.e_psi_pow, frob, e_power, e_amplitude, table.e_h_pow_hd)};
}

struct BeamCheck
{
    double worst_residual = 0.0;
    double worst_normalization = 0.0;
    long eq27_violations = 0;
    long checked = 0;
};

// 4 and 5 share the sampled trials
BeamCheck beam_trials()
{
    BeamCheck out;
    struct Branch
    {
        Strategy s;
        AntennaConfig cfg;
    };
    const Branch branches[] = {
        {Strategy::proposed_fd, {7, 3}},        {Strategy::proposed_fd, {4, 4}},
        {Strategy::svd_only_fd, {7, 3}},        {Strategy::svd_only_fd, {4, 4}},
        {Strategy::svd_partial_zf_fd, {7, 5}},  {Strategy::svd_partial_zf_fd, {4, 4}},
        {Strategy::partial_zf_only_fd, {7, 5}}, {Strategy::partial_zf_only_fd, {4, 4}},
        {Strategy::half_duplex, {7, 3}},        {Strategy::half_duplex, {4, 4}},
    };
    std::uint64_t index = 0;
    for (const auto &b : branches)
    {
        const int vectors = cancelled_vector_count(b.s, b.cfg);
        for (int t = 0; t < 1000; ++t)
        {
            Rng rng = substream(kSeed, index++, StreamTag::validation);
            const ChannelSet ch = draw_channel_set(b.cfg, 0.1, 0, rng);
            std::vector<CVector> iv;
            for (int k = 0; k < vectors; ++k)
                iv.push_back(draw_rayleigh_vector(b.cfg.n_rx, rng));
            const BeamformerSet set = build_beamformers(b.s, ch, iv, b.cfg);
            const CVector &z = set.z_typical_rx;

            for (const auto &v : iv)
                out.worst_residual = std::max(out.worst_residual, relative_power(z, v));
            if (set.nulled_si_vector)
                out.worst_residual =
                    std::max(out.worst_residual, relative_power(z, *set.nulled_si_vector));
            if (b.s == Strategy::proposed_fd && b.cfg.transmit_heavy())
            {
                // SI removed by the precoder alone
                const CVector leak = ch.si_typical.estimated * set.w_typical_tx;
                out.worst_residual = std::max(out.worst_residual,
                                              leak.squaredNorm() / ch.si_typical.estimated.squaredNorm());
            }
            out.worst_normalization =
                std::max(out.worst_normalization, std::abs(z.dot(set.desired_direction) - 1.0));

            // largest eigenvalue between ||H||^2 / N_t and ||H||^2
            const double g = top_gram_eigenvalue(ch.desired);
            const double f = ch.desired.squaredNorm();
            out.eq27_violations += (f / b.cfg.n_tx <= g * (1 + 1e-12) && g <= f * (1 + 1e-12)) ? 0 : 1;
            if (b.s == Strategy::proposed_fd && b.cfg.transmit_heavy())
            {
                const double fp = (ch.desired * null_space(ch.si_partner.estimated)).squaredNorm();
                out.eq27_violations +=
                    (fp / b.cfg.n_rx <= set.gamma * (1 + 1e-12) && set.gamma <= fp * (1 + 1e-12)) ? 0 : 1;
            }
            ++out.checked;
        }
    }
    return out;
}

// 6: Fig. 2 bound ordering
Verdict bound_ordering()
{
    const auto t0 = std::chrono::steady_clock::now();
    bool ordered = true;
    double gap_nr5 = 0.0, gap_nr2 = 0.0;
    std::ostringstream rows;
    for (int total : {8, 10, 12, 14, 16})
        for (AntennaConfig cfg : {AntennaConfig{(total + 1) / 2, total / 2}, AntennaConfig{total - 2, 2}})
        {
            const SystemParams p = fig2(cfg.n_tx, cfg.n_rx);
            const auto est = estimate_outage(p, 20000, kSeed);
            const double lb = op_lb_analytic(p);
            const bool ok = lb <= est.p_hat + 3.0 * est.std_err;
            ordered = ordered && ok;
            rows << fmt(" (%d,%d):sim=%.4f+-%.4f lb=%.4f%s", cfg.n_tx, cfg.n_rx, est.p_hat,
                        est.std_err, lb, ok ? "" : "!");
            if (total == 10 && cfg.n_rx == 5)
                gap_nr5 = est.p_hat - lb;
            if (total == 10 && cfg.n_rx == 2)
                gap_nr2 = est.p_hat - lb;
        }
    const double elapsed = seconds_since(t0);
    return {ordered && gap_nr5 > gap_nr2 && elapsed < 600.0,
            fmt("gap(N_r=5)=%.4f gap(N_r=2)=%.4f at N=10, t=%.0fs;", gap_nr5, gap_nr2, elapsed) +
                rows.str()};
}

// 7: Fig. 4 strategy ordering
Verdict strategy_ordering()
{
    bool ok = true;
    std::ostringstream rows;
    for (int total = 11; total <= 16; ++total)
    {
        SystemParams p = fig2(total - 5, 5);
        p.strategy = Strategy::proposed_fd;
        const double proposed = tc_upper_bound_fd(p).tc_ub;
        p.strategy = Strategy::svd_partial_zf_fd;
        const double svd_pzf = tc_upper_bound_fd(p).tc_ub;
        ok = ok && (total == 11 ? proposed < svd_pzf : proposed >= svd_pzf);
        rows << fmt(" N=%d:%.4f/%.4f", total, proposed, svd_pzf);
    }
    bool zero = true;
    for (int total = 10; total <= 16; ++total)
    {
        SystemParams p = fig2(total - 5, 5);
        p.strategy = Strategy::partial_zf_only_fd;
        const auto tc = simulated_tc(p, 5000, kSeed);
        zero = zero && tc.status == SimulatedTc::Status::zero_tc && tc.capacity == 0.0;
        if (total == 12)
            rows << fmt("; partial_zf_only N=12 outage(lambda_lo)=%.4f tc=%.3g", tc.outage_at_lo,
                        tc.capacity);
    }
    return {ok && zero, "proposed/svd_pzf TC-UB" + rows.str()};
}

// 8: FD/HD crossover
Verdict fd_hd_crossover()
{
    BoundOptions noisy;
    noisy.include_noise = true;
    bool pass = true;
    std::ostringstream detail;
    const auto snr_grid = parse_sweep("0:30:0.5");
    for (double sigma2 : {0.1, 0.5})
    {
        int changes = 0;
        double prev_sign = 0.0, crossing = std::nan("");
        double fd0 = 0.0, hd0 = 0.0;
        for (double snr : snr_grid)
        {
            SystemParams p = fig2(7, 3);
            p.beta = 3.0;
            p.sigma2_si = sigma2;
            p.P = std::pow(10.0, snr / 10.0);
            const double fd = tc_upper_bound_fd(p, noisy).tc_ub;
            const double hd = tc_upper_bound_hd(p, noisy).tc_ub;
            if (snr == 0.0)
            {
                fd0 = fd;
                hd0 = hd;
            }
            const double sign = fd > hd ? 1.0 : (fd < hd ? -1.0 : 0.0);
            if (sign != 0.0 && prev_sign != 0.0 && sign != prev_sign)
            {
                ++changes;
                crossing = snr;
            }
            if (sign != 0.0)
                prev_sign = sign;
        }
        pass = pass && fd0 > hd0 && changes == 1;
        detail << fmt("sigma2=%.1f: FD(0dB)=%.4f HD(0dB)=%.4f sign changes=%d near %.1f dB; ", sigma2,
                      fd0, hd0, changes, crossing);
    }
    bool monotone = true;
    for (double snr : snr_grid)
    {
        double prev = std::numeric_limits<double>::infinity();
        for (double sigma2 : {0.0, 0.05, 0.1, 0.2, 0.3, 0.5, 0.75, 1.0})
        {
            SystemParams p = fig2(7, 3);
            p.beta = 3.0;
            p.sigma2_si = sigma2;
            p.P = std::pow(10.0, snr / 10.0);
            const double fd = tc_upper_bound_fd(p, noisy).tc_ub;
            monotone = monotone && fd <= prev;
            prev = fd;
        }
    }
    detail << (monotone ? "FD nonincreasing in sigma2" : "FD NOT monotone in sigma2");
    return {pass && monotone, detail.str()};
}

// 9: zero capacity guard
Verdict zero_guard()
{
    struct Case
    {
        Strategy s;
        AntennaConfig cfg;
        double L, beta, sigma2;
    };
    const Case cases[] = {
        {Strategy::svd_only_fd, {2, 2}, 1.0, 1.0, 4.0},
        {Strategy::svd_partial_zf_fd, {4, 4}, 1.0, 2.0, 8.0},
        {Strategy::proposed_fd, {4, 4}, 1.0, 1.0, 20.0},
        {Strategy::proposed_fd, {7, 3}, 1.0, 1.0, 21.0},
        {Strategy::svd_only_fd, {3, 2}, 1.5, 1.0, 1.2},
    };
    bool pass = true;
    std::ostringstream detail;
    for (const auto &c : cases)
    {
        SystemParams p = fig2(c.cfg.n_tx, c.cfg.n_rx);
        p.strategy = c.s;
        p.L = c.L;
        p.beta = c.beta;
        p.sigma2_si = c.sigma2;
        const auto b = tc_upper_bound(p);
        pass = pass && b.zero_tc && b.tc_ub == 0.0;
        detail << fmt(" (%d,%d,%s):tc=%g zero=%d", c.cfg.n_tx, c.cfg.n_rx,
                      std::string(to_string(c.s)).c_str(), b.tc_ub, b.zero_tc ? 1 : 0);
    }
    return {pass, detail.str()};
}

// 10: nearest-distance law
Verdict geometry_ks()
{
    const double lambda = 0.1;
    const double radius = std::sqrt(200.0 / (lambda * std::numbers::pi));
    bool pass = true;
    std::string detail;
    for (int n = 1; n <= 3; ++n)
    {
        const double ks = nearest_distance_ks(n, lambda, radius, 10000, kSeed + n);
        pass = pass && ks <= 0.02;
        detail += fmt(" KS(n=%d)=%.4f", n, ks);
    }
    return {pass, detail};
}

// 11: byte-identical experiment output
Verdict determinism()
{
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "fdtc_acceptance";
    fs::create_directories(dir);
    auto slurp = [](const fs::path &p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };

    std::vector<ExperimentSpec> specs;
    for (auto kind : {ExperimentKind::op_vs_antennas, ExperimentKind::tc_vs_antennas,
                      ExperimentKind::strategy_comparison, ExperimentKind::fd_vs_hd_snr,
                      ExperimentKind::single_point, ExperimentKind::validate})
    {
        ExperimentSpec s;
        s.kind = kind;
        s.seed = kSeed;
        s.trials = 400;
        s.bound_samples = 2000;
        if (kind == ExperimentKind::op_vs_antennas || kind == ExperimentKind::tc_vs_antennas)
            s.sweep = {8};
        if (kind == ExperimentKind::strategy_comparison)
            s.sweep = {12};
        if (kind == ExperimentKind::fd_vs_hd_snr)
        {
            s.base.config = {7, 3};
            s.base.beta = 3.0;
        }
        if (kind == ExperimentKind::single_point)
            s.base.config = {4, 4};
        specs.push_back(s);
    }
    ExperimentSpec json = specs.front();
    json.format = OutputFormat::json;
    specs.push_back(json);

    bool pass = true;
    std::string detail;
    int index = 0;
    for (auto spec : specs)
    {
        std::string first, second;
        for (int run = 0; run < 2; ++run)
        {
            spec.output_path = (dir / fmt("run%d_%d.out", index, run)).string();
            run_experiment(spec);
            (run == 0 ? first : second) = slurp(spec.output_path);
        }
        const bool same = !first.empty() && first == second;
        pass = pass && same;
        detail += fmt(" %s%s:%s", std::string(to_string(spec.kind)).c_str(),
                      spec.format == OutputFormat::json ? "(json)" : "", same ? "identical" : "DIFFER");
        ++index;
    }
    fs::remove_all(dir);
    return {pass, detail};
}

} // namespace

int main()
{
    int failures = 0;
    auto report = [&](int id, const char *name, const std::function<Verdict()> &check) {
        Verdict v;
        try
        {
            v = check();
        }
        catch (const std::exception &e)
        {
            v = {false, std::string("exception: ") + e.what()};
        }
        failures += v.pass ? 0 : 1;
        std::cout << "criterion " << id << " " << (v.pass ? "PASS" : "FAIL") << " " << name << ": "
                  << v.detail << std::endl;
    };

    report(1, "root solver exactness", root_solver);
    report(2, "initial guess", initial_guess);
    report(3, "moment oracles", moments);

    BeamCheck beams;
    bool beams_ok = true;
    std::string beams_error;
    try
    {
        beams = beam_trials();
    }
    catch (const std::exception &e)
    {
        beams_ok = false;
        beams_error = e.what();
    }
    report(4, "beamforming residuals", [&] {
        if (!beams_ok)
            return Verdict{false, "exception: " + beams_error};
        return Verdict{beams.worst_residual <= 1e-20 && beams.worst_normalization <= 1e-10,
                       fmt("trials=%ld worst relative residual=%.3e worst |z^H d - 1|=%.3e",
                           beams.checked, beams.worst_residual, beams.worst_normalization)};
    });
    report(5, "eigenvalue bounds", [&] {
        if (!beams_ok)
            return Verdict{false, "exception: " + beams_error};
        return Verdict{beams.eq27_violations == 0,
                       fmt("trials=%ld violations=%ld", beams.checked, beams.eq27_violations)};
    });
    report(6, "bound ordering", bound_ordering);
    report(7, "strategy ordering", strategy_ordering);
    report(8, "FD/HD crossover", fd_hd_crossover);
    report(9, "zero-TC guard", zero_guard);
    report(10, "geometry oracle", geometry_ks);
    report(11, "determinism", determinism);

    std::cout << (failures == 0 ? "all criteria passed" : fmt("%d criteria failed", failures))
              << std::endl;
    return failures == 0 ? 0 : 1;
}
