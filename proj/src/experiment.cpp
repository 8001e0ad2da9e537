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

#include "fdtc/experiment.hpp"

#include "fdtc/error.hpp"
#include "fdtc/validation.hpp"

#include <json.hpp>

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#ifndef FDTC_VERSION
#define FDTC_VERSION "0.0.0"
#endif

namespace fdtc
{

namespace
{

constexpr std::array<std::pair<ExperimentKind, std::string_view>, 6> kExperimentNames{{
    {ExperimentKind::op_vs_antennas, "op_vs_antennas"},
    {ExperimentKind::tc_vs_antennas, "tc_vs_antennas"},
    {ExperimentKind::strategy_comparison, "strategy_comparison"},
    {ExperimentKind::fd_vs_hd_snr, "fd_vs_hd_snr"},
    {ExperimentKind::single_point, "single_point"},
    {ExperimentKind::validate, "validate"},
}};

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double to_double(std::string_view key, std::string_view text)
{
    text = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw config_error("invalid number for '" + std::string(key) + "': " + std::string(text));
    return value;
}

std::int64_t to_int(std::string_view key, std::string_view text)
{
    text = trim(text);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw config_error("invalid integer for '" + std::string(key) + "': " + std::string(text));
    return value;
}

std::uint64_t to_count(std::string_view key, std::string_view text)
{
    const std::int64_t v = to_int(key, text);
    if (v < 0)
        throw config_error("'" + std::string(key) + "' must be non-negative");
    return static_cast<std::uint64_t>(v);
}

bool to_bool(std::string_view key, std::string_view text)
{
    text = trim(text);
    if (text == "true" || text == "1" || text == "yes" || text == "on")
        return true;
    if (text == "false" || text == "0" || text == "no" || text == "off")
        return false;
    throw config_error("invalid boolean for '" + std::string(key) + "': " + std::string(text));
}

std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string status_text(const BoundResult &b)
{
    if (b.zero_tc)
        return "zero_tc";
    return b.converged ? "ok" : "not_converged";
}

const double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<AntennaConfig> antenna_splits(int total, int heavy_rx)
{
    std::vector<AntennaConfig> out;
    const AntennaConfig balanced{(total + 1) / 2, total / 2};
    if (balanced.n_tx >= 1 && balanced.n_rx >= 1)
        out.push_back(balanced);
    const AntennaConfig heavy{total - heavy_rx, heavy_rx};
    if (heavy.n_tx >= 1 && heavy.n_rx >= 1 && heavy.n_rx != balanced.n_rx)
        out.push_back(heavy);
    return out;
}

int as_antenna_total(double v)
{
    if (v != std::floor(v) || v < 2)
        throw config_error("antenna sweep values must be integers >= 2");
    return static_cast<int>(v);
}

Table op_vs_antennas(const ExperimentSpec &spec)
{
    Table t;
    t.columns = {"N", "N_t", "N_r", "op_sim", "op_sim_stderr", "op_lb_approx", "op_lb_exact", "status"};
    for (double nv : spec.effective_sweep())
    {
        const int total = as_antenna_total(nv);
        for (const auto &cfg : antenna_splits(total, spec.heavy_rx))
        {
            SystemParams p = spec.base;
            p.config = cfg;
            double sim = kNaN, se = kNaN, approx = kNaN, exact = kNaN;
            std::string status = "ok";
            try
            {
                if (spec.simulate)
                {
                    const auto est = estimate_outage(p, spec.trials, spec.seed, spec.simulation);
                    sim = est.p_hat;
                    se = est.std_err;
                }
                approx = op_lb_analytic(p, spec.bound);
                exact = op_lb_exact(p, spec.bound_samples, spec.seed, spec.bound);
            }
            catch (const std::exception &e)
            {
                status = e.what();
            }
            t.rows.push_back({std::int64_t{total}, std::int64_t{cfg.n_tx}, std::int64_t{cfg.n_rx},
                              sim, se, approx, exact, status});
        }
    }
    return t;
}

Table tc_vs_antennas(const ExperimentSpec &spec)
{
    Table t;
    t.columns = {"N", "N_t", "N_r", "tc_sim", "tc_ub", "status"};
    for (double nv : spec.effective_sweep())
    {
        const int total = as_antenna_total(nv);
        for (const auto &cfg : antenna_splits(total, spec.heavy_rx))
        {
            SystemParams p = spec.base;
            p.config = cfg;
            double sim = kNaN, ub = kNaN;
            std::string status;
            try
            {
                const BoundResult b = tc_upper_bound(p, spec.bound);
                ub = b.tc_ub;
                status = status_text(b);
                if (spec.simulate)
                {
                    const SimulatedTc s = simulated_tc(p, spec.trials, spec.seed, spec.search, spec.simulation);
                    sim = s.capacity;
                    if (s.status != SimulatedTc::Status::ok)
                        status += std::string("/sim_") + std::string(to_string(s.status));
                }
            }
            catch (const std::exception &e)
            {
                status = e.what();
            }
            t.rows.push_back({std::int64_t{total}, std::int64_t{cfg.n_tx}, std::int64_t{cfg.n_rx},
                              sim, ub, status});
        }
    }
    return t;
}

Table strategy_comparison(const ExperimentSpec &spec)
{
    constexpr std::array strategies{Strategy::proposed_fd, Strategy::svd_partial_zf_fd,
                                    Strategy::svd_only_fd, Strategy::partial_zf_only_fd};
    Table t;
    t.columns = {"N", "N_t", "N_r", "strategy", "tc_ub", "tc_sim", "status"};
    for (double nv : spec.effective_sweep())
    {
        const int total = as_antenna_total(nv);
        const AntennaConfig cfg{total - spec.comparison_rx, spec.comparison_rx};
        if (cfg.n_tx < 1)
            continue;
        for (Strategy s : strategies)
        {
            SystemParams p = spec.base;
            p.config = cfg;
            p.strategy = s;
            double ub = kNaN, sim = kNaN;
            std::string status;
            try
            {
                const BoundResult b = tc_upper_bound_fd(p, spec.bound);
                ub = b.tc_ub;
                status = status_text(b);
                if (spec.simulate)
                {
                    const SimulatedTc r = simulated_tc(p, spec.trials, spec.seed, spec.search, spec.simulation);
                    sim = r.capacity;
                    if (r.status != SimulatedTc::Status::ok)
                        status += std::string("/sim_") + std::string(to_string(r.status));
                }
            }
            catch (const std::exception &e)
            {
                status = e.what();
            }
            t.rows.push_back({std::int64_t{total}, std::int64_t{cfg.n_tx}, std::int64_t{cfg.n_rx},
                              std::string(to_string(s)), ub, sim, status});
        }
    }
    return t;
}

Table fd_vs_hd_snr(const ExperimentSpec &spec)
{
    Table t;
    t.columns = {"snr_db", "tc_ub_fd", "tc_ub_hd", "sigma2_si", "zero_tc_fd", "zero_tc_hd"};
    BoundOptions opts = spec.bound;
    opts.include_noise = true; // the SNR axis only enters through the noise term
    for (double sigma2 : spec.sigma2_values)
        for (double snr : spec.effective_sweep())
        {
            SystemParams p = spec.base;
            if (!is_full_duplex(p.strategy))
                p.strategy = Strategy::proposed_fd;
            p.sigma2_si = sigma2;
            p.P = std::pow(10.0, snr / 10.0);
            const BoundResult fd = tc_upper_bound_fd(p, opts);
            const BoundResult hd = tc_upper_bound_hd(p, opts);
            t.rows.push_back({snr, fd.tc_ub, hd.tc_ub, sigma2, std::int64_t{fd.zero_tc},
                              std::int64_t{hd.zero_tc}});
        }
    return t;
}

ExperimentResult single_point(const ExperimentSpec &spec)
{
    ExperimentResult r;
    Table &t = r.table;
    t.columns = {"N_t", "N_r", "strategy", "lambda", "omega", "order", "lambda_solved",
                 "op_lb_approx", "tc_ub", "converged", "zero_tc", "convexity_warning", "iterations"};
    const SystemParams &p = spec.base;
    BoundResult b;
    if (spec.omega_override)
    {
        BoundInputs in = is_full_duplex(p.strategy) ? fd_bound_inputs(p, spec.bound)
                                                    : hd_bound_inputs(p, spec.bound);
        b.order = in.curve.order;
        b.omega = *spec.omega_override;
        try
        {
            const DensitySolution s = solve_density(in.curve, b.omega, in.epsilon, spec.bound.solver);
            b.lambda_solved = s.lambda;
            b.iterations = s.iterations;
            b.convexity_warning = s.convexity_warning;
            b.converged = true;
        }
        catch (const convergence_error &e)
        {
            b.lambda_solved = e.last_iterate();
        }
        b.op_lb_at_lambda = in.curve.value(b.lambda_solved, b.omega);
        b.tc_ub = in.rate_multiplier * b.lambda_solved * (1.0 - in.epsilon) * in.rate;
    }
    else
    {
        b = tc_upper_bound(p, spec.bound);
    }
    const double at_lambda = b.zero_tc ? 1.0
                             : b.omega > 0.0 ? OutageCurve::standard(b.order).value(p.lambda, b.omega)
                                             : 0.0;
    t.rows.push_back({std::int64_t{p.config.n_tx}, std::int64_t{p.config.n_rx},
                      std::string(to_string(p.strategy)), p.lambda, b.omega, std::int64_t{b.order},
                      b.lambda_solved, at_lambda, b.tc_ub, std::int64_t{b.converged},
                      std::int64_t{b.zero_tc}, std::int64_t{b.convexity_warning},
                      std::int64_t{b.iterations}});
    r.exit_code = b.converged ? 0 : 3;
    return r;
}

ExperimentResult validate_suite(const ExperimentSpec &spec)
{
    ExperimentResult r;
    r.table.columns = {"check", "value", "threshold", "pass"};
    bool all = true;
    for (const auto &c : run_validation_suite(spec.seed))
    {
        r.table.rows.push_back({c.name, c.value, c.threshold, std::int64_t{c.pass}});
        all = all && c.pass;
    }
    r.exit_code = all ? 0 : 2;
    return r;
}

} // namespace

std::string_view to_string(ExperimentKind kind)
{
    for (const auto &[k, name] : kExperimentNames)
        if (k == kind)
            return name;
    return "unknown";
}

std::optional<ExperimentKind> parse_experiment(std::string_view name)
{
    for (const auto &[k, n] : kExperimentNames)
        if (n == name)
            return k;
    return std::nullopt;
}

std::vector<double> ExperimentSpec::effective_sweep() const
{
    if (!sweep.empty())
        return sweep;
    switch (kind)
    {
    case ExperimentKind::op_vs_antennas:
    case ExperimentKind::tc_vs_antennas:
        return parse_sweep("8:16:1");
    case ExperimentKind::strategy_comparison:
        return parse_sweep("10:16:1");
    case ExperimentKind::fd_vs_hd_snr:
        return parse_sweep("0:30:0.5");
    default:
        return {};
    }
}

void ExperimentSpec::validate() const
{
    base.validate();
    if (trials < 1 && simulate && kind != ExperimentKind::single_point &&
        kind != ExperimentKind::fd_vs_hd_snr && kind != ExperimentKind::validate)
        throw config_error("trials must be >= 1");
    if (bound_samples < 1)
        throw config_error("bound_samples must be >= 1");
    if (heavy_rx < 1 || comparison_rx < 1)
        throw config_error("receive antenna counts must be >= 1");
    if (kind == ExperimentKind::fd_vs_hd_snr && sigma2_values.empty())
        throw config_error("sigma2_values must not be empty");
    if (omega_override && !(*omega_override > 0.0))
        throw config_error("omega must be > 0");
}

std::map<std::string, std::string> parse_key_values(std::string_view text)
{
    std::map<std::string, std::string> out;
    int line_no = 0;
    while (!text.empty())
    {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw config_error("line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        if (key.empty())
            throw config_error("line " + std::to_string(line_no) + ": empty key");
        out[key] = std::string(trim(line.substr(eq + 1)));
    }
    return out;
}

std::vector<double> parse_sweep(std::string_view text)
{
    text = trim(text);
    std::vector<double> out;
    if (text.find(':') != std::string_view::npos)
    {
        const auto c1 = text.find(':');
        const auto c2 = text.find(':', c1 + 1);
        if (c2 == std::string_view::npos)
            throw config_error("range sweep must be start:stop:step");
        const double start = to_double("sweep", text.substr(0, c1));
        const double stop = to_double("sweep", text.substr(c1 + 1, c2 - c1 - 1));
        const double step = to_double("sweep", text.substr(c2 + 1));
        if (!(step > 0.0) || stop < start)
            throw config_error("range sweep needs step > 0 and stop >= start");
        const auto count = static_cast<std::int64_t>(std::floor((stop - start) / step + 1e-9));
        for (std::int64_t i = 0; i <= count; ++i)
            out.push_back(start + static_cast<double>(i) * step);
        return out;
    }
    while (!text.empty())
    {
        const auto comma = text.find(',');
        out.push_back(to_double("sweep", text.substr(0, comma)));
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    }
    return out;
}

void apply_settings(ExperimentSpec &spec, const std::map<std::string, std::string> &settings)
{
    for (const auto &[key, value] : settings)
    {
        SystemParams &p = spec.base;
        if (key == "experiment")
        {
            const auto k = parse_experiment(value);
            if (!k)
                throw config_error("unknown experiment: " + value);
            spec.kind = *k;
        }
        else if (key == "n_tx")
            p.config.n_tx = static_cast<int>(to_int(key, value));
        else if (key == "n_rx")
            p.config.n_rx = static_cast<int>(to_int(key, value));
        else if (key == "L")
            p.L = to_double(key, value);
        else if (key == "P")
            p.P = to_double(key, value);
        else if (key == "snr_db")
            p.P = std::pow(10.0, to_double(key, value) / 10.0);
        else if (key == "alpha")
            p.alpha = to_double(key, value);
        else if (key == "beta")
            p.beta = to_double(key, value);
        else if (key == "epsilon")
            p.epsilon = to_double(key, value);
        else if (key == "sigma2_si")
            p.sigma2_si = to_double(key, value);
        else if (key == "lambda")
            p.lambda = to_double(key, value);
        else if (key == "mean_pairs")
            p.mean_pairs = to_double(key, value);
        else if (key == "strategy")
        {
            const auto s = parse_strategy(value);
            if (!s)
                throw config_error("unknown strategy: " + value);
            p.strategy = *s;
        }
        else if (key == "trials")
            spec.trials = to_count(key, value);
        else if (key == "seed")
            spec.seed = to_count(key, value);
        else if (key == "out")
            spec.output_path = value;
        else if (key == "format")
        {
            if (value == "csv")
                spec.format = OutputFormat::csv;
            else if (value == "json")
                spec.format = OutputFormat::json;
            else
                throw config_error("format must be csv or json");
        }
        else if (key == "sweep")
            spec.sweep = parse_sweep(value);
        else if (key == "include_noise")
            spec.bound.include_noise = to_bool(key, value);
        else if (key == "hd_literal_gamma_order")
            spec.bound.hd_literal_gamma_order = to_bool(key, value);
        else if (key == "hd_gain")
        {
            if (value == "lower")
                spec.bound.hd_gain = HdGainMoment::frobenius_lower;
            else if (value == "upper")
                spec.bound.hd_gain = HdGainMoment::frobenius_upper;
            else
                throw config_error("hd_gain must be lower or upper");
        }
        else if (key == "heavy_rx")
            spec.heavy_rx = static_cast<int>(to_int(key, value));
        else if (key == "comparison_rx")
            spec.comparison_rx = static_cast<int>(to_int(key, value));
        else if (key == "sigma2_values")
            spec.sigma2_values = parse_sweep(value);
        else if (key == "bound_samples")
            spec.bound_samples = to_count(key, value);
        else if (key == "simulate")
            spec.simulate = to_bool(key, value);
        else if (key == "omega")
            spec.omega_override = to_double(key, value);
        else if (key == "lambda_lo")
            spec.search.lambda_lo = to_double(key, value);
        else if (key == "max_doublings")
            spec.search.max_doublings = static_cast<int>(to_int(key, value));
        else if (key == "bisection_steps")
            spec.search.bisection_steps = static_cast<int>(to_int(key, value));
        else if (key == "interference_model")
        {
            if (value == "effective")
                spec.simulation.model = InterferenceModel::effective;
            else if (value == "full")
                spec.simulation.model = InterferenceModel::full;
            else
                throw config_error("interference_model must be effective or full");
        }
        else
            throw config_error("unknown configuration key: " + key);
    }
}

std::string version_string() { return FDTC_VERSION; }

std::string provenance(const ExperimentSpec &spec)
{
    return "fdtc experiment=" + std::string(to_string(spec.kind)) +
           " seed=" + std::to_string(spec.seed) + " trials=" + std::to_string(spec.trials) +
           " version=" + version_string();
}

ExperimentResult run_table(const ExperimentSpec &spec)
{
    spec.validate();
    switch (spec.kind)
    {
    case ExperimentKind::op_vs_antennas:
        return {op_vs_antennas(spec), 0};
    case ExperimentKind::tc_vs_antennas:
        return {tc_vs_antennas(spec), 0};
    case ExperimentKind::strategy_comparison:
        return {strategy_comparison(spec), 0};
    case ExperimentKind::fd_vs_hd_snr:
        return {fd_vs_hd_snr(spec), 0};
    case ExperimentKind::single_point:
        return single_point(spec);
    case ExperimentKind::validate:
        return validate_suite(spec);
    }
    return {};
}

void write_table(std::ostream &os, const Table &table, const ExperimentSpec &spec)
{
    if (spec.format == OutputFormat::csv)
    {
        os << "# " << provenance(spec) << '\n';
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            os << (c ? "," : "") << table.columns[c];
        os << '\n';
        for (const auto &row : table.rows)
        {
            for (std::size_t c = 0; c < row.size(); ++c)
            {
                os << (c ? "," : "");
                std::visit(
                    [&](const auto &v) {
                        using T = std::decay_t<decltype(v)>;
                        if constexpr (std::is_same_v<T, double>)
                            os << format_number(v);
                        else if constexpr (std::is_same_v<T, std::string>)
                        {
                            // Free-text status must not break the comma dialect.
                            std::string s = v;
                            for (char &ch : s)
                                if (ch == ',' || ch == '\n' || ch == '\r')
                                    ch = ';';
                            os << s;
                        }
                        else
                            os << v;
                    },
                    row[c]);
            }
            os << '\n';
        }
        return;
    }

    nlohmann::ordered_json j;
    j["provenance"] = {{"experiment", std::string(to_string(spec.kind))},
                       {"seed", spec.seed},
                       {"trials", spec.trials},
                       {"version", version_string()}};
    j["columns"] = table.columns;
    auto &rows = j["rows"] = nlohmann::ordered_json::array();
    for (const auto &row : table.rows)
    {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c)
            std::visit([&](const auto &v) { obj[table.columns[c]] = v; }, row[c]);
        rows.push_back(std::move(obj));
    }
    os << j.dump(2) << '\n';
}

int run_experiment(const ExperimentSpec &spec)
{
    const ExperimentResult result = run_table(spec);
    if (spec.output_path.empty())
    {
        write_table(std::cout, result.table, spec);
    }
    else
    {
        std::ofstream file(spec.output_path, std::ios::binary);
        if (!file)
            throw config_error("cannot open output file: " + spec.output_path);
        write_table(file, result.table, spec);
    }
    return result.exit_code;
}

} // namespace fdtc
