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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace
{

constexpr int kUsageError = 1;

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw fdtc::config_error("cannot read config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Transmission capacity experiments for full-duplex MIMO ad-hoc networks", "fdtc"};
    app.set_version_flag("--version", fdtc::version_string());

    std::string experiment;
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<std::string> out;
    std::optional<std::string> format;
    bool include_noise = false;
    bool literal_order = false;

    app.add_option("experiment", experiment,
                   "op_vs_antennas | tc_vs_antennas | strategy_comparison | fd_vs_hd_snr | "
                   "single_point | validate")
        ->required();
    app.add_option("--config", config_path, "key = value configuration file")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--seed", seed, "master seed");
    app.add_option("--trials", trials, "Monte-Carlo trials per point");
    app.add_option("--out", out, "output file (default: stdout)");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--include-noise", include_noise, "keep the 1/P term in Omega");
    app.add_flag("--hd-literal-gamma-order", literal_order,
                 "half duplex: use gamma(l, x)/Gamma(l+1) for the outage curve");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try
    {
        fdtc::ExperimentSpec spec;
        const auto kind = fdtc::parse_experiment(experiment);
        if (!kind)
            throw fdtc::config_error("unknown experiment: " + experiment);

        fdtc::apply_settings(spec, fdtc::parse_key_values(read_file(config_path)));
        // the positional experiment wins over a config `experiment` key
        spec.kind = *kind;

        std::map<std::string, std::string> flags;
        if (seed)
            flags["seed"] = std::to_string(*seed);
        if (trials)
            flags["trials"] = std::to_string(*trials);
        if (out)
            flags["out"] = *out;
        if (format)
            flags["format"] = *format;
        if (include_noise)
            flags["include_noise"] = "true";
        if (literal_order)
            flags["hd_literal_gamma_order"] = "true";
        fdtc::apply_settings(spec, flags);

        return fdtc::run_experiment(spec);
    }
    catch (const fdtc::config_error &e)
    {
        std::cerr << "fdtc: " << e.what() << '\n';
        return kUsageError;
    }
    catch (const std::exception &e)
    {
        std::cerr << "fdtc: " << e.what() << '\n';
        return kUsageError;
    }
}
