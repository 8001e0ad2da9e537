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

#include "fdtc/bounds.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fdtc
{

enum class ExperimentKind
{
    op_vs_antennas,
    tc_vs_antennas,
    strategy_comparison,
    fd_vs_hd_snr,
    single_point,
    validate,
};

std::string_view to_string(ExperimentKind kind);
std::optional<ExperimentKind> parse_experiment(std::string_view name);

enum class OutputFormat
{
    csv,
    json,
};

struct ExperimentSpec
{
    ExperimentKind kind = ExperimentKind::single_point;
    std::vector<double> sweep; ///< N values, or SNR in dB for fd_vs_hd_snr; empty = default sweep
    SystemParams base{};
    std::uint64_t trials = 20000;
    std::uint64_t seed = 1;
    std::string output_path; ///< empty = stdout
    OutputFormat format = OutputFormat::csv;
    BoundOptions bound{};

    int heavy_rx = 2;        ///< receive antennas of the transmit-heavy split
    int comparison_rx = 5;   ///< fixed receive antennas in strategy_comparison
    std::vector<double> sigma2_values{0.1, 0.5};
    std::uint64_t bound_samples = 20000; ///< Monte-Carlo samples for op_lb_exact
    bool simulate = true;    ///< run Monte-Carlo columns where optional
    std::optional<double> omega_override; ///< single_point: solve for a given Omega
    TcSearch search{};
    SimulationOptions simulation{};

    /// Sweep actually used (the spec's sweep, or the experiment's default).
    std::vector<double> effective_sweep() const;
    void validate() const;
};

/// Thrown for malformed configuration text or option values.
class config_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Flat `key = value` configuration; `#` starts a comment.
std::map<std::string, std::string> parse_key_values(std::string_view text);

/// Apply recognised keys to `spec`. Unknown keys raise config_error.
void apply_settings(ExperimentSpec &spec, const std::map<std::string, std::string> &settings);

/// Parses "8,10,12" or "start:stop:step" (inclusive).
std::vector<double> parse_sweep(std::string_view text);

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table
{
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

struct ExperimentResult
{
    Table table;
    int exit_code = 0; ///< 0 ok, 2 validation failure, 3 solver failure in single_point
};

ExperimentResult run_table(const ExperimentSpec &spec);

/// Provenance line content: seed, trials, version.
std::string provenance(const ExperimentSpec &spec);
std::string version_string();

void write_table(std::ostream &os, const Table &table, const ExperimentSpec &spec);

/// Runs the experiment and writes its output file (or stdout). Returns the exit code.
int run_experiment(const ExperimentSpec &spec);

} // namespace fdtc
