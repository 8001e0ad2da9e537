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

#include <stdexcept>
#include <string>

namespace fdtc
{

// Invalid argument outside an operation's mathematical domain.
class domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Requested count or index exceeds what is available.
class range_error : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

// Antenna configuration cannot support the requested beamforming strategy.
class capability_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A null space that must be non-empty turned out empty.
class rank_deficiency_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Degenerate input to a linear-algebra kernel (e.g. zero matrix for an SVD triple).
class degenerate_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Iterative solver failed to reach its tolerance.
class convergence_error : public std::runtime_error
{
public:
    convergence_error(const std::string &what, double last_iterate, double residual)
        : std::runtime_error(what), last_iterate_(last_iterate), residual_(residual)
    {
    }

    double last_iterate() const noexcept { return last_iterate_; }
    double residual() const noexcept { return residual_; }

private:
    double last_iterate_;
    double residual_;
};

} // namespace fdtc
