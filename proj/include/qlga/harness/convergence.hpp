// Copyright 2026 The QLGA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qlga/harness/config.hpp"

namespace qlga::harness {

struct ConvergenceRecord {
    std::size_t L = 0;
    double dx = 0.0;
    std::size_t steps = 0;
    double l2_error = 0.0;
    double wall_time = 0.0;
    /// Per-step cost; the 1D analogue for line runs.
    std::uint64_t op_count = 0;
};

struct ConvergenceReport {
    Variant variant = Variant::basic;
    int dimensionality = 1;
    std::vector<ConvergenceRecord> records;
    double slope = 0.0;
    /// Set when the error never decreases between successive resolutions.
    bool convergence_failure = false;
};

/// Least-squares slope of log(error) against log(dx).
double fit_slope(std::span<const double> dx, std::span<const double> error);

/// True when no error is smaller than its predecessor.
bool never_decreases(std::span<const double> error);

/// Steps to reach end_time, rounded to the nearest whole step (at least 1).
std::size_t steps_for(const RunConfig& config, const LatticeParams& params);

/// One sweep point: evolve to the step boundary nearest end_time and compare
/// with the exact continuum solution at end_time.
ConvergenceRecord run_point(const RunConfig& config, std::size_t lattice);

/// Needs at least three sweep points.
ConvergenceReport run_convergence(const RunConfig& config);

/// Columns L,dx,steps,l2_error,op_count. Wall times go to the metadata file
/// so that this output is reproducible byte for byte.
void write_csv(const ConvergenceReport& report, std::ostream& out);
void write_metadata(const ConvergenceReport& report, const RunConfig& config, std::ostream& out);

std::string report_stem(const ConvergenceReport& report);

}  // namespace qlga::harness
