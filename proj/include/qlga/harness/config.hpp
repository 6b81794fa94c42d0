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
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qlga/evolution.hpp"
#include "qlga/spinor_field.hpp"

namespace qlga::harness {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// `proportional`: eps = m c dr / hbar shrinks with the grid.
/// `fixed`: eps is held at RunConfig::epsilon and the lattice mass follows.
enum class EpsilonPolicy { proportional, fixed };

enum class InitialKind { gaussian, plane_wave, random_gaussian };

/// Initial data in units of the domain: width as a fraction of the domain
/// length, wave number as whole wavelengths across the domain, center as
/// a fraction. `random_gaussian` draws a complex polarization from `seed`.
struct InitialSpec {
    InitialKind kind = InitialKind::gaussian;
    double width = 1.0 / 16.0;
    double waves = 2.0;
    double center = 0.5;
    Spinor polarization{Amplitude{1.0}, Amplitude{}, Amplitude{}, Amplitude{}};
};

enum class OutputFormat { csv, svg, both };

/// Defaults:
///   [run]     variant = symmetrized, dimensionality = 1, L = 64,128,256,512,
///             epsilon = proportional, mass = 1, domain = 1, end_time = 0.25,
///             cadence = 0, threads = 1, seed = 0, phase = phase
///   [initial] kind = gaussian, width = 0.0625, waves = 2, center = 0.5,
///             polarization = 1,0,0,0
///   [output]  dir = ., format = both
struct RunConfig {
    Variant variant = Variant::symmetrized;
    int dimensionality = 1;
    std::vector<std::size_t> lattice_sizes{64, 128, 256, 512};
    EpsilonPolicy epsilon_policy = EpsilonPolicy::proportional;
    double epsilon = 0.0;
    double mass = 1.0;
    double domain = 1.0;
    double end_time = 0.25;
    std::size_t cadence = 0;
    int threads = 1;
    std::uint64_t seed = 0;
    PhasePolicy phase = PhasePolicy::phase;
    InitialSpec initial{};
    std::filesystem::path output_dir = ".";
    OutputFormat format = OutputFormat::both;
};

/// Parses `key = value` lines grouped under [run], [initial], [output].
/// Keys before any section header belong to [run]; '#' starts a comment.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

std::vector<std::size_t> parse_size_list(std::string_view text);
OutputFormat parse_format(std::string_view text);

/// Lattice parameters of one sweep point.
LatticeParams point_params(const RunConfig& config, std::size_t lattice);

/// Initial field of one sweep point, normalized.
SpinorField initial_field(const RunConfig& config, const Dims& dims);

}  // namespace qlga::harness
