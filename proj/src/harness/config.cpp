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

#include "qlga/harness/config.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <fmt/format.h>

namespace qlga::harness {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        const auto p = s.find(sep);
        out.push_back(trim(s.substr(0, p)));
        if (p == std::string_view::npos) break;
        s.remove_prefix(p + 1);
    }
    return out;
}

double to_double(std::string_view v) {
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(x)) {
        throw std::invalid_argument(fmt::format("'{}' is not a finite number", v));
    }
    return x;
}

std::uint64_t to_unsigned(std::string_view v) {
    std::uint64_t x = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        throw std::invalid_argument(fmt::format("'{}' is not a non-negative integer", v));
    }
    return x;
}

struct Context {
    std::string_view section;
    std::string_view key;
    std::size_t line;
};

[[noreturn]] void fail(const Context& ctx, const std::string& what) {
    throw ConfigError(fmt::format("line {}: [{}] {}: {}", ctx.line, ctx.section, ctx.key, what));
}

void set_run(RunConfig& c, std::string_view key, std::string_view v) {
    if (key == "variant") c.variant = parse_variant(std::string(v));
    else if (key == "dimensionality") {
        const auto d = to_unsigned(v);
        if (d != 1 && d != 3) throw std::invalid_argument("must be 1 or 3");
        c.dimensionality = int(d);
    } else if (key == "L") c.lattice_sizes = parse_size_list(v);
    else if (key == "epsilon") {
        if (v == "proportional") {
            c.epsilon_policy = EpsilonPolicy::proportional;
        } else {
            c.epsilon_policy = EpsilonPolicy::fixed;
            c.epsilon = to_double(v);
            if (!(c.epsilon > 0.0 && c.epsilon < 1.0)) throw std::invalid_argument("must lie in (0, 1)");
        }
    } else if (key == "mass") {
        c.mass = to_double(v);
        if (c.mass < 0.0) throw std::invalid_argument("must be >= 0");
    } else if (key == "domain") {
        c.domain = to_double(v);
        if (!(c.domain > 0.0)) throw std::invalid_argument("must be > 0");
    } else if (key == "end_time") {
        c.end_time = to_double(v);
        if (!(c.end_time > 0.0)) throw std::invalid_argument("must be > 0");
    } else if (key == "cadence") c.cadence = to_unsigned(v);
    else if (key == "threads") {
        const auto t = to_unsigned(v);
        if (t < 1 || t > 1024) throw std::invalid_argument("must lie in [1, 1024]");
        c.threads = int(t);
    } else if (key == "seed") c.seed = to_unsigned(v);
    else if (key == "phase") {
        if (v == "phase") c.phase = PhasePolicy::phase;
        else if (v == "none") c.phase = PhasePolicy::none;
        else throw std::invalid_argument("expected 'phase' or 'none'");
    } else throw std::out_of_range("unknown key");
}

void set_initial(InitialSpec& s, std::string_view key, std::string_view v) {
    if (key == "kind") {
        if (v == "gaussian") s.kind = InitialKind::gaussian;
        else if (v == "plane_wave") s.kind = InitialKind::plane_wave;
        else if (v == "random_gaussian") s.kind = InitialKind::random_gaussian;
        else throw std::invalid_argument("expected gaussian, plane_wave or random_gaussian");
    } else if (key == "width") {
        s.width = to_double(v);
        if (!(s.width > 0.0)) throw std::invalid_argument("must be > 0");
    } else if (key == "waves") s.waves = to_double(v);
    else if (key == "center") s.center = to_double(v);
    else if (key == "polarization") {
        const auto parts = split(v, ',');
        if (parts.size() != kComponents) throw std::invalid_argument("expected four components");
        for (std::size_t i = 0; i < kComponents; ++i) s.polarization[i] = to_double(parts[i]);
    } else throw std::out_of_range("unknown key");
}

void set_output(RunConfig& c, std::string_view key, std::string_view v) {
    if (key == "dir") c.output_dir = std::string(v);
    else if (key == "format") c.format = parse_format(v);
    else throw std::out_of_range("unknown key");
}

}  // namespace

std::vector<std::size_t> parse_size_list(std::string_view text) {
    std::vector<std::size_t> out;
    for (auto part : split(text, ',')) {
        const auto n = to_unsigned(part);
        if (n < 2 || !std::has_single_bit(n)) {
            throw std::invalid_argument(fmt::format("lattice size {} is not a power of two >= 2", n));
        }
        if (!out.empty() && n <= out.back()) {
            throw std::invalid_argument("lattice sizes must be strictly increasing");
        }
        out.push_back(std::size_t(n));
    }
    return out;
}

OutputFormat parse_format(std::string_view text) {
    if (text == "csv") return OutputFormat::csv;
    if (text == "svg") return OutputFormat::svg;
    if (text == "both") return OutputFormat::both;
    throw std::invalid_argument(fmt::format("unknown format '{}' (csv, svg, both)", text));
}

RunConfig parse_config(std::string_view text) {
    RunConfig config;
    std::string_view section = "run";
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(fmt::format("line {}: malformed section header", line_no));
            section = trim(line.substr(1, line.size() - 2));
            if (section != "run" && section != "initial" && section != "output") {
                throw ConfigError(fmt::format("line {}: unknown section [{}]", line_no, section));
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(fmt::format("line {}: expected key = value", line_no));
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        const Context ctx{section, key, line_no};
        try {
            if (section == "run") set_run(config, key, value);
            else if (section == "initial") set_initial(config.initial, key, value);
            else set_output(config, key, value);
        } catch (const std::out_of_range&) {
            throw ConfigError(fmt::format("line {}: unknown key '{}' in [{}]", line_no, key, section));
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            fail(ctx, e.what());
        }
    }
    if (config.lattice_sizes.empty()) throw ConfigError("no lattice sizes given");
    return config;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(fmt::format("cannot open config '{}'", path.string()));
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

LatticeParams point_params(const RunConfig& config, std::size_t lattice) {
    const Dims dims = config.dimensionality == 1 ? Dims::line(lattice) : Dims::cube(lattice);
    const double dr = config.domain / double(lattice);
    const Ordering ordering =
        config.variant == Variant::basic ? Ordering::relativistic : Ordering::diffusive;
    if (config.epsilon_policy == EpsilonPolicy::fixed) {
        return LatticeParams::from_epsilon(dims, dr, config.epsilon, ordering);
    }
    return LatticeParams::from_mass(dims, dr, config.mass, ordering);
}

SpinorField initial_field(const RunConfig& config, const Dims& dims) {
    const InitialSpec& s = config.initial;
    std::array<double, 3> k{};
    std::array<double, 3> center{};
    for (Axis a : kAxes) {
        const std::size_t n = dims.extent(a);
        if (n == 1) continue;
        k[std::size_t(a)] = 2.0 * std::numbers::pi * s.waves / double(n);
        center[std::size_t(a)] = s.center * double(n);
    }
    const double width = s.width * double(dims.is_line() ? dims.z : dims.x);
    Spinor pol = s.polarization;
    if (s.kind == InitialKind::random_gaussian) {
        std::mt19937_64 rng(config.seed);
        std::normal_distribution<double> normal;
        for (auto& p : pol) p = {normal(rng), normal(rng)};
    }
    switch (s.kind) {
        case InitialKind::plane_wave: return new_field(dims, init::PlaneWave{k, pol});
        case InitialKind::gaussian:
        case InitialKind::random_gaussian:
            return new_field(dims, init::GaussianPacket{center, width, k, pol});
    }
    throw std::logic_error("unhandled initial kind");
}

}  // namespace qlga::harness
