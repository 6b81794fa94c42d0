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

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "qlga/harness/complexity_report.hpp"
#include "qlga/harness/config.hpp"
#include "qlga/harness/convergence.hpp"
#include "qlga/harness/equivalence.hpp"
#include "qlga/harness/svg_plot.hpp"
#include "qlga/oracle.hpp"
#include "qlga/parallel.hpp"
#include "qlga/snapshot.hpp"

namespace fs = std::filesystem;
using namespace qlga;
using namespace qlga::harness;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailed = 2;

struct Common {
    std::string config;
    std::optional<int> threads;
    std::optional<std::string> out;
    std::optional<std::string> format;
};

void add_common(CLI::App* cmd, Common& c, bool needs_config) {
    auto* opt = cmd->add_option("--config", c.config, "run configuration file");
    if (needs_config) opt->required()->check(CLI::ExistingFile);
    cmd->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1, 1024));
    cmd->add_option("--out", c.out, "output directory");
    cmd->add_option("--format", c.format, "csv, svg or both")
        ->check(CLI::IsMember({"csv", "svg", "both"}));
}

RunConfig resolve(const Common& c) {
    RunConfig config = c.config.empty() ? RunConfig{} : load_config(c.config);
    if (c.threads) config.threads = *c.threads;
    if (c.out) config.output_dir = *c.out;
    if (c.format) config.format = parse_format(*c.format);
    return config;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
    return f;
}

int cmd_converge(const Common& c) {
    const RunConfig config = resolve(c);
    fs::create_directories(config.output_dir);
    const ConvergenceReport report = run_convergence(config);
    const std::string stem = report_stem(report);
    if (config.format != OutputFormat::svg) {
        auto f = open_out(config.output_dir / (stem + ".csv"));
        write_csv(report, f);
    }
    if (config.format != OutputFormat::csv) {
        PlotSeries s{to_string(report.variant), {}, {}};
        for (const auto& r : report.records) {
            s.x.push_back(r.dx);
            s.y.push_back(r.l2_error);
        }
        auto f = open_out(config.output_dir / (stem + ".svg"));
        write_loglog_svg({s}, "dx", "L2 density error", f);
    }
    {
        auto f = open_out(config.output_dir / (stem + ".meta.json"));
        write_metadata(report, config, f);
    }
    for (const auto& r : report.records) {
        fmt::print("L={:<6} steps={:<8} error={:.6e} ops/step={}\n", r.L, r.steps, r.l2_error, r.op_count);
    }
    fmt::print("{} slope {:.4f}\n", to_string(report.variant), report.slope);
    if (report.convergence_failure) {
        fmt::print("convergence failure: error does not decrease with resolution\n");
        return kExitFailed;
    }
    return kExitOk;
}

int cmd_equiv(const Common& c, bool corrupt_sign) {
    if (c.threads) set_thread_count(*c.threads);
    EquivalenceOptions options;
    if (corrupt_sign) options.mapping.x_hat_sign = +1;
    const EquivalenceReport report = run_equivalence(options);
    print_report(report, std::cout);
    return report.passed() ? kExitOk : kExitFailed;
}

int cmd_complexity(const Common& c, const std::string& variant, const std::string& sizes) {
    std::vector<Variant> variants;
    if (variant == "all") variants = {Variant::basic, Variant::interleaved, Variant::symmetrized};
    else variants = {parse_variant(variant)};
    std::vector<std::uint64_t> lattices;
    for (std::size_t L : parse_size_list(sizes)) lattices.push_back(L);
    const auto rows = complexity_table(variants, lattices);
    write_complexity_csv(rows, std::cout);
    if (c.out) {
        fs::create_directories(*c.out);
        auto f = open_out(fs::path(*c.out) / "complexity.csv");
        write_complexity_csv(rows, f);
    }
    return kExitOk;
}

int cmd_evolve(const Common& c) {
    const RunConfig config = resolve(c);
    set_thread_count(config.threads);
    fs::create_directories(config.output_dir);
    const std::size_t L = config.lattice_sizes.front();
    const LatticeParams params = point_params(config, L);
    const SpinorField initial = initial_field(config, params.dims());
    SpinorField field = initial;
    const std::size_t steps = steps_for(config, params);

    std::vector<Observer> observers;
    if (config.cadence > 0) {
        observers.push_back({config.cadence, [&](std::size_t step, double, const SpinorField& f) {
                                 auto out = open_out(config.output_dir /
                                                     fmt::format("snapshot_{:08}.qlga", step));
                                 write_snapshot(f, out);
                             }});
    }
    observers.push_back({std::max<std::size_t>(1, steps / 10),
                         [](std::size_t step, double t, const SpinorField& f) {
                             fmt::print("step {:>8}  t={:.6f}  norm={:.15f}\n", step, t, total_norm(f));
                         }});
    const EvolveResult run = evolve(field, params, config.variant, steps, observers, config.phase);
    {
        auto out = open_out(config.output_dir / "final.qlga");
        write_snapshot(field, out);
    }
    const SpinorField exact = exact_evolve(
        initial, run.time, continuum_limit(config.variant, params.mass()), params.delta_r());
    fmt::print("{} L={} steps={} t={:.6f} eps={:.6g} error={:.6e}\n", to_string(config.variant), L,
               run.steps, run.time, params.epsilon(), l2_density_error(field, exact));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum lattice gas simulator for the free Dirac equation"};
    app.require_subcommand(1);

    Common converge_opts, equiv_opts, complexity_opts, evolve_opts;
    auto* converge = app.add_subcommand("converge", "convergence sweep against the exact solution");
    add_common(converge, converge_opts, true);

    auto* equiv = app.add_subcommand("equiv", "second-quantized equivalence suite");
    add_common(equiv, equiv_opts, false);
    bool corrupt_sign = false;
    equiv->add_flag("--corrupt-sign", corrupt_sign, "use the wrong collision gate sign");

    auto* complexity = app.add_subcommand("complexity", "operation count table");
    add_common(complexity, complexity_opts, false);
    std::string variant = "all";
    std::string sizes = "2,4,8,16";
    complexity->add_option("--variant", variant, "basic, interleaved, symmetrized or all");
    complexity->add_option("--L", sizes, "comma-separated lattice sizes");

    auto* evolve_cmd = app.add_subcommand("evolve", "single run with snapshots");
    add_common(evolve_cmd, evolve_opts, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*converge) return cmd_converge(converge_opts);
        if (*equiv) return cmd_equiv(equiv_opts, corrupt_sign);
        if (*complexity) return cmd_complexity(complexity_opts, variant, sizes);
        if (*evolve_cmd) return cmd_evolve(evolve_opts);
    } catch (const ConfigError& e) {
        fmt::print(stderr, "config error: {}\n", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kExitFailed;
    }
    return kExitUsage;
}
