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

#include "qlga/harness/convergence.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include "json.hpp"

#include "qlga/oracle.hpp"
#include "qlga/parallel.hpp"

namespace qlga::harness {

double fit_slope(std::span<const double> dx, std::span<const double> error) {
    if (dx.size() != error.size() || dx.size() < 2) {
        throw std::invalid_argument("slope fit needs two or more matching points");
    }
    const double n = double(dx.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < dx.size(); ++i) {
        if (!(dx[i] > 0.0) || !(error[i] > 0.0)) {
            throw std::invalid_argument("slope fit needs positive dx and error");
        }
        sx += std::log(dx[i]);
        sy += std::log(error[i]);
    }
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < dx.size(); ++i) {
        const double u = std::log(dx[i]) - mx;
        sxx += u * u;
        sxy += u * (std::log(error[i]) - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("slope fit needs distinct dx values");
    return sxy / sxx;
}

bool never_decreases(std::span<const double> error) {
    for (std::size_t i = 1; i < error.size(); ++i) {
        if (error[i] < error[i - 1]) return false;
    }
    return true;
}

std::size_t steps_for(const RunConfig& config, const LatticeParams& params) {
    const double duration = make_step(config.variant, params, config.phase).duration;
    const double n = std::round(config.end_time / duration);
    return n < 1.0 ? 1 : std::size_t(n);
}

ConvergenceRecord run_point(const RunConfig& config, std::size_t lattice) {
    const LatticeParams params = point_params(config, lattice);
    const SpinorField initial = initial_field(config, params.dims());
    SpinorField field = initial;
    const std::size_t steps = steps_for(config, params);

    const auto start = std::chrono::steady_clock::now();
    const EvolveResult run = evolve(field, params, config.variant, steps, {}, config.phase);
    const auto stop = std::chrono::steady_clock::now();

    const OpCount count = config.dimensionality == 1 ? op_count_line(config.variant, lattice)
                                                     : op_count(config.variant, lattice);
    if (run.tally.collision_layers != count.rho_c * steps ||
        run.tally.component_streams != count.rho_s * steps) {
        throw std::logic_error("runtime operation tally disagrees with op_count");
    }

    const SpinorField exact = exact_evolve(
        initial, config.end_time, continuum_limit(config.variant, params.mass()), params.delta_r());

    ConvergenceRecord rec;
    rec.L = lattice;
    rec.dx = 1.0 / double(lattice);
    rec.steps = steps;
    rec.l2_error = l2_density_error(field, exact);
    rec.wall_time = std::chrono::duration<double>(stop - start).count();
    rec.op_count = count.total;
    return rec;
}

ConvergenceReport run_convergence(const RunConfig& config) {
    if (config.lattice_sizes.size() < 3) {
        throw std::invalid_argument("a convergence sweep needs at least three lattice sizes");
    }
    set_thread_count(config.threads);
    ConvergenceReport report;
    report.variant = config.variant;
    report.dimensionality = config.dimensionality;
    std::vector<double> dx, err;
    for (std::size_t L : config.lattice_sizes) {
        report.records.push_back(run_point(config, L));
        dx.push_back(report.records.back().dx);
        err.push_back(report.records.back().l2_error);
    }
    report.convergence_failure = never_decreases(err);
    report.slope = fit_slope(dx, err);
    return report;
}

void write_csv(const ConvergenceReport& report, std::ostream& out) {
    out << "L,dx,steps,l2_error,op_count\n";
    for (const auto& r : report.records) {
        out << fmt::format("{},{:.17g},{},{:.17g},{}\n", r.L, r.dx, r.steps, r.l2_error, r.op_count);
    }
}

void write_metadata(const ConvergenceReport& report, const RunConfig& config, std::ostream& out) {
    nlohmann::json j;
    j["variant"] = to_string(report.variant);
    j["dimensionality"] = report.dimensionality;
    j["slope"] = report.slope;
    j["convergence_failure"] = report.convergence_failure;
    j["threads"] = config.threads;
    j["op_count"] = report.dimensionality == 1
                        ? "per step, rho_c * 2 L + rho_s * (L - 1) with rho of the line step"
                        : "per step, rho_c * 2 L^3 + rho_s * (L - 1)^3";
    auto& points = j["wall_time_seconds"];
    points = nlohmann::json::object();
    for (const auto& r : report.records) points[std::to_string(r.L)] = r.wall_time;
    out << j.dump(2) << '\n';
}

std::string report_stem(const ConvergenceReport& report) {
    return fmt::format("convergence_{}_{}d", to_string(report.variant), report.dimensionality);
}

}  // namespace qlga::harness
