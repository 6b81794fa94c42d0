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

#include "qlga/harness/equivalence.hpp"

#include <bit>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

namespace qlga::harness {

bool EquivalenceReport::passed() const {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return !checks.empty();
}

namespace {

LatticeParams line_params(Variant variant, std::size_t length, double epsilon) {
    const Ordering ordering =
        variant == Variant::basic ? Ordering::relativistic : Ordering::diffusive;
    return LatticeParams::from_epsilon(Dims::line(length), 1.0 / double(length), epsilon, ordering);
}

SpinorField probe_field(const Dims& dims) {
    const Spinor pol{Amplitude{0.6, 0.1}, Amplitude{-0.2, 0.4}, Amplitude{0.3, -0.5},
                     Amplitude{0.1, 0.2}};
    return new_field(dims, init::GaussianPacket{{0.0, 0.0, double(dims.z) / 3.0},
                                                double(dims.z) / 5.0,
                                                {0.0, 0.0, 0.7},
                                                pol});
}

EquivalenceCheck check(std::string name, double residual, double tolerance) {
    return {std::move(name), residual, tolerance, std::isfinite(residual) && residual <= tolerance};
}

}  // namespace

EquivalenceReport run_equivalence(const EquivalenceOptions& options) {
    EquivalenceReport report;
    const Dims line = Dims::line(options.one_particle_length);

    for (CollisionKind kind : {CollisionKind::X1, CollisionKind::X2, CollisionKind::Y2}) {
        SpinorField field = probe_field(line);
        FockState state = embed_one_particle(field);
        apply_collision(field, kind, 0.3);
        sq_collision_step(state, kind, 0.3, options.mapping);
        report.checks.push_back(check(fmt::format("one-particle collision {}", to_string(kind)),
                                      max_abs_difference(extract_one_particle(state), field),
                                      options.tolerance));
    }

    for (Variant v : {Variant::basic, Variant::interleaved, Variant::symmetrized}) {
        const LatticeParams params = line_params(v, options.one_particle_length, options.epsilon);
        const StepRule rule = make_step(v, params);
        SpinorField field = probe_field(line);
        FockState state = embed_one_particle(field);
        for (std::size_t n = 0; n < options.one_particle_steps; ++n) {
            apply_step(field, rule);
            apply_step(state, rule, options.mapping);
        }
        report.checks.push_back(check(
            fmt::format("one-particle {} step, L={}", to_string(v), options.one_particle_length),
            max_abs_difference(extract_one_particle(state), field), options.tolerance));
    }

    const Dims pair_line = Dims::line(options.pair_length);
    for (Variant v : {Variant::basic, Variant::symmetrized}) {
        const LatticeParams params = line_params(v, options.pair_length, options.epsilon);
        const StepRule rule = make_step(v, params);
        FockState state(pair_line, 2);
        // Spread the initial amplitude over the whole sector.
        for (std::size_t r = 0; r < state.dimension(); ++r) {
            state.amplitudes()[r] = std::polar(1.0 + 0.01 * double(r % 7), 0.37 * double(r));
        }
        const double n0 = norm(state);
        for (auto& a : state.amplitudes()) a /= std::sqrt(n0);
        for (std::size_t n = 0; n < options.pair_steps; ++n) apply_step(state, rule, options.mapping);

        std::size_t wrong_number = 0;
        for (std::uint64_t cfg : state.basis().configs()) wrong_number += std::popcount(cfg) != 2;
        double occupancy = 0.0;
        for (std::size_t s = 0; s < pair_line.sites(); ++s) occupancy += occupation_probability(state, s);

        const std::string tag = fmt::format("{} n=2 L={}", to_string(v), options.pair_length);
        report.checks.push_back(check(tag + " sector dimension",
                                      std::abs(double(state.dimension()) -
                                               double(binomial(unsigned(state.qubits()), 2))),
                                      0.0));
        report.checks.push_back(check(tag + " number conservation", double(wrong_number), 0.0));
        report.checks.push_back(check(tag + " norm drift", std::abs(norm(state) - 1.0),
                                      options.norm_tolerance));
        report.checks.push_back(check(tag + " total occupation", std::abs(occupancy - 2.0),
                                      options.norm_tolerance));
    }
    return report;
}

void print_report(const EquivalenceReport& report, std::ostream& out) {
    for (const auto& c : report.checks) {
        out << fmt::format("{:4} {:<44} residual={:.3e} tol={:.1e}\n", c.passed ? "PASS" : "FAIL",
                           c.name, c.residual, c.tolerance);
    }
    out << (report.passed() ? "equivalence: all checks passed\n" : "equivalence: FAILED\n");
}

}  // namespace qlga::harness
