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

#include "qlga/evolution.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "qlga/displacement.hpp"

namespace qlga {

const char* to_string(Variant v) {
    switch (v) {
        case Variant::basic: return "basic";
        case Variant::interleaved: return "interleaved";
        case Variant::symmetrized: return "symmetrized";
    }
    return "?";
}

Variant parse_variant(const std::string& name) {
    if (name == "basic") return Variant::basic;
    if (name == "interleaved") return Variant::interleaved;
    if (name == "symmetrized") return Variant::symmetrized;
    throw std::invalid_argument(fmt::format("unknown variant '{}'", name));
}

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

void require_streamable(const Dims& dims) {
    if (dims.is_line()) {
        if (dims.z < 2) throw std::invalid_argument("line lattice needs Lz >= 2");
        return;
    }
    for (Axis a : kAxes) {
        if (dims.extent(a) < 2) {
            throw std::invalid_argument(fmt::format(
                "3D step needs every extent >= 2; axis {} has extent 1 (use a line lattice "
                "Lx = Ly = 1 for the 1D reduction)",
                axis_name(a)));
        }
    }
}

StreamSpec diagonal_plus(Axis a) { return {a, +1, {0, 3}}; }
StreamSpec diagonal_minus(Axis a) { return {a, -1, {1, 2}}; }

OperatorProgram basic_program(const LatticeParams& p) {
    const Collision mass{CollisionKind::X1, -p.mass_angle()};
    OperatorProgram prog;
    prog.then(mass);
    if (p.dims().is_line()) {
        prog.then(diagonal_plus(Axis::z)).then(diagonal_minus(Axis::z));
        return prog;
    }
    const Collision x2{CollisionKind::X2, kQuarterPi};
    const Collision y2{CollisionKind::Y2, kQuarterPi};
    prog.then(diagonal_plus(Axis::z)).then(diagonal_minus(Axis::z));
    prog.then(x2).then(diagonal_plus(Axis::y)).then(diagonal_minus(Axis::y)).then(x2.adjoint());
    prog.then(y2.adjoint()).then(diagonal_plus(Axis::x)).then(diagonal_minus(Axis::x)).then(y2);
    return prog;
}

// E = E_x E_y E_z in application order (E_z acts first).
OperatorProgram displacement_product(const LatticeParams& p) {
    OperatorProgram e;
    e.then(displacement_program(Axis::z, p.epsilon()));
    if (!p.dims().is_line()) {
        e.then(displacement_program(Axis::y, p.epsilon()));
        e.then(displacement_program(Axis::x, p.epsilon()));
    }
    return e;
}

}  // namespace

StepRule make_step(Variant variant, const LatticeParams& params, PhasePolicy phase) {
    require_streamable(params.dims());
    StepRule rule;
    switch (variant) {
        case Variant::basic:
            if (params.ordering() != Ordering::relativistic) {
                throw std::invalid_argument("basic rule is defined under relativistic ordering");
            }
            rule.program = basic_program(params);
            rule.duration = params.delta_t();
            break;
        case Variant::interleaved:
            if (params.ordering() != Ordering::diffusive) {
                throw std::invalid_argument("interleaved rule is defined under diffusive ordering");
            }
            rule.program.then(Collision{CollisionKind::X1, -params.mass_angle()});
            rule.program.then(displacement_product(params));
            rule.duration = params.delta_t();
            break;
        case Variant::symmetrized: {
            if (params.ordering() != Ordering::diffusive) {
                throw std::invalid_argument("symmetrized rule is defined under diffusive ordering");
            }
            const Collision mass{CollisionKind::X1, -params.mass_angle()};
            const OperatorProgram e = displacement_product(params);
            rule.program.then(mass).then(e).then(e.dual()).then(mass);
            rule.duration = 2.0 * params.delta_t();
            if (phase == PhasePolicy::phase) {
                const double theta = params.mass_angle();
                rule.global_phase = std::polar(1.0, -theta * theta);
            }
            break;
        }
    }
    return rule;
}

void apply_step(SpinorField& field, const StepRule& rule, OpTally* tally) {
    apply(field, rule.program, tally);
    if (rule.global_phase != Amplitude{1.0, 0.0}) {
        for (auto& a : field.data()) a *= rule.global_phase;
    }
}

void step_basic(SpinorField& field, const LatticeParams& params) {
    if (params.dims().is_line()) {
        throw std::invalid_argument("step_basic needs a 3D lattice; use step_basic_1d on a line");
    }
    apply_step(field, make_step(Variant::basic, params));
}

void step_basic_1d(SpinorField& field, const LatticeParams& params) {
    if (!params.dims().is_line()) throw std::invalid_argument("step_basic_1d needs Lx = Ly = 1");
    apply_step(field, make_step(Variant::basic, params));
}

void step_interleaved(SpinorField& field, const LatticeParams& params) {
    apply_step(field, make_step(Variant::interleaved, params));
}

void step_symmetrized(SpinorField& field, const LatticeParams& params, PhasePolicy phase) {
    apply_step(field, make_step(Variant::symmetrized, params, phase));
}

EvolveResult evolve(SpinorField& field, const LatticeParams& params, Variant variant,
                    std::size_t n_steps, std::span<const Observer> observers, PhasePolicy phase) {
    if (field.dims() != params.dims()) {
        throw std::invalid_argument("field and lattice parameters disagree on dims");
    }
    const StepRule rule = make_step(variant, params, phase);
    EvolveResult result;
    auto notify = [&](std::size_t step) {
        for (const auto& o : observers) {
            if (o.on_step && (o.every == 0 ? step == 0 : step % o.every == 0)) {
                o.on_step(step, double(step) * rule.duration, field);
            }
        }
    };
    notify(0);
    for (std::size_t n = 1; n <= n_steps; ++n) {
        apply_step(field, rule, &result.tally);
        notify(n);
    }
    result.steps = n_steps;
    result.time = double(n_steps) * rule.duration;
    return result;
}

}  // namespace qlga
