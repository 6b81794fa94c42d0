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
#include <functional>
#include <span>
#include <string>

#include "qlga/lattice_params.hpp"
#include "qlga/operator_program.hpp"

namespace qlga {

enum class Variant { basic, interleaved, symmetrized };

const char* to_string(Variant v);
Variant parse_variant(const std::string& name);

/// Treatment of the scalar factor in the symmetrized rule. `phase` applies
/// the unit-modulus factor exp(-i theta_m^2) once per step; `none` drops it.
enum class PhasePolicy { none, phase };

/// One time step of a rule: the operator product, a global phase, and the
/// physical time it advances.
struct StepRule {
    OperatorProgram program;
    Amplitude global_phase{1.0, 0.0};
    double duration = 0.0;
};

/// Builds the step for `variant`. On a line lattice (Lx = Ly = 1) the
/// z-axis reductions are used: S_z X1^dag for basic and E_z X1^dag for the
/// interleaved rules. Otherwise every axis must have extent > 1.
///
///   basic        Y2 S_x Y2^dag X2^dag S_y X2 S_z X1^dag(theta_m)    (pi/4 angles)
///   interleaved  E_x E_y E_z X1^dag(theta_m)
///   symmetrized  X1^dag(theta_m) E~ E X1^dag(theta_m),  E~ = E.dual()
///
/// Basic requires relativistic ordering, the other two diffusive ordering.
/// The symmetrized step advances 2 dt.
StepRule make_step(Variant variant, const LatticeParams& params,
                   PhasePolicy phase = PhasePolicy::phase);

void step_basic(SpinorField& field, const LatticeParams& params);
void step_basic_1d(SpinorField& field, const LatticeParams& params);
void step_interleaved(SpinorField& field, const LatticeParams& params);
void step_symmetrized(SpinorField& field, const LatticeParams& params,
                      PhasePolicy phase = PhasePolicy::phase);

void apply_step(SpinorField& field, const StepRule& rule, OpTally* tally = nullptr);

struct Observer {
    std::size_t every = 1;
    std::function<void(std::size_t step, double time, const SpinorField& field)> on_step;
};

struct EvolveResult {
    std::size_t steps = 0;
    double time = 0.0;
    OpTally tally{};
};

/// Applies the step n_steps times. Each observer fires at step 0 and then
/// after every `every`-th step.
EvolveResult evolve(SpinorField& field, const LatticeParams& params, Variant variant,
                    std::size_t n_steps, std::span<const Observer> observers = {},
                    PhasePolicy phase = PhasePolicy::phase);

/// Collision layers (rho_c) and component streams (rho_s) per step,
/// and the per-step cost C = rho_c 2 L^3 + rho_s (L-1)^3.
struct OpCount {
    std::uint64_t rho_c = 0;
    std::uint64_t rho_s = 0;
    std::uint64_t lattice = 0;
    std::uint64_t total = 0;

    friend bool operator==(const OpCount&, const OpCount&) = default;
};

/// Counts are read off the actual 3D step program of each rule.
OpCount op_count(Variant variant, std::uint64_t lattice);

/// Same accounting for the line reduction: C = rho_c 2 L + rho_s (L - 1),
/// with rho taken from the 1D step program.
OpCount op_count_line(Variant variant, std::uint64_t lattice);

/// C expressed through the qubit count Q = 4 L^3.
struct QubitComplexity {
    std::uint64_t qubits = 0;
    std::uint64_t cost = 0;             ///< op_count(...).total
    double closed_form_printed = 0.0;   ///< (rho_c/2)Q + rho_s[Q - 3/4(2Q)^{2/3} + 3/2(2Q)^{1/3} - 1]
    double closed_form = 0.0;           ///< same with Q/4 as the leading streaming term
    bool printed_matches = false;
    bool matches = false;
};

QubitComplexity qubit_complexity(Variant variant, std::uint64_t lattice);

}  // namespace qlga
