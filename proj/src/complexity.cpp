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
#include <stdexcept>

namespace qlga {

namespace {

OpTally rho_of(Variant variant, const Dims& dims) {
    // Angles do not affect the counts; any admissible parameters will do.
    const Ordering ordering =
        variant == Variant::basic ? Ordering::relativistic : Ordering::diffusive;
    const auto params = LatticeParams::from_epsilon(dims, 1.0, 0.5, ordering);
    return make_step(variant, params).program.tally();
}

}  // namespace

OpCount op_count(Variant variant, std::uint64_t lattice) {
    if (lattice < 2) throw std::invalid_argument("op_count needs L >= 2");
    const OpTally rho = rho_of(variant, Dims::cube(2));
    const std::uint64_t l3 = lattice * lattice * lattice;
    const std::uint64_t m = lattice - 1;
    return {rho.collision_layers, rho.component_streams, lattice,
            rho.collision_layers * 2 * l3 + rho.component_streams * m * m * m};
}

OpCount op_count_line(Variant variant, std::uint64_t lattice) {
    if (lattice < 2) throw std::invalid_argument("op_count_line needs L >= 2");
    const OpTally rho = rho_of(variant, Dims::line(2));
    return {rho.collision_layers, rho.component_streams, lattice,
            rho.collision_layers * 2 * lattice + rho.component_streams * (lattice - 1)};
}

QubitComplexity qubit_complexity(Variant variant, std::uint64_t lattice) {
    const OpCount count = op_count(variant, lattice);
    QubitComplexity q;
    q.qubits = 4 * lattice * lattice * lattice;
    q.cost = count.total;
    const double qd = double(q.qubits);
    const double root = std::cbrt(2.0 * qd);  // (2Q)^{1/3} = 2L
    const double tail = -0.75 * root * root + 1.5 * root - 1.0;
    const double collisions = double(count.rho_c) / 2.0 * qd;
    q.closed_form_printed = collisions + double(count.rho_s) * (qd + tail);
    q.closed_form = collisions + double(count.rho_s) * (qd / 4.0 + tail);
    q.printed_matches = q.closed_form_printed == double(q.cost);
    q.matches = q.closed_form == double(q.cost);
    return q;
}

}  // namespace qlga
