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

#include "qlga/lattice_params.hpp"

#include <cmath>

#include <fmt/format.h>

namespace qlga {

LatticeParams LatticeParams::from_epsilon(const Dims& dims, double delta_r, double epsilon,
                                          Ordering ordering, Units units) {
    if (!dims.valid()) throw ParameterError("lattice extents must be positive");
    if (!(delta_r > 0.0) || !std::isfinite(delta_r)) {
        throw ParameterError("lattice spacing must be positive and finite");
    }
    if (!(units.c > 0.0) || !(units.hbar > 0.0)) {
        throw ParameterError("c and hbar must be positive");
    }
    if (!std::isfinite(epsilon) || epsilon < 0.0) {
        throw ParameterError(fmt::format("epsilon must be finite and non-negative, got {}", epsilon));
    }
    if (epsilon >= 1.0) {
        throw ParameterError(fmt::format(
            "epsilon = {} is outside the small-parameter regime (need eps < 1); refine the grid",
            epsilon));
    }
    if (ordering == Ordering::diffusive && epsilon == 0.0) {
        throw ParameterError("diffusive ordering needs eps > 0 (dt = eps dr / c)");
    }

    LatticeParams p;
    p.dims_ = dims;
    p.delta_r_ = delta_r;
    p.epsilon_ = epsilon;
    p.ordering_ = ordering;
    p.units_ = units;
    p.mass_ = epsilon * units.hbar / (units.c * delta_r);
    p.delta_t_ = ordering == Ordering::relativistic ? delta_r / units.c
                                                    : epsilon * delta_r / units.c;
    p.mass_angle_ = p.mass_ * units.c * units.c * p.delta_t_ / units.hbar;
    return p;
}

LatticeParams LatticeParams::from_mass(const Dims& dims, double delta_r, double mass,
                                       Ordering ordering, Units units) {
    if (!std::isfinite(mass) || mass < 0.0) {
        throw ParameterError(fmt::format("mass must be finite and non-negative, got {}", mass));
    }
    LatticeParams p = from_epsilon(dims, delta_r, mass * units.c * delta_r / units.hbar,
                                   ordering, units);
    // Keep the caller's mass exactly rather than eps * hbar / (c dr).
    p.mass_ = mass;
    p.mass_angle_ = mass * units.c * units.c * p.delta_t_ / units.hbar;
    return p;
}

}  // namespace qlga
