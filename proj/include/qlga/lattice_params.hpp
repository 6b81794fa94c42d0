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

#include <stdexcept>

#include "qlga/lattice.hpp"

namespace qlga {

enum class Ordering {
    relativistic,  ///< dt = dr / c
    diffusive,     ///< dt = eps * dr / c
};

/// Natural units (c = hbar = 1) are the default everywhere.
struct Units {
    double c = 1.0;
    double hbar = 1.0;
};

class ParameterError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Grid spacing, time step and the dimensionless angles of one update.
///
/// eps = m c dr / hbar is the single small parameter. The mass collision
/// angle is always m c^2 dt / hbar, which equals eps under relativistic
/// ordering and eps^2 under diffusive ordering.
class LatticeParams {
  public:
    static LatticeParams from_mass(const Dims& dims, double delta_r, double mass,
                                   Ordering ordering, Units units = {});
    static LatticeParams from_epsilon(const Dims& dims, double delta_r, double epsilon,
                                      Ordering ordering, Units units = {});

    const Dims& dims() const { return dims_; }
    double delta_r() const { return delta_r_; }
    double delta_t() const { return delta_t_; }
    double epsilon() const { return epsilon_; }
    double mass() const { return mass_; }
    double mass_angle() const { return mass_angle_; }
    Ordering ordering() const { return ordering_; }
    const Units& units() const { return units_; }

  private:
    LatticeParams() = default;

    Dims dims_{};
    double delta_r_ = 0.0;
    double delta_t_ = 0.0;
    double epsilon_ = 0.0;
    double mass_ = 0.0;
    double mass_angle_ = 0.0;
    Ordering ordering_ = Ordering::relativistic;
    Units units_{};
};

}  // namespace qlga
