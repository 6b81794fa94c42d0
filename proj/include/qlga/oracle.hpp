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

#include <array>

#include <Eigen/Core>

#include "qlga/evolution.hpp"
#include "qlga/lattice_params.hpp"
#include "qlga/spinor_field.hpp"

namespace qlga {

/// Matrix representation of the free Dirac equation
///   d psi/dt = c sum_i alpha_i d_i psi + i s (m c^2/hbar) beta psi.
/// Both forms share alpha_x = sz(x)sx, alpha_y = sz(x)sy, beta = sx(x)1;
/// alpha_z is sz(x)sz (standard) or sy(x)1 (alternate).
enum class DiracForm { standard, alternate };

const char* to_string(DiracForm form);

struct DiracMatrices {
    std::array<Eigen::Matrix4cd, 3> alpha;
    Eigen::Matrix4cd beta;
};

DiracMatrices dirac_matrices(DiracForm form);

struct DiracSystem {
    DiracForm form = DiracForm::standard;
    double mass = 0.0;
    Units units{};
    /// s in the mass term above.
    int mass_sign = +1;
    /// Per-axis sign applied to alpha_i.
    std::array<int, 3> axis_sign{+1, +1, +1};

    DiracMatrices matrices() const;
};

/// The continuum equation a lattice rule approaches as dr -> 0: negative
/// mass sign for every rule, standard form with alpha_x, alpha_y negated
/// for basic, alternate form for the interleaved rules.
DiracSystem continuum_limit(Variant variant, double mass, Units units = {});

/// Per-mode generator G(k) = i [c sum_i alpha_i k_i + s (m c^2/hbar) beta].
Eigen::Matrix4cd mode_generator(const DiracSystem& system, const std::array<double, 3>& k);

/// exp(t G(k)) for every Fourier mode of a periodic lattice with spacing
/// delta_r; t may be negative. Axes of extent 1 carry k = 0.
SpinorField exact_evolve(const SpinorField& initial, double t, const DiracSystem& system,
                         double delta_r);

/// omega = sqrt(c^2 |k|^2 + (m c^2/hbar)^2).
double dispersion(const std::array<double, 3>& k, double mass, Units units = {});

/// Largest violation of alpha_i^2 = beta^2 = 1 and pairwise anticommutation,
/// in the max-abs entry norm.
double anticommutator_check(const DiracMatrices& matrices);
double anticommutator_check(DiracForm form);

/// Unitary U with U a_i U^dag = b_i for all four generators, built by group
/// averaging. Throws if the two sets are not equivalent representations.
Eigen::Matrix4cd intertwiner(const DiracMatrices& from, const DiracMatrices& to);

/// Applies a constant 4x4 matrix to every site.
void apply_local(SpinorField& field, const Eigen::Matrix4cd& m);

}  // namespace qlga
