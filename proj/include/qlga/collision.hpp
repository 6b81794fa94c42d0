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

#include <Eigen/Core>

#include "qlga/spinor_field.hpp"

namespace qlga {

/// On-site collision rotations:
///   X1(theta) = exp(i theta sigma_x) (x) 1   couples components (0,2), (1,3)
///   X2(theta) = 1 (x) exp(i theta sigma_x)   couples (0,1), (2,3)
///   Y2(theta) = 1 (x) exp(i theta sigma_y)   couples (0,1), (2,3)
/// The adjoint of each is the same kind at -theta.
enum class CollisionKind { X1, X2, Y2 };

const char* to_string(CollisionKind kind);

/// (cos theta, sin theta) nudged so that c*c + s*s rounds as close to 1 as
/// the smaller entry allows. Plain libm values are biased low by ~1e-16 per
/// rotation, which accumulates into a systematic norm drift.
/// The nudge is skipped when it would move the angle by more than 1e-8
/// relative (only tiny angles, where the bias is negligible anyway).
struct CosSin {
    double c, s;
};
CosSin unit_cos_sin(double theta);

Eigen::Matrix4cd collision_matrix(CollisionKind kind, double theta);

/// Multiplies every site's spinor by collision_matrix(kind, theta).
/// theta == 0 leaves the field untouched bit for bit.
void apply_collision(SpinorField& field, CollisionKind kind, double theta);

}  // namespace qlga
