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

#include "qlga/displacement.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace qlga {

namespace {

struct Subsets {
    ComponentSet first;   // streamed by the rightmost pair of the product
    ComponentSet second;  // streamed by the leftmost pair
};

}  // namespace

OperatorProgram displacement_program(Axis axis, double epsilon, DisplacementLayout layout) {
    if (!std::isfinite(epsilon)) throw std::invalid_argument("epsilon must be finite");
    const double h = epsilon / 2.0;
    const bool printed = layout == DisplacementLayout::printed;

    switch (axis) {
        case Axis::x: {
            const Subsets s = printed ? Subsets{{0, 2}, {1, 3}} : Subsets{{0, 3}, {1, 2}};
            const Collision y{CollisionKind::Y2, h};
            return OperatorProgram::from_product({
                StreamSpec{axis, -1, s.second}, y, StreamSpec{axis, +1, s.second}, y.adjoint(),
                StreamSpec{axis, +1, s.first}, y, StreamSpec{axis, -1, s.first}, y.adjoint(),
            });
        }
        case Axis::y: {
            const Subsets s = printed ? Subsets{{0, 2}, {1, 3}} : Subsets{{0, 3}, {1, 2}};
            const Collision x{CollisionKind::X2, h};
            return OperatorProgram::from_product({
                StreamSpec{axis, -1, s.second}, x.adjoint(), StreamSpec{axis, +1, s.second}, x,
                StreamSpec{axis, +1, s.first}, x.adjoint(), StreamSpec{axis, -1, s.first}, x,
            });
        }
        case Axis::z: {
            const Collision x{CollisionKind::X1, h};
            if (printed) {
                return OperatorProgram::from_product({
                    StreamSpec{axis, +1, {1, 2}}, x, StreamSpec{axis, -1, {1, 2}}, x.adjoint(),
                    StreamSpec{axis, +1, {0, 3}}, x, StreamSpec{axis, -1, {0, 3}}, x.adjoint(),
                });
            }
            return OperatorProgram::from_product({
                StreamSpec{axis, -1, {0, 1}}, x, StreamSpec{axis, +1, {0, 1}}, x.adjoint(),
                StreamSpec{axis, +1, {2, 3}}, x, StreamSpec{axis, -1, {2, 3}}, x.adjoint(),
            });
        }
    }
    throw std::logic_error("unknown axis");
}

void apply_displacement(SpinorField& field, Axis axis, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument(fmt::format("displacement needs 0 < eps < 1, got {}", epsilon));
    }
    apply(field, displacement_program(axis, epsilon));
}

}  // namespace qlga
