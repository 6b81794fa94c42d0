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

#include "qlga/operator_program.hpp"

namespace qlga {

/// Which component subsets the interleaved displacement operators stream.
///
/// `printed` is the literal table (0-based): E_x and E_y stream {0,2}/{1,3},
/// E_z streams {0,3}/{1,2} with the same direction in both halves. Its E_z
/// has no first-derivative term and its E_x, E_y generate 1(x)sigma_x and
/// 1(x)sigma_y, so it does not approximate a Dirac operator; it is kept for
/// comparison only.
///
/// `consistent` keeps the printed collision and direction pattern but
/// streams E_x, E_y over the diagonal-streaming split {0,3}/{1,2} and E_z
/// over {2,3}/{0,1}. To leading order in eps, with D the central difference
/// and Lap the second difference along the axis,
///   E_x = exp(eps [sz(x)sx D + (i/2) 1(x)sy Lap])
///   E_y = exp(eps [sz(x)sy D - (i/2) 1(x)sx Lap])
///   E_z = exp(eps [sy(x)1  D + (i/2) sx(x)1 Lap])
enum class DisplacementLayout { consistent, printed };

/// Eight-factor interleaved displacement E_axis with collision angle eps/2.
OperatorProgram displacement_program(Axis axis, double epsilon,
                                     DisplacementLayout layout = DisplacementLayout::consistent);

void apply_displacement(SpinorField& field, Axis axis, double epsilon);

}  // namespace qlga
