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
#include <functional>

#include <Eigen/Core>

#include "qlga/spinor_field.hpp"

namespace qlga::test {

using Mat = Eigen::MatrixXcd;

Eigen::Matrix2cd pauli(char which);
Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b);

/// Ring operator (T psi)(j) = psi(j + step), periodic.
Mat ring_shift(std::size_t n, int step);
/// (T+ - T-) / 2
Mat central_difference(std::size_t n);
/// T+ + T- - 2
Mat second_difference(std::size_t n);

/// Lifts a ring operator R and an on-site matrix M to the (4n)^2 operator
/// with index 4 * site + component, i.e. R (x) M.
Mat lift(const Mat& ring, const Eigen::Matrix4cd& m);

Mat expm(const Mat& a);

double max_abs(const Mat& a);
double unitarity_defect(const Mat& u);

/// Spectral projector of a Hermitian involution onto eigenvalue `sign`.
Eigen::Matrix4cd projector(const Eigen::Matrix4cd& involution, int sign);

/// Field on a line of L sites, z_j = j * spacing, values not normalized.
SpinorField sample_line(std::size_t length, double spacing,
                        const std::function<Spinor(double)>& profile);

}  // namespace qlga::test
