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

#include "support/dense.hpp"

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace qlga::test {

Eigen::Matrix2cd pauli(char which) {
    const std::complex<double> i{0.0, 1.0};
    Eigen::Matrix2cd m;
    switch (which) {
        case 'x': m << 0, 1, 1, 0; break;
        case 'y': m << 0, -i, i, 0; break;
        case 'z': m << 1, 0, 0, -1; break;
        default: m.setIdentity();
    }
    return m;
}

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

Mat ring_shift(std::size_t n, int step) {
    Mat t = Mat::Zero(Eigen::Index(n), Eigen::Index(n));
    for (std::size_t j = 0; j < n; ++j) {
        const auto src = (std::ptrdiff_t(j) + step + std::ptrdiff_t(n) * 4) % std::ptrdiff_t(n);
        t(Eigen::Index(j), Eigen::Index(src)) += 1.0;
    }
    return t;
}

Mat central_difference(std::size_t n) { return 0.5 * (ring_shift(n, 1) - ring_shift(n, -1)); }

Mat second_difference(std::size_t n) {
    return ring_shift(n, 1) + ring_shift(n, -1) - 2.0 * Mat::Identity(Eigen::Index(n), Eigen::Index(n));
}

Mat lift(const Mat& ring, const Eigen::Matrix4cd& m) { return Eigen::kroneckerProduct(ring, m).eval(); }

Mat expm(const Mat& a) { return a.exp(); }

double max_abs(const Mat& a) { return a.cwiseAbs().maxCoeff(); }

double unitarity_defect(const Mat& u) {
    return max_abs(u.adjoint() * u - Mat::Identity(u.rows(), u.cols()));
}

Eigen::Matrix4cd projector(const Eigen::Matrix4cd& involution, int sign) {
    return 0.5 * (Eigen::Matrix4cd::Identity() + double(sign) * involution);
}

SpinorField sample_line(std::size_t length, double spacing,
                        const std::function<Spinor(double)>& profile) {
    SpinorField f(Dims::line(length));
    for (std::size_t j = 0; j < length; ++j) {
        const Spinor s = profile(double(j) * spacing);
        for (std::size_t c = 0; c < kComponents; ++c) f.at(j, c) = s[c];
    }
    return f;
}

}  // namespace qlga::test
