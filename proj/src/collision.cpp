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

#include "qlga/collision.hpp"

#include <cmath>
#include <stdexcept>

#include "qlga/parallel.hpp"

namespace qlga {

const char* to_string(CollisionKind kind) {
    switch (kind) {
        case CollisionKind::X1: return "X1";
        case CollisionKind::X2: return "X2";
        case CollisionKind::Y2: return "Y2";
    }
    return "?";
}

CosSin unit_cos_sin(double theta) {
    double c = std::cos(theta);
    double s = std::sin(theta);
    const double r = std::fma(s, s, std::fma(c, c, -1.0));
    double& small = std::abs(s) <= std::abs(c) ? s : c;
    if (small != 0.0) {
        const double fix = r / (2.0 * small);
        if (std::abs(fix) <= 1e-8 * std::abs(small)) small -= fix;
    }
    return {c, s};
}

namespace {

struct PairRotation {
    int a0, b0, a1, b1;  // the two coupled component pairs
    Amplitude m00, m01, m10, m11;
};

PairRotation rotation_for(CollisionKind kind, double theta) {
    const auto [c, s] = unit_cos_sin(theta);
    const Amplitude is{0.0, s};
    switch (kind) {
        case CollisionKind::X1: return {0, 2, 1, 3, c, is, is, c};
        case CollisionKind::X2: return {0, 1, 2, 3, c, is, is, c};
        case CollisionKind::Y2: return {0, 1, 2, 3, c, s, -s, c};
    }
    throw std::logic_error("unknown collision kind");
}

}  // namespace

Eigen::Matrix4cd collision_matrix(CollisionKind kind, double theta) {
    const PairRotation r = rotation_for(kind, theta);
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    for (auto [a, b] : {std::pair{r.a0, r.b0}, std::pair{r.a1, r.b1}}) {
        m(a, a) = r.m00;
        m(a, b) = r.m01;
        m(b, a) = r.m10;
        m(b, b) = r.m11;
    }
    return m;
}

void apply_collision(SpinorField& field, CollisionKind kind, double theta) {
    if (!std::isfinite(theta)) throw std::invalid_argument("collision angle must be finite");
    if (theta == 0.0) return;
    const PairRotation r = rotation_for(kind, theta);
    Amplitude* data = field.data().data();
    const auto sites = static_cast<long long>(field.sites());
    const int threads = thread_count();
#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1)
    for (long long s = 0; s < sites; ++s) {
        Amplitude* psi = data + kComponents * s;
        const Amplitude a0 = psi[r.a0], b0 = psi[r.b0];
        psi[r.a0] = r.m00 * a0 + r.m01 * b0;
        psi[r.b0] = r.m10 * a0 + r.m11 * b0;
        const Amplitude a1 = psi[r.a1], b1 = psi[r.b1];
        psi[r.a1] = r.m00 * a1 + r.m01 * b1;
        psi[r.b1] = r.m10 * a1 + r.m11 * b1;
    }
}

}  // namespace qlga
