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

#include "support/cn_integrator.hpp"

#include <cmath>
#include <vector>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

namespace qlga::test {

namespace {

using Sparse = Eigen::SparseMatrix<std::complex<double>>;
using Vec = Eigen::VectorXcd;

Sparse generator(std::size_t n, double h, const DiracSystem& system) {
    const DiracMatrices m = system.matrices();
    const double c = system.units.c;
    const double omega = double(system.mass_sign) * system.mass * c * c / system.units.hbar;
    const Eigen::Matrix4cd alpha = c * m.alpha[2];
    const Eigen::Matrix4cd mass = std::complex<double>{0.0, omega} * m.beta;
    const double w[5] = {1.0 / 12.0, -8.0 / 12.0, 0.0, 8.0 / 12.0, -1.0 / 12.0};
    std::vector<Eigen::Triplet<std::complex<double>>> trip;
    const auto N = std::ptrdiff_t(n);
    for (std::ptrdiff_t j = 0; j < N; ++j) {
        for (int o = -2; o <= 2; ++o) {
            const std::ptrdiff_t col = ((j + o) % N + N) % N;
            Eigen::Matrix4cd block = (w[o + 2] / h) * alpha;
            if (o == 0) block += mass;
            for (int r = 0; r < 4; ++r)
                for (int cc = 0; cc < 4; ++cc)
                    if (block(r, cc) != 0.0) trip.emplace_back(4 * j + r, 4 * col + cc, block(r, cc));
        }
    }
    Sparse a(4 * N, 4 * N);
    a.setFromTriplets(trip.begin(), trip.end());
    return a;
}

Vec integrate(const Sparse& a, Vec u, double t, std::size_t steps) {
    const double tau = t / double(steps);
    Sparse id(a.rows(), a.cols());
    id.setIdentity();
    const Sparse lhs = id - (0.5 * tau) * a;
    const Sparse rhs = id + (0.5 * tau) * a;
    Eigen::SparseLU<Sparse> lu;
    lu.compute(lhs);
    for (std::size_t s = 0; s < steps; ++s) {
        const Vec b = rhs * u;
        u = lu.solve(b);
    }
    return u;
}

}  // namespace

SpinorField crank_nicolson_line(const std::function<Spinor(double)>& profile,
                                std::size_t coarse_length, double domain, double t,
                                const DiracSystem& system, const CrankNicolsonOptions& options) {
    const std::size_t n = coarse_length * options.refine;
    const double h = domain / double(n);
    Vec u0(Eigen::Index(4 * n));
    for (std::size_t j = 0; j < n; ++j) {
        const Spinor s = profile(double(j) * h);
        for (std::size_t c = 0; c < 4; ++c) u0[Eigen::Index(4 * j + c)] = s[c];
    }
    const Sparse a = generator(n, h, system);
    const auto steps = std::size_t(std::max(1.0, std::round(std::abs(t) / options.dt)));
    Vec u = integrate(a, u0, t, steps);
    if (options.richardson) {
        const Vec fine = integrate(a, u0, t, 2 * steps);
        u = (4.0 * fine - u) / 3.0;
    }
    SpinorField out(Dims::line(coarse_length));
    for (std::size_t j = 0; j < coarse_length; ++j) {
        for (std::size_t c = 0; c < 4; ++c) {
            out.at(j, c) = u[Eigen::Index(4 * (j * options.refine) + c)];
        }
    }
    return out;
}

}  // namespace qlga::test
