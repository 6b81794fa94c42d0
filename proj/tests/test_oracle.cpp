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

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "qlga/oracle.hpp"
#include "support/cn_integrator.hpp"
#include "support/dense.hpp"

using namespace qlga;
using namespace qlga::test;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

SpinorField random_smooth(const Dims& dims, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    Spinor pol;
    for (auto& p : pol) p = {normal(rng), normal(rng)};
    std::array<double, 3> center{}, k{};
    for (Axis a : kAxes) {
        const auto n = double(dims.extent(a));
        center[std::size_t(a)] = n / 2;
        k[std::size_t(a)] = n > 1 ? kTwoPi / n : 0.0;
    }
    return new_field(dims, init::GaussianPacket{center, double(dims.z) / 6.0, k, pol});
}

double second_moment(const SpinorField& f) {
    const auto rho = densities(f);
    double mean = 0.0, total = 0.0;
    for (std::size_t s = 0; s < rho.size(); ++s) {
        mean += double(s) * rho[s];
        total += rho[s];
    }
    mean /= total;
    double var = 0.0;
    for (std::size_t s = 0; s < rho.size(); ++s) var += (double(s) - mean) * (double(s) - mean) * rho[s];
    return var / total;
}

}  // namespace

TEST_CASE("Dirac matrices satisfy the Clifford relations") {
    CHECK(anticommutator_check(DiracForm::standard) <= 1e-14);
    CHECK(anticommutator_check(DiracForm::alternate) <= 1e-14);
    DiracMatrices wrong = dirac_matrices(DiracForm::standard);
    wrong.alpha[2] = wrong.alpha[0];
    CHECK(anticommutator_check(wrong) > 1.0);
}

TEST_CASE("dispersion") {
    CHECK(dispersion({0, 0, 0}, 2.5) == 2.5);
    CHECK(dispersion({3, 0, 4}, 0.0) == 5.0);
    CHECK(dispersion({0, 0, 1}, 1.0, Units{2.0, 0.5}) == doctest::Approx(std::sqrt(4.0 + 64.0)));

    DiracSystem sys;
    sys.mass = 1.0;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(mode_generator(sys, {1, 2, 2}));
    std::vector<double> im;
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(es.eigenvalues()[i].real()) < 1e-12);
        im.push_back(es.eigenvalues()[i].imag());
    }
    std::sort(im.begin(), im.end());
    const double w = std::sqrt(10.0);
    CHECK(std::abs(im[0] + w) < 1e-12);
    CHECK(std::abs(im[1] + w) < 1e-12);
    CHECK(std::abs(im[2] - w) < 1e-12);
    CHECK(std::abs(im[3] - w) < 1e-12);

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-5, 5);
    for (DiracForm form : {DiracForm::standard, DiracForm::alternate}) {
        for (int trial = 0; trial < 20; ++trial) {
            DiracSystem s{form, std::abs(u(rng)), {}, trial % 2 ? 1 : -1, {1, -1, 1}};
            const std::array<double, 3> k{u(rng), u(rng), u(rng)};
            Eigen::ComplexEigenSolver<Eigen::Matrix4cd> e(mode_generator(s, k));
            const double omega = dispersion(k, s.mass);
            for (int i = 0; i < 4; ++i) CHECK(std::abs(std::abs(e.eigenvalues()[i].imag()) - omega) < 1e-12);
        }
    }
}

TEST_CASE("exact evolution") {
    SUBCASE("zero mode rotates into the lower components") {
        const auto f0 = new_field(Dims::line(8), init::PlaneWave{{0, 0, 0}, {1.0, 0.0, 0.0, 0.0}});
        const double m = 1.3, t = 0.7;
        DiracSystem sys;
        sys.mass = m;
        const auto f = exact_evolve(f0, t, sys, 0.125);
        const Amplitude a = f0.at(0, 0);
        for (std::size_t s = 0; s < 8; ++s) {
            CHECK(std::abs(f.at(s, 0) - std::cos(m * t) * a) < 1e-14);
            CHECK(std::abs(f.at(s, 2) - Amplitude{0.0, std::sin(m * t)} * a) < 1e-14);
            CHECK(std::abs(f.at(s, 1)) < 1e-14);
        }
    }
    SUBCASE("massless transport is a rigid shift") {
        const std::size_t L = 32;
        const double dr = 1.0 / L;
        const auto f0 = random_smooth(Dims::line(L), 1);
        SpinorField only0(Dims::line(L));
        for (std::size_t s = 0; s < L; ++s) only0.at(s, 0) = f0.at(s, 0);
        const auto f = exact_evolve(only0, 5 * dr, DiracSystem{}, dr);
        for (std::size_t s = 0; s < L; ++s) {
            CHECK(std::abs(f.at(s, 0) - only0.at((s + 5) % L, 0)) < 1e-14);
        }
    }
    SUBCASE("massive packet spreads") {
        const std::size_t L = 128;
        const auto f0 = new_field(Dims::line(L), init::GaussianPacket{{0, 0, 64}, 6.0, {}, {1.0, 0.0, 0.0, 0.0}});
        DiracSystem sys;
        sys.mass = 1.0;
        double prev = second_moment(f0);
        for (double t : {0.05, 0.1, 0.2}) {
            const double v = second_moment(exact_evolve(f0, t, sys, 1.0 / L));
            CHECK(v > prev);
            prev = v;
        }
    }
    SUBCASE("semigroup, reversal and norm") {
        const Dims d{4, 6, 8};
        const auto f0 = random_smooth(d, 2);
        DiracSystem sys{DiracForm::alternate, 2.0, {}, -1, {-1, 1, 1}};
        const double dr = 0.1;
        const auto a = exact_evolve(exact_evolve(f0, 0.3, sys, dr), 0.45, sys, dr);
        const auto b = exact_evolve(f0, 0.75, sys, dr);
        CHECK(max_abs_difference(a, b) <= 1e-12);
        CHECK(std::abs(total_norm(b) - 1.0) <= 1e-12);
        CHECK(max_abs_difference(exact_evolve(b, -0.75, sys, dr), f0) <= 1e-12);
    }
    SUBCASE("standard and alternate forms agree after a change of basis") {
        const Dims d{4, 4, 8};
        const auto f0 = random_smooth(d, 4);
        DiracSystem std_sys, alt_sys;
        std_sys.mass = alt_sys.mass = 1.5;
        alt_sys.form = DiracForm::alternate;
        const Eigen::Matrix4cd u = intertwiner(std_sys.matrices(), alt_sys.matrices());
        CHECK(max_abs(u.adjoint() * u - Eigen::Matrix4cd::Identity()) < 1e-12);
        SpinorField g0 = f0;
        apply_local(g0, u);
        const auto a = exact_evolve(f0, 0.4, std_sys, 0.125);
        const auto b = exact_evolve(g0, 0.4, alt_sys, 0.125);
        const auto ra = densities(a), rb = densities(b);
        double worst = 0.0;
        for (std::size_t s = 0; s < ra.size(); ++s) worst = std::max(worst, std::abs(ra[s] - rb[s]));
        CHECK(worst <= 1e-10);
        // Without the basis change the two forms disagree.
        const auto c = exact_evolve(f0, 0.4, alt_sys, 0.125);
        CHECK(l2_density_error(a, c) > 1e-6);
    }
    SUBCASE("mass sign and densities") {
        // sz(x)1 anticommutes with beta and commutes with the standard z matrix,
        // so for polarizations in span{e0, e1} the sign drops out of the density.
        const auto f0 = new_field(Dims::line(64), init::GaussianPacket{{0, 0, 32}, 4.0, {0, 0, 0.3}, {1.0, 0.0, 0.0, 0.0}});
        for (DiracForm form : {DiracForm::standard, DiracForm::alternate}) {
            DiracSystem plus, minus;
            plus.form = minus.form = form;
            plus.mass = minus.mass = 1.0;
            minus.mass_sign = -1;
            const double diff = l2_density_error(exact_evolve(f0, 0.3, plus, 1.0 / 64),
                                                 exact_evolve(f0, 0.3, minus, 1.0 / 64));
            if (form == DiracForm::standard) CHECK(diff < 1e-14);
            else CHECK(diff > 1e-4);
        }
    }
    SUBCASE("rejections") {
        const auto f0 = random_smooth(Dims::line(8), 1);
        DiracSystem sys;
        sys.mass = std::nan("");
        CHECK_THROWS(exact_evolve(f0, 0.1, sys, 0.1));
        CHECK_THROWS(exact_evolve(f0, 0.1, DiracSystem{}, 0.0));
    }
}

TEST_CASE("agreement with a fine-grid Crank-Nicolson integrator") {
    const std::size_t L = 64;
    const double sigma = 1.0 / 16, k = kTwoPi * 2;
    const auto packet = [&](double z) {
        double d = z - 0.5;
        d -= std::round(d);
        const Amplitude g = std::exp(-d * d / (2 * sigma * sigma)) * std::polar(1.0, k * z);
        return Spinor{g, Amplitude{}, 0.5 * g, Amplitude{}};
    };
    const SpinorField f0 = sample_line(L, 1.0 / L, packet);
    for (DiracForm form : {DiracForm::standard, DiracForm::alternate}) {
        DiracSystem sys;
        sys.form = form;
        sys.mass = 1.0;
        const auto spectral = exact_evolve(f0, 0.25, sys, 1.0 / L);
        const auto cn = crank_nicolson_line(packet, L, 1.0, 0.25, sys);
        CHECK(max_abs_difference(spectral, cn) <= 1e-6);
    }
}
