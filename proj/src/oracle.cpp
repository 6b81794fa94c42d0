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

#include "qlga/oracle.hpp"

#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <fftw3.h>

namespace qlga {

namespace {

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

Mat2 pauli(char which) {
    const std::complex<double> i{0.0, 1.0};
    Mat2 m;
    switch (which) {
        case 'x': m << 0, 1, 1, 0; break;
        case 'y': m << 0, -i, i, 0; break;
        case 'z': m << 1, 0, 0, -1; break;
        default: m.setIdentity();
    }
    return m;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
    Mat4 out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
    return out;
}

// FFTW planning is not thread safe.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

struct FftwBuffer {
    explicit FftwBuffer(std::size_t n)
        : ptr(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n))) {
        if (!ptr) throw std::bad_alloc();
    }
    ~FftwBuffer() { fftw_free(ptr); }
    FftwBuffer(const FftwBuffer&) = delete;
    FftwBuffer& operator=(const FftwBuffer&) = delete;
    fftw_complex* ptr;
};

class Plan {
  public:
    Plan(const Dims& d, fftw_complex* buf, int sign) {
        const int n[3] = {int(d.x), int(d.y), int(d.z)};
        std::lock_guard lock(plan_mutex());
        plan_ = fftw_plan_many_dft(3, n, int(kComponents), buf, nullptr, int(kComponents), 1,
                                   buf, nullptr, int(kComponents), 1, sign, FFTW_ESTIMATE);
        if (!plan_) throw std::runtime_error("FFTW plan creation failed");
    }
    ~Plan() {
        std::lock_guard lock(plan_mutex());
        fftw_destroy_plan(plan_);
    }
    Plan(const Plan&) = delete;
    Plan& operator=(const Plan&) = delete;
    void run() const { fftw_execute(plan_); }

  private:
    fftw_plan plan_{};
};

double wave_number(std::size_t index, std::size_t extent, double delta_r) {
    if (extent == 1) return 0.0;
    const auto n = std::ptrdiff_t(index);
    const auto half = std::ptrdiff_t(extent / 2);
    const std::ptrdiff_t wrapped = n > half ? n - std::ptrdiff_t(extent) : n;
    return 2.0 * std::numbers::pi * double(wrapped) / (double(extent) * delta_r);
}

}  // namespace

const char* to_string(DiracForm form) {
    return form == DiracForm::standard ? "standard" : "alternate";
}

DiracMatrices dirac_matrices(DiracForm form) {
    DiracMatrices m;
    m.alpha[0] = kron(pauli('z'), pauli('x'));
    m.alpha[1] = kron(pauli('z'), pauli('y'));
    m.alpha[2] = form == DiracForm::standard ? kron(pauli('z'), pauli('z'))
                                             : kron(pauli('y'), pauli('1'));
    m.beta = kron(pauli('x'), pauli('1'));
    if (anticommutator_check(m) > 1e-14) {
        throw std::logic_error("Dirac matrices violate the anticommutation relations");
    }
    return m;
}

DiracMatrices DiracSystem::matrices() const {
    DiracMatrices m = dirac_matrices(form);
    for (int i = 0; i < 3; ++i) m.alpha[i] *= double(axis_sign[i]);
    return m;
}

DiracSystem continuum_limit(Variant variant, double mass, Units units) {
    DiracSystem s;
    s.mass = mass;
    s.units = units;
    s.mass_sign = -1;
    if (variant == Variant::basic) {
        s.form = DiracForm::standard;
        s.axis_sign = {-1, -1, +1};
    } else {
        s.form = DiracForm::alternate;
    }
    return s;
}

Eigen::Matrix4cd mode_generator(const DiracSystem& system, const std::array<double, 3>& k) {
    if (!std::isfinite(system.mass)) throw std::invalid_argument("mass must be finite");
    const DiracMatrices m = system.matrices();
    const double c = system.units.c;
    const double omega0 = system.mass * c * c / system.units.hbar;
    Mat4 h = double(system.mass_sign) * omega0 * m.beta;
    for (int i = 0; i < 3; ++i) h += c * k[i] * m.alpha[i];
    return std::complex<double>{0.0, 1.0} * h;
}

SpinorField exact_evolve(const SpinorField& initial, double t, const DiracSystem& system,
                         double delta_r) {
    if (!std::isfinite(t)) throw std::invalid_argument("time must be finite");
    if (!std::isfinite(system.mass)) throw std::invalid_argument("mass must be finite");
    if (!(delta_r > 0.0) || !std::isfinite(delta_r)) {
        throw std::invalid_argument("delta_r must be positive");
    }
    const Dims& d = initial.dims();
    const std::size_t n = initial.size();
    FftwBuffer buf(n);
    const Plan forward(d, buf.ptr, FFTW_FORWARD);
    const Plan backward(d, buf.ptr, FFTW_BACKWARD);

    const auto src = initial.data();
    for (std::size_t i = 0; i < n; ++i) {
        buf.ptr[i][0] = src[i].real();
        buf.ptr[i][1] = src[i].imag();
    }
    forward.run();

    const DiracMatrices m = system.matrices();
    const double c = system.units.c;
    const double omega0 = double(system.mass_sign) * system.mass * c * c / system.units.hbar;
    const std::complex<double> i_unit{0.0, 1.0};
    Eigen::SelfAdjointEigenSolver<Mat4> solver;
    for (std::size_t site = 0; site < d.sites(); ++site) {
        const Site s = site_coords(d, site);
        const double kx = wave_number(s.x, d.x, delta_r);
        const double ky = wave_number(s.y, d.y, delta_r);
        const double kz = wave_number(s.z, d.z, delta_r);
        Mat4 h = omega0 * m.beta + c * kx * m.alpha[0] + c * ky * m.alpha[1] + c * kz * m.alpha[2];
        solver.compute(h);
        const Eigen::Vector4cd phases =
            (i_unit * t * solver.eigenvalues().cast<std::complex<double>>()).array().exp();
        const Mat4 u =
            solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
        Eigen::Vector4cd v;
        for (std::size_t comp = 0; comp < kComponents; ++comp) {
            const auto& a = buf.ptr[kComponents * site + comp];
            v[Eigen::Index(comp)] = {a[0], a[1]};
        }
        v = u * v;
        for (std::size_t comp = 0; comp < kComponents; ++comp) {
            buf.ptr[kComponents * site + comp][0] = v[Eigen::Index(comp)].real();
            buf.ptr[kComponents * site + comp][1] = v[Eigen::Index(comp)].imag();
        }
    }

    backward.run();
    SpinorField out(d);
    auto dst = out.data();
    const double scale = 1.0 / double(d.sites());
    for (std::size_t i = 0; i < n; ++i) dst[i] = {buf.ptr[i][0] * scale, buf.ptr[i][1] * scale};
    return out;
}

double dispersion(const std::array<double, 3>& k, double mass, Units units) {
    const double omega0 = mass * units.c * units.c / units.hbar;
    const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
    return std::sqrt(units.c * units.c * k2 + omega0 * omega0);
}

double anticommutator_check(const DiracMatrices& matrices) {
    const std::array<const Mat4*, 4> g{&matrices.alpha[0], &matrices.alpha[1],
                                       &matrices.alpha[2], &matrices.beta};
    double worst = 0.0;
    for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = a; b < g.size(); ++b) {
            Mat4 target = Mat4::Zero();
            if (a == b) target = 2.0 * Mat4::Identity();
            const Mat4 r = (*g[a]) * (*g[b]) + (*g[b]) * (*g[a]) - target;
            worst = std::max(worst, r.cwiseAbs().maxCoeff());
        }
    }
    return worst;
}

double anticommutator_check(DiracForm form) { return anticommutator_check(dirac_matrices(form)); }

Eigen::Matrix4cd intertwiner(const DiracMatrices& from, const DiracMatrices& to) {
    const std::array<const Mat4*, 4> a{&from.alpha[0], &from.alpha[1], &from.alpha[2], &from.beta};
    const std::array<const Mat4*, 4> b{&to.alpha[0], &to.alpha[1], &to.alpha[2], &to.beta};
    // Sum over the 16 ordered products; any seed with a nonzero average works.
    for (int seed = 0; seed < 16; ++seed) {
        Mat4 m = Mat4::Zero();
        m(seed / 4, seed % 4) = 1.0;
        Mat4 u = Mat4::Zero();
        for (unsigned mask = 0; mask < 16; ++mask) {
            Mat4 ga = Mat4::Identity();
            Mat4 gb = Mat4::Identity();
            for (int j = 0; j < 4; ++j) {
                if (mask & (1u << j)) {
                    ga = ga * (*a[j]);
                    gb = gb * (*b[j]);
                }
            }
            u += gb * m * ga.adjoint();
        }
        const double norm2 = (u.adjoint() * u).trace().real() / 4.0;
        if (norm2 < 1e-12) continue;
        u /= std::sqrt(norm2);
        double residual = (u.adjoint() * u - Mat4::Identity()).cwiseAbs().maxCoeff();
        for (int j = 0; j < 4; ++j) {
            residual = std::max(residual, (u * (*a[j]) * u.adjoint() - *b[j]).cwiseAbs().maxCoeff());
        }
        if (residual > 1e-12) throw std::invalid_argument("representations are not equivalent");
        return u;
    }
    throw std::invalid_argument("representations are not equivalent");
}

void apply_local(SpinorField& field, const Eigen::Matrix4cd& m) {
    auto data = field.data();
    for (std::size_t s = 0; s < field.sites(); ++s) {
        Eigen::Map<Eigen::Vector4cd> v(data.data() + kComponents * s);
        const Eigen::Vector4cd r = m * v;
        v = r;
    }
}

}  // namespace qlga
