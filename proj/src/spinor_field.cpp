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

#include "qlga/spinor_field.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>

#include <fmt/format.h>

namespace qlga {

SpinorField::SpinorField(const Dims& dims) : dims_(dims) {
    if (!dims.valid()) {
        throw FieldError(fmt::format("lattice extents must be positive, got {}", to_string(dims)));
    }
    data_.assign(kComponents * dims.sites(), Amplitude{});
}

void SpinorField::swap_data(std::vector<Amplitude>& other) {
    if (other.size() != data_.size()) {
        throw FieldError("swap_data: buffer size mismatch");
    }
    data_.swap(other);
}

bool SpinorField::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Amplitude& a) {
        return std::isfinite(a.real()) && std::isfinite(a.imag());
    });
}

bool SpinorField::bitwise_equal(const SpinorField& other) const {
    if (dims_ != other.dims_ || data_.size() != other.data_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        const auto& a = data_[i];
        const auto& b = other.data_[i];
        if (std::bit_cast<std::uint64_t>(a.real()) != std::bit_cast<std::uint64_t>(b.real()) ||
            std::bit_cast<std::uint64_t>(a.imag()) != std::bit_cast<std::uint64_t>(b.imag())) {
            return false;
        }
    }
    return true;
}

namespace {

double min_image(double d, double extent) {
    d = std::fmod(d, extent);
    if (d > extent / 2) d -= extent;
    if (d < -extent / 2) d += extent;
    return d;
}

struct Filler {
    SpinorField& field;

    void operator()(const init::Zero&) const {}

    void operator()(const init::UnitComponent& u) const {
        const Dims& d = field.dims();
        if (u.site.x >= d.x || u.site.y >= d.y || u.site.z >= d.z || u.component >= kComponents) {
            throw FieldError("unit component initializer out of range");
        }
        field.at(site_index(d, u.site), u.component) = 1.0;
    }

    void operator()(const init::PlaneWave& p) const {
        fill([&](const Site& s) {
            return p.k[0] * double(s.x) + p.k[1] * double(s.y) + p.k[2] * double(s.z);
        }, [](const Site&) { return 1.0; }, p.polarization);
    }

    void operator()(const init::GaussianPacket& g) const {
        if (!(g.width > 0.0) || !std::isfinite(g.width)) {
            throw FieldError("gaussian width must be positive");
        }
        const Dims& d = field.dims();
        const std::array<double, 3> extent{double(d.x), double(d.y), double(d.z)};
        fill([&](const Site& s) {
            return g.k[0] * double(s.x) + g.k[1] * double(s.y) + g.k[2] * double(s.z);
        }, [&](const Site& s) {
            const std::array<double, 3> pos{double(s.x), double(s.y), double(s.z)};
            double r2 = 0.0;
            for (int a = 0; a < 3; ++a) {
                if (extent[a] > 1.0) {
                    const double dr = min_image(pos[a] - g.center[a], extent[a]);
                    r2 += dr * dr;
                }
            }
            return std::exp(-r2 / (2.0 * g.width * g.width));
        }, g.polarization);
    }

    template <class Phase, class Envelope>
    void fill(Phase phase, Envelope envelope, const Spinor& pol) const {
        const Dims& d = field.dims();
        for (std::size_t i = 0; i < d.sites(); ++i) {
            const Site s = site_coords(d, i);
            const Amplitude f = envelope(s) * std::polar(1.0, phase(s));
            for (std::size_t c = 0; c < kComponents; ++c) {
                field.at(i, c) = f * pol[c];
            }
        }
    }
};

}  // namespace

SpinorField new_field(const Dims& dims, const Initializer& initializer) {
    SpinorField field(dims);
    std::visit(Filler{field}, initializer);
    if (!std::holds_alternative<init::Zero>(initializer)) {
        normalize(field);
    }
    return field;
}

void normalize(SpinorField& field) {
    const double n = total_norm(field);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw FieldError("cannot normalize a field with zero or non-finite norm");
    }
    const double scale = 1.0 / std::sqrt(n);
    for (auto& a : field.data()) a *= scale;
}

double total_norm(const SpinorField& field) {
    // Sequential sum: the result must not depend on the thread count.
    double sum = 0.0;
    for (const auto& a : field.data()) sum += std::norm(a);
    return sum;
}

double probability_density(const SpinorField& field, std::size_t site) {
    if (site >= field.sites()) {
        throw FieldError(fmt::format("site {} out of range ({} sites)", site, field.sites()));
    }
    double rho = 0.0;
    for (std::size_t c = 0; c < kComponents; ++c) rho += std::norm(field.at(site, c));
    return rho;
}

std::vector<double> densities(const SpinorField& field) {
    std::vector<double> rho(field.sites());
    for (std::size_t s = 0; s < rho.size(); ++s) rho[s] = probability_density(field, s);
    return rho;
}

double l2_density_error(const SpinorField& field, const SpinorField& reference) {
    if (field.dims() != reference.dims()) {
        throw FieldError(fmt::format("dims mismatch: {} vs {}", to_string(field.dims()),
                                     to_string(reference.dims())));
    }
    double sum = 0.0;
    for (std::size_t s = 0; s < field.sites(); ++s) {
        const double d = probability_density(field, s) - probability_density(reference, s);
        sum += d * d;
    }
    return std::sqrt(sum / double(field.sites()));
}

double max_abs_difference(const SpinorField& a, const SpinorField& b) {
    if (a.dims() != b.dims()) throw FieldError("dims mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

}  // namespace qlga
