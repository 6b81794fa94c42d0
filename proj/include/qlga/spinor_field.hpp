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

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "qlga/lattice.hpp"

namespace qlga {

using Amplitude = std::complex<double>;

/// Spinor components 0..3 correspond to (alpha, beta, mu, nu).
inline constexpr std::size_t kComponents = 4;

using Spinor = std::array<Amplitude, kComponents>;

class FieldError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Complex 4-spinor field on a periodic lattice. Storage is site-major with
/// the four components of a site contiguous: data()[4 * site + c].
class SpinorField {
  public:
    SpinorField() = default;
    explicit SpinorField(const Dims& dims);

    const Dims& dims() const { return dims_; }
    std::size_t sites() const { return dims_.sites(); }
    std::size_t size() const { return data_.size(); }

    Amplitude& at(std::size_t site, std::size_t component) {
        return data_[kComponents * site + component];
    }
    const Amplitude& at(std::size_t site, std::size_t component) const {
        return data_[kComponents * site + component];
    }

    std::span<Amplitude> data() { return data_; }
    std::span<const Amplitude> data() const { return data_; }

    /// Exchanges storage with `other`; both must have the same dims.
    void swap_data(std::vector<Amplitude>& other);

    bool all_finite() const;

    /// Bitwise equality of dims and every amplitude (distinguishes -0.0).
    bool bitwise_equal(const SpinorField& other) const;

  private:
    Dims dims_{};
    std::vector<Amplitude> data_;
};

namespace init {

struct Zero {};

struct UnitComponent {
    Site site;
    std::size_t component = 0;
};

/// Wave vector in radians per lattice cell.
struct PlaneWave {
    std::array<double, 3> k{};
    Spinor polarization{};
};

/// Center and width in lattice cells; the envelope uses minimum-image
/// distances so it is periodic. Axes of extent 1 are ignored.
struct GaussianPacket {
    std::array<double, 3> center{};
    double width = 1.0;
    std::array<double, 3> k{};
    Spinor polarization{};
};

}  // namespace init

using Initializer =
    std::variant<init::Zero, init::UnitComponent, init::PlaneWave, init::GaussianPacket>;

/// Builds a field and normalizes it to unit total norm (except Zero).
SpinorField new_field(const Dims& dims, const Initializer& initializer);

void normalize(SpinorField& field);

double total_norm(const SpinorField& field);

double probability_density(const SpinorField& field, std::size_t site);

std::vector<double> densities(const SpinorField& field);

/// sqrt(mean over sites of (rho - rho_ref)^2).
double l2_density_error(const SpinorField& field, const SpinorField& reference);

double max_abs_difference(const SpinorField& a, const SpinorField& b);

}  // namespace qlga
