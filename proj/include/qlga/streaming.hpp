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

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "qlga/spinor_field.hpp"

namespace qlga {

/// Subset of the four spinor components, as a bit mask.
class ComponentSet {
  public:
    constexpr ComponentSet() = default;
    constexpr ComponentSet(std::initializer_list<int> components) {
        for (int c : components) bits_ |= static_cast<std::uint8_t>(1u << c);
    }

    constexpr bool contains(std::size_t c) const { return (bits_ >> c) & 1u; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return __builtin_popcount(bits_); }
    constexpr std::uint8_t bits() const { return bits_; }

    friend constexpr bool operator==(ComponentSet, ComponentSet) = default;

  private:
    std::uint8_t bits_ = 0;
};

std::string to_string(ComponentSet set);

/// Shift of a component subset by one cell along an axis, in "pull"
/// convention: psi'_c(x) = psi_c(x + direction * e_axis) for c in subset.
struct StreamSpec {
    Axis axis = Axis::z;
    int direction = +1;
    ComponentSet subset{};

    StreamSpec reversed() const { return {axis, -direction, subset}; }
    friend bool operator==(const StreamSpec&, const StreamSpec&) = default;
};

/// Pure permutation of amplitudes; double buffered through `scratch`
/// (resized as needed) so the streamed axis is never updated in place.
void stream(SpinorField& field, const StreamSpec& spec, std::vector<Amplitude>& scratch);
void stream(SpinorField& field, const StreamSpec& spec);

/// Diagonal streaming S_axis with the sign pattern of sigma_z (x) sigma_z:
/// components {0,3} pull from +axis, {1,2} from -axis.
void composite_stream(SpinorField& field, Axis axis);

}  // namespace qlga
