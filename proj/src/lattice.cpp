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

#include "qlga/lattice.hpp"

#include <fmt/format.h>

namespace qlga {

char axis_name(Axis axis) {
    switch (axis) {
        case Axis::x: return 'x';
        case Axis::y: return 'y';
        case Axis::z: return 'z';
    }
    return '?';
}

std::size_t Dims::extent(Axis axis) const {
    switch (axis) {
        case Axis::x: return x;
        case Axis::y: return y;
        case Axis::z: return z;
    }
    return 0;
}

std::string to_string(const Dims& dims) {
    return fmt::format("{}x{}x{}", dims.x, dims.y, dims.z);
}

Site site_coords(const Dims& dims, std::size_t index) {
    Site s;
    s.z = index % dims.z;
    index /= dims.z;
    s.y = index % dims.y;
    s.x = index / dims.y;
    return s;
}

std::size_t neighbor(const Dims& dims, std::size_t index, Axis axis, int step) {
    Site s = site_coords(dims, index);
    const auto extent = static_cast<long long>(dims.extent(axis));
    auto wrap = [extent, step](std::size_t coord) {
        long long v = (static_cast<long long>(coord) + step) % extent;
        return static_cast<std::size_t>(v < 0 ? v + extent : v);
    };
    switch (axis) {
        case Axis::x: s.x = wrap(s.x); break;
        case Axis::y: s.y = wrap(s.y); break;
        case Axis::z: s.z = wrap(s.z); break;
    }
    return site_index(dims, s);
}

}  // namespace qlga
