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
#include <cstddef>
#include <cstdint>
#include <string>

namespace qlga {

enum class Axis : std::uint8_t { x = 0, y = 1, z = 2 };

inline constexpr std::array<Axis, 3> kAxes{Axis::x, Axis::y, Axis::z};

char axis_name(Axis axis);

/// Extents of a periodic rectangular lattice. Degenerate axes have extent 1;
/// the 1D mode used throughout is Lx = Ly = 1 (a line along z).
struct Dims {
    std::size_t x = 1;
    std::size_t y = 1;
    std::size_t z = 1;

    static Dims line(std::size_t length) { return {1, 1, length}; }
    static Dims cube(std::size_t length) { return {length, length, length}; }

    std::size_t extent(Axis axis) const;
    std::size_t sites() const { return x * y * z; }
    bool is_line() const { return x == 1 && y == 1; }
    bool valid() const { return x > 0 && y > 0 && z > 0; }

    friend bool operator==(const Dims&, const Dims&) = default;
};

std::string to_string(const Dims& dims);

struct Site {
    std::size_t x = 0;
    std::size_t y = 0;
    std::size_t z = 0;

    friend bool operator==(const Site&, const Site&) = default;
};

// Row-major site order: z varies fastest, then y, then x. Snapshots and the
// qubit numbering of the second-quantized simulator both rely on this.
inline std::size_t site_index(const Dims& dims, const Site& s) {
    return (s.x * dims.y + s.y) * dims.z + s.z;
}

Site site_coords(const Dims& dims, std::size_t index);

/// Index of the site `step` cells away along `axis`, with periodic wrap.
std::size_t neighbor(const Dims& dims, std::size_t index, Axis axis, int step);

}  // namespace qlga
