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
#include <iosfwd>
#include <stdexcept>

#include "qlga/spinor_field.hpp"

namespace qlga {

// Binary field snapshot, all integers and floats little-endian:
//
//   offset  size  field
//   0       4     magic "QLGA"
//   4       4     u32 format version (kSnapshotVersion)
//   8       12    u32 Lx, Ly, Lz
//   20      4     u32 component count (always 4)
//   24      1     u8 precision tag (kPrecisionF64)
//   25      ...   f64 (re, im) pairs, site-major in site_index order,
//                 components 0..3 within a site
inline constexpr std::uint32_t kSnapshotVersion = 1;
inline constexpr std::uint8_t kPrecisionF64 = 1;

class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

void write_snapshot(const SpinorField& field, std::ostream& out);
SpinorField read_snapshot(std::istream& in);

namespace wire {

void put_u32(std::ostream& out, std::uint32_t v);
void put_u8(std::ostream& out, std::uint8_t v);
void put_f64(std::ostream& out, double v);
std::uint32_t get_u32(std::istream& in);
std::uint8_t get_u8(std::istream& in);
double get_f64(std::istream& in);

}  // namespace wire

}  // namespace qlga
