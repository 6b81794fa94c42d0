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

#include "qlga/snapshot.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>

#include <fmt/format.h>

namespace qlga {

namespace wire {

namespace {

template <std::size_t N>
void put_bytes(std::ostream& out, std::uint64_t v) {
    std::array<char, N> bytes{};
    for (std::size_t i = 0; i < N; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(bytes.data(), N);
}

template <std::size_t N>
std::uint64_t get_bytes(std::istream& in) {
    std::array<char, N> bytes{};
    if (!in.read(bytes.data(), N)) throw FormatError("truncated snapshot");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < N; ++i) {
        v |= std::uint64_t(static_cast<unsigned char>(bytes[i])) << (8 * i);
    }
    return v;
}

}  // namespace

void put_u32(std::ostream& out, std::uint32_t v) { put_bytes<4>(out, v); }
void put_u8(std::ostream& out, std::uint8_t v) { put_bytes<1>(out, v); }
void put_f64(std::ostream& out, double v) { put_bytes<8>(out, std::bit_cast<std::uint64_t>(v)); }

std::uint32_t get_u32(std::istream& in) { return static_cast<std::uint32_t>(get_bytes<4>(in)); }
std::uint8_t get_u8(std::istream& in) { return static_cast<std::uint8_t>(get_bytes<1>(in)); }
double get_f64(std::istream& in) { return std::bit_cast<double>(get_bytes<8>(in)); }

}  // namespace wire

namespace {

constexpr std::array<char, 4> kMagic{'Q', 'L', 'G', 'A'};
// 2^28 sites is far beyond anything this simulator can evolve.
constexpr std::uint64_t kMaxSites = std::uint64_t{1} << 28;

}  // namespace

void write_snapshot(const SpinorField& field, std::ostream& out) {
    const Dims& d = field.dims();
    out.write(kMagic.data(), kMagic.size());
    wire::put_u32(out, kSnapshotVersion);
    wire::put_u32(out, static_cast<std::uint32_t>(d.x));
    wire::put_u32(out, static_cast<std::uint32_t>(d.y));
    wire::put_u32(out, static_cast<std::uint32_t>(d.z));
    wire::put_u32(out, static_cast<std::uint32_t>(kComponents));
    wire::put_u8(out, kPrecisionF64);
    for (const auto& a : field.data()) {
        wire::put_f64(out, a.real());
        wire::put_f64(out, a.imag());
    }
    if (!out) throw FormatError("failed writing snapshot");
}

SpinorField read_snapshot(std::istream& in) {
    std::array<char, 4> magic{};
    if (!in.read(magic.data(), magic.size())) throw FormatError("truncated snapshot header");
    if (magic != kMagic) throw FormatError("bad snapshot magic");
    const std::uint32_t version = wire::get_u32(in);
    if (version != kSnapshotVersion) {
        throw FormatError(fmt::format("unsupported snapshot version {}", version));
    }
    const std::uint64_t lx = wire::get_u32(in);
    const std::uint64_t ly = wire::get_u32(in);
    const std::uint64_t lz = wire::get_u32(in);
    if (lx == 0 || ly == 0 || lz == 0) throw FormatError("snapshot has a zero extent");
    if (lx > kMaxSites || ly > kMaxSites / lx || lz > kMaxSites / (lx * ly)) {
        throw FormatError("snapshot dims overflow");
    }
    if (wire::get_u32(in) != kComponents) throw FormatError("snapshot component count must be 4");
    if (wire::get_u8(in) != kPrecisionF64) throw FormatError("unsupported precision tag");

    SpinorField field(Dims{lx, ly, lz});
    for (auto& a : field.data()) {
        const double re = wire::get_f64(in);
        const double im = wire::get_f64(in);
        a = Amplitude(re, im);
    }
    if (!field.all_finite()) throw FormatError("snapshot contains non-finite amplitudes");
    return field;
}

}  // namespace qlga
