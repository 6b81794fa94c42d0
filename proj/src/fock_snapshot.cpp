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
#include <istream>
#include <ostream>
#include <string_view>

#include <fmt/format.h>

#include "qlga/fock.hpp"
#include "qlga/snapshot.hpp"

namespace qlga {

namespace {

constexpr char kSectorMagic[4] = {'Q', 'L', 'G', 'S'};

}  // namespace

void write_sector_snapshot(const FockState& state, std::ostream& out) {
    out.write(kSectorMagic, 4);
    wire::put_u32(out, kSnapshotVersion);
    const Dims& d = state.dims();
    wire::put_u32(out, std::uint32_t(d.x));
    wire::put_u32(out, std::uint32_t(d.y));
    wire::put_u32(out, std::uint32_t(d.z));
    wire::put_u32(out, state.particles());
    wire::put_u8(out, kPrecisionF64);
    for (const auto& a : state.amplitudes()) {
        wire::put_f64(out, a.real());
        wire::put_f64(out, a.imag());
    }
    if (!out) throw FormatError("sector snapshot write failed");
}

FockState read_sector_snapshot(std::istream& in) {
    char magic[4]{};
    if (!in.read(magic, 4) || std::string_view(magic, 4) != std::string_view(kSectorMagic, 4)) {
        throw FormatError("not a sector snapshot (bad magic)");
    }
    const std::uint32_t version = wire::get_u32(in);
    if (version != kSnapshotVersion) {
        throw FormatError(fmt::format("unsupported sector snapshot version {}", version));
    }
    Dims d;
    d.x = wire::get_u32(in);
    d.y = wire::get_u32(in);
    d.z = wire::get_u32(in);
    const std::uint32_t n = wire::get_u32(in);
    if (!d.valid() || d.sites() * kComponents > kMaxQubits) {
        throw FormatError(fmt::format("sector snapshot dims {} exceed {} qubits", to_string(d), kMaxQubits));
    }
    if (n > kMaxParticles) throw FormatError(fmt::format("particle number {} unsupported", n));
    if (wire::get_u8(in) != kPrecisionF64) throw FormatError("unsupported precision tag");
    FockState state(d, n);
    for (auto& a : state.amplitudes()) {
        const double re = wire::get_f64(in);
        const double im = wire::get_f64(in);
        if (!std::isfinite(re) || !std::isfinite(im)) throw FormatError("non-finite amplitude");
        a = {re, im};
    }
    return state;
}

}  // namespace qlga
