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

#include "qlga/streaming.hpp"

#include <stdexcept>

#include <fmt/format.h>

#include "qlga/parallel.hpp"

namespace qlga {

std::string to_string(ComponentSet set) {
    std::string out = "{";
    for (std::size_t c = 0; c < kComponents; ++c) {
        if (!set.contains(c)) continue;
        if (out.size() > 1) out += ',';
        out += static_cast<char>('0' + c);
    }
    return out + "}";
}

void stream(SpinorField& field, const StreamSpec& spec, std::vector<Amplitude>& scratch) {
    if (spec.subset.empty()) return;
    if (spec.direction != 1 && spec.direction != -1) {
        throw std::invalid_argument("stream direction must be +1 or -1");
    }
    const Dims& d = field.dims();
    const std::size_t extent = d.extent(spec.axis);
    if (extent < 2) {
        throw std::invalid_argument(fmt::format(
            "cannot stream along degenerate axis {} (extent {})", axis_name(spec.axis), extent));
    }

    // Sites along the axis are `stride` apart in site_index order.
    const std::size_t stride = spec.axis == Axis::z ? 1 : spec.axis == Axis::y ? d.z : d.y * d.z;
    const std::size_t block = stride * extent;
    const std::size_t shift = spec.direction > 0 ? 1 : extent - 1;

    const Amplitude* src = field.data().data();
    scratch.assign(field.data().begin(), field.data().end());
    Amplitude* dst = scratch.data();
    const std::uint8_t mask = spec.subset.bits();

    const auto lines = static_cast<long long>(d.sites() / extent);
    const int threads = thread_count();
#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1)
    for (long long line = 0; line < lines; ++line) {
        const std::size_t outer = static_cast<std::size_t>(line) / stride;
        const std::size_t inner = static_cast<std::size_t>(line) % stride;
        const std::size_t base = outer * block + inner;
        for (std::size_t i = 0; i < extent; ++i) {
            std::size_t j = i + shift;
            if (j >= extent) j -= extent;
            const std::size_t to = kComponents * (base + i * stride);
            const std::size_t from = kComponents * (base + j * stride);
            for (std::size_t c = 0; c < kComponents; ++c) {
                if ((mask >> c) & 1u) dst[to + c] = src[from + c];
            }
        }
    }
    field.swap_data(scratch);
}

void stream(SpinorField& field, const StreamSpec& spec) {
    std::vector<Amplitude> scratch;
    stream(field, spec, scratch);
}

void composite_stream(SpinorField& field, Axis axis) {
    std::vector<Amplitude> scratch;
    stream(field, {axis, +1, {0, 3}}, scratch);
    stream(field, {axis, -1, {1, 2}}, scratch);
}

}  // namespace qlga
