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
#include <span>
#include <vector>

#include "qlga/evolution.hpp"

namespace qlga::harness {

struct ComplexityRow {
    Variant variant = Variant::basic;
    OpCount count{};
    QubitComplexity qubit{};
    double cost_per_qubit = 0.0;
};

std::vector<ComplexityRow> complexity_table(std::span<const Variant> variants,
                                            std::span<const std::uint64_t> lattices);

/// Columns variant,L,Q,rho_c,rho_s,C,C_over_Q,closed_form,printed_closed_form.
void write_complexity_csv(const std::vector<ComplexityRow>& rows, std::ostream& out);

}  // namespace qlga::harness
