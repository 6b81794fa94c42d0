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

#include "qlga/harness/complexity_report.hpp"

#include <ostream>

#include <fmt/format.h>

namespace qlga::harness {

std::vector<ComplexityRow> complexity_table(std::span<const Variant> variants,
                                            std::span<const std::uint64_t> lattices) {
    std::vector<ComplexityRow> rows;
    for (Variant v : variants) {
        for (std::uint64_t L : lattices) {
            ComplexityRow row;
            row.variant = v;
            row.count = op_count(v, L);
            row.qubit = qubit_complexity(v, L);
            row.cost_per_qubit = double(row.count.total) / double(row.qubit.qubits);
            rows.push_back(row);
        }
    }
    return rows;
}

void write_complexity_csv(const std::vector<ComplexityRow>& rows, std::ostream& out) {
    out << "variant,L,Q,rho_c,rho_s,C,C_over_Q,closed_form,printed_closed_form\n";
    for (const auto& r : rows) {
        out << fmt::format("{},{},{},{},{},{},{:.17g},{:.17g},{:.17g}\n", to_string(r.variant),
                           r.count.lattice, r.qubit.qubits, r.count.rho_c, r.count.rho_s,
                           r.count.total, r.cost_per_qubit, r.qubit.closed_form,
                           r.qubit.closed_form_printed);
    }
}

}  // namespace qlga::harness
