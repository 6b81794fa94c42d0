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

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "qlga/fock.hpp"

namespace qlga::harness {

struct EquivalenceCheck {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct EquivalenceReport {
    std::vector<EquivalenceCheck> checks;
    bool passed() const;
};

struct EquivalenceOptions {
    std::size_t one_particle_length = 8;
    std::size_t pair_length = 4;
    std::size_t one_particle_steps = 4;
    std::size_t pair_steps = 100;
    double epsilon = 0.25;
    double tolerance = 1e-10;
    double norm_tolerance = 1e-12;
    /// Test hook: a wrong x_hat_sign must make the one-particle checks fail.
    GateMapping mapping{};
};

/// One-particle sector: second-quantized steps of every rule on a line
/// against the spinor steps after embedding. Two-particle sector: number
/// conservation, norm and total occupation.
EquivalenceReport run_equivalence(const EquivalenceOptions& options = {});

void print_report(const EquivalenceReport& report, std::ostream& out);

}  // namespace qlga::harness
