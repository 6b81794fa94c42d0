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
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "qlga/collision.hpp"
#include "qlga/streaming.hpp"

namespace qlga {

struct Collision {
    CollisionKind kind = CollisionKind::X1;
    double theta = 0.0;

    Collision adjoint() const { return {kind, -theta}; }
};

using Factor = std::variant<Collision, StreamSpec>;

/// Runtime operation counter, incremented on every applied factor.
/// A collision layer acts on every site; a component stream moves one
/// component of every site by one cell.
struct OpTally {
    std::uint64_t collision_layers = 0;
    std::uint64_t component_streams = 0;

    OpTally& operator+=(const OpTally& o) {
        collision_layers += o.collision_layers;
        component_streams += o.component_streams;
        return *this;
    }
    friend bool operator==(const OpTally&, const OpTally&) = default;
};

/// A product of collisions and streams, stored in application order
/// (the first factor acts first, i.e. the rightmost factor of a printed
/// operator product).
class OperatorProgram {
  public:
    OperatorProgram() = default;

    /// Builds from a product written left to right, as printed.
    static OperatorProgram from_product(std::initializer_list<Factor> printed);

    OperatorProgram& then(const Factor& f);
    OperatorProgram& then(const OperatorProgram& p);

    /// Adjoint of every collision and every stream direction reversed,
    /// factor order unchanged.
    OperatorProgram dual() const;

    /// Exact inverse: reversed order, each factor inverted.
    OperatorProgram inverse() const;

    const std::vector<Factor>& factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }

    /// Static counts of what one application performs.
    OpTally tally() const;

  private:
    std::vector<Factor> factors_;
};

/// Applies the program in place. Scratch storage is reused across factors.
void apply(SpinorField& field, const OperatorProgram& program, OpTally* tally = nullptr);

/// Largest lattice for which dense_operator will build a matrix.
inline constexpr std::size_t kDenseSiteLimit = 512;

/// Exact (4 N_sites)^2 matrix of the program, column j = program(e_j), with
/// row/column index 4 * site + component.
Eigen::MatrixXcd dense_operator(const OperatorProgram& program, const Dims& dims);

}  // namespace qlga
