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

#include "qlga/operator_program.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace qlga {

OperatorProgram OperatorProgram::from_product(std::initializer_list<Factor> printed) {
    OperatorProgram p;
    p.factors_.assign(printed.begin(), printed.end());
    std::reverse(p.factors_.begin(), p.factors_.end());
    return p;
}

OperatorProgram& OperatorProgram::then(const Factor& f) {
    factors_.push_back(f);
    return *this;
}

OperatorProgram& OperatorProgram::then(const OperatorProgram& p) {
    factors_.insert(factors_.end(), p.factors_.begin(), p.factors_.end());
    return *this;
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

OperatorProgram OperatorProgram::dual() const {
    OperatorProgram out;
    out.factors_.reserve(factors_.size());
    for (const auto& f : factors_) {
        out.factors_.push_back(std::visit(
            Overloaded{[](const Collision& c) -> Factor { return c.adjoint(); },
                       [](const StreamSpec& s) -> Factor { return s.reversed(); }},
            f));
    }
    return out;
}

OperatorProgram OperatorProgram::inverse() const {
    OperatorProgram out = dual();
    std::reverse(out.factors_.begin(), out.factors_.end());
    return out;
}

OpTally OperatorProgram::tally() const {
    OpTally t;
    for (const auto& f : factors_) {
        std::visit(Overloaded{[&](const Collision&) { ++t.collision_layers; },
                              [&](const StreamSpec& s) {
                                  t.component_streams += static_cast<std::uint64_t>(s.subset.size());
                              }},
                   f);
    }
    return t;
}

void apply(SpinorField& field, const OperatorProgram& program, OpTally* tally) {
    std::vector<Amplitude> scratch;
    for (const auto& f : program.factors()) {
        std::visit(Overloaded{[&](const Collision& c) {
                                  apply_collision(field, c.kind, c.theta);
                                  if (tally) ++tally->collision_layers;
                              },
                              [&](const StreamSpec& s) {
                                  stream(field, s, scratch);
                                  if (tally) tally->component_streams += static_cast<std::uint64_t>(s.subset.size());
                              }},
                   f);
    }
}

Eigen::MatrixXcd dense_operator(const OperatorProgram& program, const Dims& dims) {
    if (dims.sites() > kDenseSiteLimit) {
        throw std::invalid_argument(fmt::format(
            "dense_operator: {} sites exceeds the limit of {}", dims.sites(), kDenseSiteLimit));
    }
    const auto n = static_cast<Eigen::Index>(kComponents * dims.sites());
    Eigen::MatrixXcd m(n, n);
    SpinorField column(dims);
    for (Eigen::Index j = 0; j < n; ++j) {
        std::fill(column.data().begin(), column.data().end(), Amplitude{});
        column.data()[static_cast<std::size_t>(j)] = 1.0;
        apply(column, program);
        for (Eigen::Index i = 0; i < n; ++i) m(i, j) = column.data()[static_cast<std::size_t>(i)];
    }
    return m;
}

}  // namespace qlga
