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

#include "qlga/fock.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <variant>

#include <fmt/format.h>

#include "qlga/collision.hpp"

namespace qlga {

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

SectorBasis::SectorBasis(std::size_t qubits, unsigned particles)
    : qubits_(qubits), particles_(particles) {
    if (qubits == 0 || qubits > kMaxQubits) {
        throw std::invalid_argument(fmt::format("qubit count {} outside [1, {}]", qubits, kMaxQubits));
    }
    if (particles > kMaxParticles || particles > qubits) {
        throw std::invalid_argument(
            fmt::format("particle number {} outside [0, {}]", particles, kMaxParticles));
    }
    configs_.reserve(binomial(unsigned(qubits), particles));
    if (particles == 0) {
        configs_.push_back(0);
        return;
    }
    // Gosper's hack enumerates n-subsets in increasing order, which is colex.
    const std::uint64_t total = binomial(unsigned(qubits), particles);
    std::uint64_t v = (std::uint64_t{1} << particles) - 1;
    for (std::uint64_t i = 0; i < total; ++i) {
        configs_.push_back(v);
        if (i + 1 == total) break;
        const std::uint64_t c = v & (~v + 1);
        const std::uint64_t r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
    }
}

std::size_t SectorBasis::rank(std::uint64_t config) const {
    if (unsigned(std::popcount(config)) != particles_ ||
        (qubits_ < 64 && (config >> qubits_) != 0)) {
        throw std::invalid_argument("configuration outside the sector");
    }
    std::size_t r = 0;
    unsigned j = 1;
    while (config) {
        const unsigned pos = unsigned(std::countr_zero(config));
        r += binomial(pos, j++);
        config &= config - 1;
    }
    return r;
}

FockState::FockState(const Dims& dims, unsigned particles)
    : dims_(dims), basis_(kComponents * dims.sites(), particles),
      amplitudes_(basis_.dimension(), Amplitude{}) {}

FockState FockState::basis_state(const Dims& dims, const std::vector<std::size_t>& occupied) {
    FockState s(dims, unsigned(occupied.size()));
    std::uint64_t mask = 0;
    for (std::size_t q : occupied) {
        if (q >= s.qubits()) throw std::out_of_range(fmt::format("qubit {} out of range", q));
        mask |= std::uint64_t{1} << q;
    }
    s.amplitudes_[s.basis_.rank(mask)] = 1.0;
    return s;
}

double norm(const FockState& state) {
    double acc = 0.0;
    for (const auto& a : state.amplitudes()) acc += std::norm(a);
    return acc;
}

const char* to_string(GateKind kind) {
    switch (kind) {
        case GateKind::x_hat: return "x_hat";
        case GateKind::y_hat: return "y_hat";
        case GateKind::interchange: return "interchange";
    }
    return "?";
}

Eigen::Matrix4cd gate_matrix(GateKind kind, double theta) {
    const auto [c, s] = unit_cos_sin(theta);
    const Amplitude mi{0.0, -1.0};
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = 1.0;
    switch (kind) {
        case GateKind::x_hat:
            m(1, 1) = c;
            m(1, 2) = mi * s;
            m(2, 1) = mi * s;
            m(2, 2) = c;
            m(3, 3) = -1.0;
            break;
        case GateKind::y_hat:
            m(1, 1) = c;
            m(1, 2) = -s;
            m(2, 1) = s;
            m(2, 2) = c;
            m(3, 3) = -1.0;
            break;
        case GateKind::interchange:
            m(1, 2) = 1.0;
            m(2, 1) = 1.0;
            m(3, 3) = 1.0;
            break;
    }
    return m;
}

namespace {

void apply_gate_unchecked(FockState& state, const TwoQubitGate& gate, const Eigen::Matrix4cd& m) {
    const std::uint64_t ba = std::uint64_t{1} << gate.a;
    const std::uint64_t bb = std::uint64_t{1} << gate.b;
    const auto& basis = state.basis();
    auto& amp = state.amplitudes();
    for (std::size_t r = 0; r < basis.dimension(); ++r) {
        const std::uint64_t cfg = basis.config(r);
        const bool qa = cfg & ba;
        const bool qb = cfg & bb;
        if (qa && qb) {
            amp[r] *= m(3, 3);
        } else if (qa) {
            // |10> paired with |01>; each pair handled once, from the |10> side.
            const std::size_t partner = basis.rank(cfg ^ ba ^ bb);
            const Amplitude a01 = amp[partner];
            const Amplitude a10 = amp[r];
            amp[partner] = m(1, 1) * a01 + m(1, 2) * a10;
            amp[r] = m(2, 1) * a01 + m(2, 2) * a10;
        } else if (!qb) {
            amp[r] *= m(0, 0);
        }
    }
}

void check_pair(const FockState& state, std::size_t a, std::size_t b) {
    if (a == b) throw std::invalid_argument("gate needs two distinct qubits");
    if (a >= state.qubits() || b >= state.qubits()) {
        throw std::out_of_range(
            fmt::format("gate qubits ({}, {}) outside register of {}", a, b, state.qubits()));
    }
}

void count(GateTally* tally, GateKind kind, std::uint64_t n) {
    if (!tally) return;
    switch (kind) {
        case GateKind::x_hat: tally->x_hat += n; break;
        case GateKind::y_hat: tally->y_hat += n; break;
        case GateKind::interchange: tally->interchange += n; break;
    }
}

}  // namespace

void apply_gate(FockState& state, const TwoQubitGate& gate) {
    check_pair(state, gate.a, gate.b);
    apply_gate_unchecked(state, gate, gate_matrix(gate.kind, gate.theta));
}

void sq_collision_step(FockState& state, CollisionKind kind, double theta,
                       const GateMapping& mapping, GateTally* tally) {
    if (!std::isfinite(theta)) throw std::invalid_argument("collision angle must be finite");
    GateKind gk = GateKind::x_hat;
    double gate_theta = double(mapping.x_hat_sign) * theta;
    std::array<std::array<std::size_t, 2>, 2> pairs{{{0, 1}, {2, 3}}};
    switch (kind) {
        case CollisionKind::X1: pairs = {{{0, 2}, {1, 3}}}; break;
        case CollisionKind::X2: break;
        case CollisionKind::Y2:
            gk = GateKind::y_hat;
            gate_theta = theta;
            break;
    }
    const Eigen::Matrix4cd m = gate_matrix(gk, gate_theta);
    const std::size_t sites = state.dims().sites();
    for (std::size_t site = 0; site < sites; ++site) {
        for (const auto& p : pairs) {
            const TwoQubitGate g{gk, gate_theta, qubit_index(site, p[0]), qubit_index(site, p[1])};
            apply_gate_unchecked(state, g, m);
        }
    }
    count(tally, gk, 2 * sites);
}

void sq_stream_step(FockState& state, Axis axis, int direction, std::size_t component,
                    GateTally* tally) {
    if (direction != 1 && direction != -1) throw std::invalid_argument("direction must be +1 or -1");
    if (component >= kComponents) throw std::out_of_range("component out of range");
    const Dims& d = state.dims();
    const std::size_t len = d.extent(axis);
    if (len < 2) {
        throw std::invalid_argument(fmt::format("cannot stream along axis {} of extent 1", axis_name(axis)));
    }
    const Eigen::Matrix4cd m = gate_matrix(GateKind::interchange);
    std::uint64_t applied = 0;
    for (std::size_t start = 0; start < d.sites(); ++start) {
        const Site s = site_coords(d, start);
        const std::size_t pos = axis == Axis::x ? s.x : axis == Axis::y ? s.y : s.z;
        if (pos != 0) continue;
        auto qubit_at = [&](std::size_t i) {
            Site t = s;
            if (axis == Axis::x) t.x = i;
            else if (axis == Axis::y) t.y = i;
            else t.z = i;
            return qubit_index(site_index(d, t), component);
        };
        for (std::size_t j = 0; j + 1 < len; ++j) {
            const std::size_t i = direction > 0 ? j : len - 2 - j;
            apply_gate_unchecked(state, {GateKind::interchange, 0.0, qubit_at(i), qubit_at(i + 1)}, m);
            ++applied;
        }
    }
    count(tally, GateKind::interchange, applied);
}

void apply(FockState& state, const OperatorProgram& program, const GateMapping& mapping,
           GateTally* tally) {
    for (const Factor& f : program.factors()) {
        if (const auto* c = std::get_if<Collision>(&f)) {
            sq_collision_step(state, c->kind, c->theta, mapping, tally);
        } else {
            const auto& s = std::get<StreamSpec>(f);
            for (std::size_t comp = 0; comp < kComponents; ++comp) {
                if (s.subset.contains(comp)) sq_stream_step(state, s.axis, s.direction, comp, tally);
            }
        }
    }
}

void apply_step(FockState& state, const StepRule& rule, const GateMapping& mapping,
                GateTally* tally) {
    apply(state, rule.program, mapping, tally);
    if (rule.global_phase != Amplitude{1.0, 0.0}) {
        const Amplitude phase = std::pow(rule.global_phase, int(state.particles()));
        for (auto& a : state.amplitudes()) a *= phase;
    }
}

FockState embed_one_particle(const SpinorField& field) {
    FockState state(field.dims(), 1);
    const auto src = field.data();
    auto& amp = state.amplitudes();
    // In the one-particle sector rank(1 << q) == q.
    for (std::size_t q = 0; q < src.size(); ++q) amp[q] = src[q];
    return state;
}

SpinorField extract_one_particle(const FockState& state) {
    if (state.particles() != 1) throw std::invalid_argument("extract needs the one-particle sector");
    SpinorField field(state.dims());
    auto dst = field.data();
    const auto& amp = state.amplitudes();
    for (std::size_t q = 0; q < dst.size(); ++q) dst[q] = amp[q];
    return field;
}

double occupation_probability(const FockState& state, std::size_t site) {
    if (site >= state.dims().sites()) throw std::out_of_range("site out of range");
    const std::uint64_t mask = std::uint64_t{0xF} << (kComponents * site);
    const auto& basis = state.basis();
    const auto& amp = state.amplitudes();
    double p = 0.0;
    for (std::size_t r = 0; r < basis.dimension(); ++r) {
        const int occ = std::popcount(basis.config(r) & mask);
        if (occ) p += occ * std::norm(amp[r]);
    }
    return p;
}

}  // namespace qlga
