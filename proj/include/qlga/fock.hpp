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
#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Core>

#include "qlga/evolution.hpp"
#include "qlga/operator_program.hpp"
#include "qlga/spinor_field.hpp"

namespace qlga {

/// Largest particle number a sector may hold.
inline constexpr unsigned kMaxParticles = 3;
/// Qubit masks are 64-bit.
inline constexpr std::size_t kMaxQubits = 64;

/// Qubit of component c at a site: 4 * site_index + c.
inline std::size_t qubit_index(std::size_t site, std::size_t component) {
    return kComponents * site + component;
}

/// All Q-qubit occupation configurations with exactly n set bits, in
/// colexicographic order; rank() is the combinatorial number system.
class SectorBasis {
  public:
    SectorBasis(std::size_t qubits, unsigned particles);

    std::size_t qubits() const { return qubits_; }
    unsigned particles() const { return particles_; }
    std::size_t dimension() const { return configs_.size(); }
    std::uint64_t config(std::size_t rank) const { return configs_[rank]; }
    const std::vector<std::uint64_t>& configs() const { return configs_; }
    std::size_t rank(std::uint64_t config) const;

  private:
    std::size_t qubits_;
    unsigned particles_;
    std::vector<std::uint64_t> configs_;
};

std::uint64_t binomial(unsigned n, unsigned k);

class FockState {
  public:
    /// Zero vector in the (4 * sites, n) sector.
    FockState(const Dims& dims, unsigned particles);
    /// Definite occupation of the given qubits, amplitude 1.
    static FockState basis_state(const Dims& dims, const std::vector<std::size_t>& occupied);

    const Dims& dims() const { return dims_; }
    const SectorBasis& basis() const { return basis_; }
    std::size_t qubits() const { return basis_.qubits(); }
    unsigned particles() const { return basis_.particles(); }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::vector<Amplitude>& amplitudes() { return amplitudes_; }
    const std::vector<Amplitude>& amplitudes() const { return amplitudes_; }

  private:
    Dims dims_;
    SectorBasis basis_;
    std::vector<Amplitude> amplitudes_;
};

double norm(const FockState& state);

enum class GateKind { x_hat, y_hat, interchange };

const char* to_string(GateKind kind);

/// Two-qubit number-conserving gate on qubits (a, b). In the basis
/// |q_a q_b> = {00, 01, 10, 11}:
///   x_hat(t)      1, [[cos t, -i sin t], [-i sin t, cos t]], -1
///   y_hat(t)      1, [[cos t, -sin t], [sin t, cos t]], -1
///   interchange   1, [[0, 1], [1, 0]], 1
struct TwoQubitGate {
    GateKind kind = GateKind::interchange;
    double theta = 0.0;
    std::size_t a = 0;
    std::size_t b = 1;
};

Eigen::Matrix4cd gate_matrix(GateKind kind, double theta = 0.0);

void apply_gate(FockState& state, const TwoQubitGate& gate);

struct GateTally {
    std::uint64_t x_hat = 0;
    std::uint64_t y_hat = 0;
    std::uint64_t interchange = 0;

    std::uint64_t total() const { return x_hat + y_hat + interchange; }
    friend bool operator==(const GateTally&, const GateTally&) = default;
};

/// How spinor collisions become gates. X1(t) and X2(t) are applied as
/// x_hat(x_hat_sign * t); Y2(t) as y_hat(t). The default sign makes the
/// one-particle sector reproduce the spinor rotation exactly.
struct GateMapping {
    int x_hat_sign = -1;
};

/// Two gates per site: X1 on qubit pairs (0,2),(1,3); X2 and Y2 on (0,1),(2,3).
void sq_collision_step(FockState& state, CollisionKind kind, double theta,
                       const GateMapping& mapping = {}, GateTally* tally = nullptr);

/// Shifts the occupation of one component by one cell along `axis`
/// (direction +1 pulls from the + neighbour) with L - 1 adjacent
/// interchanges per line, which is the periodic cyclic shift.
void sq_stream_step(FockState& state, Axis axis, int direction, std::size_t component,
                    GateTally* tally = nullptr);

void apply(FockState& state, const OperatorProgram& program, const GateMapping& mapping = {},
           GateTally* tally = nullptr);

/// One full step of a rule; the scalar factor enters once per particle.
void apply_step(FockState& state, const StepRule& rule, const GateMapping& mapping = {},
                GateTally* tally = nullptr);

FockState embed_one_particle(const SpinorField& field);
SpinorField extract_one_particle(const FockState& state);

/// Expected number of particles on the four qubits of `site`.
double occupation_probability(const FockState& state, std::size_t site);

// Sector snapshot, little-endian: magic "QLGS", u32 version, u32 Lx, Ly, Lz,
// u32 n, u8 precision tag, then f64 (re, im) pairs in rank order.
void write_sector_snapshot(const FockState& state, std::ostream& out);
FockState read_sector_snapshot(std::istream& in);

}  // namespace qlga
