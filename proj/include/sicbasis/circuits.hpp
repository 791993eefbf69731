// Copyright 2026 The sicbasis Authors
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

#include <array>
#include <string>
#include <vector>

#include "sicbasis/linalg.hpp"

/**
 * Two-qubit gate decomposition and small circuit simulation.
 *
 * Rotations: Ry(t) = exp(-i t Y / 2), Rz(t) = exp(-i t Z / 2).
 * Wire 0 is the first tensor factor (slow index).
 */
namespace sicbasis {

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Phases = std::array<double, 3>;

Mat2 rot_y(double theta);
Mat2 rot_z(double theta);
Mat2 hadamard();
/** exp(i (p0 XX + p1 YY + p2 ZZ)). */
Mat4 nonlocal_core(const Phases &p);
Mat4 kron2(const Mat2 &a, const Mat2 &b);

/**
 * U = e^{i global_phase} (v1 (x) v2) exp(i sum phi_k s_k s_k) (w1 (x) w2).
 * `raw` is the triple produced by the magic-basis diagonalization before any
 * Weyl-chamber moves; `canonical` satisfies pi/4 >= c0 >= c1 >= |c2|.
 * The locals and phase refer to `canonical`.
 */
struct CartanCoordinates {
  Phases raw{};
  Phases canonical{};
  Mat2 v1, v2, w1, w2;
  double global_phase = 0.0;

  Mat4 reconstruct() const;
};

/** Throws NotUnitaryError on non-unitary input. */
CartanCoordinates cartan_decompose(const Mat4 &u);

/**
 * Locals realizing U with a prescribed core triple, which must be locally
 * equivalent to U's. The returned coordinates have canonical = target.
 */
CartanCoordinates cartan_with_phases(const Mat4 &u, const Phases &target);

/** Makhlin local invariants (Re g1, Im g1, g2). */
std::array<double, 3> makhlin_invariants(const Mat4 &u);

struct EulerZYZ {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double global_phase = 0.0;
};

/** V = e^{i phase} Rz(x) Ry(y) Rz(z); y in [0, pi], z = 0 when y is 0 or pi. */
EulerZYZ euler_zyz(const Mat2 &v);

enum class GateKind { RotY, RotZ, Hadamard, CNOT, Measure };

struct Gate {
  GateKind kind = GateKind::RotZ;
  std::size_t target = 0;
  /** Only used by CNOT. */
  std::size_t control = 0;
  double angle = 0.0;
};

struct CircuitSpec {
  std::vector<std::string> wires;
  /** Applied first to last. */
  std::vector<Gate> gates;

  /** Throws std::invalid_argument on unknown wires or non-finite angles. */
  void validate() const;
  std::size_t cnot_count() const;

  CircuitSpec &ry(std::size_t w, double t);
  CircuitSpec &rz(std::size_t w, double t);
  CircuitSpec &h(std::size_t w);
  CircuitSpec &cnot(std::size_t control, std::size_t target);
  CircuitSpec &measure(std::size_t w);
  /** Appends a local unitary as Rz(z) Ry(y) Rz(x) in time order. */
  CircuitSpec &local(std::size_t w, const Mat2 &v);
};

/** Dense unitary of the circuit; Measure gates act as identity. */
Matrix simulate_circuit(const CircuitSpec &c);
Vector simulate_circuit(const CircuitSpec &c, const Vector &input);

/**
 * Three-CNOT circuit equal to nonlocal_core(p) up to global phase:
 * Rz(-pi/2) on wire 0, CNOT(1->0), Ry(b) on 1, CNOT(0->1), Rz(g) on 0 and
 * Ry(a) on 1, CNOT(1->0), Rz(pi/2) on 1, with a = 2 p0 + pi/2,
 * b = -2 p1 - pi/2, g = -2 p2 - pi/2.
 */
CircuitSpec synthesize_nonlocal(const Phases &p);

/**
 * The bare CNOT(1->0) [Rz(g) (x) Ry(a)] CNOT(0->1) (I (x) Ry(b)) CNOT(1->0)
 * skeleton with a = 2 p2 - pi/2, b = pi/2 - 2 p0, g = 2 p1 - pi/2. It is
 * locally equivalent to the mirror nonlocal_core(-p), not to nonlocal_core(p).
 */
CircuitSpec nonlocal_skeleton(const Phases &p);

/** Full circuit for a two-qubit unitary: locals, three CNOTs, locals. */
CircuitSpec synthesize(const Mat4 &u);

/** Circuit whose unitary equals the EJM basis matrix up to global phase. */
CircuitSpec ejm_circuit();

/** Entrywise conjugate circuit: Rz angles negated, everything else kept. */
CircuitSpec conjugate_circuit(const CircuitSpec &c);

std::string circuit_to_json(const CircuitSpec &c);
CircuitSpec circuit_from_json(const std::string &text);

}  // namespace sicbasis
