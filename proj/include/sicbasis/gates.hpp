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

#include <cstdint>
#include <vector>

#include "sicbasis/linalg.hpp"

namespace sicbasis {

struct GatePoint {
  double ep = 0.0;
  double gt = 0.0;
};

/** (U^R)_{(i,k),(j,l)} = U_{(i,j),(k,l)}; order must be a perfect square. */
Matrix reshuffle(const Matrix &u);
/** Transpose on the second factor: (U^G)_{(i,j),(k,l)} = U_{(i,l),(k,j)}. */
Matrix partial_transpose(const Matrix &u);

/**
 * E(U) = 1 - Tr[(U^R U^R^dagger)^2] / N^4, the squared operator-Schmidt
 * weights. Throws NotUnitaryError when U is not unitary within 1e-10.
 */
double op_linear_entropy(const Matrix &u);
GatePoint ep_gt(const Matrix &u);

/** U SWAP == conj(U) within tol. */
bool swap_symmetry(const Matrix &u, double tol = 1e-10);

/** U, U^R and U^G all unitary within tol. */
bool is_2unitary(const Matrix &u, double tol = 1e-9);

enum class SweepMode { Exhaustive, Sampled };

struct SweepOptions {
  SweepMode mode = SweepMode::Exhaustive;
  /** Number of random row orders in sampled mode. */
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  double dedup_tol = 1e-9;
  /** Permutations with |e_p - 1| below this get the full 2-unitarity test. */
  double ep_one_tol = 1e-6;
  std::size_t threads = 0;
};

struct SweepResult {
  /** Deduplicated and sorted by (ep, gt). */
  std::vector<GatePoint> distinct_points;
  std::size_t total_permutations = 0;
  std::size_t two_unitary_count = 0;
};

/** Largest order accepted by the exhaustive sweep. */
inline constexpr Eigen::Index kMaxExhaustiveOrder = 9;

/** Row permutations of U. Throws std::invalid_argument for exhaustive order > 9. */
SweepResult permutation_sweep(const Matrix &u, const SweepOptions &opt = {});

/**
 * Clusters points whose coordinates agree within tol: single linkage on ep,
 * then on gt inside each ep group. Returns one sorted representative per cluster.
 */
std::vector<GatePoint> dedup_points(std::vector<GatePoint> points, double tol);

}  // namespace sicbasis
