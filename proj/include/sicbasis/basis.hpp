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
#include <optional>
#include <vector>

#include "sicbasis/linalg.hpp"
#include "sicbasis/sic.hpp"

namespace sicbasis {

struct LambdaBounds {
  double min;
  double max;
};

/** Closed-form range of the shared Schmidt coefficient. Requires N >= 2. */
LambdaBounds lambda_bounds(std::size_t n);

/**
 * Coefficients of the orthogonality condition A lam + B + C sqrt(lam - lam^2) = 0
 * between two basis states built from distinct SIC vectors.
 */
/** Coefficients of B - A lam + C sqrt(lam - lam^2) = 0 and its roots. */
struct OrthogonalitySolution {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  /** (lambda_plus, lambda_minus); empty when no real solution exists. */
  std::optional<std::pair<double, double>> lambdas;
};

OrthogonalitySolution orthogonality_solution(std::size_t n, double phi);

/**
 * Rows of `matrix` are the bras <psi_i|, so the ket of row i is the
 * conjugate of that row. `lambda` is the weight on |i_0>|i_0*>, and the
 * remaining N-1 terms carry e^{i phase}. phase = pi gives the minus-sign form.
 */
struct BipartiteBasis {
  std::size_t n = 0;
  Matrix matrix;
  double lambda = 0.0;
  double phase = 0.0;
  SicVariant source = SicVariant::UserFiducial;

  std::size_t size() const { return n * n; }
  PureState state(std::size_t i) const;
  std::vector<PureState> states() const;
};

/** |psi> = sqrt(lam) |b_0 b_0*> + e^{i phi} sqrt((1-lam)/(N-1)) sum_{j>0} |b_j b_j*>. */
PureState basis_state(const CompletionSet &c, double lambda, double phi);

/** Throws NotUnitaryError when (lambda, phi) does not give an orthonormal set. */
BipartiteBasis build_basis(const SicEnsemble &sic, double lambda, double phi);
/** Same with caller-provided completions, one per SIC state. */
BipartiteBasis build_basis(
    const SicEnsemble &sic, double lambda, double phi,
    const std::vector<CompletionSet> &completions);
/** lambda_max with phi = pi. */
BipartiteBasis build_optimal(const SicEnsemble &sic);

/** sum_j |x_j>|x_j*> over an orthonormal completion. */
Vector conjugate_pair_sum(const CompletionSet &c);
/** (sqrt(N) |psi_+> with |psi_+> = sum_j |jj>/sqrt(N)). */
Vector scaled_max_entangled(std::size_t n);

/**
 * Row i (1-based) written as
 * (sqrt(lam) - e^{i phi} c) |i_0 i_0*> + e^{i phi} c sqrt(N) |psi_+>,
 * c = sqrt((1-lam)/(N-1)). Returned as a ket.
 */
PureState superposition_form(
    const SicEnsemble &sic, std::size_t i, double lambda, double phi = PI);

/** Closed-form single-sided distance ((N-2) sqrt(N+1) + 2) / N^{3/2}. */
double max_single_sided_distance(std::size_t n);

struct SimplexReport {
  std::vector<DensityMatrix> side_a;
  std::vector<DensityMatrix> side_b;
  Eigen::MatrixXd distances_a;
  Eigen::MatrixXd distances_b;
  double common_distance = 0.0;
  /** max |D_ij - common| over i != j on both sides. */
  double max_spread = 0.0;
  /** max |D^A_ij - D^B_ij|. */
  double side_mismatch = 0.0;

  bool valid(double tol = 1e-9) const { return max_spread < tol; }
};

SimplexReport simplex_report(const BipartiteBasis &basis);
/** Rows of `bras` are <psi_i| on C^n (x) C^n. */
SimplexReport simplex_report(const Matrix &bras, std::size_t n);

/** Bloch vector (x, y, z) of a qubit density matrix. */
Eigen::Vector3d bloch_vector(const DensityMatrix &rho);

struct PuritySeries {
  double sic = 0.0;
  double ejm = 0.0;
  double mixed_design = 0.0;
};

/** Mean purities of the qubit SIC, EJM reductions and r = sqrt(3/5) tetrahedron. */
PuritySeries purity_series_check();

/** Per-row |a_ij|^2 and arg(a_ij), with the row-sum certificate. */
struct ClockData {
  Eigen::MatrixXd radius;
  Eigen::MatrixXd phase;
  RealVector row_sums;
  double max_row_sum_error = 0.0;
};

ClockData clock_data(const Matrix &u);

enum class ColumnOrder { Identity, Swap };

/**
 * Result of matching a constructed matrix against a printed one.
 * Rows are matched as a set; `row_map[r]` is the reference row matched
 * to row r of the candidate.
 */
struct Equivalence {
  double max_difference = 0.0;
  std::vector<std::size_t> row_map;
  ColumnOrder columns = ColumnOrder::Identity;
  bool bijective = false;

  bool holds(double tol) const { return bijective && max_difference <= tol; }
};

/** Each row scaled so its first entry of maximal modulus is real positive. */
Matrix canonical_rows(const Matrix &m, double tie_tol = 1e-9);
Equivalence compare_rows(
    const Matrix &candidate, const Matrix &reference, ColumnOrder columns);
/** Best of the identity and SWAP column conventions. */
Equivalence best_equivalence(const Matrix &candidate, const Matrix &reference);

/** Smallest single-sided distance over all pairs and both sides. */
double min_single_sided_distance(const Matrix &u);

struct ProbeReport {
  double best_distance = 0.0;
  std::size_t best_restart = 0;
  std::size_t converged = 0;
  std::size_t discarded = 0;
  Matrix best_unitary;
  std::vector<double> restart_values;
};

struct ProbeOptions {
  std::size_t restarts = 200;
  std::uint64_t seed = 1;
  /** Softmin temperature at the end of the annealed ascent. */
  double temperature = 1e-3;
  /** Temperature reached during the final polish. */
  double polish_temperature = 1e-7;
  std::size_t steps_per_stage = 200;
  /** Restarts whose distances are not equal within this are discarded. */
  double equidistance_tol = 1e-6;
  /** Worker threads; 0 picks from SICBASIS_THREADS or the hardware. */
  std::size_t threads = 0;
};

/** Two-qubit search for the largest common single-sided distance. */
ProbeReport conjecture1_probe(const ProbeOptions &opt);
/** A single ascent from a given order-4 unitary; the start is kept if better. */
ProbeReport conjecture1_probe_from(const Matrix &start, const ProbeOptions &opt);

/** Worker count from SICBASIS_THREADS, else hardware concurrency. */
std::size_t worker_threads(std::size_t requested = 0);

}  // namespace sicbasis
