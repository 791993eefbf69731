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

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

/**
 * Dense complex linear algebra for small bipartite systems.
 *
 * Index convention: for a bipartite space H_A (x) H_B the first tensor
 * factor A is the slow index, i.e. |a,b> sits at position a * dB + b.
 * Every partial trace, reshuffle and swap in the library uses it.
 */
namespace sicbasis {

using complex_t = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr complex_t i_{0.0, 1.0};
inline constexpr double PI = 3.14159265358979323846;

struct Tolerances {
  double structural = 1e-12;
  double spectral = 1e-10;
  double psd_floor = -1e-10;
};

/** Library-wide tolerances; override via set_tolerances (CLI --tol). */
const Tolerances &tolerances();
void set_tolerances(const Tolerances &tol);

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotHermitianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotUnitaryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/** Unit-norm complex vector. */
class PureState {
 public:
  /** Throws std::invalid_argument unless the norm is 1 within 1e-12. */
  explicit PureState(Vector amplitudes);
  /** Rescales a nonzero vector to unit norm. */
  static PureState normalized(const Vector &v);

  std::size_t dim() const { return static_cast<std::size_t>(amp_.size()); }
  const Vector &amplitudes() const { return amp_; }
  complex_t operator[](std::size_t k) const { return amp_(static_cast<Eigen::Index>(k)); }

  /** Entrywise complex conjugate in the computational basis. */
  PureState conjugate() const;
  /** |psi><psi| */
  Matrix projector() const;

 private:
  Vector amp_;
};

complex_t inner(const PureState &a, const PureState &b);

/** Hermitian, PSD, unit-trace matrix. */
class DensityMatrix {
 public:
  /** Throws NotHermitianError / std::invalid_argument on invariant failure. */
  explicit DensityMatrix(Matrix entries);
  static DensityMatrix from_pure(const PureState &psi);
  /** Clips eigenvalues below zero and renormalizes the trace. */
  static DensityMatrix project_psd(const Matrix &hermitian);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const Matrix &matrix() const { return m_; }
  double purity() const;

 private:
  Matrix m_;
};

struct SchmidtData {
  /** Squared Schmidt coefficients, descending, summing to one. */
  RealVector coefficients;
  std::vector<Vector> left;
  std::vector<Vector> right;
};

struct EntanglementReport {
  double purity;
  double linear_entropy;
  /** Natural logarithm. */
  double von_neumann_entropy;
  /** arcsin of the largest Schmidt coefficient (not of its square root). */
  double schmidt_angle;
};

enum class Subsystem { A, B };

/** Upper bound on the number of matrix entries produced by tensor(). */
inline constexpr std::size_t kMaxTensorEntries = std::size_t{1} << 20;

Matrix tensor(const Matrix &a, const Matrix &b);
Vector tensor(const Vector &a, const Vector &b);
PureState tensor(const PureState &a, const PureState &b);
DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b);

/** Partial trace of an arbitrary operator on H_A (x) H_B. */
Matrix partial_trace(const Matrix &op, std::size_t dA, std::size_t dB, Subsystem keep);
DensityMatrix partial_trace(
    const DensityMatrix &rho, std::size_t dA, std::size_t dB, Subsystem keep);
/** Reduced state of a pure bipartite vector without forming |psi><psi|. */
DensityMatrix reduced_state(
    const PureState &psi, std::size_t dA, std::size_t dB, Subsystem keep);

/** Eigenvalues (ascending) of a Hermitian matrix. */
RealVector hermitian_eigenvalues(const Matrix &h);
/** Sum of absolute eigenvalues of a Hermitian matrix. */
double trace_norm(const Matrix &h);
double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma);
/** Same as above on raw Hermitian matrices; throws NotHermitianError. */
double trace_distance(const Matrix &rho, const Matrix &sigma);
double hilbert_schmidt_distance(const Matrix &a, const Matrix &b);

SchmidtData schmidt(const PureState &state, std::size_t dA, std::size_t dB);
EntanglementReport entanglement_report(
    const PureState &state, std::size_t dA, std::size_t dB);

bool is_hermitian(const Matrix &m, double tol);
bool is_unitary(const Matrix &m, double tol);
/** Largest entrywise deviation of m m^dagger from the identity. */
double unitarity_defect(const Matrix &m);

/** SWAP on C^n (x) C^n. */
Matrix swap_operator(std::size_t n);
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

/**
 * Entrywise distance after removing the global phase of b relative to a.
 * The phase is fixed on the largest-modulus entry of a.
 */
double phase_aligned_distance(const Matrix &a, const Matrix &b);

/** Haar-random unitary (QR of a Ginibre matrix with phase fix). */
Matrix haar_unitary(std::size_t n, std::mt19937_64 &rng);
PureState haar_state(std::size_t n, std::mt19937_64 &rng);
/** Hilbert-Schmidt random mixed state via partial trace of a Haar state. */
DensityMatrix hs_random_state(std::size_t n, std::mt19937_64 &rng);

}  // namespace sicbasis
