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
#include <cstdint>
#include <string>
#include <vector>

#include "sicbasis/basis.hpp"
#include "sicbasis/circuits.hpp"
#include "sicbasis/linalg.hpp"

namespace sicbasis {

struct Povm {
  std::vector<Matrix> effects;

  std::size_t dim() const { return effects.empty() ? 0 : static_cast<std::size_t>(effects[0].rows()); }
  /** Largest deviation of sum(effects) from I and most negative eigenvalue. */
  double completeness_defect() const;
  double min_eigenvalue() const;
  /** Throws std::invalid_argument unless complete and PSD within tol. */
  void validate(double tol = 1e-10) const;
};

/** Effects rho_i / N with rho_i the reductions of the basis rows on `side`. */
Povm rescaled_povm(const BipartiteBasis &basis, Subsystem side);
Povm rescaled_povm(const Matrix &bras, std::size_t n, Subsystem side);
/** SIC projectors scaled by 1/N. */
Povm sic_povm(const SicEnsemble &sic);

std::vector<double> predicted_probabilities(const DensityMatrix &sigma, const Povm &povm);

/** sigma = a sum p_i E_i - b I for effects built at Schmidt weight lambda. */
struct InversionCoefficients {
  double a = 0.0;
  double b = 0.0;
};

/** Throws std::invalid_argument when lambda = 1/N (uninformative effects). */
InversionCoefficients inversion_coefficients(std::size_t n, double lambda);

struct Reconstruction {
  /** Linear-inversion estimate, Hermitian and unit trace but maybe not PSD. */
  Matrix raw;
  double min_eigenvalue = 0.0;
  /** True when raw has an eigenvalue below the PSD floor. */
  bool negative = false;

  /** Eigenvalue clipping plus renormalization; only on request. */
  DensityMatrix projected() const;
};

Reconstruction reconstruct(
    const std::vector<double> &p, const Povm &povm, std::size_t n, double lambda);

enum class Scheme { Ejm, Sic };

/** Delta sigma = a sum dp_i E_i for the qubit EJM (a = 8) or SIC (a = 6). */
Matrix error_propagation(const std::vector<double> &dp, Scheme scheme);
/** The prefactor a(N, lambda) for EJM-type effects at lambda_max, and for SIC at lambda = 1. */
double amplification(std::size_t n, Scheme scheme);

struct HelstromResult {
  double bound = 0.0;
  Matrix p_rho;
  Matrix p_sigma;
  Matrix p_null;
};

/** Projectors onto the positive, negative and null eigenspaces of rho - sigma. */
HelstromResult helstrom(const DensityMatrix &rho, const DensityMatrix &sigma);
/** Fraction of successful equal-prior guesses; null outcomes are coin flips. */
double simulate_helstrom(
    const DensityMatrix &rho, const DensityMatrix &sigma, std::size_t trials,
    std::uint64_t seed);

std::vector<std::uint64_t> sample_shots(
    const std::vector<double> &p, std::uint64_t shots, std::uint64_t seed);

/**
 * Qubit 0 holds the unknown state S, qubits 1 and 2 (A, C) a Bell pair.
 * The EJM circuit acts on (S, A) with S as its first wire; the outcome index
 * is 2 s + a. The statistics equal the side-B effects of build_optimal.
 */
CircuitSpec bell_ancilla_circuit();

/** Exact outcome distribution of the three-qubit procedure. */
std::vector<double> bell_ancilla_scheme(const DensityMatrix &sigma);

struct CalibrationRecord {
  std::string name;
  std::array<double, 3> readout{};
  std::array<double, 3> one_qubit{};
  double cnot01 = 0.0;
  double cnot12 = 0.0;

  /** Throws std::invalid_argument unless every rate lies in [0, 0.5]. */
  void validate() const;
  static CalibrationRecord melbourne();
  static CalibrationRecord oursense();
  static CalibrationRecord ideal();
};

std::string calibration_to_json(const CalibrationRecord &c);
CalibrationRecord calibration_from_json(const std::string &text);

/** Counted operations for the success-rate product. */
struct OsrInventory {
  std::array<int, 3> readouts{1, 1, 0};
  std::array<int, 3> one_qubit{2, 3, 0};
  int cnot01 = 2;
  int cnot12 = 2;
};

double estimate_success_rate(
    const CalibrationRecord &calib, const OsrInventory &inv = OsrInventory{});

enum class MubState { Zero, One, Plus, Minus, YPlus, YMinus };

inline constexpr std::array<MubState, 6> kMubStates{
    MubState::Zero, MubState::One, MubState::Plus,
    MubState::Minus, MubState::YPlus, MubState::YMinus};

/** |0>, |1>, |+>, |->, and the y eigenstates (|0> + i|1>)/sqrt2, (|0> - i|1>)/sqrt2. */
DensityMatrix mub_state(MubState s);
std::string mub_label(MubState s);

/** Printed predicted percentages for the six inputs, in kMubStates order. */
const std::array<std::array<double, 4>, 6> &table2_predicted();

struct StateRun {
  std::string label;
  std::vector<double> predicted;
  std::vector<double> noisy;
  std::vector<std::uint64_t> counts;
  Reconstruction reconstruction;
  double hs_deviation = 0.0;
};

struct TomographyReport {
  std::vector<StateRun> runs;
  double mean_hs_deviation = 0.0;
  double success_rate = 1.0;
};

/** Outcome distribution of the noisy three-qubit circuit for input sigma. */
std::vector<double> noisy_distribution(const DensityMatrix &sigma, const CalibrationRecord &calib);

/** Shot-level run over the six inputs; input k draws from seed_seq{seed, k}. */
TomographyReport noisy_experiment(
    const CalibrationRecord &calib, std::uint64_t shots, std::uint64_t seed);

}  // namespace sicbasis
