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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sicbasis/linalg.hpp"

namespace sicbasis {

enum class SicVariant {
  QubitTetrahedron,
  QutritStandard,
  QutritSymmetric,
  UserFiducial,
};

std::string_view to_string(SicVariant v);
/** Accepts "tetrahedron", "standard", "symmetric", "user". */
SicVariant sic_variant_from_string(std::string_view name);

class NotASicError : public std::runtime_error {
 public:
  NotASicError(const std::string &what, double deviation)
      : std::runtime_error(what), deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

/**
 * N^2 unit vectors in C^N with |<i|j>|^2 = (1 + N delta_ij) / (N + 1).
 *
 * `conjugate_partner[i] = j` records that the entrywise conjugate of
 * state i is exactly state j, for catalogs where the paired listing is
 * known. It is empty for ensembles without such metadata.
 */
struct SicEnsemble {
  std::size_t dim = 0;
  SicVariant variant = SicVariant::UserFiducial;
  std::vector<PureState> states;
  std::vector<std::size_t> conjugate_partner;

  SicEnsemble conjugate() const;
};

/** Orthonormal completion {|i_0>, ..., |i_{N-1}>} of a base vector. */
struct CompletionSet {
  PureState base;
  std::vector<PureState> complement;

  std::vector<PureState> all() const;
  std::vector<PureState> conjugates() const;
};

struct SicReport {
  double max_deviation = 0.0;
  bool passes(double tol) const { return max_deviation <= tol; }
};

struct MixedDesignReport {
  Matrix moment;
  Matrix reference;
  /** Frobenius norm of moment - reference. */
  double deviation = 0.0;
};

SicEnsemble builtin_sic(std::size_t n, SicVariant variant);
/** Default variant per dimension: tetrahedron for 2, standard for 3. */
SicEnsemble builtin_sic(std::size_t n);

/** The dual tetrahedron |i_1> with <i_0|i_1> = 0 for the qubit catalog. */
std::vector<PureState> qubit_dual_tetrahedron();

/** Weyl-Heisenberg orbit X^a Z^b |fiducial>, a-major order. */
SicEnsemble wh_orbit(const PureState &fiducial);
/** Orbit without the SIC certificate; never throws on non-fiducials. */
std::vector<PureState> wh_orbit_states(const PureState &fiducial);

SicReport verify_sic(const SicEnsemble &e);
SicReport verify_sic(const std::vector<PureState> &states);

double frame_potential(const std::vector<PureState> &states, unsigned t);
/** Haar value t! (N-1)! / (N-1+t)!. */
double haar_frame_potential(std::size_t n, unsigned t);

/** t = 1 or 2; the t = 2 reference is (N I + S) / (N (N^2 + 1)). */
MixedDesignReport mixed_design_moment(
    const std::vector<DensityMatrix> &states, unsigned t);
Matrix hilbert_schmidt_moment(std::size_t n, unsigned t);

/** Qubit states (1 - r) I/2 + r |i_0><i_0| on the catalog tetrahedron. */
std::vector<DensityMatrix> bloch_tetrahedron(double radius);

/** Householder completion pinned to the base vector. */
CompletionSet completion(const PureState &base);

/** Fiducial file: {"dim": N, "amplitudes": [[re, im], ...]}. */
PureState read_fiducial(const std::string &path);
PureState parse_fiducial(std::string_view json_text);
std::string fiducial_to_json(const PureState &state);

}  // namespace sicbasis
