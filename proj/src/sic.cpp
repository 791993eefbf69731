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

#include "sicbasis/sic.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "sicbasis/json_io.hpp"

namespace sicbasis {

namespace {

const complex_t kOmega3 = std::polar(1.0, 2.0 * PI / 3.0);

PureState vec(std::initializer_list<complex_t> amps, double scale) {
  Vector v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index k = 0;
  for (complex_t a : amps) v(k++) = a * scale;
  return PureState(v);
}

SicEnsemble qubit_tetrahedron() {
  const double s2 = std::sqrt(2.0), r3 = 1.0 / std::sqrt(3.0);
  const complex_t w = kOmega3;
  SicEnsemble e;
  e.dim = 2;
  e.variant = SicVariant::QubitTetrahedron;
  e.states = {
      vec({1.0, 0.0}, 1.0), vec({1.0, s2}, r3), vec({1.0, w * s2}, r3),
      vec({1.0, w * w * s2}, r3)};
  // |1_0> and |2_0> are real; |3_0>* = |4_0>.
  e.conjugate_partner = {0, 1, 3, 2};
  return e;
}

SicEnsemble qutrit_standard() {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
  const complex_t w = kOmega3;
  SicEnsemble e;
  e.dim = 3;
  e.variant = SicVariant::QutritStandard;
  e.states = {
      vec({1.0, 0.0, 0.0}, 1.0),
      vec({1.0, i_ * s3, 0.0}, 0.5),
      vec({1.0, -i_ * s3, 0.0}, 0.5),
      vec({1.0, 1.0, s2}, 0.5),
      vec({1.0, 1.0, w * s2}, 0.5),
      vec({1.0, 1.0, w * w * s2}, 0.5),
      vec({1.0, -1.0, s2}, 0.5),
      vec({1.0, -1.0, w * s2}, 0.5),
      vec({1.0, -1.0, w * w * s2}, 0.5)};
  e.conjugate_partner = {0, 2, 1, 3, 5, 4, 6, 8, 7};
  return e;
}

SicEnsemble qutrit_symmetric() {
  const double r = 1.0 / std::sqrt(2.0);
  const complex_t w = kOmega3;
  SicEnsemble e;
  e.dim = 3;
  e.variant = SicVariant::QutritSymmetric;
  e.states = {
      vec({1.0, -1.0, 0.0}, r),    vec({1.0, -w, 0.0}, r),
      vec({1.0, -w * w, 0.0}, r),  vec({1.0, 0.0, -1.0}, r),
      vec({1.0, 0.0, -w}, r),      vec({1.0, 0.0, -w * w}, r),
      vec({0.0, 1.0, -1.0}, r),    vec({0.0, 1.0, -w}, r),
      vec({0.0, 1.0, -w * w}, r)};
  e.conjugate_partner = {0, 2, 1, 3, 5, 4, 6, 8, 7};
  return e;
}

double factorial_ratio(std::size_t n, unsigned t) {
  // t! (n-1)! / (n-1+t)! = 1 / C(n-1+t, t)
  double binom = 1.0;
  for (unsigned k = 1; k <= t; ++k) {
    binom *= static_cast<double>(n - 1 + k) / static_cast<double>(k);
  }
  return 1.0 / binom;
}

}  // namespace

std::string_view to_string(SicVariant v) {
  switch (v) {
    case SicVariant::QubitTetrahedron:
      return "tetrahedron";
    case SicVariant::QutritStandard:
      return "standard";
    case SicVariant::QutritSymmetric:
      return "symmetric";
    case SicVariant::UserFiducial:
      return "user";
  }
  return "user";
}

SicVariant sic_variant_from_string(std::string_view name) {
  if (name == "tetrahedron") return SicVariant::QubitTetrahedron;
  if (name == "standard") return SicVariant::QutritStandard;
  if (name == "symmetric") return SicVariant::QutritSymmetric;
  if (name == "user") return SicVariant::UserFiducial;
  throw std::invalid_argument("unknown SIC variant: " + std::string(name));
}

SicEnsemble SicEnsemble::conjugate() const {
  SicEnsemble out = *this;
  for (auto &s : out.states) s = s.conjugate();
  return out;
}

std::vector<PureState> CompletionSet::all() const {
  std::vector<PureState> out{base};
  out.insert(out.end(), complement.begin(), complement.end());
  return out;
}

std::vector<PureState> CompletionSet::conjugates() const {
  std::vector<PureState> out;
  for (const auto &s : all()) out.push_back(s.conjugate());
  return out;
}

SicEnsemble builtin_sic(std::size_t n, SicVariant variant) {
  if (n == 2 && variant == SicVariant::QubitTetrahedron) return qubit_tetrahedron();
  if (n == 3 && variant == SicVariant::QutritStandard) return qutrit_standard();
  if (n == 3 && variant == SicVariant::QutritSymmetric) return qutrit_symmetric();
  throw std::invalid_argument(
      "no built-in SIC for N=" + std::to_string(n) + " variant " +
      std::string(to_string(variant)));
}

SicEnsemble builtin_sic(std::size_t n) {
  if (n == 2) return qubit_tetrahedron();
  if (n == 3) return qutrit_standard();
  throw std::invalid_argument(
      "no built-in SIC for N=" + std::to_string(n) + "; supply a fiducial");
}

std::vector<PureState> qubit_dual_tetrahedron() {
  const double s2 = std::sqrt(2.0), r3 = 1.0 / std::sqrt(3.0);
  const complex_t w = kOmega3;
  return {
      vec({0.0, 1.0}, 1.0), vec({s2, -1.0}, r3), vec({s2, -w}, r3),
      vec({s2, -w * w}, r3)};
}

std::vector<PureState> wh_orbit_states(const PureState &fiducial) {
  const std::size_t n = fiducial.dim();
  const auto ni = static_cast<Eigen::Index>(n);
  std::vector<PureState> out;
  out.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Vector v(ni);
      // (X^a Z^b psi)_k = omega^{b (k - a)} psi_{k - a}
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = (k + n - a) % n;
        const double angle = 2.0 * PI * static_cast<double>(b * src % n) /
                             static_cast<double>(n);
        v(static_cast<Eigen::Index>(k)) =
            std::polar(1.0, angle) * fiducial[src];
      }
      out.emplace_back(PureState::normalized(v));
    }
  }
  return out;
}

SicEnsemble wh_orbit(const PureState &fiducial) {
  SicEnsemble e;
  e.dim = fiducial.dim();
  e.variant = SicVariant::UserFiducial;
  e.states = wh_orbit_states(fiducial);
  const SicReport rep = verify_sic(e);
  if (!rep.passes(tolerances().spectral)) {
    throw NotASicError(
        "fiducial does not generate a SIC (max overlap deviation " +
            std::to_string(rep.max_deviation) + ")",
        rep.max_deviation);
  }
  return e;
}

SicReport verify_sic(const std::vector<PureState> &states) {
  SicReport r;
  if (states.empty()) return r;
  const double n = static_cast<double>(states.front().dim());
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = 0; j < states.size(); ++j) {
      const double target = (i == j) ? 1.0 : 1.0 / (n + 1.0);
      const double ov = std::norm(inner(states[i], states[j]));
      r.max_deviation = std::max(r.max_deviation, std::abs(ov - target));
    }
  }
  if (states.size() != static_cast<std::size_t>(n * n)) {
    r.max_deviation = std::max(r.max_deviation, 1.0);
  }
  return r;
}

SicReport verify_sic(const SicEnsemble &e) { return verify_sic(e.states); }

double frame_potential(const std::vector<PureState> &states, unsigned t) {
  if (states.empty()) return 0.0;
  double sum = 0.0;
  for (const auto &a : states) {
    for (const auto &b : states) {
      sum += std::pow(std::norm(inner(a, b)), static_cast<double>(t));
    }
  }
  const double m = static_cast<double>(states.size());
  return sum / (m * m);
}

double haar_frame_potential(std::size_t n, unsigned t) {
  if (n == 0) throw std::invalid_argument("dimension must be positive");
  return factorial_ratio(n, t);
}

Matrix hilbert_schmidt_moment(std::size_t n, unsigned t) {
  const auto ni = static_cast<Eigen::Index>(n);
  const double nd = static_cast<double>(n);
  if (t == 1) return Matrix::Identity(ni, ni) / nd;
  if (t == 2) {
    return (nd * Matrix::Identity(ni * ni, ni * ni) + swap_operator(n)) /
           (nd * (nd * nd + 1.0));
  }
  throw std::invalid_argument("mixed-state moments are implemented for t <= 2");
}

MixedDesignReport mixed_design_moment(
    const std::vector<DensityMatrix> &states, unsigned t) {
  if (t == 0 || t > 2) {
    throw std::invalid_argument("mixed-state moments are implemented for t <= 2");
  }
  if (states.empty()) throw std::invalid_argument("empty ensemble");
  const std::size_t n = states.front().dim();
  MixedDesignReport r;
  r.reference = hilbert_schmidt_moment(n, t);
  r.moment = Matrix::Zero(r.reference.rows(), r.reference.cols());
  for (const auto &rho : states) {
    if (rho.dim() != n) throw DimensionError("mixed ensemble dimension mismatch");
    r.moment += (t == 1) ? rho.matrix() : tensor(rho.matrix(), rho.matrix());
  }
  r.moment /= static_cast<double>(states.size());
  r.deviation = (r.moment - r.reference).norm();
  return r;
}

std::vector<DensityMatrix> bloch_tetrahedron(double radius) {
  std::vector<DensityMatrix> out;
  const Matrix half_id = Matrix::Identity(2, 2) * 0.5;
  for (const auto &s : qubit_tetrahedron().states) {
    out.emplace_back((1.0 - radius) * half_id + radius * s.projector());
  }
  return out;
}

CompletionSet completion(const PureState &base) {
  const std::size_t n = base.dim();
  const auto ni = static_cast<Eigen::Index>(n);
  const Vector &b = base.amplitudes();
  complex_t phase = 1.0;
  if (std::abs(b(0)) > 1e-14) phase = b(0) / std::abs(b(0));
  // H e_0 = b / phase with a single Householder reflection.
  Vector v = b / phase;
  v(0) -= 1.0;
  Matrix h = Matrix::Identity(ni, ni);
  const double vn = v.norm();
  if (vn > 1e-14) {
    v /= vn;
    h -= 2.0 * v * v.adjoint();
  }
  CompletionSet out{base, {}};
  for (Eigen::Index k = 1; k < ni; ++k) {
    out.complement.emplace_back(PureState::normalized(h.col(k)));
  }
  return out;
}

PureState parse_fiducial(std::string_view json_text) {
  const auto j = json_io::json::parse(json_text);
  const auto dim = j.at("dim").get<std::size_t>();
  const Vector amps = json_io::vector_from_json(j.at("amplitudes"));
  if (static_cast<std::size_t>(amps.size()) != dim) {
    throw DimensionError("fiducial amplitude count does not match dim");
  }
  return PureState::normalized(amps);
}

PureState read_fiducial(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fiducial file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fiducial(ss.str());
}

std::string fiducial_to_json(const PureState &state) {
  json_io::json j;
  j["dim"] = state.dim();
  j["amplitudes"] = json_io::vector_to_json(state.amplitudes());
  return j.dump();
}

}  // namespace sicbasis
