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

#include <catch_amalgamated.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "sicbasis/sic.hpp"

using namespace sicbasis;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<SicEnsemble> all_builtin() {
  return {builtin_sic(2, SicVariant::QubitTetrahedron), builtin_sic(3, SicVariant::QutritStandard),
          builtin_sic(3, SicVariant::QutritSymmetric)};
}

}  // namespace

TEST_CASE("built-in ensembles have N^2 unit vectors with overlap 1/(N+1)") {
  for (const auto &e : all_builtin()) {
    const std::size_t n = e.dim;
    REQUIRE(e.states.size() == n * n);
    for (std::size_t i = 0; i < e.states.size(); ++i) {
      CHECK_THAT(e.states[i].amplitudes().norm(), WithinAbs(1.0, 1e-14));
      for (std::size_t j = i + 1; j < e.states.size(); ++j) {
        const double ov = std::norm(e.states[i].amplitudes().dot(e.states[j].amplitudes()));
        CHECK_THAT(ov, WithinAbs(1.0 / (double(n) + 1.0), 1e-12));
      }
    }
    CHECK(verify_sic(e).passes(1e-12));
  }
}

TEST_CASE("SIC projectors resolve the identity") {
  for (const auto &e : all_builtin()) {
    Matrix sum = Matrix::Zero(e.dim, e.dim);
    for (const auto &s : e.states) sum += s.projector();
    CHECK((sum / double(e.dim) - Matrix::Identity(e.dim, e.dim)).norm() < 1e-12);
  }
}

TEST_CASE("conjugate partners are conjugates up to phase") {
  for (const auto &e : all_builtin()) {
    REQUIRE(e.conjugate_partner.size() == e.states.size());
    for (std::size_t i = 0; i < e.states.size(); ++i) {
      const Vector a = e.states[i].amplitudes().conjugate();
      const Vector b = e.states[e.conjugate_partner[i]].amplitudes();
      CHECK_THAT(std::abs(a.dot(b)), WithinAbs(1.0, 1e-12));
    }
  }
}

TEST_CASE("frame potential meets the Welch bound for SICs") {
  for (const auto &e : all_builtin()) {
    // Direct double sum, then normalized by M^2.
    double fp = 0.0;
    for (const auto &a : e.states)
      for (const auto &b : e.states) fp += std::pow(std::norm(a.amplitudes().dot(b.amplitudes())), 2);
    fp /= double(e.states.size() * e.states.size());
    const double n = double(e.dim);
    CHECK_THAT(frame_potential(e.states, 2), WithinAbs(fp, 1e-12));
    CHECK_THAT(haar_frame_potential(e.dim, 2), WithinAbs(2.0 / (n * (n + 1.0)), 1e-15));
    CHECK_THAT(fp, WithinAbs(2.0 / (n * (n + 1.0)), 1e-10));
  }
}

TEST_CASE("random ensembles sit above the Welch bound") {
  std::mt19937_64 rng(17);
  std::vector<PureState> s;
  for (int k = 0; k < 4; ++k) s.push_back(haar_state(2, rng));
  CHECK(frame_potential(s, 2) > haar_frame_potential(2, 2) + 1e-6);
}

TEST_CASE("Weyl-Heisenberg orbit of a fiducial") {
  // Qubit fiducial with Bloch vector (1, 1, 1)/sqrt3.
  const double th = std::acos(1.0 / std::sqrt(3.0));
  Vector q(2);
  q << std::cos(th / 2), std::exp(i_ * (PI / 4)) * std::sin(th / 2);
  // The standard qutrit ensemble is a SIC but not an orbit of its first vector.
  std::vector<SicEnsemble> seeds{SicEnsemble{2, SicVariant::UserFiducial, {PureState(q)}, {}},
                                 builtin_sic(3, SicVariant::QutritSymmetric)};
  for (const auto &e : seeds) {
    const SicEnsemble orbit = wh_orbit(e.states[0]);
    CHECK(orbit.states.size() == e.dim * e.dim);
    CHECK(verify_sic(orbit).passes(1e-12));
    // (X^a Z^b psi)_k with a-major ordering: a = 0, b = 1 is the pure Z shift.
    const Vector &f = e.states[0].amplitudes();
    const complex_t w = std::exp(2.0 * PI * i_ / double(e.dim));
    for (std::size_t k = 0; k < e.dim; ++k) {
      CHECK(std::abs(orbit.states[1][k] - std::pow(w, double(k)) * f(k)) < 1e-12);
    }
  }
  CHECK_THROWS_AS(wh_orbit(PureState(Vector::Unit(3, 0))), NotASicError);
  CHECK(verify_sic(builtin_sic(3, SicVariant::QutritStandard)).passes(1e-12));
}

TEST_CASE("fiducial JSON round trip and file input") {
  const PureState f = builtin_sic(3, SicVariant::QutritSymmetric).states[0];
  const PureState back = parse_fiducial(fiducial_to_json(f));
  CHECK((back.amplitudes() - f.amplitudes()).norm() < 1e-15);

  const auto path = std::filesystem::temp_directory_path() / "sicbasis_fiducial_test.json";
  std::ofstream(path) << fiducial_to_json(f);
  CHECK((read_fiducial(path.string()).amplitudes() - f.amplitudes()).norm() < 1e-15);
  std::filesystem::remove(path);

  CHECK_THROWS(parse_fiducial(R"({"dim": 3, "amplitudes": [[1, 0]]})"));
  CHECK_THROWS(read_fiducial("/nonexistent/fiducial.json"));
}

TEST_CASE("completion is an orthonormal basis led by the base vector") {
  std::mt19937_64 rng(31);
  for (std::size_t n : {2, 3, 5}) {
    const PureState b = haar_state(n, rng);
    const CompletionSet c = completion(b);
    const auto all = c.all();
    REQUIRE(all.size() == n);
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m.col(k) = all[k].amplitudes();
    CHECK((m.adjoint() * m - Matrix::Identity(n, n)).norm() < 1e-12);
    CHECK(std::abs(std::abs(all[0].amplitudes().dot(b.amplitudes())) - 1.0) < 1e-12);
  }
}

TEST_CASE("variant names") {
  for (auto v : {SicVariant::QubitTetrahedron, SicVariant::QutritStandard,
                 SicVariant::QutritSymmetric}) {
    CHECK(sic_variant_from_string(to_string(v)) == v);
  }
  CHECK_THROWS(sic_variant_from_string("octahedron"));
  CHECK_THROWS(builtin_sic(4));
}

TEST_CASE("dual tetrahedron is the conjugate ensemble") {
  const auto dual = qubit_dual_tetrahedron();
  REQUIRE(dual.size() == 4);
  CHECK(verify_sic(dual).passes(1e-12));
  const SicEnsemble e = builtin_sic(2);
  for (std::size_t i = 0; i < 4; ++i) {
    // Dual Bloch vectors point opposite to the originals.
    CHECK_THAT(std::norm(dual[i].amplitudes().dot(e.states[i].amplitudes())), WithinAbs(0.0, 1e-12));
  }
}

TEST_CASE("Hilbert-Schmidt moments against sampling") {
  std::mt19937_64 rng(101);
  const std::size_t n = 2, samples = 40000;
  Matrix m1 = Matrix::Zero(2, 2), m2 = Matrix::Zero(4, 4);
  for (std::size_t k = 0; k < samples; ++k) {
    const Matrix r = hs_random_state(n, rng).matrix();
    m1 += r;
    m2 += tensor(r, r);
  }
  m1 /= double(samples);
  m2 /= double(samples);
  CHECK((m1 - hilbert_schmidt_moment(n, 1)).cwiseAbs().maxCoeff() < 0.01);
  CHECK((m2 - hilbert_schmidt_moment(n, 2)).cwiseAbs().maxCoeff() < 0.01);
  CHECK_THAT(hilbert_schmidt_moment(3, 2).trace().real(), WithinAbs(1.0, 1e-14));
}

TEST_CASE("mixed 2-design radius") {
  CHECK(mixed_design_moment(bloch_tetrahedron(std::sqrt(3.0 / 5.0)), 2).deviation < 1e-10);
  CHECK(mixed_design_moment(bloch_tetrahedron(std::sqrt(3.0) / 2.0), 2).deviation > 1e-3);
  CHECK(mixed_design_moment(bloch_tetrahedron(0.3), 1).deviation < 1e-12);
  const auto t = bloch_tetrahedron(0.5);
  for (const auto &r : t) CHECK_THAT(r.purity(), WithinAbs(0.5 * (1.0 + 0.25), 1e-12));
}
