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

#include "sicbasis/linalg.hpp"

using namespace sicbasis;
using Catch::Matchers::WithinAbs;

namespace {

// Index-loop partial trace, kept apart from the library's reshape version.
Matrix loop_trace_out_b(const Matrix &m, std::size_t dA, std::size_t dB) {
  Matrix out = Matrix::Zero(dA, dA);
  for (std::size_t i = 0; i < dA; ++i)
    for (std::size_t j = 0; j < dA; ++j)
      for (std::size_t k = 0; k < dB; ++k) out(i, j) += m(i * dB + k, j * dB + k);
  return out;
}

Matrix loop_trace_out_a(const Matrix &m, std::size_t dA, std::size_t dB) {
  Matrix out = Matrix::Zero(dB, dB);
  for (std::size_t i = 0; i < dB; ++i)
    for (std::size_t j = 0; j < dB; ++j)
      for (std::size_t k = 0; k < dA; ++k) out(i, j) += m(k * dB + i, k * dB + j);
  return out;
}

}  // namespace

TEST_CASE("tensor product is the Kronecker product with A slow") {
  Matrix a(2, 2), b(2, 2);
  a << 1.0, 2.0, 3.0, 4.0;
  b << 0.0, 1.0, 1.0, 0.0;
  const Matrix k = tensor(a, b);
  REQUIRE(k.rows() == 4);
  CHECK(k(0, 1) == complex_t(1.0));
  CHECK(k(1, 0) == complex_t(1.0));
  CHECK(k(2, 3) == complex_t(4.0));
  CHECK(k(3, 0) == complex_t(3.0));
  CHECK(k(0, 0) == complex_t(0.0));
  CHECK(k(1, 2) == complex_t(2.0));
}

TEST_CASE("mixed product rule") {
  std::mt19937_64 rng(11);
  const Matrix a = haar_unitary(2, rng), b = haar_unitary(3, rng);
  const Matrix c = haar_unitary(2, rng), d = haar_unitary(3, rng);
  CHECK((tensor(a, b) * tensor(c, d) - tensor(Matrix(a * c), Matrix(b * d))).norm() < 1e-12);
}

TEST_CASE("partial trace agrees with an index loop") {
  std::mt19937_64 rng(3);
  for (auto [dA, dB] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 3}, {3, 2}, {3, 3}}) {
    const DensityMatrix rho = hs_random_state(dA * dB, rng);
    const Matrix ta = partial_trace(rho.matrix(), dA, dB, Subsystem::A);
    const Matrix tb = partial_trace(rho.matrix(), dA, dB, Subsystem::B);
    CHECK((ta - loop_trace_out_b(rho.matrix(), dA, dB)).norm() < 1e-13);
    CHECK((tb - loop_trace_out_a(rho.matrix(), dA, dB)).norm() < 1e-13);
  }
  CHECK_THROWS_AS(partial_trace(Matrix::Identity(6, 6), 2, 2, Subsystem::A), DimensionError);
}

TEST_CASE("qubit trace distance is half the Bloch distance") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    const DensityMatrix r = hs_random_state(2, rng), s = hs_random_state(2, rng);
    auto bloch = [](const Matrix &m) {
      return Eigen::Vector3d(2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(),
                             (m(0, 0) - m(1, 1)).real());
    };
    const double want = 0.5 * (bloch(r.matrix()) - bloch(s.matrix())).norm();
    CHECK_THAT(trace_distance(r, s), WithinAbs(want, 1e-12));
  }
}

TEST_CASE("trace distance stays in [0, 1] and vanishes on equal states") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 20; ++k) {
    const DensityMatrix r = hs_random_state(3, rng), s = hs_random_state(3, rng);
    const double d = trace_distance(r, s);
    CHECK(d >= 0.0);
    CHECK(d <= 1.0 + 1e-12);
    CHECK(trace_distance(r, r) < 1e-12);
  }
  const PureState z0(Vector::Unit(2, 0)), z1(Vector::Unit(2, 1));
  CHECK_THAT(trace_distance(DensityMatrix::from_pure(z0), DensityMatrix::from_pure(z1)),
             WithinAbs(1.0, 1e-12));
}

TEST_CASE("Schmidt data of simple states") {
  const double c = std::cos(0.3), s = std::sin(0.3);
  Vector v = Vector::Zero(4);
  v(0) = c;
  v(3) = s;
  const SchmidtData sd = schmidt(PureState(v), 2, 2);
  CHECK_THAT(sd.coefficients(0), WithinAbs(c * c, 1e-12));
  CHECK_THAT(sd.coefficients(1), WithinAbs(s * s, 1e-12));

  const EntanglementReport e = entanglement_report(PureState(v), 2, 2);
  const double p = std::pow(c, 4) + std::pow(s, 4);
  CHECK_THAT(e.purity, WithinAbs(p, 1e-12));
  CHECK_THAT(e.linear_entropy, WithinAbs(1.0 - p, 1e-12));
  CHECK_THAT(e.von_neumann_entropy,
             WithinAbs(-c * c * std::log(c * c) - s * s * std::log(s * s), 1e-12));
  CHECK_THAT(e.schmidt_angle, WithinAbs(std::asin(c * c), 1e-12));
}

TEST_CASE("Schmidt coefficients sum to one and reconstruct the state") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 10; ++k) {
    const PureState psi = haar_state(6, rng);
    const SchmidtData sd = schmidt(psi, 2, 3);
    CHECK_THAT(sd.coefficients.sum(), WithinAbs(1.0, 1e-12));
    Vector back = Vector::Zero(6);
    for (Eigen::Index j = 0; j < sd.coefficients.size(); ++j) {
      back += std::sqrt(sd.coefficients(j)) * tensor(sd.left[j], sd.right[j]);
    }
    CHECK((back - psi.amplitudes()).norm() < 1e-10);
  }
}

TEST_CASE("swap operator exchanges factors") {
  std::mt19937_64 rng(2);
  const PureState a = haar_state(3, rng), b = haar_state(3, rng);
  const Matrix s = swap_operator(3);
  CHECK((s * s - Matrix::Identity(9, 9)).norm() < 1e-14);
  CHECK((s * tensor(a, b).amplitudes() - tensor(b, a).amplitudes()).norm() < 1e-14);
}

TEST_CASE("Pauli algebra") {
  const Matrix x = pauli_x(), y = pauli_y(), z = pauli_z();
  CHECK((x * y - i_ * z).norm() < 1e-15);
  CHECK((x * x - Matrix::Identity(2, 2)).norm() < 1e-15);
}

TEST_CASE("Haar sampling is unitary and seed-deterministic") {
  std::mt19937_64 r1(99), r2(99);
  const Matrix u = haar_unitary(4, r1), v = haar_unitary(4, r2);
  CHECK(is_unitary(u, 1e-12));
  CHECK(u == v);
  CHECK(unitarity_defect(u) < 1e-12);
}

TEST_CASE("global phase is invisible to phase_aligned_distance") {
  std::mt19937_64 rng(4);
  const Matrix u = haar_unitary(4, rng);
  CHECK(phase_aligned_distance(std::exp(i_ * 1.234) * u, u) < 1e-12);
  CHECK(phase_aligned_distance(u, Matrix::Identity(4, 4)) > 0.1);
}

TEST_CASE("density matrix validation") {
  Matrix m(2, 2);
  m << 0.5, 0.3, 0.1, 0.5;
  CHECK_THROWS_AS(DensityMatrix(m), NotHermitianError);
  m << 0.7, 0.0, 0.0, 0.7;
  CHECK_THROWS(DensityMatrix(m));
  m << 1.2, 0.0, 0.0, -0.2;
  CHECK_THROWS(DensityMatrix(m));
  const DensityMatrix proj = DensityMatrix::project_psd(m);
  CHECK_THAT(proj.matrix()(0, 0).real(), WithinAbs(1.0, 1e-12));
  CHECK_THAT(DensityMatrix::maximally_mixed(4).purity(), WithinAbs(0.25, 1e-15));
}
