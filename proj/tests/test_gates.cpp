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
#include <algorithm>
#include <cmath>

#include "sicbasis/catalog.hpp"
#include "sicbasis/gates.hpp"

using namespace sicbasis;
using Catch::Matchers::WithinAbs;

namespace {

// Operator entanglement straight from the definition: reshuffle by index
// loops, then 1 - sum s^4 / N^4 over the operator-Schmidt values.
double oracle_entropy(const Matrix &u) {
  const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(double(u.rows()))));
  Matrix r(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index l = 0; l < n; ++l) r(i * n + k, j * n + l) = u(i * n + j, k * n + l);
  const RealVector s = Eigen::JacobiSVD<Matrix>(r).singularValues();
  const double n4 = std::pow(double(n), 4);
  return 1.0 - s.array().pow(4).sum() / n4;
}

GatePoint oracle_point(const Matrix &u) {
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(double(u.rows()))));
  const Matrix s = swap_operator(n);
  const double es = oracle_entropy(s), e = oracle_entropy(u), eus = oracle_entropy(u * s);
  return {(e + eus - es) / es, (e - eus + es) / (2.0 * es)};
}

Matrix cnot() {
  Matrix c = Matrix::Zero(4, 4);
  c(0, 0) = c(1, 1) = c(2, 3) = c(3, 2) = 1.0;
  return c;
}

}  // namespace

TEST_CASE("reference gates") {
  const GatePoint id = ep_gt(Matrix::Identity(4, 4));
  CHECK_THAT(id.ep, WithinAbs(0.0, 1e-12));
  CHECK_THAT(id.gt, WithinAbs(0.0, 1e-12));
  const GatePoint sw = ep_gt(swap_operator(3));
  CHECK_THAT(sw.ep, WithinAbs(0.0, 1e-12));
  CHECK_THAT(sw.gt, WithinAbs(1.0, 1e-12));
  const GatePoint cx = ep_gt(cnot());
  const GatePoint want = oracle_point(cnot());
  CHECK_THAT(cx.ep, WithinAbs(want.ep, 1e-12));
  CHECK_THAT(cx.gt, WithinAbs(want.gt, 1e-12));
  CHECK_THAT(op_linear_entropy(swap_operator(2)), WithinAbs(0.75, 1e-12));
}

TEST_CASE("library entropy matches the index-loop oracle") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 10; ++k) {
    for (std::size_t n : {4, 9}) {
      const Matrix u = haar_unitary(n, rng);
      CHECK_THAT(op_linear_entropy(u), WithinAbs(oracle_entropy(u), 1e-12));
      const GatePoint a = ep_gt(u), b = oracle_point(u);
      CHECK_THAT(a.ep, WithinAbs(b.ep, 1e-12));
      CHECK_THAT(a.gt, WithinAbs(b.gt, 1e-12));
    }
  }
  CHECK_THROWS_AS(op_linear_entropy(Matrix::Ones(4, 4)), NotUnitaryError);
  CHECK_THROWS_AS(reshuffle(Matrix::Identity(5, 5)), DimensionError);
}

TEST_CASE("e_p and g_t are invariant under local unitaries") {
  std::mt19937_64 rng(19);
  const Matrix u = catalog::u4();
  const GatePoint p = ep_gt(u);
  for (int k = 0; k < 10; ++k) {
    const Matrix l = tensor(haar_unitary(2, rng), haar_unitary(2, rng));
    const Matrix r = tensor(haar_unitary(2, rng), haar_unitary(2, rng));
    const GatePoint q = ep_gt(l * u * r);
    CHECK_THAT(q.ep, WithinAbs(p.ep, 1e-10));
    CHECK_THAT(q.gt, WithinAbs(p.gt, 1e-10));
  }
}

TEST_CASE("e_p and g_t stay in the unit square") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 30; ++k) {
    const GatePoint p = ep_gt(haar_unitary(9, rng));
    CHECK(p.ep >= -1e-12);
    CHECK(p.ep <= 1.0 + 1e-12);
    CHECK(p.gt >= -1e-12);
    CHECK(p.gt <= 1.0 + 1e-12);
  }
}

TEST_CASE("EJM gate point") {
  const GatePoint p = ep_gt(catalog::u4());
  CHECK_THAT(p.ep, WithinAbs(2.0 / 3.0, 1e-10));
  CHECK_THAT(p.gt, WithinAbs(0.5, 1e-10));
  CHECK(swap_symmetry(catalog::u4()));
  CHECK_FALSE(is_2unitary(catalog::u4()));
}

TEST_CASE("B gate point") {
  const Matrix b = catalog::bgate();
  CHECK(is_unitary(b, 1e-12));
  const GatePoint p = ep_gt(b), want = oracle_point(b);
  CHECK_THAT(p.ep, WithinAbs(want.ep, 1e-12));
  CHECK_THAT(p.ep, WithinAbs(2.0 / 3.0, 1e-10));
  CHECK_THAT(p.gt, WithinAbs(0.5, 1e-10));
}

TEST_CASE("permuted U'_9 is 2-unitary") {
  const Matrix u = catalog::u9prime_p();
  CHECK(is_2unitary(u));
  CHECK(is_unitary(reshuffle(u) * 1.0, 1e-9));
  CHECK(is_unitary(partial_transpose(u), 1e-9));
  CHECK_THAT(ep_gt(u).ep, WithinAbs(1.0, 1e-10));
  CHECK_FALSE(is_2unitary(catalog::fourier(9)));
}

TEST_CASE("Fourier matrix") {
  for (std::size_t n : {4, 9}) {
    const Matrix f = catalog::fourier(n);
    CHECK(is_unitary(f, 1e-12));
    CHECK_THAT(std::abs(f(1, 1) - std::exp(2.0 * PI * i_ / double(n)) / std::sqrt(double(n))),
               WithinAbs(0.0, 1e-14));
  }
}

TEST_CASE("exhaustive sweeps") {
  struct Case {
    std::string name;
    std::size_t distinct;
    std::size_t two_unitary;
  };
  for (const auto &c : std::vector<Case>{{"u4", 1, 0}, {"u9", 24, 0}, {"u9sym", 12, 0},
                                         {"u9prime", 12, 648}, {"f9", 543, 0}}) {
    const SweepResult s = permutation_sweep(catalog::by_name(c.name));
    INFO(c.name);
    CHECK(s.distinct_points.size() == c.distinct);
    CHECK(s.two_unitary_count == c.two_unitary);
    CHECK(s.total_permutations == (c.name == "u4" ? 24u : 362880u));
  }
}

TEST_CASE("the U_4 sweep point is the gate point itself") {
  const SweepResult s = permutation_sweep(catalog::u4());
  REQUIRE(s.distinct_points.size() == 1);
  CHECK_THAT(s.distinct_points[0].ep, WithinAbs(2.0 / 3.0, 1e-10));
  CHECK_THAT(s.distinct_points[0].gt, WithinAbs(0.5, 1e-10));
}

TEST_CASE("sampled sweep is a seeded subset of the exhaustive one") {
  SweepOptions o;
  o.mode = SweepMode::Sampled;
  o.samples = 500;
  o.seed = 9;
  const SweepResult a = permutation_sweep(catalog::u9(), o), b = permutation_sweep(catalog::u9(), o);
  REQUIRE(a.distinct_points.size() == b.distinct_points.size());
  const SweepResult full = permutation_sweep(catalog::u9());
  for (const auto &p : a.distinct_points) {
    const bool found = std::any_of(full.distinct_points.begin(), full.distinct_points.end(),
                                   [&](const GatePoint &q) {
                                     return std::abs(p.ep - q.ep) < 1e-9 && std::abs(p.gt - q.gt) < 1e-9;
                                   });
    CHECK(found);
  }
  CHECK(a.total_permutations == 500);
}

TEST_CASE("dedup merges points within tolerance only") {
  std::vector<GatePoint> pts{{0.5, 0.5}, {0.5 + 1e-12, 0.5}, {0.5, 0.5 + 1e-12}, {0.5, 0.6}, {0.7, 0.5}};
  CHECK(dedup_points(pts, 1e-9).size() == 3);
  CHECK(dedup_points(pts, 1e-15).size() == 5);
  CHECK(dedup_points({}, 1e-9).empty());
}

TEST_CASE("oversized exhaustive sweeps are refused") {
  std::mt19937_64 rng(1);
  CHECK_THROWS(permutation_sweep(haar_unitary(16, rng)));
}
