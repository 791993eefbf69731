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

#include "sicbasis/catalog.hpp"

#include <cmath>

namespace sicbasis::catalog {

namespace {

const double s2 = std::sqrt(2.0);
const double s3 = std::sqrt(3.0);
const double s6 = std::sqrt(6.0);
const complex_t w = std::polar(1.0, 2.0 * PI / 3.0);
const complex_t w2 = w * w;

Matrix rows(std::initializer_list<std::initializer_list<complex_t>> data, double scale) {
  const auto r = static_cast<Eigen::Index>(data.size());
  Matrix m(r, r);
  Eigen::Index i = 0;
  for (const auto &row : data) {
    Eigen::Index j = 0;
    for (complex_t v : row) m(i, j++) = v * scale;
    ++i;
  }
  return m;
}

}  // namespace

Matrix u4() {
  const double a = std::sqrt(6.0 - 3.0 * s3) / 6.0, b = std::sqrt(6.0 + 3.0 * s3) / 6.0;
  return rows(
      {{0.5 * std::sqrt(2.0 + s3), 0.0, 0.0, -0.5 * std::sqrt(2.0 - s3)},
       {a, 1.0 / s3, 1.0 / s3, b},
       {a, w2 / s3, w / s3, b},
       {a, w / s3, w2 / s3, b}},
      1.0);
}

Matrix u4prime() {
  const complex_t w6 = std::polar(1.0, PI / 3.0);
  const complex_t w6_2 = w6 * w6, w6_4 = w6_2 * w6_2;
  return rows(
      {{s6, 0.0, 0.0, s6 * w6_4},
       {s2, 2.0 * w6_2, 2.0 * w6_2, s2 * w6},
       {s2, 2.0, 2.0 * w6_4, s2 * w6},
       {s2, 2.0 * w6_4, 2.0, s2 * w6}},
      1.0 / (2.0 * s3));
}

Matrix u9() {
  const complex_t j = i_ * 3.0 * s6;
  return rows(
      {{10.0 * s2, 0.0, 0.0, 0.0, -2.0 * s2, 0.0, 0.0, 0.0, -2.0 * s2},
       {s2, -j, 0.0, j, 7.0 * s2, 0.0, 0.0, 0.0, -2.0 * s2},
       {s2, j, 0.0, -j, 7.0 * s2, 0.0, 0.0, 0.0, -2.0 * s2},
       {s2, 3.0 * s2, 6.0, 3.0 * s2, s2, 6.0, 6.0, 6.0, 4.0 * s2},
       {s2, -3.0 * s2, 6.0, -3.0 * s2, s2, -6.0, 6.0, -6.0, 4.0 * s2},
       {s2, 3.0 * s2, 6.0 * w, 3.0 * s2, s2, 6.0 * w, 6.0 * w2, 6.0 * w2, 4.0 * s2},
       {s2, 3.0 * s2, 6.0 * w2, 3.0 * s2, s2, 6.0 * w2, 6.0 * w, 6.0 * w, 4.0 * s2},
       {s2, -3.0 * s2, 6.0 * w, -3.0 * s2, s2, -6.0 * w, 6.0 * w2, -6.0 * w2, 4.0 * s2},
       {s2, -3.0 * s2, 6.0 * w2, -3.0 * s2, s2, -6.0 * w2, 6.0 * w, -6.0 * w, 4.0 * s2}},
      1.0 / (6.0 * s6));
}

Matrix u9sym() {
  return rows(
      {{-1.0, 0.0, 0.0, 0.0, 2.0, -3.0, 0.0, -3.0, 2.0},
       {-1.0, 0.0, 0.0, 0.0, 2.0, -3.0 * w2, 0.0, -3.0 * w, 2.0},
       {-1.0, 0.0, 0.0, 0.0, 2.0, -3.0 * w, 0.0, -3.0 * w2, 2.0},
       {2.0, 0.0, -3.0, 0.0, -1.0, 0.0, -3.0, 0.0, 2.0},
       {2.0, 0.0, -3.0 * w2, 0.0, -1.0, 0.0, -3.0 * w, 0.0, 2.0},
       {2.0, 0.0, -3.0 * w, 0.0, -1.0, 0.0, -3.0 * w2, 0.0, 2.0},
       {2.0, -3.0, 0.0, -3.0, 2.0, 0.0, 0.0, 0.0, -1.0},
       {2.0, -3.0 * w2, 0.0, -3.0 * w, 2.0, 0.0, 0.0, 0.0, -1.0},
       {2.0, -3.0 * w, 0.0, -3.0 * w2, 2.0, 0.0, 0.0, 0.0, -1.0}},
      1.0 / (3.0 * s3));
}

Matrix u9prime() {
  const complex_t j = i_ * s3;
  return rows(
      {{2.0, 0.0, 0.0, 0.0, -2.0, 0.0, 0.0, 0.0, -2.0},
       {-1.0, -j, 0.0, j, 1.0, 0.0, 0.0, 0.0, -2.0},
       {-1.0, j, 0.0, -j, 1.0, 0.0, 0.0, 0.0, -2.0},
       {-1.0, 1.0, s2, 1.0, -1.0, s2, s2, s2, 0.0},
       {-1.0, -1.0, s2, -1.0, -1.0, -s2, s2, -s2, 0.0},
       {-1.0, 1.0, w2 * s2, 1.0, -1.0, w2 * s2, w * s2, w * s2, 0.0},
       {-1.0, -1.0, w2 * s2, -1.0, -1.0, -w2 * s2, w * s2, -w * s2, 0.0},
       {-1.0, 1.0, w * s2, 1.0, -1.0, w * s2, w2 * s2, w2 * s2, 0.0},
       {-1.0, -1.0, w * s2, -1.0, -1.0, -w * s2, w2 * s2, -w2 * s2, 0.0}},
      1.0 / (2.0 * s3));
}

Matrix u9prime_p() {
  const complex_t j = i_ * s3;
  return rows(
      {{2.0, 0.0, 0.0, 0.0, -2.0, 0.0, 0.0, 0.0, -2.0},
       {-1.0, -j, 0.0, j, 1.0, 0.0, 0.0, 0.0, -2.0},
       {-1.0, j, 0.0, -j, 1.0, 0.0, 0.0, 0.0, -2.0},
       {-1.0, 1.0, s2, 1.0, -1.0, s2, s2, s2, 0.0},
       {-1.0, 1.0, s2 * w2, 1.0, -1.0, s2 * w2, s2 * w, s2 * w, 0.0},
       {-1.0, 1.0, s2 * w, 1.0, -1.0, s2 * w, s2 * w2, s2 * w2, 0.0},
       {-1.0, -1.0, s2, -1.0, -1.0, -s2, s2, -s2, 0.0},
       {-1.0, -1.0, s2 * w, -1.0, -1.0, -s2 * w, s2 * w2, -s2 * w2, 0.0},
       {-1.0, -1.0, s2 * w2, -1.0, -1.0, -s2 * w2, s2 * w, -s2 * w, 0.0}},
      1.0 / (2.0 * s3));
}

Matrix e9sym() {
  return rows(
      {{0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0},
       {0.0, 0.0, w2, 0.0, 1.0, 0.0, w, 0.0, 0.0},
       {0.0, 0.0, w, 0.0, 1.0, 0.0, w2, 0.0, 0.0},
       {0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0},
       {0.0, w2, 0.0, w, 0.0, 0.0, 0.0, 0.0, 1.0},
       {0.0, w, 0.0, w2, 0.0, 0.0, 0.0, 0.0, 1.0},
       {1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0},
       {1.0, 0.0, 0.0, 0.0, 0.0, w2, 0.0, w, 0.0},
       {1.0, 0.0, 0.0, 0.0, 0.0, w, 0.0, w2, 0.0}},
      1.0 / s3);
}

Matrix fourier(std::size_t n) {
  const auto ni = static_cast<Eigen::Index>(n);
  Matrix f(ni, ni);
  for (Eigen::Index j = 0; j < ni; ++j) {
    for (Eigen::Index k = 0; k < ni; ++k) {
      f(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(n)),
                           2.0 * PI * static_cast<double>((j * k) % ni) /
                               static_cast<double>(n));
    }
  }
  return f;
}

Matrix bgate() {
  // XX and YY commute; each factor is cos a + i sin a P since P^2 = I.
  const Matrix xx = tensor(pauli_x(), pauli_x());
  const Matrix yy = tensor(pauli_y(), pauli_y());
  const Matrix id = Matrix::Identity(4, 4);
  const Matrix ex = std::cos(PI / 4) * id + i_ * std::sin(PI / 4) * xx;
  const Matrix ey = std::cos(PI / 8) * id + i_ * std::sin(PI / 8) * yy;
  return ex * ey;
}

std::vector<std::string> names() {
  return {"u4", "u4prime", "u9", "u9sym", "u9prime", "u9primeP", "e9sym", "f9", "bgate"};
}

Matrix by_name(std::string_view name) {
  if (name == "u4") return u4();
  if (name == "u4prime") return u4prime();
  if (name == "u9") return u9();
  if (name == "u9sym") return u9sym();
  if (name == "u9prime") return u9prime();
  if (name == "u9primeP") return u9prime_p();
  if (name == "e9sym") return e9sym();
  if (name == "f9") return fourier(9);
  if (name == "bgate") return bgate();
  throw std::invalid_argument("unknown matrix name: " + std::string(name));
}

}  // namespace sicbasis::catalog
