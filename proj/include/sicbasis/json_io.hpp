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

#include <json.hpp>

#include "sicbasis/linalg.hpp"

// Complex numbers serialize as [re, im]; matrices as row-major nested arrays.
namespace sicbasis::json_io {

using json = nlohmann::ordered_json;

inline json complex_to_json(complex_t z) { return json::array({z.real(), z.imag()}); }

inline complex_t complex_from_json(const json &j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("complex value must be [re, im]");
  }
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

inline json vector_to_json(const Vector &v) {
  json out = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(complex_to_json(v(k)));
  return out;
}

inline Vector vector_from_json(const json &j) {
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) {
    v(static_cast<Eigen::Index>(k)) = complex_from_json(j.at(k));
  }
  return v;
}

inline json matrix_to_json(const Matrix &m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

inline Matrix matrix_from_json(const json &j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j.at(0).size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto &row = j.at(static_cast<std::size_t>(r));
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw std::invalid_argument("ragged matrix rows");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = complex_from_json(row.at(static_cast<std::size_t>(c)));
    }
  }
  return m;
}

}  // namespace sicbasis::json_io
