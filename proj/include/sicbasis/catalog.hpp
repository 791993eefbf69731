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

#include <string>
#include <string_view>
#include <vector>

#include "sicbasis/linalg.hpp"

// Reference matrices entered verbatim, rows in their printed order.
namespace sicbasis::catalog {

Matrix u4();
/** Maximally entangled qubit basis; prefactor 1/(2 sqrt 3). */
Matrix u4prime();
Matrix u9();
Matrix u9sym();
Matrix u9prime();
/** Row reordering of u9prime that is 2-unitary. */
Matrix u9prime_p();
Matrix e9sym();
/** (F_9)_{jk} = exp(2 pi i jk / 9) / 3. */
Matrix fourier(std::size_t n);
/** exp(i (pi/4 XX + pi/8 YY)). */
Matrix bgate();

std::vector<std::string> names();
/** Throws std::invalid_argument on unknown names. */
Matrix by_name(std::string_view name);

}  // namespace sicbasis::catalog
