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

#include <cstdint>
#include <string>

namespace sicbasis {

struct ReproduceOptions {
  std::uint64_t seed = 7;
  std::size_t probe_restarts = 8;
  std::uint64_t shots = 8192;
  /** Skip the 9! sweeps. */
  bool skip_sweeps = false;
};

struct ReproduceResult {
  /** Deterministic JSON report; no timings or environment data. */
  std::string json;
  bool ok = true;
};

ReproduceResult reproduce_all(const ReproduceOptions &opt);

}  // namespace sicbasis
