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

// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "sicbasis/basis.hpp"
#include "sicbasis/catalog.hpp"
#include "sicbasis/circuits.hpp"
#include "sicbasis/gates.hpp"
#include "sicbasis/sic.hpp"
#include "sicbasis/tomography.hpp"

using namespace sicbasis;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failed sub-checks of one criterion.
class Criterion {
 public:
  void near(const std::string &what, double got, double want, double tol) {
    if (!(std::abs(got - want) <= tol)) {
      std::ostringstream s;
      s.precision(12);
      s << what << " = " << got << " (want " << want << " +- " << tol << ")";
      failures_.push_back(s.str());
    }
  }
  void that(const std::string &what, bool ok) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string &text) { notes_.push_back(text); }
  const std::vector<std::string> &failures() const { return failures_; }
  const std::vector<std::string> &notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

int report(int id, const std::string &title, const std::function<void(Criterion &)> &body) {
  Criterion c;
  const auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception &e) {
    c.that(std::string("exception: ") + e.what(), false);
  }
  const double dt = seconds_since(t0);
  std::printf("criterion %2d: %s  %s  (%.2f s)\n", id, c.failures().empty() ? "PASS" : "FAIL",
              title.c_str(), dt);
  for (const auto &f : c.failures()) std::printf("    failed: %s\n", f.c_str());
  for (const auto &n : c.notes()) std::printf("    %s\n", n.c_str());
  std::fflush(stdout);
  return c.failures().empty() ? 0 : 1;
}

std::vector<SicEnsemble> builtins() {
  return {builtin_sic(2), builtin_sic(3, SicVariant::QutritStandard),
          builtin_sic(3, SicVariant::QutritSymmetric)};
}

}  // namespace

int main() {
  int failed = 0;
  const double dmax2 = 1.0 / std::sqrt(2.0);

  failed += report(1, "construction fidelity", [](Criterion &c) {
    const auto t0 = Clock::now();
    const auto sics = builtins();
    const Matrix refs[3] = {catalog::u4(), catalog::u9(), catalog::u9sym()};
    const char *names[3] = {"u4", "u9", "u9sym"};
    for (int k = 0; k < 3; ++k) {
      const Equivalence e = best_equivalence(build_optimal(sics[k]).matrix, refs[k]);
      c.that(std::string("comparator bijective for ") + names[k], e.bijective);
      c.near(std::string("max entry difference vs ") + names[k], e.max_difference, 0.0, 1e-10);
    }
    c.that("runtime < 1 s", seconds_since(t0) < 1.0);
  });

  failed += report(2, "lambda bounds", [](Criterion &c) {
    const LambdaBounds b2 = lambda_bounds(2), b3 = lambda_bounds(3);
    c.near("lambda_min(2)", b2.min, (2.0 - std::sqrt(3.0)) / 4.0, 1e-12);
    c.near("lambda_max(2)", b2.max, (2.0 + std::sqrt(3.0)) / 4.0, 1e-12);
    c.near("lambda_min(3)", b3.min, 1.0 / 3.0, 1e-12);
    c.near("lambda_max(3)", b3.max, 25.0 / 27.0, 1e-12);
    double prev = 0.0;
    std::size_t first_drop = 0;
    bool gap = true;
    for (std::size_t n = 2; n <= 1000000; ++n) {
      const double l = lambda_bounds(n).max;
      if (first_drop == 0 && !(l > prev)) first_drop = n;
      gap = gap && 1.0 - l < 2.0 / double(n);
      prev = l;
    }
    c.that("lambda_max strictly increasing for 2 <= N <= 1e6 (first drop at N = " +
               std::to_string(first_drop) + ")",
           first_drop == 0);
    c.that("1 - lambda_max(N) < 2/N up to 1e6", gap);
    c.that("lambda_max(1e4) > 0.999", lambda_bounds(10000).max > 0.999);
  });

  failed += report(3, "simplex geometry", [](Criterion &c) {
    const SimplexReport r2 = simplex_report(build_optimal(builtin_sic(2)));
    const SimplexReport r3 = simplex_report(build_optimal(builtin_sic(3, SicVariant::QutritStandard)));
    c.near("common distance N=2", r2.common_distance, 1.0 / std::sqrt(2.0), 1e-10);
    c.near("common distance N=3", r3.common_distance, 4.0 / (3.0 * std::sqrt(3.0)), 1e-10);
    for (const auto *r : {&r2, &r3}) {
      c.near("side A vs side B distances", (r->distances_a - r->distances_b).cwiseAbs().maxCoeff(), 0.0,
             1e-10);
    }
    for (const auto &rho : r2.side_a) c.near("Bloch radius", bloch_vector(rho).norm(), std::sqrt(3.0) / 2.0, 1e-10);
  });

  failed += report(4, "entanglement block", [](Criterion &c) {
    const BipartiteBasis b = build_optimal(builtin_sic(2));
    for (std::size_t i = 0; i < b.size(); ++i) {
      const EntanglementReport e = entanglement_report(b.state(i), 2, 2);
      c.near("purity", e.purity, 7.0 / 8.0, 1e-12);
      c.near("linear entropy", e.linear_entropy, 1.0 / 8.0, 1e-12);
      c.near("von Neumann entropy", e.von_neumann_entropy, 0.2458, 5e-4);
      c.near("Schmidt angle", e.schmidt_angle, 1.2027, 5e-4);
    }
    const PuritySeries ps = purity_series_check();
    c.near("purity series, SIC", ps.sic, 1.0, 1e-12);
    c.near("purity series, EJM", ps.ejm, 7.0 / 8.0, 1e-12);
    c.near("purity series, mixed design", ps.mixed_design, 4.0 / 5.0, 1e-12);
  });

  failed += report(5, "gate analytics", [](Criterion &c) {
    const GatePoint p = ep_gt(catalog::u4());
    c.near("e_p(U_4)", p.ep, 2.0 / 3.0, 1e-10);
    c.near("g_t(U_4)", p.gt, 0.5, 1e-10);
    struct Want {
      const char *name;
      std::size_t distinct;
    };
    for (const Want &w : {Want{"u4", 1}, Want{"u9", 24}, Want{"u9sym", 12}, Want{"u9prime", 12}, Want{"f9", 543}}) {
      const auto t0 = Clock::now();
      const SweepResult s = permutation_sweep(catalog::by_name(w.name));
      const double dt = seconds_since(t0);
      c.near(std::string("distinct points for ") + w.name, double(s.distinct_points.size()), double(w.distinct), 0.0);
      if (std::string(w.name) == "u9prime") {
        c.near("two-unitary count for u9prime", double(s.two_unitary_count), 648.0, 0.0);
      }
      c.that(std::string("sweep of ") + w.name + " under 60 s", dt < 60.0);
    }
  });

  failed += report(6, "circuit synthesis", [](Criterion &c) {
    const CartanCoordinates cc = cartan_decompose(Mat4(catalog::u4()));
    c.near("phi1", cc.canonical[0], PI / 4, 1e-9);
    c.near("phi2", cc.canonical[1], PI / 8, 1e-9);
    c.near("phi3", cc.canonical[2], 0.0, 1e-9);
    const CircuitSpec ejm = ejm_circuit();
    c.near("EJM circuit residual", phase_aligned_distance(simulate_circuit(ejm), catalog::u4()), 0.0, 1e-10);
    c.that("EJM circuit uses 3 CNOTs", ejm.cnot_count() == 3);
    std::mt19937_64 rng(1000);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const Mat4 u(haar_unitary(4, rng));
      worst = std::max(worst, phase_aligned_distance(simulate_circuit(synthesize(u)), u));
    }
    c.near("worst random round-trip residual", worst, 0.0, 1e-8);
  });

  failed += report(7, "tomography exactness", [](Criterion &c) {
    const BipartiteBasis ejm = build_optimal(builtin_sic(2));
    const Povm povm = rescaled_povm(ejm, Subsystem::B);
    for (std::size_t k = 0; k < kMubStates.size(); ++k) {
      const auto p = predicted_probabilities(mub_state(kMubStates[k]), povm);
      for (std::size_t i = 0; i < 4; ++i) {
        c.near("state " + mub_label(kMubStates[k]) + " outcome " + std::to_string(i), 100.0 * p[i],
               table2_predicted()[k][i], 0.05 + 1e-9);
      }
    }
    std::mt19937_64 rng(7);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const DensityMatrix sigma = hs_random_state(2, rng);
      const Reconstruction r = reconstruct(predicted_probabilities(sigma, povm), povm, 2, ejm.lambda);
      worst = std::max(worst, (r.raw - sigma.matrix()).norm());
    }
    c.near("worst reconstruct(predict) error", worst, 0.0, 1e-10);
  });

  failed += report(8, "tomography statistics", [](Criterion &c) {
    double lo = 1.0, hi = 0.0, sum = 0.0;
    bool noisier = true;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const double ideal = noisy_experiment(CalibrationRecord::ideal(), 8192, seed).mean_hs_deviation;
      const double melb = noisy_experiment(CalibrationRecord::melbourne(), 8192, seed).mean_hs_deviation;
      lo = std::min(lo, ideal);
      hi = std::max(hi, ideal);
      sum += ideal;
      noisier = noisier && melb > ideal;
    }
    c.that("noiseless mean deviation >= 0.01 for all seeds", lo >= 0.01);
    c.that("noiseless mean deviation <= 0.05 for all seeds", hi <= 0.05);
    c.that("Melbourne noise raises the deviation for all seeds", noisier);
    c.near("OSR Melbourne", estimate_success_rate(CalibrationRecord::melbourne()), 0.8066, 0.015);
    c.near("OSR Oursense", estimate_success_rate(CalibrationRecord::oursense()), 0.9218, 0.015);
    char buf[96];
    std::snprintf(buf, sizeof buf, "noiseless mean deviation over 20 seeds: %.4f", sum / 20.0);
    c.note(buf);
  });

  failed += report(9, "design properties", [](Criterion &c) {
    for (const auto &s : builtins()) {
      c.near("frame potential " + std::string(to_string(s.variant)), frame_potential(s.states, 2),
             haar_frame_potential(s.dim, 2), 1e-10);
    }
    c.near("mixed design at sqrt(3/5)", mixed_design_moment(bloch_tetrahedron(std::sqrt(3.0 / 5.0)), 2).deviation,
           0.0, 1e-10);
    c.that("EJM tetrahedron rejected",
           mixed_design_moment(bloch_tetrahedron(std::sqrt(3.0) / 2.0), 2).deviation > 1e-3);
  });

  failed += report(10, "two-qubit distance probe", [dmax2](Criterion &c) {
    const auto t0 = Clock::now();
    ProbeOptions o;
    o.restarts = 200;
    o.seed = 1;
    const ProbeReport r = conjecture1_probe(o);
    const double dt = seconds_since(t0);
    double top = 0.0;
    for (double v : r.restart_values) top = std::max(top, v);
    c.that("no restart exceeds 1/sqrt2 + 1e-6", top <= dmax2 + 1e-6);
    c.that("best reaches 1/sqrt2 - 1e-4", r.best_distance >= dmax2 - 1e-4);
    c.that("runtime < 5 min", dt < 300.0);
    char buf[128];
    std::snprintf(buf, sizeof buf, "best %.12f from restart %zu, %zu converged, %zu discarded",
                  r.best_distance, r.best_restart, r.converged, r.discarded);
    c.note(buf);
  });

  std::printf("%s: %d criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
