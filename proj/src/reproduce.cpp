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

#include "sicbasis/reproduce.hpp"

#include <cmath>

#include "sicbasis/basis.hpp"
#include "sicbasis/catalog.hpp"
#include "sicbasis/circuits.hpp"
#include "sicbasis/gates.hpp"
#include "sicbasis/json_io.hpp"
#include "sicbasis/sic.hpp"
#include "sicbasis/tomography.hpp"

namespace sicbasis {

namespace {

using json = json_io::json;

class Checks {
 public:
  void value(const std::string &name, double got, double expected, double tol) {
    const bool pass = std::abs(got - expected) <= tol;
    ok_ = ok_ && pass;
    items_.push_back(
        {{"name", name}, {"value", got}, {"expected", expected}, {"tol", tol}, {"pass", pass}});
  }
  void count(const std::string &name, std::size_t got, std::size_t expected) {
    const bool pass = got == expected;
    ok_ = ok_ && pass;
    items_.push_back({{"name", name}, {"value", got}, {"expected", expected}, {"pass", pass}});
  }
  void range(const std::string &name, double got, double lo, double hi) {
    const bool pass = got >= lo && got <= hi;
    ok_ = ok_ && pass;
    items_.push_back(
        {{"name", name}, {"value", got}, {"range", {lo, hi}}, {"pass", pass}});
  }
  void flag(const std::string &name, bool pass) {
    ok_ = ok_ && pass;
    items_.push_back({{"name", name}, {"pass", pass}});
  }
  bool ok() const { return ok_; }
  const json &items() const { return items_; }

 private:
  json items_ = json::array();
  bool ok_ = true;
};

json points_json(const std::vector<GatePoint> &pts) {
  json a = json::array();
  for (const auto &p : pts) a.push_back({p.ep, p.gt});
  return a;
}

}  // namespace

ReproduceResult reproduce_all(const ReproduceOptions &opt) {
  Checks ck;
  json rep;
  rep["seed"] = opt.seed;

  // Schmidt weight bounds.
  const LambdaBounds b2 = lambda_bounds(2), b3 = lambda_bounds(3);
  ck.value("lambda_min(2)", b2.min, (2.0 - std::sqrt(3.0)) / 4.0, 1e-12);
  ck.value("lambda_max(2)", b2.max, (2.0 + std::sqrt(3.0)) / 4.0, 1e-12);
  ck.value("lambda_min(3)", b3.min, 1.0 / 3.0, 1e-12);
  ck.value("lambda_max(3)", b3.max, 25.0 / 27.0, 1e-12);

  // Construction against the printed matrices.
  const SicEnsemble s2 = builtin_sic(2);
  const SicEnsemble s3 = builtin_sic(3, SicVariant::QutritStandard);
  const SicEnsemble s3s = builtin_sic(3, SicVariant::QutritSymmetric);
  const BipartiteBasis ejm = build_optimal(s2);
  const BipartiteBasis q9 = build_optimal(s3);
  const BipartiteBasis q9s = build_optimal(s3s);
  ck.value("build_optimal(qubit) ~ u4", best_equivalence(ejm.matrix, catalog::u4()).max_difference, 0.0, 1e-10);
  ck.value("build_optimal(standard) ~ u9", best_equivalence(q9.matrix, catalog::u9()).max_difference, 0.0, 1e-10);
  ck.value("build_optimal(symmetric) ~ u9sym", best_equivalence(q9s.matrix, catalog::u9sym()).max_difference, 0.0, 1e-10);
  const BipartiteBasis u4p = build_basis(s2, 0.5, 2.0 * PI / 3.0);
  ck.value("build(qubit, 1/2, 2pi/3) ~ u4prime", best_equivalence(u4p.matrix, catalog::u4prime()).max_difference, 0.0, 1e-10);
  const BipartiteBasis u9p = build_basis(s3, 1.0 / 3.0, PI);
  ck.value("build(standard, 1/3, pi) ~ u9prime", best_equivalence(u9p.matrix, catalog::u9prime()).max_difference, 0.0, 1e-10);

  // Simplex geometry.
  const SimplexReport r2 = simplex_report(ejm), r3 = simplex_report(q9);
  ck.value("D_max(2)", r2.common_distance, 1.0 / std::sqrt(2.0), 1e-10);
  ck.value("D_max(3)", r3.common_distance, 4.0 / (3.0 * std::sqrt(3.0)), 1e-10);
  ck.value("closed form D_max(2)", max_single_sided_distance(2), 1.0 / std::sqrt(2.0), 1e-12);
  ck.value("closed form D_max(3)", max_single_sided_distance(3), 4.0 / (3.0 * std::sqrt(3.0)), 1e-12);
  ck.value("EJM Bloch radius", bloch_vector(r2.side_a[0]).norm(), std::sqrt(3.0) / 2.0, 1e-10);

  // Entanglement block.
  const EntanglementReport ent = entanglement_report(ejm.state(0), 2, 2);
  ck.value("EJM purity", ent.purity, 7.0 / 8.0, 1e-12);
  ck.value("EJM linear entropy", ent.linear_entropy, 1.0 / 8.0, 1e-12);
  ck.value("EJM von Neumann entropy", ent.von_neumann_entropy, 0.2458, 5e-4);
  ck.value("EJM Schmidt angle", ent.schmidt_angle, 1.2027, 5e-4);
  const PuritySeries ps = purity_series_check();
  ck.value("purity series sic", ps.sic, 1.0, 1e-12);
  ck.value("purity series ejm", ps.ejm, 7.0 / 8.0, 1e-12);
  ck.value("purity series mixed design", ps.mixed_design, 4.0 / 5.0, 1e-12);

  // Gate analytics.
  const GatePoint g4 = ep_gt(catalog::u4());
  ck.value("e_p(u4)", g4.ep, 2.0 / 3.0, 1e-10);
  ck.value("g_t(u4)", g4.gt, 0.5, 1e-10);
  const GatePoint g4p = ep_gt(catalog::u4prime());
  ck.value("e_p(u4prime)", g4p.ep, 2.0 / 3.0, 1e-10);
  ck.value("g_t(u4prime)", g4p.gt, 0.5, 1e-10);
  ck.flag("2-unitary(u9primeP)", is_2unitary(catalog::u9prime_p()));
  json sweeps;
  {
    const SweepResult s = permutation_sweep(catalog::u4());
    ck.count("sweep u4 distinct", s.distinct_points.size(), 1);
    sweeps["u4"] = {{"distinct", s.distinct_points.size()}, {"points", points_json(s.distinct_points)}};
  }
  if (!opt.skip_sweeps) {
    const std::vector<std::pair<std::string, std::size_t>> expected{
        {"u9", 24}, {"u9sym", 12}, {"u9prime", 12}, {"f9", 543}};
    for (const auto &[name, want] : expected) {
      const SweepResult s = permutation_sweep(catalog::by_name(name));
      ck.count("sweep " + name + " distinct", s.distinct_points.size(), want);
      if (name == "u9prime") ck.count("sweep u9prime two-unitary", s.two_unitary_count, 648);
      sweeps[name] = {{"distinct", s.distinct_points.size()}, {"twoUnitary", s.two_unitary_count}};
    }
  }
  rep["sweeps"] = sweeps;

  // Circuits.
  const CartanCoordinates cc = cartan_decompose(Mat4(catalog::u4()));
  ck.value("cartan phi1(u4)", cc.canonical[0], PI / 4, 1e-9);
  ck.value("cartan phi2(u4)", cc.canonical[1], PI / 8, 1e-9);
  ck.value("cartan phi3(u4)", cc.canonical[2], 0.0, 1e-9);
  const CircuitSpec circ = ejm_circuit();
  ck.count("ejm circuit CNOTs", circ.cnot_count(), 3);
  ck.value("ejm circuit residual", phase_aligned_distance(catalog::u4(), simulate_circuit(circ)), 0.0, 1e-10);
  rep["ejm_circuit"] = json::parse(circuit_to_json(circ));

  // Tomography.
  const Povm povm = rescaled_povm(ejm, Subsystem::B);
  json table = json::array();
  for (std::size_t k = 0; k < kMubStates.size(); ++k) {
    const auto p = predicted_probabilities(mub_state(kMubStates[k]), povm);
    json row = json::array();
    for (std::size_t i = 0; i < 4; ++i) {
      const double pct = 100.0 * p[i];
      ck.value("table2 " + mub_label(kMubStates[k]) + " outcome " + std::to_string(i), pct,
               table2_predicted()[k][i], 0.05 + 1e-9);
      row.push_back(pct);
    }
    table.push_back({{"state", mub_label(kMubStates[k])}, {"predicted", row}});
  }
  rep["table2"] = table;
  ck.value("OSR melbourne", estimate_success_rate(CalibrationRecord::melbourne()), 0.8066, 0.015);
  ck.value("OSR oursense", estimate_success_rate(CalibrationRecord::oursense()), 0.9218, 0.015);
  const TomographyReport ideal = noisy_experiment(CalibrationRecord::ideal(), opt.shots, opt.seed);
  const TomographyReport melb = noisy_experiment(CalibrationRecord::melbourne(), opt.shots, opt.seed);
  ck.range("noiseless mean hs deviation", ideal.mean_hs_deviation, 0.01, 0.05);
  ck.flag("melbourne noise raises hs deviation", melb.mean_hs_deviation > ideal.mean_hs_deviation);
  rep["tomography"] = {{"noiseless_mean_hs", ideal.mean_hs_deviation},
                       {"melbourne_mean_hs", melb.mean_hs_deviation}};

  // Design moments.
  for (const auto &[label, sic] :
       std::vector<std::pair<std::string, SicEnsemble>>{{"qubit", s2}, {"standard", s3}, {"symmetric", s3s}}) {
    ck.value("frame potential t=2 " + label, frame_potential(sic.states, 2),
             haar_frame_potential(sic.dim, 2), 1e-10);
  }
  ck.value("mixed 2-design r=sqrt(3/5)",
           mixed_design_moment(bloch_tetrahedron(std::sqrt(3.0 / 5.0)), 2).deviation, 0.0, 1e-10);

  // Two-qubit search.
  ProbeOptions po;
  po.restarts = opt.probe_restarts;
  po.seed = opt.seed;
  const ProbeReport pr = conjecture1_probe(po);
  if (opt.probe_restarts > 0) {
    ck.range("probe best distance", pr.best_distance, 0.0, 1.0 / std::sqrt(2.0) + 1e-6);
  }
  rep["probe"] = {{"restarts", opt.probe_restarts},
                  {"best", pr.best_distance},
                  {"converged", pr.converged},
                  {"discarded", pr.discarded}};

  rep["checks"] = ck.items();
  rep["ok"] = ck.ok();
  return {rep.dump(2), ck.ok()};
}

}  // namespace sicbasis
