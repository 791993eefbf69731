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

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "sicbasis/basis.hpp"
#include "sicbasis/catalog.hpp"
#include "sicbasis/circuits.hpp"
#include "sicbasis/gates.hpp"
#include "sicbasis/json_io.hpp"
#include "sicbasis/reproduce.hpp"
#include "sicbasis/sic.hpp"
#include "sicbasis/tomography.hpp"

using namespace sicbasis;
using json = json_io::json;

namespace {

struct RunConfig {
  std::uint64_t seed = 1;
  double tol = -1.0;
  std::string format = "json";
  std::string out;
};

// Thrown for bad combinations that CLI11 cannot see; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const RunConfig &cfg, const std::string &text) {
  if (cfg.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw std::runtime_error("cannot write " + cfg.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string csv_number(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

std::string csv(const std::vector<std::string> &header, const std::vector<std::vector<double>> &rows) {
  std::ostringstream s;
  for (std::size_t k = 0; k < header.size(); ++k) s << (k ? "," : "") << header[k];
  s << '\n';
  for (const auto &r : rows) {
    for (std::size_t k = 0; k < r.size(); ++k) s << (k ? "," : "") << csv_number(r[k]);
    s << '\n';
  }
  return s.str();
}

SicEnsemble pick_sic(std::size_t n, const std::string &variant, const std::string &fiducial) {
  if (!fiducial.empty()) return wh_orbit(read_fiducial(fiducial));
  if (variant.empty()) return builtin_sic(n);
  return builtin_sic(n, sic_variant_from_string(variant));
}

double parse_lambda(const std::string &s, std::size_t n) {
  if (s == "max") return lambda_bounds(n).max;
  if (s == "min") return lambda_bounds(n).min;
  try {
    return std::stod(s);
  } catch (const std::exception &) {
    throw UsageError("--lambda expects max, min or a number");
  }
}

Matrix load_matrix(const std::string &name, const std::string &file) {
  if (!file.empty()) {
    std::ifstream f(file);
    if (!f) throw std::runtime_error("cannot open " + file);
    std::stringstream ss;
    ss << f.rdbuf();
    return json_io::matrix_from_json(json::parse(ss.str()));
  }
  if (name.empty()) throw UsageError("give --matrix NAME or --file PATH");
  try {
    return catalog::by_name(name);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
}

json simplex_json(const SimplexReport &r) {
  json j;
  j["commonDistance"] = r.common_distance;
  j["maxSpread"] = r.max_spread;
  j["sideMismatch"] = r.side_mismatch;
  j["valid"] = r.valid();
  json da = json::array();
  for (Eigen::Index i = 0; i < r.distances_a.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < r.distances_a.cols(); ++k) row.push_back(r.distances_a(i, k));
    da.push_back(row);
  }
  j["distances"] = da;
  return j;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"SIC-based bipartite bases, gate analytics, circuits and tomography"};
  app.require_subcommand(1);
  // Global flags may appear after the verb.
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "RNG seed");
  app.add_option("--tol", cfg.tol, "Spectral tolerance override");
  app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out, "Output file (default stdout)");

  int status = 0;

  // sic
  auto *sic = app.add_subcommand("sic", "SIC catalog and checks");
  sic->require_subcommand(1);
  std::size_t sic_n = 2;
  std::string sic_variant, sic_fid;
  sic->add_subcommand("list", "Built-in ensembles")->callback([&] {
    json j = json::array();
    for (auto [n, v] : std::vector<std::pair<std::size_t, SicVariant>>{
             {2, SicVariant::QubitTetrahedron},
             {3, SicVariant::QutritStandard},
             {3, SicVariant::QutritSymmetric}}) {
      const SicEnsemble e = builtin_sic(n, v);
      j.push_back({{"dim", n}, {"variant", std::string(to_string(v))},
                   {"maxDeviation", verify_sic(e).max_deviation}});
    }
    emit(cfg, j.dump(2));
  });
  auto *sv = sic->add_subcommand("verify", "Overlap and 2-design certificate");
  sv->add_option("--n", sic_n);
  sv->add_option("--variant", sic_variant);
  sv->add_option("--fiducial", sic_fid);
  sv->callback([&] {
    const SicEnsemble e = pick_sic(sic_n, sic_variant, sic_fid);
    const double dev = verify_sic(e).max_deviation;
    const double fp = frame_potential(e.states, 2), haar = haar_frame_potential(e.dim, 2);
    const bool ok = dev < tolerances().spectral && std::abs(fp - haar) < tolerances().spectral;
    emit(cfg, json{{"dim", e.dim}, {"maxDeviation", dev}, {"framePotential2", fp},
                   {"haar", haar}, {"ok", ok}}.dump(2));
    if (!ok) status = 1;
  });
  auto *sf = sic->add_subcommand("from-fiducial", "Weyl-Heisenberg orbit of a fiducial file");
  sf->add_option("file", sic_fid)->required();
  sf->callback([&] {
    const SicEnsemble e = wh_orbit(read_fiducial(sic_fid));
    json states = json::array();
    for (const auto &s : e.states) states.push_back(json_io::vector_to_json(s.amplitudes()));
    emit(cfg, json{{"dim", e.dim}, {"states", states},
                   {"maxDeviation", verify_sic(e).max_deviation}}.dump(2));
  });

  // basis
  auto *basis = app.add_subcommand("basis", "Optimal bipartite bases");
  basis->require_subcommand(1);
  std::size_t bn = 2;
  std::string bvariant, blambda = "max", bfid;
  double bphase = PI;
  auto basis_opts = [&](CLI::App *c) {
    c->add_option("--n", bn);
    c->add_option("--variant", bvariant);
    c->add_option("--fiducial", bfid);
    c->add_option("--lambda", blambda);
    c->add_option("--phase", bphase);
  };
  auto make_basis = [&] {
    const SicEnsemble e = pick_sic(bn, bvariant, bfid);
    return build_basis(e, parse_lambda(blambda, e.dim), bphase);
  };
  auto *bb = basis->add_subcommand("build", "Basis matrix, rows are bras");
  basis_opts(bb);
  bb->callback([&] {
    const BipartiteBasis b = make_basis();
    emit(cfg, json{{"n", b.n}, {"lambda", b.lambda}, {"phase", b.phase},
                   {"source", std::string(to_string(b.source))},
                   {"matrix", json_io::matrix_to_json(b.matrix)}}.dump(2));
  });
  auto *bv = basis->add_subcommand("verify", "Unitarity and iso-entanglement");
  basis_opts(bv);
  bv->callback([&] {
    const BipartiteBasis b = make_basis();
    double spread = 0.0;
    const auto ref = schmidt(b.state(0), b.n, b.n).coefficients;
    for (std::size_t i = 1; i < b.size(); ++i) {
      spread = std::max(spread, (schmidt(b.state(i), b.n, b.n).coefficients - ref).cwiseAbs().maxCoeff());
    }
    const double defect = unitarity_defect(b.matrix);
    const bool ok = defect < 1e-10 && spread < 1e-10 && std::abs(ref(0) - b.lambda) < 1e-10;
    json j{{"unitarityDefect", defect}, {"schmidtSpread", spread}, {"lambda", ref(0)}, {"ok", ok}};
    emit(cfg, j.dump(2));
    if (!ok) status = 1;
  });
  auto *bs = basis->add_subcommand("simplex", "Reduced-state simplex");
  basis_opts(bs);
  bs->callback([&] {
    const SimplexReport r = simplex_report(make_basis());
    emit(cfg, simplex_json(r).dump(2));
    if (!r.valid()) status = 1;
  });
  auto *bc = basis->add_subcommand("clocks", "Squared moduli and phases of every entry");
  basis_opts(bc);
  bc->callback([&] {
    const ClockData c = clock_data(make_basis().matrix);
    if (cfg.format == "csv") {
      std::vector<std::vector<double>> rows;
      for (Eigen::Index i = 0; i < c.radius.rows(); ++i)
        for (Eigen::Index j = 0; j < c.radius.cols(); ++j)
          rows.push_back({double(i), double(j), c.radius(i, j), c.phase(i, j)});
      emit(cfg, csv({"row", "col", "r", "phi"}, rows));
    } else {
      json r = json::array(), p = json::array();
      for (Eigen::Index i = 0; i < c.radius.rows(); ++i) {
        json rr = json::array(), pp = json::array();
        for (Eigen::Index j = 0; j < c.radius.cols(); ++j) {
          rr.push_back(c.radius(i, j));
          pp.push_back(c.phase(i, j));
        }
        r.push_back(rr);
        p.push_back(pp);
      }
      emit(cfg, json{{"r", r}, {"phi", p}, {"maxRowSumError", c.max_row_sum_error}}.dump(2));
    }
  });

  // gate
  auto *gate = app.add_subcommand("gate", "Entangling power and typicality");
  gate->require_subcommand(1);
  std::string gname, gfile;
  bool exhaustive = false;
  std::size_t samples = 0, fn = 9;
  auto emit_sweep = [&](const SweepResult &s) {
    if (cfg.format == "csv") {
      std::vector<std::vector<double>> rows;
      for (const auto &p : s.distinct_points) rows.push_back({p.ep, p.gt});
      emit(cfg, csv({"ep", "gt"}, rows));
      return;
    }
    json pts = json::array();
    for (const auto &p : s.distinct_points) pts.push_back({p.ep, p.gt});
    emit(cfg, json{{"total", s.total_permutations}, {"distinct", s.distinct_points.size()},
                   {"twoUnitary", s.two_unitary_count}, {"points", pts}}.dump(2));
  };
  auto *ga = gate->add_subcommand("analyze", "e_p, g_t and symmetries of one matrix");
  ga->add_option("--matrix", gname);
  ga->add_option("--file", gfile);
  ga->callback([&] {
    const Matrix u = load_matrix(gname, gfile);
    const GatePoint p = ep_gt(u);
    emit(cfg, json{{"ep", p.ep}, {"gt", p.gt}, {"E", op_linear_entropy(u)},
                   {"swapSymmetric", swap_symmetry(u)}, {"twoUnitary", is_2unitary(u)}}.dump(2));
  });
  auto *gs = gate->add_subcommand("sweep", "Row-permutation sweep");
  gs->add_option("--matrix", gname);
  gs->add_option("--file", gfile);
  gs->add_flag("--exhaustive", exhaustive);
  gs->add_option("--samples", samples, "Random row orders (sampled mode)");
  gs->callback([&] {
    if (exhaustive == (samples > 0)) throw UsageError("choose exactly one of --exhaustive or --samples");
    SweepOptions o;
    o.seed = cfg.seed;
    if (!exhaustive) {
      o.mode = SweepMode::Sampled;
      o.samples = samples;
    }
    emit_sweep(permutation_sweep(load_matrix(gname, gfile), o));
  });
  auto *gf = gate->add_subcommand("fourier", "Exhaustive sweep of the Fourier matrix");
  gf->add_option("--n", fn);
  gf->callback([&] { emit_sweep(permutation_sweep(catalog::fourier(fn))); });

  // circuit
  auto *circuit = app.add_subcommand("circuit", "Two-qubit synthesis");
  circuit->require_subcommand(1);
  std::string target = "ejm";
  auto *cs = circuit->add_subcommand("synth", "Three-CNOT circuit with residual");
  cs->add_option("--target", target, "ejm or a built-in order-4 matrix name");
  cs->callback([&] {
    Matrix u;
    CircuitSpec c;
    if (target == "ejm") {
      u = catalog::u4();
      c = ejm_circuit();
    } else {
      u = load_matrix(target, "");
      if (u.rows() != 4) throw UsageError("circuit synthesis needs an order-4 matrix");
      c = synthesize(Mat4(u));
    }
    const double residual = phase_aligned_distance(u, simulate_circuit(c));
    const CartanCoordinates cc = cartan_decompose(Mat4(u));
    json j{{"circuit", json::parse(circuit_to_json(c))},
           {"cnots", c.cnot_count()},
           {"canonical", {cc.canonical[0], cc.canonical[1], cc.canonical[2]}},
           {"residual", residual}};
    emit(cfg, j.dump(2));
    if (residual > 1e-10) status = 1;
  });

  // tomo
  auto *tomo = app.add_subcommand("tomo", "Single-qubit tomography with the EJM");
  tomo->require_subcommand(1);
  std::uint64_t shots = 8192;
  std::string calib = "ideal";
  tomo->add_subcommand("predict", "Predicted outcome percentages for the six inputs")->callback([&] {
    const Povm povm = rescaled_povm(build_optimal(builtin_sic(2)), Subsystem::B);
    std::vector<std::vector<double>> rows;
    json j = json::array();
    for (std::size_t k = 0; k < kMubStates.size(); ++k) {
      auto p = predicted_probabilities(mub_state(kMubStates[k]), povm);
      for (double &x : p) x *= 100.0;
      rows.push_back(p);
      j.push_back({{"state", mub_label(kMubStates[k])}, {"percent", p}});
    }
    emit(cfg, cfg.format == "csv" ? csv({"p00", "p01", "p10", "p11"}, rows) : j.dump(2));
  });
  auto *tr = tomo->add_subcommand("run", "Shot-level noisy reconstruction");
  tr->add_option("--shots", shots);
  tr->add_option("--calib", calib, "melbourne, oursense, ideal or a JSON file");
  tr->callback([&] {
    CalibrationRecord c;
    if (calib == "melbourne") {
      c = CalibrationRecord::melbourne();
    } else if (calib == "oursense") {
      c = CalibrationRecord::oursense();
    } else if (calib == "ideal") {
      c = CalibrationRecord::ideal();
    } else {
      std::ifstream f(calib);
      if (!f) throw std::runtime_error("cannot open " + calib);
      std::stringstream ss;
      ss << f.rdbuf();
      c = calibration_from_json(ss.str());
    }
    const TomographyReport r = noisy_experiment(c, shots, cfg.seed);
    json runs = json::array();
    for (const auto &run : r.runs) {
      json pct = json::array();
      for (auto n : run.counts) pct.push_back(100.0 * double(n) / double(shots));
      runs.push_back({{"state", run.label}, {"percent", pct}, {"counts", run.counts},
                      {"hsDeviation", run.hs_deviation},
                      {"negative", run.reconstruction.negative}});
    }
    emit(cfg, json{{"calibration", c.name}, {"osr", r.success_rate},
                   {"meanHsDeviation", r.mean_hs_deviation}, {"runs", runs}}.dump(2));
  });
  tomo->add_subcommand("helstrom", "Bound for two EJM reductions")->callback([&] {
    const SimplexReport s = simplex_report(build_optimal(builtin_sic(2)));
    const HelstromResult h = helstrom(s.side_a[0], s.side_a[1]);
    emit(cfg, json{{"bound", h.bound}, {"distance", s.common_distance}}.dump(2));
  });

  // reproduce
  auto *repro = app.add_subcommand("reproduce", "Regenerate every reference number");
  repro->require_subcommand(1);
  std::size_t probe_restarts = 8;
  auto *ra = repro->add_subcommand("all", "Full report, exit 1 on any failed check");
  ra->add_option("--probe-restarts", probe_restarts);
  ra->callback([&] {
    ReproduceOptions o;
    o.seed = cfg.seed;
    o.probe_restarts = probe_restarts;
    const ReproduceResult r = reproduce_all(o);
    emit(cfg, r.json);
    if (!r.ok) status = 1;
  });

  app.parse_complete_callback([&] {
    if (cfg.tol > 0) {
      Tolerances t = tolerances();
      t.spectral = cfg.tol;
      set_tolerances(t);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return status;
}
