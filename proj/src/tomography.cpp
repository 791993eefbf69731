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

#include "sicbasis/tomography.hpp"

#include <cmath>
#include <thread>

#include "sicbasis/json_io.hpp"

namespace sicbasis {

double Povm::completeness_defect() const {
  if (effects.empty()) return 0.0;
  Matrix sum = Matrix::Zero(effects[0].rows(), effects[0].cols());
  for (const auto &e : effects) sum += e;
  return (sum - Matrix::Identity(sum.rows(), sum.cols())).cwiseAbs().maxCoeff();
}

double Povm::min_eigenvalue() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto &e : effects) m = std::min(m, hermitian_eigenvalues(e).minCoeff());
  return m;
}

void Povm::validate(double tol) const {
  if (completeness_defect() > tol) throw std::invalid_argument("POVM effects do not sum to I");
  if (min_eigenvalue() < -tol) throw std::invalid_argument("POVM effect is not PSD");
}

Povm rescaled_povm(const Matrix &bras, std::size_t n, Subsystem side) {
  const SimplexReport r = simplex_report(bras, n);
  Povm p;
  for (const auto &rho : side == Subsystem::A ? r.side_a : r.side_b) {
    p.effects.push_back(rho.matrix() / static_cast<double>(n));
  }
  return p;
}

Povm rescaled_povm(const BipartiteBasis &basis, Subsystem side) {
  return rescaled_povm(basis.matrix, basis.n, side);
}

Povm sic_povm(const SicEnsemble &sic) {
  Povm p;
  for (const auto &s : sic.states) p.effects.push_back(s.projector() / static_cast<double>(sic.dim));
  return p;
}

std::vector<double> predicted_probabilities(const DensityMatrix &sigma, const Povm &povm) {
  if (povm.dim() != sigma.dim()) throw DimensionError("state and POVM dimensions differ");
  std::vector<double> p;
  for (const auto &e : povm.effects) p.push_back((e * sigma.matrix()).trace().real());
  return p;
}

InversionCoefficients inversion_coefficients(std::size_t n, double lambda) {
  const double N = static_cast<double>(n);
  const double d = lambda * N - 1.0;
  if (std::abs(d) < 1e-12) {
    throw std::invalid_argument("effects at lambda = 1/N carry no information");
  }
  return {(N - 1.0) * (N - 1.0) * N * (N + 1.0) / (d * d),
          (2.0 * lambda + N * N - (lambda * lambda + 1.0) * N - 1.0) / (d * d)};
}

DensityMatrix Reconstruction::projected() const { return DensityMatrix::project_psd(raw); }

Reconstruction reconstruct(
    const std::vector<double> &p, const Povm &povm, std::size_t n, double lambda) {
  if (p.size() != povm.effects.size()) throw DimensionError("one probability per effect");
  double total = 0.0;
  for (double x : p) total += x;
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("probabilities must sum to 1");
  const InversionCoefficients k = inversion_coefficients(n, lambda);
  const auto ni = static_cast<Eigen::Index>(n);
  Reconstruction r;
  r.raw = -k.b * Matrix::Identity(ni, ni);
  for (std::size_t i = 0; i < p.size(); ++i) r.raw += k.a * p[i] * povm.effects[i];
  r.raw = 0.5 * (r.raw + r.raw.adjoint()).eval();
  r.min_eigenvalue = hermitian_eigenvalues(r.raw).minCoeff();
  r.negative = r.min_eigenvalue < tolerances().psd_floor;
  return r;
}

double amplification(std::size_t n, Scheme scheme) {
  return scheme == Scheme::Ejm ? inversion_coefficients(n, lambda_bounds(n).max).a
                               : inversion_coefficients(n, 1.0).a;
}

Matrix error_propagation(const std::vector<double> &dp, Scheme scheme) {
  const SicEnsemble sic = builtin_sic(2);
  const Povm povm = scheme == Scheme::Ejm ? rescaled_povm(build_optimal(sic), Subsystem::B)
                                          : sic_povm(sic);
  if (dp.size() != povm.effects.size()) throw DimensionError("one deviation per effect");
  Matrix out = Matrix::Zero(2, 2);
  const double a = amplification(2, scheme);
  for (std::size_t i = 0; i < dp.size(); ++i) out += a * dp[i] * povm.effects[i];
  return out;
}

HelstromResult helstrom(const DensityMatrix &rho, const DensityMatrix &sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionError("helstrom: dimension mismatch");
  const Matrix diff = rho.matrix() - sigma.matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (diff + diff.adjoint()));
  const auto d = static_cast<Eigen::Index>(rho.dim());
  HelstromResult h;
  h.p_rho = h.p_sigma = h.p_null = Matrix::Zero(d, d);
  double dtr = 0.0;
  for (Eigen::Index k = 0; k < d; ++k) {
    const double lam = es.eigenvalues()(k);
    const Matrix proj = es.eigenvectors().col(k) * es.eigenvectors().col(k).adjoint();
    if (lam > tolerances().spectral) {
      h.p_rho += proj;
      dtr += lam;
    } else if (lam < -tolerances().spectral) {
      h.p_sigma += proj;
    } else {
      h.p_null += proj;
    }
  }
  h.bound = 0.5 * (1.0 + dtr);
  return h;
}

double simulate_helstrom(
    const DensityMatrix &rho, const DensityMatrix &sigma, std::size_t trials,
    std::uint64_t seed) {
  const HelstromResult h = helstrom(rho, sigma);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto outcome_probs = [&](const Matrix &m) {
    return std::array<double, 3>{(h.p_rho * m).trace().real(), (h.p_sigma * m).trace().real(),
                                 (h.p_null * m).trace().real()};
  };
  const auto pr = outcome_probs(rho.matrix());
  const auto ps = outcome_probs(sigma.matrix());
  std::size_t wins = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const bool is_rho = u(rng) < 0.5;
    const auto &q = is_rho ? pr : ps;
    const double x = u(rng);
    int outcome = x < q[0] ? 0 : (x < q[0] + q[1] ? 1 : 2);
    bool guess_rho = outcome == 0;
    if (outcome == 2) guess_rho = u(rng) < 0.5;
    if (guess_rho == is_rho) ++wins;
  }
  return static_cast<double>(wins) / static_cast<double>(trials);
}

std::vector<std::uint64_t> sample_shots(
    const std::vector<double> &p, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("at least one shot required");
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> counts(p.size(), 0);
  std::uint64_t left = shots;
  double mass = 1.0;
  for (std::size_t k = 0; k + 1 < p.size() && left > 0; ++k) {
    const double q = mass > 0.0 ? std::clamp(p[k] / mass, 0.0, 1.0) : 0.0;
    std::binomial_distribution<std::uint64_t> b(left, q);
    counts[k] = b(rng);
    left -= counts[k];
    mass -= p[k];
  }
  if (!p.empty()) counts.back() += left;
  return counts;
}

CircuitSpec bell_ancilla_circuit() {
  CircuitSpec c;
  c.wires = {"S", "A", "C"};
  c.h(1).cnot(1, 2);
  // The printed EJM matrix pairs the unknown state with its first wire.
  for (const Gate &g : ejm_circuit().gates) c.gates.push_back(g);
  c.measure(0).measure(1);
  return c;
}

namespace {

Matrix embed(const Mat2 &g, std::size_t q, std::size_t nq) {
  Matrix out = Matrix::Identity(1, 1);
  for (std::size_t k = 0; k < nq; ++k) {
    out = tensor(out, k == q ? Matrix(g) : Matrix(Matrix::Identity(2, 2)));
  }
  return out;
}

// Depolarizing on the listed qubits as a uniform Pauli twirl.
void depolarize(Matrix &rho, const std::vector<std::size_t> &qubits, double p, std::size_t nq) {
  if (p <= 0.0) return;
  const std::array<Mat2, 4> paulis{Mat2::Identity(), Mat2(pauli_x()), Mat2(pauli_y()),
                                   Mat2(pauli_z())};
  const std::size_t terms = std::size_t{1} << (2 * qubits.size());
  Matrix acc = Matrix::Zero(rho.rows(), rho.cols());
  for (std::size_t t = 0; t < terms; ++t) {
    Matrix op = Matrix::Identity(rho.rows(), rho.cols());
    std::size_t code = t;
    for (std::size_t q : qubits) {
      op = op * embed(paulis[code % 4], q, nq);
      code /= 4;
    }
    acc += op * rho * op.adjoint();
  }
  rho = (1.0 - p) * rho + p * acc / static_cast<double>(terms);
}

}  // namespace

std::vector<double> noisy_distribution(const DensityMatrix &sigma, const CalibrationRecord &calib) {
  if (sigma.dim() != 2) throw DimensionError("the target state must be a qubit");
  calib.validate();
  const std::size_t nq = 3;
  Matrix zero = Matrix::Zero(2, 2);
  zero(0, 0) = 1.0;
  Matrix rho = tensor(sigma.matrix(), tensor(zero, zero));
  const CircuitSpec c = bell_ancilla_circuit();
  for (const Gate &g : c.gates) {
    if (g.kind == GateKind::Measure) continue;
    CircuitSpec one;
    one.wires = c.wires;
    one.gates = {g};
    const Matrix u = simulate_circuit(one);
    rho = u * rho * u.adjoint();
    if (g.kind == GateKind::CNOT) {
      const std::size_t lo = std::min(g.control, g.target), hi = std::max(g.control, g.target);
      double p = 0.0;
      if (lo == 0 && hi == 1) {
        p = calib.cnot01;
      } else if (lo == 1 && hi == 2) {
        p = calib.cnot12;
      } else {
        throw std::invalid_argument("no calibrated CNOT between qubits 0 and 2");
      }
      depolarize(rho, {g.control, g.target}, p, nq);
    } else {
      depolarize(rho, {g.target}, calib.one_qubit[g.target], nq);
    }
  }
  // Index of |q0 q1 q2> is 4 q0 + 2 q1 + q2; outcome 2 q0 + q1.
  std::vector<double> p(4, 0.0);
  for (int idx = 0; idx < 8; ++idx) p[static_cast<std::size_t>(idx >> 1)] += rho(idx, idx).real();
  const double ra = calib.readout[0], rb = calib.readout[1];
  std::vector<double> out(4, 0.0);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) {
          const double fa = a == a2 ? 1.0 - ra : ra;
          const double fb = b == b2 ? 1.0 - rb : rb;
          out[static_cast<std::size_t>(2 * a2 + b2)] +=
              fa * fb * p[static_cast<std::size_t>(2 * a + b)];
        }
  return out;
}

std::vector<double> bell_ancilla_scheme(const DensityMatrix &sigma) {
  return noisy_distribution(sigma, CalibrationRecord::ideal());
}

void CalibrationRecord::validate() const {
  auto ok = [](double x) { return std::isfinite(x) && x >= 0.0 && x <= 0.5; };
  for (int q = 0; q < 3; ++q) {
    if (!ok(readout[q]) || !ok(one_qubit[q])) {
      throw std::invalid_argument("calibration rates must lie in [0, 0.5]");
    }
  }
  if (!ok(cnot01) || !ok(cnot12)) throw std::invalid_argument("calibration rates must lie in [0, 0.5]");
}

CalibrationRecord CalibrationRecord::melbourne() {
  return {"melbourne", {2.05e-2, 10.2e-2, 2.02e-2}, {5.34e-4, 15.9e-4, 9.91e-4}, 24.11e-3,
          14.32e-3};
}

CalibrationRecord CalibrationRecord::oursense() {
  return {"oursense", {2.10e-2, 2.90e-2, 1.50e-2}, {3.19e-4, 3.59e-4, 3.12e-4}, 6.744e-3,
          8.335e-3};
}

CalibrationRecord CalibrationRecord::ideal() { return {"ideal", {}, {}, 0.0, 0.0}; }

std::string calibration_to_json(const CalibrationRecord &c) {
  json_io::json j;
  j["name"] = c.name;
  j["qubits"] = json_io::json::array();
  for (int q = 0; q < 3; ++q) {
    j["qubits"].push_back({{"readout", c.readout[q]}, {"one_qubit", c.one_qubit[q]}});
  }
  j["cnot01"] = c.cnot01;
  j["cnot12"] = c.cnot12;
  return j.dump(2);
}

CalibrationRecord calibration_from_json(const std::string &text) {
  const auto j = json_io::json::parse(text);
  CalibrationRecord c;
  c.name = j.value("name", std::string("custom"));
  const auto &qs = j.at("qubits");
  if (qs.size() != 3) throw std::invalid_argument("calibration needs three qubits");
  for (std::size_t q = 0; q < 3; ++q) {
    c.readout[q] = qs.at(q).at("readout").get<double>();
    c.one_qubit[q] = qs.at(q).at("one_qubit").get<double>();
  }
  c.cnot01 = j.at("cnot01").get<double>();
  c.cnot12 = j.at("cnot12").get<double>();
  c.validate();
  return c;
}

double estimate_success_rate(const CalibrationRecord &calib, const OsrInventory &inv) {
  calib.validate();
  double s = 1.0;
  for (int q = 0; q < 3; ++q) {
    s *= std::pow(1.0 - calib.readout[q], inv.readouts[q]);
    s *= std::pow(1.0 - calib.one_qubit[q], inv.one_qubit[q]);
  }
  s *= std::pow(1.0 - calib.cnot01, inv.cnot01);
  s *= std::pow(1.0 - calib.cnot12, inv.cnot12);
  return s;
}

DensityMatrix mub_state(MubState s) {
  const double r = 1.0 / std::sqrt(2.0);
  Vector v(2);
  switch (s) {
    case MubState::Zero:
      v << 1.0, 0.0;
      break;
    case MubState::One:
      v << 0.0, 1.0;
      break;
    case MubState::Plus:
      v << r, r;
      break;
    case MubState::Minus:
      v << r, -r;
      break;
    case MubState::YPlus:
      v << r, i_ * r;
      break;
    case MubState::YMinus:
      v << r, -i_ * r;
      break;
  }
  return DensityMatrix::from_pure(PureState(v));
}

std::string mub_label(MubState s) {
  switch (s) {
    case MubState::Zero:
      return "0";
    case MubState::One:
      return "1";
    case MubState::Plus:
      return "+";
    case MubState::Minus:
      return "-";
    case MubState::YPlus:
      return "y+";
    case MubState::YMinus:
      return "y-";
  }
  return "?";
}

const std::array<std::array<double, 4>, 6> &table2_predicted() {
  static const std::array<std::array<double, 4>, 6> t{{{46.7, 17.8, 17.8, 17.8},
                                                       {3.3, 32.2, 32.2, 32.2},
                                                       {25.0, 45.4, 14.8, 14.8},
                                                       {25.0, 4.6, 35.2, 35.2},
                                                       {25.0, 25.0, 7.3, 42.7},
                                                       {25.0, 25.0, 42.7, 7.3}}};
  return t;
}

TomographyReport noisy_experiment(
    const CalibrationRecord &calib, std::uint64_t shots, std::uint64_t seed) {
  const BipartiteBasis ejm = build_optimal(builtin_sic(2));
  const Povm povm = rescaled_povm(ejm, Subsystem::B);
  TomographyReport rep;
  rep.success_rate = estimate_success_rate(calib);
  rep.runs.resize(kMubStates.size());

  auto one = [&](std::size_t k) {
    const DensityMatrix sigma = mub_state(kMubStates[k]);
    StateRun run;
    run.label = mub_label(kMubStates[k]);
    run.predicted = predicted_probabilities(sigma, povm);
    run.noisy = noisy_distribution(sigma, calib);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(k)};
    std::array<std::uint32_t, 2> sub{};
    seq.generate(sub.begin(), sub.end());
    run.counts = sample_shots(run.noisy, shots, (std::uint64_t{sub[0]} << 32) | sub[1]);
    std::vector<double> freq;
    for (auto c : run.counts) freq.push_back(static_cast<double>(c) / static_cast<double>(shots));
    run.reconstruction = reconstruct(freq, povm, 2, ejm.lambda);
    run.hs_deviation = (run.reconstruction.raw - sigma.matrix()).norm();
    rep.runs[k] = std::move(run);
  };
  std::vector<std::thread> pool;
  const std::size_t nt = std::min<std::size_t>(worker_threads(), kMubStates.size());
  for (std::size_t t = 0; t < nt; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t k = t; k < kMubStates.size(); k += nt) one(k);
    });
  }
  for (auto &th : pool) th.join();
  for (const auto &r : rep.runs) rep.mean_hs_deviation += r.hs_deviation;
  rep.mean_hs_deviation /= static_cast<double>(rep.runs.size());
  return rep;
}

}  // namespace sicbasis
