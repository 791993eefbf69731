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

#include "sicbasis/basis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

namespace sicbasis {

LambdaBounds lambda_bounds(std::size_t n) {
  if (n < 2) throw std::invalid_argument("lambda_bounds requires N >= 2");
  const double N = static_cast<double>(n);
  const double root = 2.0 * (N - 1.0) * std::sqrt(N + 1.0);
  const double n3 = N * N * N;
  return {-(-n3 + N * N + N + root - 2.0) / n3,
          (n3 - N * N - N + root + 2.0) / n3};
}

OrthogonalitySolution orthogonality_solution(std::size_t n, double phi) {
  if (n < 2) throw std::invalid_argument("orthogonality_solution requires N >= 2");
  const double N = static_cast<double>(n);
  OrthogonalitySolution s;
  s.a = N * (N - 2.0) / (N * N - 1.0);
  s.b = (N * N - N - 1.0) / (N * N - 1.0);
  s.c = 2.0 * N * std::cos(phi) / ((N + 1.0) * std::sqrt(N - 1.0));
  // Rows i != k are orthogonal iff B - A lam + C sqrt(lam - lam^2) = 0.
  // B - A lam > 0 on [0, 1], so C must be negative.
  if (s.c >= 0.0) return s;
  const double c2 = s.c * s.c;
  double delta = c2 * (c2 + 4.0 * s.a * s.b - 4.0 * s.b * s.b);
  if (delta < 0.0 && delta > -1e-13) delta = 0.0;
  if (delta < 0.0) return s;
  const double den = 2.0 * (s.a * s.a + c2);
  const double lp = (c2 + 2.0 * s.a * s.b + std::sqrt(delta)) / den;
  const double lm = (c2 + 2.0 * s.a * s.b - std::sqrt(delta)) / den;
  auto residual = [&](double l) {
    return s.b - s.a * l + s.c * std::sqrt(std::max(0.0, l - l * l));
  };
  if (std::abs(residual(lp)) < 1e-10 && std::abs(residual(lm)) < 1e-10) {
    s.lambdas = std::make_pair(lp, lm);
  }
  return s;
}

PureState BipartiteBasis::state(std::size_t i) const {
  return PureState::normalized(matrix.row(static_cast<Eigen::Index>(i)).adjoint());
}

std::vector<PureState> BipartiteBasis::states() const {
  std::vector<PureState> out;
  for (std::size_t i = 0; i < size(); ++i) out.push_back(state(i));
  return out;
}

PureState basis_state(const CompletionSet &c, double lambda, double phi) {
  const std::size_t n = c.base.dim();
  const auto vs = c.all();
  const double rest =
      n > 1 ? std::sqrt((1.0 - lambda) / static_cast<double>(n - 1)) : 0.0;
  Vector psi = std::sqrt(lambda) *
               tensor(vs[0].amplitudes(), vs[0].conjugate().amplitudes());
  const complex_t ph = std::polar(1.0, phi);
  for (std::size_t j = 1; j < n; ++j) {
    psi += ph * rest * tensor(vs[j].amplitudes(), vs[j].conjugate().amplitudes());
  }
  return PureState::normalized(psi);
}

BipartiteBasis build_basis(
    const SicEnsemble &sic, double lambda, double phi,
    const std::vector<CompletionSet> &completions) {
  const std::size_t n = sic.dim;
  if (completions.size() != sic.states.size()) {
    throw DimensionError("one completion per SIC state required");
  }
  if (lambda < 0.0 || lambda > 1.0) {
    throw std::invalid_argument("lambda must lie in [0, 1]");
  }
  const auto nn = static_cast<Eigen::Index>(n * n);
  BipartiteBasis out;
  out.n = n;
  out.lambda = lambda;
  out.phase = phi;
  out.source = sic.variant;
  out.matrix = Matrix(nn, nn);
  for (std::size_t i = 0; i < completions.size(); ++i) {
    const PureState psi = basis_state(completions[i], lambda, phi);
    out.matrix.row(static_cast<Eigen::Index>(i)) = psi.amplitudes().adjoint();
  }
  const double defect = unitarity_defect(out.matrix);
  if (defect > tolerances().spectral) {
    throw NotUnitaryError(
        "(lambda, phi) does not yield an orthonormal basis; defect " +
        std::to_string(defect));
  }
  return out;
}

BipartiteBasis build_basis(const SicEnsemble &sic, double lambda, double phi) {
  std::vector<CompletionSet> cs;
  for (const auto &s : sic.states) cs.push_back(completion(s));
  return build_basis(sic, lambda, phi, cs);
}

BipartiteBasis build_optimal(const SicEnsemble &sic) {
  return build_basis(sic, lambda_bounds(sic.dim).max, PI);
}

Vector conjugate_pair_sum(const CompletionSet &c) {
  const auto vs = c.all();
  Vector out = Vector::Zero(static_cast<Eigen::Index>(vs.size() * vs.size()));
  for (const auto &v : vs) out += tensor(v.amplitudes(), v.conjugate().amplitudes());
  return out;
}

Vector scaled_max_entangled(std::size_t n) {
  const auto ni = static_cast<Eigen::Index>(n);
  Vector out = Vector::Zero(ni * ni);
  for (Eigen::Index j = 0; j < ni; ++j) out(j * ni + j) = 1.0;
  return out;
}

PureState superposition_form(
    const SicEnsemble &sic, std::size_t i, double lambda, double phi) {
  if (i < 1 || i > sic.states.size()) {
    throw std::out_of_range("basis index is 1-based and at most N^2");
  }
  const std::size_t n = sic.dim;
  const PureState &b = sic.states[i - 1];
  const double c = std::sqrt((1.0 - lambda) / static_cast<double>(n - 1));
  const complex_t ph = std::polar(1.0, phi);
  Vector psi = (std::sqrt(lambda) - ph * c) *
                   tensor(b.amplitudes(), b.conjugate().amplitudes()) +
               ph * c * scaled_max_entangled(n);
  return PureState::normalized(psi);
}

double max_single_sided_distance(std::size_t n) {
  const double N = static_cast<double>(n);
  return ((N - 2.0) * std::sqrt(N + 1.0) + 2.0) / std::pow(N, 1.5);
}

SimplexReport simplex_report(const Matrix &bras, std::size_t n) {
  const auto m = static_cast<std::size_t>(bras.rows());
  if (m != n * n) throw DimensionError("simplex_report expects N^2 rows");
  SimplexReport r;
  for (std::size_t i = 0; i < m; ++i) {
    const PureState psi =
        PureState::normalized(bras.row(static_cast<Eigen::Index>(i)).adjoint());
    r.side_a.push_back(reduced_state(psi, n, n, Subsystem::A));
    r.side_b.push_back(reduced_state(psi, n, n, Subsystem::B));
  }
  const auto mi = static_cast<Eigen::Index>(m);
  r.distances_a = Eigen::MatrixXd::Zero(mi, mi);
  r.distances_b = Eigen::MatrixXd::Zero(mi, mi);
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const auto ii = static_cast<Eigen::Index>(i), jj = static_cast<Eigen::Index>(j);
      r.distances_a(ii, jj) = trace_distance(r.side_a[i], r.side_a[j]);
      r.distances_b(ii, jj) = trace_distance(r.side_b[i], r.side_b[j]);
      sum += r.distances_a(ii, jj);
    }
  }
  if (m > 1) r.common_distance = sum / static_cast<double>(m * (m - 1));
  for (Eigen::Index i = 0; i < mi; ++i) {
    for (Eigen::Index j = 0; j < mi; ++j) {
      if (i == j) continue;
      r.max_spread = std::max(
          {r.max_spread, std::abs(r.distances_a(i, j) - r.common_distance),
           std::abs(r.distances_b(i, j) - r.common_distance)});
      r.side_mismatch =
          std::max(r.side_mismatch, std::abs(r.distances_a(i, j) - r.distances_b(i, j)));
    }
  }
  return r;
}

SimplexReport simplex_report(const BipartiteBasis &basis) {
  return simplex_report(basis.matrix, basis.n);
}

Eigen::Vector3d bloch_vector(const DensityMatrix &rho) {
  if (rho.dim() != 2) throw DimensionError("Bloch vector needs a qubit state");
  const Matrix &m = rho.matrix();
  return {2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()};
}

PuritySeries purity_series_check() {
  PuritySeries s;
  const SicEnsemble sic = builtin_sic(2);
  for (const auto &st : sic.states) s.sic += DensityMatrix::from_pure(st).purity();
  s.sic /= static_cast<double>(sic.states.size());

  const SimplexReport ejm = simplex_report(build_optimal(sic));
  for (const auto &rho : ejm.side_a) s.ejm += rho.purity();
  s.ejm /= static_cast<double>(ejm.side_a.size());

  const auto mixed = bloch_tetrahedron(std::sqrt(3.0 / 5.0));
  for (const auto &rho : mixed) s.mixed_design += rho.purity();
  s.mixed_design /= static_cast<double>(mixed.size());
  return s;
}

ClockData clock_data(const Matrix &u) {
  ClockData c;
  c.radius = u.cwiseAbs2();
  c.phase = Eigen::MatrixXd(u.rows(), u.cols());
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    for (Eigen::Index j = 0; j < u.cols(); ++j) c.phase(i, j) = std::arg(u(i, j));
  }
  c.row_sums = c.radius.rowwise().sum();
  c.max_row_sum_error = (c.row_sums.array() - 1.0).abs().maxCoeff();
  return c;
}

Matrix canonical_rows(const Matrix &m, double tie_tol) {
  Matrix out = m;
  for (Eigen::Index r = 0; r < out.rows(); ++r) {
    const double top = out.row(r).cwiseAbs().maxCoeff();
    if (top == 0.0) continue;
    for (Eigen::Index k = 0; k < out.cols(); ++k) {
      const double a = std::abs(out(r, k));
      if (a >= top - tie_tol) {
        out.row(r) *= a / out(r, k);
        break;
      }
    }
  }
  return out;
}

Equivalence compare_rows(
    const Matrix &candidate, const Matrix &reference, ColumnOrder columns) {
  if (candidate.rows() != reference.rows() || candidate.cols() != reference.cols()) {
    throw DimensionError("compare_rows: shape mismatch");
  }
  Equivalence e;
  e.columns = columns;
  Matrix cand = candidate;
  if (columns == ColumnOrder::Swap) {
    const auto n = static_cast<std::size_t>(std::llround(std::sqrt(cand.cols())));
    cand = cand * swap_operator(n);
  }
  const Matrix a = canonical_rows(cand);
  const Matrix b = canonical_rows(reference);
  std::vector<bool> used(static_cast<std::size_t>(b.rows()), false);
  e.bijective = true;
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    for (Eigen::Index s = 0; s < b.rows(); ++s) {
      const double d = (a.row(r) - b.row(s)).cwiseAbs().maxCoeff();
      if (d < best) {
        best = d;
        arg = static_cast<std::size_t>(s);
      }
    }
    if (used[arg]) e.bijective = false;
    used[arg] = true;
    e.row_map.push_back(arg);
    e.max_difference = std::max(e.max_difference, best);
  }
  return e;
}

Equivalence best_equivalence(const Matrix &candidate, const Matrix &reference) {
  Equivalence id = compare_rows(candidate, reference, ColumnOrder::Identity);
  Equivalence sw = compare_rows(candidate, reference, ColumnOrder::Swap);
  auto score = [](const Equivalence &e) {
    return e.bijective ? e.max_difference : std::numeric_limits<double>::infinity();
  };
  return score(sw) < score(id) ? sw : id;
}

namespace {

using Mat4 = Eigen::Matrix4cd;
using Mat2 = Eigen::Matrix2cd;

// The twelve pairwise single-sided distances of a two-qubit basis.
std::array<double, 12> pair_distances(const Mat4 &u) {
  std::array<Mat2, 4> ra, rb;
  for (int r = 0; r < 4; ++r) {
    Mat2 m;
    m << std::conj(u(r, 0)), std::conj(u(r, 1)), std::conj(u(r, 2)), std::conj(u(r, 3));
    ra[r] = m * m.adjoint();
    rb[r] = (m.adjoint() * m).transpose();
  }
  std::array<double, 12> d{};
  int k = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      for (const auto *side : {&ra, &rb}) {
        const Mat2 diff = (*side)[i] - (*side)[j];
        const double a = 0.5 * (diff(0, 0) - diff(1, 1)).real();
        d[k++] = std::sqrt(a * a + std::norm(diff(0, 1)));
      }
    }
  }
  return d;
}

double softmin(const std::array<double, 12> &d, double t) {
  const double m = *std::min_element(d.begin(), d.end());
  double s = 0.0;
  for (double x : d) s += std::exp(-(x - m) / t);
  return m - t * std::log(s);
}

std::array<Mat4, 16> pauli_generators() {
  std::array<Mat2, 4> p;
  p[0] = Mat2::Identity();
  p[1] = pauli_x();
  p[2] = pauli_y();
  p[3] = pauli_z();
  std::array<Mat4, 16> g;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) g[a * 4 + b] = tensor(Matrix(p[a]), Matrix(p[b]));
  }
  return g;
}

Mat4 exp_i_hermitian(const Mat4 &h) {
  Eigen::SelfAdjointEigenSolver<Mat4> es(h);
  const Eigen::Vector4cd ph = (i_ * es.eigenvalues().cast<complex_t>()).array().exp();
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

struct AscentResult {
  Mat4 u;
  double value;
  double spread;
};

AscentResult ascend(Mat4 u, const ProbeOptions &opt) {
  static const std::array<Mat4, 16> gens = pauli_generators();
  // Every generator squares to I, so exp(i eps G) = cos eps + i sin eps G.
  const double eps = 1e-7;
  std::array<Mat4, 16> plus, minus;
  for (int k = 0; k < 16; ++k) {
    plus[k] = std::cos(eps) * Mat4::Identity() + i_ * std::sin(eps) * gens[k];
    minus[k] = std::cos(eps) * Mat4::Identity() - i_ * std::sin(eps) * gens[k];
  }
  double eta = 0.05;
  double t = 0.05;
  // Anneal to the working temperature, then keep cooling as a polish of the
  // exact minimum.
  while (t > opt.polish_temperature) {
    for (std::size_t it = 0; it < opt.steps_per_stage; ++it) {
      const double f0 = softmin(pair_distances(u), t);
      std::array<double, 16> g{};
      double gn = 0.0;
      for (int k = 0; k < 16; ++k) {
        g[k] = (softmin(pair_distances(u * plus[k]), t) -
                softmin(pair_distances(u * minus[k]), t)) /
               (2.0 * eps);
        gn += g[k] * g[k];
      }
      if (gn < 1e-24) break;
      Mat4 h = Mat4::Zero();
      for (int k = 0; k < 16; ++k) h += g[k] * gens[k];
      bool moved = false;
      while (eta > 1e-12) {
        const Mat4 un = u * exp_i_hermitian(eta * h);
        if (softmin(pair_distances(un), t) > f0) {
          u = un;
          eta *= 1.5;
          moved = true;
          break;
        }
        eta *= 0.5;
      }
      if (!moved) {
        eta = 1e-3;
        break;
      }
    }
    t *= (t > opt.temperature) ? 0.3 : 0.1;
  }
  const auto d = pair_distances(u);
  const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
  return {u, *lo, *hi - *lo};
}

}  // namespace

double min_single_sided_distance(const Matrix &u) {
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(u.rows())));
  const SimplexReport r = simplex_report(u, n);
  double m = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < r.distances_a.rows(); ++i) {
    for (Eigen::Index j = 0; j < r.distances_a.cols(); ++j) {
      if (i != j) m = std::min({m, r.distances_a(i, j), r.distances_b(i, j)});
    }
  }
  return m;
}

std::size_t worker_threads(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char *env = std::getenv("SICBASIS_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

ProbeReport conjecture1_probe_from(const Matrix &start, const ProbeOptions &opt) {
  if (start.rows() != 4 || start.cols() != 4) {
    throw DimensionError("the probe works with order-4 unitaries");
  }
  ProbeReport rep;
  const Mat4 u0 = start;
  const auto d0 = pair_distances(u0);
  const double start_value = *std::min_element(d0.begin(), d0.end());
  const AscentResult a = ascend(u0, opt);
  rep.restart_values.push_back(a.value);
  if (a.spread <= opt.equidistance_tol) {
    rep.converged = 1;
  } else {
    rep.discarded = 1;
  }
  if (start_value >= a.value) {
    rep.best_distance = start_value;
    rep.best_unitary = start;
  } else {
    rep.best_distance = a.value;
    rep.best_unitary = a.u;
  }
  return rep;
}

ProbeReport conjecture1_probe(const ProbeOptions &opt) {
  ProbeReport rep;
  if (opt.restarts == 0) return rep;
  std::vector<AscentResult> results(opt.restarts);
  const std::size_t nt = std::min(worker_threads(opt.threads), opt.restarts);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      std::seed_seq seq{static_cast<std::uint32_t>(opt.seed),
                        static_cast<std::uint32_t>(opt.seed >> 32),
                        static_cast<std::uint32_t>(r)};
      std::mt19937_64 rng(seq);
      results[r] = ascend(Mat4(haar_unitary(4, rng)), opt);
    }
  };
  std::vector<std::thread> pool;
  const std::size_t chunk = (opt.restarts + nt - 1) / nt;
  for (std::size_t t = 0; t < nt; ++t) {
    const std::size_t b = t * chunk, e = std::min(opt.restarts, b + chunk);
    if (b < e) pool.emplace_back(work, b, e);
  }
  for (auto &th : pool) th.join();

  bool have = false;
  for (std::size_t r = 0; r < results.size(); ++r) {
    rep.restart_values.push_back(results[r].value);
    if (results[r].spread > opt.equidistance_tol) {
      ++rep.discarded;
      continue;
    }
    ++rep.converged;
    if (!have || results[r].value > rep.best_distance) {
      have = true;
      rep.best_distance = results[r].value;
      rep.best_restart = r;
      rep.best_unitary = results[r].u;
    }
  }
  return rep;
}

}  // namespace sicbasis
