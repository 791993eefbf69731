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

#include "sicbasis/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace sicbasis {

namespace {

Tolerances g_tolerances{};

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

void check_tensor_size(std::size_t entries) {
  if (entries > kMaxTensorEntries) {
    throw DimensionError(
        "tensor product exceeds " + std::to_string(kMaxTensorEntries) +
        " entries");
  }
}

// psi reshaped so that M(a, b) = psi[a * dB + b].
Matrix coefficient_matrix(const Vector &psi, std::size_t dA, std::size_t dB) {
  if (static_cast<std::size_t>(psi.size()) != dA * dB) {
    throw DimensionError("state dimension does not factor as dA * dB");
  }
  Matrix m(idx(dA), idx(dB));
  for (std::size_t a = 0; a < dA; ++a) {
    for (std::size_t b = 0; b < dB; ++b) {
      m(idx(a), idx(b)) = psi(idx(a * dB + b));
    }
  }
  return m;
}

}  // namespace

const Tolerances &tolerances() { return g_tolerances; }
void set_tolerances(const Tolerances &tol) { g_tolerances = tol; }

PureState::PureState(Vector amplitudes) : amp_(std::move(amplitudes)) {
  if (amp_.size() == 0) throw DimensionError("empty state vector");
  if (std::abs(amp_.norm() - 1.0) > g_tolerances.structural) {
    throw std::invalid_argument("state vector is not normalized");
  }
}

PureState PureState::normalized(const Vector &v) {
  const double n = v.norm();
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  return PureState(v / n);
}

PureState PureState::conjugate() const { return PureState(amp_.conjugate()); }

Matrix PureState::projector() const { return amp_ * amp_.adjoint(); }

complex_t inner(const PureState &a, const PureState &b) {
  if (a.dim() != b.dim()) throw DimensionError("inner: dimension mismatch");
  return a.amplitudes().dot(b.amplitudes());
}

DensityMatrix::DensityMatrix(Matrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw DimensionError("density matrix must be square and nonempty");
  }
  if (!is_hermitian(m_, g_tolerances.structural)) {
    throw NotHermitianError("density matrix is not Hermitian");
  }
  m_ = 0.5 * (m_ + m_.adjoint()).eval();
  if (std::abs(m_.trace().real() - 1.0) > g_tolerances.structural) {
    throw std::invalid_argument("density matrix trace differs from one");
  }
  if (hermitian_eigenvalues(m_).minCoeff() < g_tolerances.psd_floor) {
    throw std::invalid_argument("density matrix has a negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState &psi) {
  return DensityMatrix(psi.projector());
}

DensityMatrix DensityMatrix::project_psd(const Matrix &hermitian) {
  if (!is_hermitian(hermitian, g_tolerances.spectral)) {
    throw NotHermitianError("project_psd: input is not Hermitian");
  }
  const Matrix h = 0.5 * (hermitian + hermitian.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  RealVector ev = es.eigenvalues().cwiseMax(0.0);
  const double total = ev.sum();
  if (total <= 0.0) {
    throw std::invalid_argument("project_psd: no positive spectrum");
  }
  ev /= total;
  return DensityMatrix(
      es.eigenvectors() * ev.cast<complex_t>().asDiagonal() *
      es.eigenvectors().adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix(
      Matrix::Identity(idx(dim), idx(dim)) / static_cast<double>(dim));
}

double DensityMatrix::purity() const {
  return (m_ * m_).trace().real();
}

Matrix tensor(const Matrix &a, const Matrix &b) {
  const auto ar = static_cast<std::size_t>(a.rows());
  const auto ac = static_cast<std::size_t>(a.cols());
  const auto br = static_cast<std::size_t>(b.rows());
  const auto bc = static_cast<std::size_t>(b.cols());
  check_tensor_size(ar * br * ac * bc);
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector tensor(const Vector &a, const Vector &b) {
  check_tensor_size(static_cast<std::size_t>(a.size() * b.size()));
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

PureState tensor(const PureState &a, const PureState &b) {
  return PureState::normalized(tensor(a.amplitudes(), b.amplitudes()));
}

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b) {
  return DensityMatrix(tensor(a.matrix(), b.matrix()));
}

Matrix partial_trace(
    const Matrix &op, std::size_t dA, std::size_t dB, Subsystem keep) {
  if (op.rows() != op.cols() ||
      static_cast<std::size_t>(op.rows()) != dA * dB) {
    throw DimensionError("partial_trace: dA * dB does not match operator");
  }
  if (keep == Subsystem::A) {
    Matrix out = Matrix::Zero(idx(dA), idx(dA));
    for (std::size_t i = 0; i < dA; ++i)
      for (std::size_t j = 0; j < dA; ++j)
        for (std::size_t b = 0; b < dB; ++b)
          out(idx(i), idx(j)) += op(idx(i * dB + b), idx(j * dB + b));
    return out;
  }
  Matrix out = Matrix::Zero(idx(dB), idx(dB));
  for (std::size_t i = 0; i < dB; ++i)
    for (std::size_t j = 0; j < dB; ++j)
      for (std::size_t a = 0; a < dA; ++a)
        out(idx(i), idx(j)) += op(idx(a * dB + i), idx(a * dB + j));
  return out;
}

DensityMatrix partial_trace(
    const DensityMatrix &rho, std::size_t dA, std::size_t dB, Subsystem keep) {
  return DensityMatrix(partial_trace(rho.matrix(), dA, dB, keep));
}

DensityMatrix reduced_state(
    const PureState &psi, std::size_t dA, std::size_t dB, Subsystem keep) {
  const Matrix m = coefficient_matrix(psi.amplitudes(), dA, dB);
  if (keep == Subsystem::A) return DensityMatrix(m * m.adjoint());
  return DensityMatrix((m.adjoint() * m).transpose());
}

RealVector hermitian_eigenvalues(const Matrix &h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double trace_norm(const Matrix &h) {
  return hermitian_eigenvalues(h).cwiseAbs().sum();
}

double trace_distance(const Matrix &rho, const Matrix &sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw DimensionError("trace_distance: dimension mismatch");
  }
  const double tol = g_tolerances.spectral;
  if (!is_hermitian(rho, tol) || !is_hermitian(sigma, tol)) {
    throw NotHermitianError("trace_distance: non-Hermitian input");
  }
  const Matrix d = rho - sigma;
  return 0.5 * trace_norm(0.5 * (d + d.adjoint()));
}

double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma) {
  return trace_distance(rho.matrix(), sigma.matrix());
}

double hilbert_schmidt_distance(const Matrix &a, const Matrix &b) {
  return (a - b).norm();
}

SchmidtData schmidt(const PureState &state, std::size_t dA, std::size_t dB) {
  const Matrix m = coefficient_matrix(state.amplitudes(), dA, dB);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto &s = svd.singularValues();  // descending
  SchmidtData out;
  out.coefficients = s.cwiseAbs2();
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    out.left.push_back(svd.matrixU().col(k));
    out.right.push_back(svd.matrixV().col(k).conjugate());
  }
  return out;
}

EntanglementReport entanglement_report(
    const PureState &state, std::size_t dA, std::size_t dB) {
  const RealVector lam = schmidt(state, dA, dB).coefficients;
  EntanglementReport r{};
  r.purity = lam.cwiseAbs2().sum();
  r.linear_entropy = 1.0 - r.purity;
  double s = 0.0;
  for (Eigen::Index k = 0; k < lam.size(); ++k) {
    if (lam(k) > 0.0) s -= lam(k) * std::log(lam(k));
  }
  r.von_neumann_entropy = s;
  r.schmidt_angle = std::asin(std::min(1.0, lam(0)));
  return r;
}

bool is_hermitian(const Matrix &m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double unitarity_defect(const Matrix &m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m * m.adjoint() - Matrix::Identity(m.rows(), m.cols()))
      .cwiseAbs()
      .maxCoeff();
}

bool is_unitary(const Matrix &m, double tol) {
  return unitarity_defect(m) <= tol;
}

Matrix swap_operator(std::size_t n) {
  Matrix s = Matrix::Zero(idx(n * n), idx(n * n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(idx(j * n + i), idx(i * n + j)) = 1.0;
  return s;
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, -i_, i_, 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

double phase_aligned_distance(const Matrix &a, const Matrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("phase_aligned_distance: shape mismatch");
  }
  Eigen::Index r = 0, c = 0;
  a.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) == 0.0) return (a - b).cwiseAbs().maxCoeff();
  complex_t ph = a(r, c) / b(r, c);
  ph /= std::abs(ph);
  return (a - ph * b).cwiseAbs().maxCoeff();
}

Matrix haar_unitary(std::size_t n, std::mt19937_64 &rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix z(idx(n), idx(n));
  for (Eigen::Index i = 0; i < z.rows(); ++i)
    for (Eigen::Index j = 0; j < z.cols(); ++j) z(i, j) = complex_t(g(rng), g(rng));
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const complex_t d = r(k, k);
    q.col(k) *= d / std::abs(d);
  }
  return q;
}

PureState haar_state(std::size_t n, std::mt19937_64 &rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector v(idx(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = complex_t(g(rng), g(rng));
  return PureState::normalized(v);
}

DensityMatrix hs_random_state(std::size_t n, std::mt19937_64 &rng) {
  return reduced_state(haar_state(n * n, rng), n, n, Subsystem::A);
}

}  // namespace sicbasis
