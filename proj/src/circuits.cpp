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

#include "sicbasis/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sicbasis/catalog.hpp"
#include "sicbasis/json_io.hpp"

namespace sicbasis {

Mat2 rot_y(double t) {
  Mat2 m;
  m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
  return m;
}

Mat2 rot_z(double t) {
  Mat2 m;
  m << std::polar(1.0, -t / 2), 0.0, 0.0, std::polar(1.0, t / 2);
  return m;
}

Mat2 hadamard() {
  Mat2 m;
  m << 1.0, 1.0, 1.0, -1.0;
  return m / std::sqrt(2.0);
}

Mat4 kron2(const Mat2 &a, const Mat2 &b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

namespace {

const std::array<Mat2, 3> &paulis() {
  static const std::array<Mat2, 3> p{Mat2(pauli_x()), Mat2(pauli_y()), Mat2(pauli_z())};
  return p;
}

// Columns are the magic basis; conjugating SO(4) by it lands in SU(2) x SU(2).
const Mat4 &magic() {
  static const Mat4 m = [] {
    Mat4 q;
    q << 1.0, 0.0, 0.0, i_, 0.0, i_, 1.0, 0.0, 0.0, i_, -1.0, 0.0, 1.0, 0.0, 0.0, -i_;
    return Mat4(q / std::sqrt(2.0));
  }();
  return m;
}

// Eigenvalue signs of XX, YY, ZZ on the magic columns, with a leading column of ones.
const Eigen::Matrix4d &magic_signs() {
  static const Eigen::Matrix4d s = [] {
    Eigen::Matrix4d a;
    a.col(0).setOnes();
    for (int k = 0; k < 3; ++k) {
      const Mat4 d = magic().adjoint() * kron2(paulis()[k], paulis()[k]) * magic();
      for (int j = 0; j < 4; ++j) a(j, k + 1) = d(j, j).real();
    }
    return a;
  }();
  return s;
}

// Best rank-one split of a local 4x4 operator into a (x) b.
std::pair<Mat2, Mat2> split_local(const Mat4 &m) {
  Mat4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r(i * 2 + k, j * 2 + l) = m(i * 2 + j, k * 2 + l);
  Eigen::JacobiSVD<Mat4> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double s = std::sqrt(svd.singularValues()(0));
  Mat2 a, b;
  a << svd.matrixU()(0, 0), svd.matrixU()(1, 0), svd.matrixU()(2, 0), svd.matrixU()(3, 0);
  b << std::conj(svd.matrixV()(0, 0)), std::conj(svd.matrixV()(1, 0)),
      std::conj(svd.matrixV()(2, 0)), std::conj(svd.matrixV()(3, 0));
  a *= s;
  b *= s;
  const complex_t d = std::sqrt(a.determinant());
  return {a / d, b * d};
}

double phase_between(const Mat4 &target, const Mat4 &approx) {
  return std::arg((approx.adjoint() * target).trace());
}

// Weyl-chamber moves applied to (L, c, R) with U ~ L core(c) R.
struct Tracked {
  Mat2 la, lb, ra, rb;
  Phases c;

  void shift(int k, int s) {
    // core(c) = core(c - s pi/2 e_k) * (i s) s_k (x) s_k
    c[k] -= s * PI / 2;
    ra = paulis()[k] * ra;
    rb = paulis()[k] * rb;
  }
  void negate_pair(int l) {
    // (s_l (x) I) flips the two phases other than l.
    for (int k = 0; k < 3; ++k)
      if (k != l) c[k] = -c[k];
    la = la * paulis()[l];
    ra = paulis()[l] * ra;
  }
  void swap(int j, int k) {
    const Mat2 cl = (paulis()[j] + paulis()[k]) / std::sqrt(2.0);
    std::swap(c[j], c[k]);
    la = la * cl;
    lb = lb * cl;
    ra = cl * ra;
    rb = cl * rb;
  }
};

void canonicalize(Tracked &t) {
  const double eps = 1e-12;
  for (int k = 0; k < 3; ++k) {
    while (t.c[k] > PI / 4 + eps) t.shift(k, 1);
    while (t.c[k] <= -PI / 4 + eps) t.shift(k, -1);
  }
  // Sort by magnitude, descending.
  for (int pass = 0; pass < 3; ++pass) {
    for (int k = 0; k < 2; ++k) {
      if (std::abs(t.c[k]) + eps < std::abs(t.c[k + 1])) t.swap(k, k + 1);
    }
  }
  if (t.c[0] < 0 && t.c[1] < 0) {
    t.negate_pair(2);
  } else if (t.c[0] < 0) {
    t.negate_pair(1);
  } else if (t.c[1] < 0) {
    t.negate_pair(0);
  }
  if (std::abs(t.c[0] - PI / 4) < eps && t.c[2] < -eps) {
    // On the pi/4 face the sign of the last phase is free.
    t.shift(0, 1);
    t.negate_pair(1);
  }
  for (double &x : t.c)
    if (std::abs(x) < eps) x = 0.0;
}

}  // namespace

Mat4 nonlocal_core(const Phases &p) {
  // The three terms commute; each is cos + i sin times a Pauli product.
  Mat4 out = Mat4::Identity();
  for (int k = 0; k < 3; ++k) {
    out = out * (std::cos(p[k]) * Mat4::Identity() +
                 i_ * std::sin(p[k]) * kron2(paulis()[k], paulis()[k]));
  }
  return out;
}

Mat4 CartanCoordinates::reconstruct() const {
  return std::polar(1.0, global_phase) * kron2(v1, v2) * nonlocal_core(canonical) *
         kron2(w1, w2);
}

CartanCoordinates cartan_decompose(const Mat4 &u_in) {
  if (!is_unitary(u_in, tolerances().spectral)) {
    throw NotUnitaryError("cartan_decompose needs a unitary");
  }
  const Mat4 u = u_in / std::pow(u_in.determinant(), 0.25);
  const Mat4 up = magic().adjoint() * u * magic();
  const Mat4 m = up.transpose() * up;

  // Re m and Im m commute; a generic real combination shares their eigenbasis.
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> g;
  Eigen::Matrix4d p = Eigen::Matrix4d::Identity();
  double best = std::numeric_limits<double>::infinity();
  for (int attempt = 0; attempt < 100; ++attempt) {
    const Eigen::Matrix4d h = g(rng) * m.real() + g(rng) * m.imag();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(h);
    const Eigen::Matrix4d cand = es.eigenvectors();
    Mat4 d = cand.transpose().cast<complex_t>() * m * cand.cast<complex_t>();
    d.diagonal().setZero();
    const double off = d.cwiseAbs().maxCoeff();
    if (off < best) {
      best = off;
      p = cand;
    }
    if (off < 1e-11) break;
  }
  if (p.determinant() < 0) p.col(0) *= -1.0;

  const Mat4 pc = p.cast<complex_t>();
  const Eigen::Vector4cd diag = (pc.transpose() * m * pc).diagonal();
  Eigen::Vector4d theta;
  for (int j = 0; j < 4; ++j) theta(j) = std::arg(diag(j)) / 2;
  Mat4 k1 = up * pc;
  for (int j = 0; j < 4; ++j) k1.col(j) *= std::polar(1.0, -theta(j));
  if (k1.real().determinant() < 0) {
    k1.col(0) *= -1.0;
    theta(0) += PI;
  }

  const Eigen::Vector4d sol = magic_signs().colPivHouseholderQr().solve(theta);

  CartanCoordinates cc;
  cc.raw = {sol(1), sol(2), sol(3)};
  const auto left = split_local(magic() * k1 * magic().adjoint());
  const auto right = split_local(magic() * pc.transpose() * magic().adjoint());
  Tracked t{left.first, left.second, right.first, right.second, cc.raw};
  canonicalize(t);
  cc.canonical = t.c;
  cc.v1 = t.la;
  cc.v2 = t.lb;
  cc.w1 = t.ra;
  cc.w2 = t.rb;
  cc.global_phase = 0.0;
  cc.global_phase = phase_between(u_in, cc.reconstruct());
  return cc;
}

CartanCoordinates cartan_with_phases(const Mat4 &u, const Phases &target) {
  const CartanCoordinates a = cartan_decompose(u);
  const CartanCoordinates b = cartan_decompose(nonlocal_core(target));
  for (int k = 0; k < 3; ++k) {
    if (std::abs(a.canonical[k] - b.canonical[k]) > 1e-9) {
      throw std::invalid_argument("target phases are not locally equivalent to U");
    }
  }
  // core(target) ~ Lb core(c) Rb, so core(c) ~ Lb^+ core(target) Rb^+.
  CartanCoordinates out;
  out.raw = a.raw;
  out.canonical = target;
  out.v1 = a.v1 * b.v1.adjoint();
  out.v2 = a.v2 * b.v2.adjoint();
  out.w1 = b.w1.adjoint() * a.w1;
  out.w2 = b.w2.adjoint() * a.w2;
  out.global_phase = phase_between(u, out.reconstruct());
  return out;
}

std::array<double, 3> makhlin_invariants(const Mat4 &u) {
  const Mat4 ub = magic().adjoint() * u * magic();
  const Mat4 m = ub.transpose() * ub;
  const complex_t det = u.determinant();
  const complex_t tr = m.trace();
  const complex_t g1 = tr * tr / (16.0 * det);
  const complex_t g2 = (tr * tr - (m * m).trace()) / (4.0 * det);
  return {g1.real(), g1.imag(), g2.real()};
}

EulerZYZ euler_zyz(const Mat2 &v) {
  if (!is_unitary(v, tolerances().spectral)) {
    throw NotUnitaryError("euler_zyz needs a unitary");
  }
  const Mat2 w = v / std::sqrt(v.determinant());
  const complex_t a = w(0, 0), c = w(1, 0);
  EulerZYZ e;
  e.y = 2.0 * std::atan2(std::abs(c), std::abs(a));
  const double tiny = 1e-14;
  if (std::abs(c) < tiny) {
    e.x = -2.0 * std::arg(a);
    e.z = 0.0;
  } else if (std::abs(a) < tiny) {
    e.x = 2.0 * std::arg(c);
    e.z = 0.0;
  } else {
    e.x = std::arg(c) - std::arg(a);
    e.z = -std::arg(a) - std::arg(c);
  }
  const Mat2 r = rot_z(e.x) * rot_y(e.y) * rot_z(e.z);
  e.global_phase = std::arg((r.adjoint() * v).trace());
  return e;
}

void CircuitSpec::validate() const {
  for (const auto &g : gates) {
    if (g.target >= wires.size() || (g.kind == GateKind::CNOT && g.control >= wires.size())) {
      throw std::invalid_argument("gate references a missing wire");
    }
    if (g.kind == GateKind::CNOT && g.control == g.target) {
      throw std::invalid_argument("CNOT control equals target");
    }
    if (!std::isfinite(g.angle)) throw std::invalid_argument("non-finite gate angle");
  }
}

std::size_t CircuitSpec::cnot_count() const {
  return static_cast<std::size_t>(std::count_if(
      gates.begin(), gates.end(), [](const Gate &g) { return g.kind == GateKind::CNOT; }));
}

CircuitSpec &CircuitSpec::ry(std::size_t w, double t) {
  gates.push_back({GateKind::RotY, w, 0, t});
  return *this;
}
CircuitSpec &CircuitSpec::rz(std::size_t w, double t) {
  gates.push_back({GateKind::RotZ, w, 0, t});
  return *this;
}
CircuitSpec &CircuitSpec::h(std::size_t w) {
  gates.push_back({GateKind::Hadamard, w, 0, 0.0});
  return *this;
}
CircuitSpec &CircuitSpec::cnot(std::size_t control, std::size_t target) {
  gates.push_back({GateKind::CNOT, target, control, 0.0});
  return *this;
}
CircuitSpec &CircuitSpec::measure(std::size_t w) {
  gates.push_back({GateKind::Measure, w, 0, 0.0});
  return *this;
}
CircuitSpec &CircuitSpec::local(std::size_t w, const Mat2 &v) {
  const EulerZYZ e = euler_zyz(v);
  if (e.z != 0.0) rz(w, e.z);
  if (e.y != 0.0) ry(w, e.y);
  if (e.x != 0.0) rz(w, e.x);
  return *this;
}

namespace {

void apply_single(Matrix &s, std::size_t nw, std::size_t w, const Mat2 &g) {
  const Eigen::Index stride = Eigen::Index{1} << (nw - 1 - w);
  for (Eigen::Index i = 0; i < s.rows(); ++i) {
    if (i & stride) continue;
    const Eigen::Index j = i + stride;
    for (Eigen::Index c = 0; c < s.cols(); ++c) {
      const complex_t a = s(i, c), b = s(j, c);
      s(i, c) = g(0, 0) * a + g(0, 1) * b;
      s(j, c) = g(1, 0) * a + g(1, 1) * b;
    }
  }
}

void apply_cnot(Matrix &s, std::size_t nw, std::size_t control, std::size_t target) {
  const Eigen::Index cb = Eigen::Index{1} << (nw - 1 - control);
  const Eigen::Index tb = Eigen::Index{1} << (nw - 1 - target);
  for (Eigen::Index i = 0; i < s.rows(); ++i) {
    if ((i & cb) && !(i & tb)) s.row(i).swap(s.row(i + tb));
  }
}

void run(const CircuitSpec &c, Matrix &s) {
  c.validate();
  const std::size_t nw = c.wires.size();
  for (const auto &g : c.gates) {
    switch (g.kind) {
      case GateKind::RotY:
        apply_single(s, nw, g.target, rot_y(g.angle));
        break;
      case GateKind::RotZ:
        apply_single(s, nw, g.target, rot_z(g.angle));
        break;
      case GateKind::Hadamard:
        apply_single(s, nw, g.target, hadamard());
        break;
      case GateKind::CNOT:
        apply_cnot(s, nw, g.control, g.target);
        break;
      case GateKind::Measure:
        break;
    }
  }
}

std::vector<std::string> two_wires() { return {"q0", "q1"}; }

}  // namespace

Matrix simulate_circuit(const CircuitSpec &c) {
  const auto d = Eigen::Index{1} << c.wires.size();
  Matrix s = Matrix::Identity(d, d);
  run(c, s);
  return s;
}

Vector simulate_circuit(const CircuitSpec &c, const Vector &input) {
  const auto d = Eigen::Index{1} << c.wires.size();
  if (input.size() != d) throw DimensionError("input state does not match wire count");
  Matrix s = input;
  run(c, s);
  return s.col(0);
}

CircuitSpec synthesize_nonlocal(const Phases &p) {
  CircuitSpec c;
  c.wires = two_wires();
  c.rz(0, -PI / 2);
  c.cnot(1, 0);
  c.ry(1, -2.0 * p[1] - PI / 2);
  c.cnot(0, 1);
  c.rz(0, -2.0 * p[2] - PI / 2);
  c.ry(1, 2.0 * p[0] + PI / 2);
  c.cnot(1, 0);
  c.rz(1, PI / 2);
  return c;
}

CircuitSpec nonlocal_skeleton(const Phases &p) {
  CircuitSpec c;
  c.wires = two_wires();
  c.cnot(1, 0);
  c.ry(1, PI / 2 - 2.0 * p[0]);
  c.cnot(0, 1);
  c.rz(0, 2.0 * p[1] - PI / 2);
  c.ry(1, 2.0 * p[2] - PI / 2);
  c.cnot(1, 0);
  return c;
}

namespace {

CircuitSpec assemble(const CartanCoordinates &cc) {
  CircuitSpec c;
  c.wires = two_wires();
  c.local(0, cc.w1).local(1, cc.w2);
  for (const auto &g : synthesize_nonlocal(cc.canonical).gates) c.gates.push_back(g);
  c.local(0, cc.v1).local(1, cc.v2);
  return c;
}

}  // namespace

CircuitSpec synthesize(const Mat4 &u) { return assemble(cartan_decompose(u)); }

CircuitSpec ejm_circuit() {
  // The non-canonical triple (pi/4, -pi/2, -pi/8) is locally equivalent to
  // the chamber point (pi/4, pi/8, 0).
  return assemble(cartan_with_phases(Mat4(catalog::u4()), {PI / 4, -PI / 2, -PI / 8}));
}

CircuitSpec conjugate_circuit(const CircuitSpec &c) {
  CircuitSpec out = c;
  for (auto &g : out.gates)
    if (g.kind == GateKind::RotZ) g.angle = -g.angle;
  return out;
}

std::string circuit_to_json(const CircuitSpec &c) {
  json_io::json j;
  j["wires"] = c.wires;
  j["gates"] = json_io::json::array();
  for (const auto &g : c.gates) {
    json_io::json o;
    switch (g.kind) {
      case GateKind::RotY:
        o["kind"] = "ry";
        o["target"] = g.target;
        o["angle"] = g.angle;
        break;
      case GateKind::RotZ:
        o["kind"] = "rz";
        o["target"] = g.target;
        o["angle"] = g.angle;
        break;
      case GateKind::Hadamard:
        o["kind"] = "h";
        o["target"] = g.target;
        break;
      case GateKind::CNOT:
        o["kind"] = "cnot";
        o["control"] = g.control;
        o["target"] = g.target;
        break;
      case GateKind::Measure:
        o["kind"] = "measure";
        o["target"] = g.target;
        break;
    }
    j["gates"].push_back(std::move(o));
  }
  return j.dump(2);
}

CircuitSpec circuit_from_json(const std::string &text) {
  const auto j = json_io::json::parse(text);
  CircuitSpec c;
  c.wires = j.at("wires").get<std::vector<std::string>>();
  for (const auto &o : j.at("gates")) {
    const auto kind = o.at("kind").get<std::string>();
    Gate g;
    g.target = o.at("target").get<std::size_t>();
    if (kind == "ry") {
      g.kind = GateKind::RotY;
      g.angle = o.at("angle").get<double>();
    } else if (kind == "rz") {
      g.kind = GateKind::RotZ;
      g.angle = o.at("angle").get<double>();
    } else if (kind == "h") {
      g.kind = GateKind::Hadamard;
    } else if (kind == "cnot") {
      g.kind = GateKind::CNOT;
      g.control = o.at("control").get<std::size_t>();
    } else if (kind == "measure") {
      g.kind = GateKind::Measure;
    } else {
      throw std::invalid_argument("unknown gate kind: " + kind);
    }
    c.gates.push_back(g);
  }
  c.validate();
  return c;
}

}  // namespace sicbasis
