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

#include "sicbasis/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "sicbasis/basis.hpp"

namespace sicbasis {

namespace {

std::size_t local_dim(const Matrix &u) {
  if (u.rows() != u.cols()) throw DimensionError("gate must be square");
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(u.rows())));
  if (static_cast<Eigen::Index>(n * n) != u.rows()) {
    throw DimensionError("gate order must be a perfect square");
  }
  return n;
}

// Reusable buffers for E(P U) with P a row permutation.
class EntropyKernel {
 public:
  explicit EntropyKernel(std::size_t n)
      : n_(static_cast<Eigen::Index>(n)), r_(n_ * n_, n_ * n_), g_(n_ * n_, n_ * n_) {}

  double operator()(const Matrix &u, const std::vector<int> &perm) {
    for (Eigen::Index i = 0; i < n_; ++i) {
      for (Eigen::Index j = 0; j < n_; ++j) {
        const Eigen::Index src = perm[static_cast<std::size_t>(i * n_ + j)];
        for (Eigen::Index k = 0; k < n_; ++k) {
          for (Eigen::Index l = 0; l < n_; ++l) r_(i * n_ + k, j * n_ + l) = u(src, k * n_ + l);
        }
      }
    }
    g_.noalias() = r_ * r_.adjoint();
    const double n4 = static_cast<double>(n_ * n_ * n_ * n_);
    return 1.0 - g_.squaredNorm() / n4;
  }

 private:
  Eigen::Index n_;
  Matrix r_;
  Matrix g_;
};

double swap_entropy(std::size_t n) {
  const double N = static_cast<double>(n);
  return 1.0 - 1.0 / (N * N);
}

GatePoint point_from(double e_u, double e_us, double e_s) {
  return {(e_u + e_us - e_s) / e_s, (e_u - e_us + e_s) / (2.0 * e_s)};
}

Matrix permute_rows(const Matrix &u, const std::vector<int> &perm) {
  Matrix out(u.rows(), u.cols());
  for (Eigen::Index r = 0; r < u.rows(); ++r) out.row(r) = u.row(perm[static_cast<std::size_t>(r)]);
  return out;
}

// k-th permutation of 0..m-1 in lexicographic order.
std::vector<int> nth_permutation(std::size_t m, std::size_t k) {
  std::vector<int> pool(m);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<std::size_t> fact(m + 1, 1);
  for (std::size_t i = 1; i <= m; ++i) fact[i] = fact[i - 1] * i;
  std::vector<int> out;
  for (std::size_t i = m; i > 0; --i) {
    const std::size_t q = k / fact[i - 1];
    k %= fact[i - 1];
    out.push_back(pool[q]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(q));
  }
  return out;
}

}  // namespace

Matrix reshuffle(const Matrix &u) {
  const auto n = static_cast<Eigen::Index>(local_dim(u));
  Matrix r(u.rows(), u.cols());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index l = 0; l < n; ++l) r(i * n + k, j * n + l) = u(i * n + j, k * n + l);
  return r;
}

Matrix partial_transpose(const Matrix &u) {
  const auto n = static_cast<Eigen::Index>(local_dim(u));
  Matrix g(u.rows(), u.cols());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index l = 0; l < n; ++l) g(i * n + j, k * n + l) = u(i * n + l, k * n + j);
  return g;
}

double op_linear_entropy(const Matrix &u) {
  const std::size_t n = local_dim(u);
  if (!is_unitary(u, tolerances().spectral)) {
    throw NotUnitaryError("operator entanglement needs a unitary");
  }
  const Matrix r = reshuffle(u);
  const Matrix g = r * r.adjoint();
  const double n2 = static_cast<double>(n * n);
  return 1.0 - g.squaredNorm() / (n2 * n2);
}

GatePoint ep_gt(const Matrix &u) {
  const std::size_t n = local_dim(u);
  return point_from(
      op_linear_entropy(u), op_linear_entropy(u * swap_operator(n)), swap_entropy(n));
}

bool swap_symmetry(const Matrix &u, double tol) {
  const std::size_t n = local_dim(u);
  return ((u * swap_operator(n)) - u.conjugate()).cwiseAbs().maxCoeff() <= tol;
}

bool is_2unitary(const Matrix &u, double tol) {
  local_dim(u);
  return is_unitary(u, tol) && is_unitary(reshuffle(u), tol) &&
         is_unitary(partial_transpose(u), tol);
}

std::vector<GatePoint> dedup_points(std::vector<GatePoint> points, double tol) {
  std::vector<GatePoint> out;
  if (points.empty()) return out;
  std::sort(points.begin(), points.end(), [](const GatePoint &a, const GatePoint &b) {
    return a.ep < b.ep || (a.ep == b.ep && a.gt < b.gt);
  });
  std::size_t begin = 0;
  while (begin < points.size()) {
    std::size_t end = begin + 1;
    while (end < points.size() && points[end].ep - points[end - 1].ep <= tol) ++end;
    std::vector<GatePoint> group(points.begin() + static_cast<std::ptrdiff_t>(begin),
                                 points.begin() + static_cast<std::ptrdiff_t>(end));
    std::sort(group.begin(), group.end(),
              [](const GatePoint &a, const GatePoint &b) { return a.gt < b.gt; });
    out.push_back(group.front());
    for (std::size_t k = 1; k < group.size(); ++k) {
      if (group[k].gt - group[k - 1].gt > tol) out.push_back(group[k]);
    }
    begin = end;
  }
  std::sort(out.begin(), out.end(), [](const GatePoint &a, const GatePoint &b) {
    return a.ep < b.ep || (a.ep == b.ep && a.gt < b.gt);
  });
  return out;
}

SweepResult permutation_sweep(const Matrix &u, const SweepOptions &opt) {
  const std::size_t n = local_dim(u);
  if (!is_unitary(u, tolerances().spectral)) {
    throw NotUnitaryError("permutation_sweep needs a unitary");
  }
  const auto m = static_cast<std::size_t>(u.rows());
  if (opt.mode == SweepMode::Exhaustive && u.rows() > kMaxExhaustiveOrder) {
    throw std::invalid_argument("exhaustive sweep is limited to order 9");
  }
  std::size_t total = 1;
  if (opt.mode == SweepMode::Exhaustive) {
    for (std::size_t k = 2; k <= m; ++k) total *= k;
  } else {
    total = opt.samples;
  }

  const Matrix us = u * swap_operator(n);
  const double e_s = swap_entropy(n);
  std::vector<GatePoint> points(total);
  std::vector<unsigned char> two_unitary(total, 0);

  // Sampled orders are drawn up front so results do not depend on threading.
  std::vector<std::vector<int>> samples;
  if (opt.mode == SweepMode::Sampled) {
    std::mt19937_64 rng(opt.seed);
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t s = 0; s < total; ++s) {
      std::shuffle(p.begin(), p.end(), rng);
      samples.push_back(p);
    }
  }

  auto work = [&](std::size_t begin, std::size_t end) {
    EntropyKernel kernel(n);
    std::vector<int> perm =
        opt.mode == SweepMode::Exhaustive ? nth_permutation(m, begin) : std::vector<int>{};
    for (std::size_t idx = begin; idx < end; ++idx) {
      if (opt.mode == SweepMode::Sampled) perm = samples[idx];
      const GatePoint p = point_from(kernel(u, perm), kernel(us, perm), e_s);
      points[idx] = p;
      if (std::abs(p.ep - 1.0) < opt.ep_one_tol && is_2unitary(permute_rows(u, perm))) {
        two_unitary[idx] = 1;
      }
      if (opt.mode == SweepMode::Exhaustive) std::next_permutation(perm.begin(), perm.end());
    }
  };

  const std::size_t nt = std::max<std::size_t>(1, std::min(worker_threads(opt.threads), total));
  const std::size_t chunk = (total + nt - 1) / nt;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < nt; ++t) {
    const std::size_t b = t * chunk, e = std::min(total, b + chunk);
    if (b < e) pool.emplace_back(work, b, e);
  }
  for (auto &th : pool) th.join();

  SweepResult res;
  res.total_permutations = total;
  res.two_unitary_count =
      static_cast<std::size_t>(std::count(two_unitary.begin(), two_unitary.end(), 1));
  res.distinct_points = dedup_points(std::move(points), opt.dedup_tol);
  return res;
}

}  // namespace sicbasis
