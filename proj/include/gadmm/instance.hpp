// Copyright 2026 The gadmm Authors
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

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gadmm/errors.hpp"

namespace gadmm {

/// Data of the composite benchmark
///
///   min 1/2 <y, Qy> - <b, y> + chi/2 ||Pi_+(D(d - Hy))||^2 + mu ||y||_1 + delta_+(x)
///   s.t. Hy + x = c.
struct BenchInstance {
  Index m = 0;
  Index n = 0;
  Matrix Q;
  Matrix H;
  Vector b;
  Vector c;
  Vector d;
  Vector D;  // diagonal of the row-normalizing matrix
  double chi = 0.0;
  double mu = 0.0;
  std::uint64_t seed = 0;
  std::vector<Index> zero_rows;  // rows of H with zero norm; their D entry is 1
};

inline double bench_mu(Index n) { return 5.0 * std::sqrt(static_cast<double>(n)); }

/// Completes an instance from raw data: mu = 5 sqrt(n), d = c - 5, and
/// D_ii = 1 / ||row i of H|| (1 for zero rows, which are listed in zero_rows).
inline BenchInstance assemble_instance(Matrix q, Matrix h, Vector b, Vector c, double chi,
                                       std::uint64_t seed = 0) {
  const Index m = h.rows();
  const Index n = h.cols();
  if (q.rows() != n || q.cols() != n || b.size() != n || c.size() != m) {
    throw std::invalid_argument("assemble_instance: dimension mismatch");
  }
  if (chi < 0.0) throw std::invalid_argument("assemble_instance: chi must be nonnegative");
  BenchInstance inst;
  inst.m = m;
  inst.n = n;
  inst.chi = chi;
  inst.mu = bench_mu(n);
  inst.seed = seed;
  inst.d = c.array() - 5.0;
  inst.D.resize(m);
  for (Index i = 0; i < m; ++i) {
    const double norm = h.row(i).norm();
    if (norm > 0.0) {
      inst.D[i] = 1.0 / norm;
    } else {
      inst.D[i] = 1.0;
      inst.zero_rows.push_back(i);
    }
  }
  inst.Q = std::move(q);
  inst.H = std::move(h);
  inst.b = std::move(b);
  inst.c = std::move(c);
  return inst;
}

/// Seeded instance. G (n x n), H (m x n), b (n), e (m) and y0 (n) are drawn
/// standard normal in that order, column major, and
///
///   Q = G^T G,   c = H y0 / sqrt(n) + |e|,
///
/// so (x, y) = (|e|, y0 / sqrt(n)) is feasible for every (m, n).
inline BenchInstance generate_instance(Index m, Index n, double chi, std::uint64_t seed) {
  if (m < 1 || n < 1) throw std::invalid_argument("generate_instance: m and n must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto fill = [&](Index rows, Index cols) {
    Matrix out(rows, cols);
    for (Index j = 0; j < cols; ++j) {
      for (Index i = 0; i < rows; ++i) out(i, j) = normal(rng);
    }
    return out;
  };
  const Matrix g = fill(n, n);
  Matrix h = fill(m, n);
  Vector b = fill(n, 1);
  const Vector e = fill(m, 1);
  const Vector y0 = fill(n, 1);
  Vector c = h * y0 / std::sqrt(static_cast<double>(n)) + e.cwiseAbs();
  Matrix q = g.transpose() * g;
  q = 0.5 * (q + q.transpose()).eval();
  return assemble_instance(std::move(q), std::move(h), std::move(b), std::move(c), chi, seed);
}

}  // namespace gadmm
