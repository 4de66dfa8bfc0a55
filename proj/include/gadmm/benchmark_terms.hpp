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

#include <memory>
#include <stdexcept>

#include "gadmm/instance.hpp"
#include "gadmm/linops.hpp"
#include "gadmm/smooth.hpp"

namespace gadmm {

namespace detail {
inline void check_bench_dim(const Vector& y, const BenchInstance& data) {
  if (y.size() != data.n) throw std::invalid_argument("benchmark term: dimension mismatch");
}

// Pi_+(D(d - Hy)) for the benchmark penalty.
inline Vector bench_penalty_residual(const Vector& y, const BenchInstance& data) {
  check_bench_dim(y, data);
  return (data.D.cwiseProduct(data.d - data.H * y)).cwiseMax(0.0);
}
}  // namespace detail

/// h1(y) = 1/2 <y, Qy> - <b, y> + chi/2 ||Pi_+(D(d - Hy))||^2.
inline double bench_h1_value(const Vector& y, const BenchInstance& data) {
  detail::check_bench_dim(y, data);
  const Vector p = detail::bench_penalty_residual(y, data);
  return 0.5 * y.dot(data.Q * y) - data.b.dot(y) + 0.5 * data.chi * p.squaredNorm();
}

/// grad h1(y) = Qy - b - chi H^T D Pi_+(D(d - Hy)). At projection kinks the
/// zero branch is taken.
inline Vector bench_h1_gradient(const Vector& y, const BenchInstance& data) {
  detail::check_bench_dim(y, data);
  Vector g = data.Q * y - data.b;
  if (data.chi != 0.0) {
    const Vector p = detail::bench_penalty_residual(y, data);
    g.noalias() -= data.chi * (data.H.transpose() * data.D.cwiseProduct(p));
  }
  return g;
}

/// Upper curvature Q + chi H^T D^2 H; equals Q when chi = 0.
inline SelfAdjointOp bench_h1_upper(const BenchInstance& data) {
  if (data.chi == 0.0) return SelfAdjointOp::dense(data.Q);
  const Matrix dh = data.D.asDiagonal() * data.H;
  Matrix upper = data.Q + data.chi * (dh.transpose() * dh);
  upper = 0.5 * (upper + upper.transpose()).eval();
  return SelfAdjointOp::dense(std::move(upper));
}

/// h1 as a SmoothTerm with lower curvature Q.
inline SmoothTerm bench_h1_term(const BenchInstance& data) {
  auto shared = std::make_shared<const BenchInstance>(data);
  return SmoothTerm(
      data.n, [shared](const Vector& y) { return bench_h1_value(y, *shared); },
      [shared](const Vector& y) { return bench_h1_gradient(y, *shared); }, bench_h1_upper(data),
      SelfAdjointOp::dense(data.Q));
}

}  // namespace gadmm
