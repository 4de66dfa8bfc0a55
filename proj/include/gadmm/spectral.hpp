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
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "gadmm/linops.hpp"

namespace gadmm {

struct LambdaEstimate {
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Largest eigenvalue of a symmetric PSD operator by power iteration.
///
/// Starts from the normalized all-ones vector and stops once the eigen-residual
/// ||Gv - theta v|| drops below tol * theta. The Rayleigh quotient never
/// exceeds lambda_max, so the returned value is inflated by (1 + 10 tol) to
/// keep lambda * I - G positive semidefinite. On non-convergence the best
/// Rayleigh quotient (inflated the same way) is returned with converged=false.
inline LambdaEstimate estimate_lambda_max(const SelfAdjointOp& op, double tol = 1e-10,
                                          int max_iter = 100000) {
  if (op.dim() == 0) throw std::invalid_argument("estimate_lambda_max: dimension 0");
  if (!(tol > 0.0)) throw std::invalid_argument("estimate_lambda_max: tol must be positive");

  const double safety = 1.0 + 10.0 * tol;
  if (op.is_diagonal()) {
    return {op.diagonal_entries().maxCoeff() * safety, true, 0};
  }

  Vector v = Vector::Ones(op.dim()) / std::sqrt(static_cast<double>(op.dim()));
  LambdaEstimate best;
  for (int it = 1; it <= max_iter; ++it) {
    const Vector gv = op.apply(v);
    const double theta = v.dot(gv);
    const double residual = (gv - theta * v).norm();
    best.iterations = it;
    best.value = std::max(best.value, theta);
    if (residual <= tol * std::abs(theta) || gv.norm() == 0.0) {
      best.converged = true;
      break;
    }
    v = gv / gv.norm();
  }
  best.value *= safety;
  return best;
}

/// Exact largest eigenvalue via a dense symmetric eigendecomposition.
inline double dense_lambda_max(const SelfAdjointOp& op) {
  if (op.dim() == 0) throw std::invalid_argument("dense_lambda_max: dimension 0");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(op.to_dense(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

}  // namespace gadmm
