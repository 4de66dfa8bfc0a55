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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gadmm/errors.hpp"
#include "gadmm/linops.hpp"
#include "gadmm/problem.hpp"
#include "gadmm/prox.hpp"
#include "gadmm/sgs.hpp"
#include "gadmm/smooth.hpp"

namespace gadmm {

/// Solver for one block subproblem
///
///   min_u  p(u) + 1/2 ||u - anchor||^2_M + <base, u>,
///
/// where M = upper + proximal + sigma * gram(map) is fixed for the run.
///
/// A diagonal M is handled by the weighted prox of p. A declared block
/// partition is handled by one sGS sweep, which requires `proximal` to be the
/// sGS operator of that partition. Any other combination is unsupported and
/// solve() throws SubproblemError.
class BlockSubproblem {
 public:
  enum class Mode { kDiagonal, kSweep, kUnsupported };

  BlockSubproblem(const SmoothTerm& smooth, ProxOracle prox, const LinearMap& map,
                  const SelfAdjointOp& proximal, const std::optional<std::vector<Index>>& blocks,
                  double sigma, std::string label)
      : prox_(std::move(prox)),
        curvature_(coupled_curvature(smooth.upper(), map, sigma)),
        metric_(curvature_ + proximal),
        label_(std::move(label)) {
    if (blocks) {
      prepare_sweep(*blocks, proximal);
    } else if (metric_.is_diagonal()) {
      weights_ = metric_.diagonal_entries();
      if ((weights_.array() > 0.0).all()) {
        mode_ = Mode::kDiagonal;
      } else {
        reason_ = "diagonal metric is not positive definite";
      }
    } else {
      reason_ = "metric is neither diagonal nor declared block structured";
    }
  }

  Mode mode() const { return mode_; }
  const SelfAdjointOp& metric() const { return metric_; }
  const std::string& unsupported_reason() const { return reason_; }

  Vector solve(const Vector& anchor, const Vector& base) const {
    switch (mode_) {
      case Mode::kDiagonal: {
        const Vector target = anchor - base.cwiseQuotient(weights_);
        if (prox_.is_zero()) return target;
        return prox_.prox(target, weights_);
      }
      case Mode::kSweep: {
        const Vector linear = base - curvature_.apply(anchor);
        try {
          return sgs_sweep(*sweep_, &prox_, linear, anchor);
        } catch (const BlockSolveError& e) {
          throw SubproblemError(label_ + " subproblem: " + e.what());
        }
      }
      case Mode::kUnsupported: break;
    }
    throw SubproblemError(label_ + " subproblem: " + reason_);
  }

  /// The element of the subdifferential of p at the solution u certified by
  /// its optimality condition: -(base + M (u - anchor)).
  Vector subgradient(const Vector& u, const Vector& anchor, const Vector& base) const {
    return -(base + metric_.apply(u - anchor));
  }

 private:
  void prepare_sweep(const std::vector<Index>& blocks, const SelfAdjointOp& proximal) {
    try {
      BlockQuadratic q(curvature_.to_dense(), blocks);
      const Matrix expected = sgs_operator(q).to_dense();
      const Matrix actual = proximal.to_dense();
      const double scale = 1.0 + expected.cwiseAbs().maxCoeff();
      if ((expected - actual).cwiseAbs().maxCoeff() > 1e-10 * scale) {
        reason_ = "proximal term does not match the sGS operator of the declared blocks";
        return;
      }
      sweep_.emplace(std::move(q));
      mode_ = Mode::kSweep;
    } catch (const BlockSolveError& e) {
      reason_ = e.what();
    }
  }

  ProxOracle prox_;
  SelfAdjointOp curvature_;
  SelfAdjointOp metric_;
  std::string label_;
  Mode mode_ = Mode::kUnsupported;
  Vector weights_;
  std::optional<BlockQuadratic> sweep_;
  std::string reason_;
};

/// A ProblemSpec with both block subproblems set up for a fixed sigma.
struct PreparedProblem {
  PreparedProblem(const ProblemSpec& s, double sig)
      : spec(validated(s)),
        sigma(sig),
        x_block(s.f1, s.f2, s.A, s.S, s.x_blocks, sig, "x"),
        y_block(s.h1, s.h2, s.B, s.T, s.y_blocks, sig, "y") {}

  ProblemSpec spec;
  double sigma;
  BlockSubproblem x_block;
  BlockSubproblem y_block;

  /// A* x + B* y - c.
  Vector constraint_residual(const Vector& x, const Vector& y) const {
    return spec.A.apply(x) + spec.B.apply(y) - spec.c;
  }

  /// grad f1(anchor) + A (sigma (A* anchor + B* y - c) + z).
  Vector x_linear(const Vector& anchor, const Vector& y, const Vector& z) const {
    return spec.f1.gradient(anchor) +
           spec.A.adjoint_apply(sigma * constraint_residual(anchor, y) + z);
  }

  /// grad h1(anchor) + B (sigma (A* x + B* anchor - c) + z).
  Vector y_linear(const Vector& anchor, const Vector& x, const Vector& z) const {
    return spec.h1.gradient(anchor) +
           spec.B.adjoint_apply(sigma * constraint_residual(x, anchor) + z);
  }

 private:
  static const ProblemSpec& validated(const ProblemSpec& s) {
    s.validate();
    return s;
  }
};

}  // namespace gadmm
