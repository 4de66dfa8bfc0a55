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

#include <functional>
#include <stdexcept>
#include <utility>

#include "gadmm/linops.hpp"

namespace gadmm {

/// Convex function with Lipschitz gradient, together with operators
/// lower (Sigma) and upper (Sigma-hat) such that for all x, x'
///
///   1/2 ||x - x'||^2_lower <= f(x) - f(x') - <x - x', grad f(x')> <= 1/2 ||x - x'||^2_upper.
class SmoothTerm {
 public:
  using ValueFn = std::function<double(const Vector&)>;
  using GradientFn = std::function<Vector(const Vector&)>;

  SmoothTerm(Index dim, ValueFn value, GradientFn gradient, SelfAdjointOp upper,
             SelfAdjointOp lower)
      : dim_(dim),
        value_(std::move(value)),
        gradient_(std::move(gradient)),
        upper_(std::move(upper)),
        lower_(std::move(lower)) {
    if (upper_.dim() != dim_ || lower_.dim() != dim_) {
      throw std::invalid_argument("SmoothTerm: operator dimension mismatch");
    }
  }

  static SmoothTerm zero(Index dim) {
    return SmoothTerm(
        dim, [](const Vector&) { return 0.0; },
        [dim](const Vector&) { return Vector::Zero(dim).eval(); }, SelfAdjointOp::zero(dim),
        SelfAdjointOp::zero(dim));
  }

  /// 1/2 <x, P x> + <q, x>; both curvature bounds equal P, so the majorant is exact.
  static SmoothTerm quadratic(Matrix hessian, Vector linear) {
    const Index dim = hessian.rows();
    if (linear.size() != dim) throw std::invalid_argument("SmoothTerm::quadratic: dimension mismatch");
    SelfAdjointOp p = SelfAdjointOp::dense(std::move(hessian));
    auto value = [p, linear](const Vector& x) { return 0.5 * p.quadform(x) + linear.dot(x); };
    auto gradient = [p, linear](const Vector& x) { return (p.apply(x) + linear).eval(); };
    return SmoothTerm(dim, std::move(value), std::move(gradient), p, p);
  }

  Index dim() const { return dim_; }
  double value(const Vector& x) const { return value_(check(x)); }
  Vector gradient(const Vector& x) const { return gradient_(check(x)); }
  const SelfAdjointOp& upper() const { return upper_; }
  const SelfAdjointOp& lower() const { return lower_; }

 private:
  const Vector& check(const Vector& x) const {
    if (x.size() != dim_) throw std::invalid_argument("SmoothTerm: dimension mismatch");
    return x;
  }

  Index dim_;
  ValueFn value_;
  GradientFn gradient_;
  SelfAdjointOp upper_;
  SelfAdjointOp lower_;
};

/// f(x') + <x - x', grad f(x')> + 1/2 ||x - x'||^2_curvature.
struct QuadraticMajorant {
  Vector anchor;
  double constant = 0.0;
  Vector slope;
  SelfAdjointOp curvature = SelfAdjointOp::zero(0);

  double evaluate(const Vector& x) const {
    if (x.size() != anchor.size()) throw std::invalid_argument("QuadraticMajorant: dimension mismatch");
    const Vector d = x - anchor;
    return constant + slope.dot(d) + 0.5 * curvature.quadform(d);
  }
};

inline QuadraticMajorant quadratic_majorant(const SmoothTerm& term, const Vector& anchor) {
  if (anchor.size() != term.dim()) {
    throw std::invalid_argument("quadratic_majorant: dimension mismatch");
  }
  return {anchor, term.value(anchor), term.gradient(anchor), term.upper()};
}

}  // namespace gadmm
