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
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "gadmm/errors.hpp"

namespace gadmm {

/// Soft-thresholding: argmin_y mu*||y||_1 + 1/2 sum_i w_i (y_i - v_i)^2.
inline Vector prox_l1(const Vector& v, double mu, const Vector& weights) {
  if (weights.size() != v.size()) throw std::invalid_argument("prox_l1: dimension mismatch");
  if (mu < 0.0) throw std::invalid_argument("prox_l1: mu must be nonnegative");
  if ((weights.array() <= 0.0).any()) throw std::invalid_argument("prox_l1: nonpositive weight");
  const Eigen::ArrayXd shrink = mu / weights.array();
  return (v.array().sign() * (v.array().abs() - shrink).max(0.0)).matrix();
}

/// Euclidean projection onto the nonnegative orthant.
inline Vector project_nonneg(const Vector& v) { return v.cwiseMax(0.0); }

/// Closed proper convex function given by its value and a diagonally
/// weighted proximal map: prox(v, w) = argmin_x g(x) + 1/2 sum_i w_i (x_i - v_i)^2.
///
/// The oracles are dimension-agnostic; g is applied to whatever vector it is
/// handed.
class ProxOracle {
 public:
  using ValueFn = std::function<double(const Vector&)>;
  using ProxFn = std::function<Vector(const Vector&, const Vector&)>;

  ProxOracle(std::string name, ValueFn value, ProxFn prox, bool is_zero = false)
      : name_(std::move(name)),
        value_(std::move(value)),
        prox_(std::move(prox)),
        is_zero_(is_zero) {}

  static ProxOracle zero() {
    return ProxOracle(
        "zero", [](const Vector&) { return 0.0; },
        [](const Vector& v, const Vector&) { return v; }, true);
  }

  static ProxOracle l1(double mu) {
    if (mu < 0.0) throw std::invalid_argument("ProxOracle::l1: mu must be nonnegative");
    return ProxOracle(
        "l1", [mu](const Vector& x) { return mu * x.lpNorm<1>(); },
        [mu](const Vector& v, const Vector& w) { return prox_l1(v, mu, w); });
  }

  /// Indicator of the nonnegative orthant. Weights do not move the
  /// per-coordinate minimizer, so they are ignored.
  static ProxOracle nonneg() {
    return ProxOracle(
        "nonneg",
        [](const Vector& x) {
          return (x.array() < 0.0).any() ? std::numeric_limits<double>::infinity() : 0.0;
        },
        [](const Vector& v, const Vector&) { return project_nonneg(v); });
  }

  const std::string& name() const { return name_; }
  bool is_zero() const { return is_zero_; }

  double value(const Vector& x) const { return value_(x); }

  Vector prox(const Vector& v, const Vector& weights) const {
    if (weights.size() != v.size()) throw std::invalid_argument("ProxOracle::prox: dimension mismatch");
    return prox_(v, weights);
  }

 private:
  std::string name_;
  ValueFn value_;
  ProxFn prox_;
  bool is_zero_;
};

}  // namespace gadmm
