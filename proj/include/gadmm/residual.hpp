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

#include <algorithm>

#include "gadmm/problem.hpp"

namespace gadmm {

/// Primal part of the KKT residual: ||A* x + B* y - c|| / scaling.primal.
inline double primal_kkt_residual(const ProblemSpec& spec, const IterateTriple& w) {
  return (spec.A.apply(w.x) + spec.B.apply(w.y) - spec.c).norm() / spec.scaling.primal;
}

/// Dual part: ||grad h1(y) + B z + v|| / scaling.dual, with v in the
/// subdifferential of h2 at y.
inline double dual_kkt_residual(const ProblemSpec& spec, const IterateTriple& w, const Vector& v) {
  return (spec.h1.gradient(w.y) + spec.B.adjoint_apply(w.z) + v).norm() / spec.scaling.dual;
}

/// Res = max(primal, dual). Zero at a KKT point when v is the matching
/// subgradient.
inline double kkt_residual(const ProblemSpec& spec, const IterateTriple& w, const Vector& v) {
  return std::max(primal_kkt_residual(spec, w), dual_kkt_residual(spec, w, v));
}

}  // namespace gadmm
