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
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gadmm/linops.hpp"
#include "gadmm/prox.hpp"
#include "gadmm/sgs.hpp"
#include "gadmm/smooth.hpp"

namespace gadmm {

/// Normalizers of the KKT residual: primal term divided by `primal`, dual
/// term by `dual`.
struct ResidualScaling {
  double primal = 1.0;
  double dual = 1.0;
};

/// Two-block composite program
///
///   min f1(x) + f2(x) + h1(y) + h2(y)   s.t.  A* x + B* y = c,
///
/// with semi-proximal operators S (on x) and T (on y).
///
/// `A` and `B` map the primal blocks into the constraint space, i.e.
/// A.apply(x) = A* x and A.adjoint_apply(z) = A z.
///
/// When `x_blocks` is set, the x-subproblem is solved by a symmetric
/// Gauss-Seidel sweep over that partition of upper(f1) + sigma A A*; S must
/// then be the matching sGS operator and f2 acts on the first block.
/// `y_blocks` is the analogue for y, T, and h2.
struct ProblemSpec {
  SmoothTerm f1;
  ProxOracle f2;
  SmoothTerm h1;
  ProxOracle h2;
  LinearMap A;
  LinearMap B;
  Vector c;
  SelfAdjointOp S;
  SelfAdjointOp T;
  std::optional<std::vector<Index>> x_blocks;
  std::optional<std::vector<Index>> y_blocks;
  ResidualScaling scaling;

  Index dim_x() const { return f1.dim(); }
  Index dim_y() const { return h1.dim(); }
  Index dim_z() const { return c.size(); }

  /// Throws std::invalid_argument on any dimension inconsistency.
  void validate() const {
    if (A.rows() != dim_z() || B.rows() != dim_z()) {
      throw std::invalid_argument("ProblemSpec: constraint maps do not land in the space of c");
    }
    if (A.cols() != dim_x() || S.dim() != dim_x()) {
      throw std::invalid_argument("ProblemSpec: x-block dimension mismatch");
    }
    if (B.cols() != dim_y() || T.dim() != dim_y()) {
      throw std::invalid_argument("ProblemSpec: y-block dimension mismatch");
    }
    if (!(scaling.primal > 0.0) || !(scaling.dual > 0.0)) {
      throw std::invalid_argument("ProblemSpec: residual normalizers must be positive");
    }
  }

  /// f1(x) + f2(x) + h1(y) + h2(y).
  double objective(const Vector& x, const Vector& y) const {
    return f1.value(x) + f2.value(x) + h1.value(y) + h2.value(y);
  }
};

/// upper + sigma * gram(map): the part of a subproblem metric that does not
/// depend on the proximal term. Deterministic, so two calls with the same
/// inputs produce bitwise-identical matrices.
inline SelfAdjointOp coupled_curvature(const SelfAdjointOp& upper, const LinearMap& map,
                                       double sigma) {
  return upper + sigma * gram(map);
}

/// F = upper(f1) + S + sigma A A*.
inline SelfAdjointOp x_metric(const ProblemSpec& spec, double sigma) {
  return coupled_curvature(spec.f1.upper(), spec.A, sigma) + spec.S;
}

/// H = upper(h1) + T + sigma B B*.
inline SelfAdjointOp y_metric(const ProblemSpec& spec, double sigma) {
  return coupled_curvature(spec.h1.upper(), spec.B, sigma) + spec.T;
}

/// Sets S to the sGS operator of upper(f1) + sigma A A* partitioned by `blocks`
/// and records the partition so the x-subproblem is solved by a sweep.
inline void attach_x_sweep(ProblemSpec& spec, std::vector<Index> blocks, double sigma) {
  const BlockQuadratic q(coupled_curvature(spec.f1.upper(), spec.A, sigma).to_dense(), blocks);
  spec.S = sgs_operator(q);
  spec.x_blocks = std::move(blocks);
}

inline void attach_y_sweep(ProblemSpec& spec, std::vector<Index> blocks, double sigma) {
  const BlockQuadratic q(coupled_curvature(spec.h1.upper(), spec.B, sigma).to_dense(), blocks);
  spec.T = sgs_operator(q);
  spec.y_blocks = std::move(blocks);
}

/// The same program with the roles of (x, f, A, S) and (y, h, B, T) exchanged.
inline ProblemSpec swap_blocks(const ProblemSpec& spec) {
  return {spec.h1, spec.h2, spec.f1, spec.f2,       spec.B,        spec.A,
          spec.c,  spec.T,  spec.S,  spec.y_blocks, spec.x_blocks, spec.scaling};
}

struct SolverConfig {
  double sigma = 0.8;
  double rho = 1.9;
  double tau = 1.618;
  double tol = 1e-5;
  int max_iter = 20000;
  double certificate_lambda = 0.75;
  bool record_certificates = false;

  /// Throws std::invalid_argument when a parameter is out of range.
  void validate() const {
    if (!(sigma > 0.0)) throw std::invalid_argument("SolverConfig: sigma must be positive");
    if (!(rho > 0.0 && rho < 2.0)) throw std::invalid_argument("SolverConfig: rho must lie in (0, 2)");
    if (!(tau > 0.0 && tau < 0.5 * (1.0 + std::sqrt(5.0)))) {
      throw std::invalid_argument("SolverConfig: tau must lie in (0, (1 + sqrt 5) / 2)");
    }
    if (!(tol >= 0.0)) throw std::invalid_argument("SolverConfig: tol must be nonnegative");
    if (max_iter < 1) throw std::invalid_argument("SolverConfig: max_iter must be >= 1");
    if (!(certificate_lambda > 0.5 && certificate_lambda <= 1.0)) {
      throw std::invalid_argument("SolverConfig: certificate_lambda must lie in (1/2, 1]");
    }
  }
};

/// (x^k, y^k, z^k).
struct IterateTriple {
  Vector x;
  Vector y;
  Vector z;
  int k = 0;

  static IterateTriple zeros(const ProblemSpec& spec) {
    return {Vector::Zero(spec.dim_x()), Vector::Zero(spec.dim_y()), Vector::Zero(spec.dim_z()), 0};
  }
};

/// Relaxed point (x~^k, y~^k, z~^k).
struct RelaxedTriple {
  Vector x;
  Vector y;
  Vector z;
  int k = 0;

  static RelaxedTriple zeros(const ProblemSpec& spec) {
    return {Vector::Zero(spec.dim_x()), Vector::Zero(spec.dim_y()), Vector::Zero(spec.dim_z()), 0};
  }
};

enum class Termination { kConverged, kMaxIter, kSubproblemFailure };

inline const char* to_string(Termination t) {
  switch (t) {
    case Termination::kConverged: return "converged";
    case Termination::kMaxIter: return "max_iter";
    case Termination::kSubproblemFailure: return "subproblem_failure";
  }
  return "unknown";
}

struct CertificateRecord {
  int k = 0;
  double psi = 0.0;
  double theta = 0.0;
  double delta = 0.0;
  double xi = 0.0;
  double eta = 0.0;
  /// eta recomputed from its expansion in the dual-error sequence.
  double eta_expansion = 0.0;
  double primal_residual = 0.0;
  double res = std::numeric_limits<double>::quiet_NaN();
};

/// Full iterate history of a run. relaxed[k] is the point the k-th iterate
/// was computed from; relaxed holds one extra entry (the point that would
/// seed the next iteration). For the M-ADMM baseline the relaxed points are
/// the previous iterates.
struct Trajectory {
  std::vector<IterateTriple> iterates;
  std::vector<RelaxedTriple> relaxed;
};

struct SolveReport {
  IterateTriple final_iterate;
  int iterations = 0;
  std::vector<double> residual_history;
  std::vector<CertificateRecord> certificate_history;
  double wall_time = 0.0;
  Termination termination = Termination::kMaxIter;
  std::string message;
  /// Populated when SolverConfig::record_certificates is set.
  std::optional<Trajectory> trajectory;
  /// Relative error of the dual-update chain identity at each k >= 1;
  /// populated alongside the trajectory by solve_gadmm_m.
  std::vector<double> chain_identity_errors;

  bool converged() const { return termination == Termination::kConverged; }
  double final_residual() const {
    return residual_history.empty() ? std::numeric_limits<double>::infinity()
                                    : residual_history.back();
  }
};

}  // namespace gadmm
