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

// Certificate quantities of the G-ADMM-M convergence analysis, evaluated on
// a recorded trajectory against a reference triple (x_bar, y_bar, z_bar).
// Error vectors are x_e = x - x_bar and so on, and
//
//   w^k = z_e^k + sigma (rho - 1) A* x_e^k.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gadmm/problem.hpp"

namespace gadmm {

/// Anchor of the error quantities; ideally a KKT point.
struct ReferencePoint {
  Vector x;
  Vector y;
  Vector z;

  static ReferencePoint from(const IterateTriple& w) { return {w.x, w.y, w.z}; }
};

/// Slacks of the two descent inequalities at index k. Both are LHS - RHS.
struct DescentSlack {
  int k = 0;
  double pivot = 0.0;
  double convergence = 0.0;
  /// Allowed negative slack, 1e-6 (1 + Psi_k).
  double tolerance = 0.0;

  bool ok() const { return pivot >= -tolerance && convergence >= -tolerance; }
};

/// Precomputed operators and per-index evaluation of the certificate terms.
class CertificateEvaluator {
 public:
  CertificateEvaluator(const ProblemSpec& spec, const Trajectory& traj, ReferencePoint ref,
                       double sigma, double rho, double lambda)
      : spec_(spec),
        traj_(traj),
        ref_(std::move(ref)),
        sigma_(sigma),
        rho_(rho),
        lambda_(lambda),
        x_prox_(spec.f1.upper() + spec.S),
        y_prox_(spec.h1.upper() + spec.T),
        x_metric_(x_metric(spec, sigma)) {
    if (!(rho > 0.0 && rho < 2.0)) throw std::invalid_argument("certificates: rho must lie in (0, 2)");
    if (!(lambda > 0.5 && lambda <= 1.0)) {
      throw std::invalid_argument("certificates: lambda must lie in (1/2, 1]");
    }
    if (traj_.relaxed.size() < traj_.iterates.size() + 1 && !traj_.iterates.empty()) {
      throw std::invalid_argument("certificates: trajectory lacks the trailing relaxed point");
    }
  }

  /// Largest k with a full record, i.e. records exist for k = 1..last_index().
  int last_index() const { return static_cast<int>(traj_.iterates.size()) - 2; }

  double psi(int k) const {
    const IterateTriple& w = iterate(k);
    const Vector ax = spec_.A.apply(w.x - ref_.x);
    const Vector dual = dual_error(k);
    const Vector xt = relaxed(k + 1).x - ref_.x;
    const Vector yt = relaxed(k).y - ref_.y;
    return dual.squaredNorm() / (sigma_ * rho_) + sigma_ * (2.0 - rho_) * ax.squaredNorm() +
           (x_prox_.quadform(xt) + y_prox_.quadform(yt)) / rho_;
  }

  /// Psi_k plus the terms that make the sequence monotone up to xi_k.
  double psi_augmented(int k) const {
    const IterateTriple& w = iterate(k);
    const Vector gap = relaxed(k).x - w.x;
    const Vector mixed = constraint(w.x, iterate(k - 1).y);
    return psi(k) + (2.0 - rho_) * x_prox_.quadform(gap) +
           sigma_ * (1.0 - lambda_) * (2.0 - rho_) * mixed.squaredNorm();
  }

  double theta(int k) const {
    const Vector dx = relaxed(k + 1).x - iterate(k + 1).x;
    const Vector dy = relaxed(k).y - iterate(k).y;
    const double two_minus = 2.0 - rho_;
    return 0.5 * spec_.f1.lower().quadform(dx) - spec_.f1.upper().quadform(dx) +
           two_minus * x_prox_.quadform(dx) + 0.5 * spec_.h1.lower().quadform(dy) -
           spec_.h1.upper().quadform(dy) + two_minus * y_prox_.quadform(dy);
  }

  double delta(int k) const {
    const IterateTriple& prev = iterate(k - 1);
    const IterateTriple& cur = iterate(k);
    const IterateTriple& next = iterate(k + 1);
    const Vector dx = relaxed(k + 1).x - next.x;
    const Vector dy = relaxed(k).y - cur.y;
    const Vector dxk = relaxed(k).x - cur.x;
    const double two_minus = 2.0 - rho_;
    const double l = lambda_;
    return 0.5 * spec_.f1.lower().quadform(dx) + 0.5 * spec_.h1.lower().quadform(dy) +
           two_minus * y_prox_.quadform(dy) + (1.0 - l) * two_minus * x_prox_.quadform(dxk) +
           sigma_ * (2.0 * l - 1.0) * two_minus * constraint(next.x, cur.y).squaredNorm() +
           0.5 * sigma_ * (1.0 - l) * two_minus * spec_.B.apply(cur.y - prev.y).squaredNorm() +
           l * two_minus * two_minus / rho_ * x_metric_.quadform(next.x - cur.x);
  }

  double xi(int k) const {
    const Vector dx = relaxed(k + 1).x - iterate(k + 1).x;
    const Vector dy = relaxed(k).y - iterate(k).y;
    return spec_.f1.upper().quadform(dx) + spec_.h1.upper().quadform(dy);
  }

  /// <A* x_e^{k+1}, z_e^{k+1}> + <B* y_e^k, z_e^k + sigma (A* x^k + B* y^k - c)>.
  double eta(int k) const {
    const IterateTriple& cur = iterate(k);
    const IterateTriple& next = iterate(k + 1);
    const Vector ax = spec_.A.apply(next.x - ref_.x);
    const Vector by = spec_.B.apply(cur.y - ref_.y);
    const Vector shifted = (cur.z - ref_.z) + sigma_ * constraint(cur.x, cur.y);
    return ax.dot(next.z - ref_.z) + by.dot(shifted);
  }

  /// eta_k through the dual-error sequence w^k:
  /// (||w^{k+1}||^2 - ||w^k||^2) / (2 sigma rho)
  ///   + sigma (2 - rho) / 2 (||A* x^k + B* y^k - c||^2 + ||A* x_e^{k+1}||^2 - ||A* x_e^k||^2).
  double eta_expansion(int k) const {
    const IterateTriple& cur = iterate(k);
    const double ax_next = spec_.A.apply(iterate(k + 1).x - ref_.x).squaredNorm();
    const double ax_cur = spec_.A.apply(cur.x - ref_.x).squaredNorm();
    return (dual_error(k + 1).squaredNorm() - dual_error(k).squaredNorm()) / (2.0 * sigma_ * rho_) +
           0.5 * sigma_ * (2.0 - rho_) *
               (constraint(cur.x, cur.y).squaredNorm() + ax_next - ax_cur);
  }

  double primal_residual(int k) const {
    const IterateTriple& w = iterate(k);
    return constraint(w.x, w.y).norm();
  }

  CertificateRecord record(int k) const {
    CertificateRecord r;
    r.k = k;
    r.psi = psi(k);
    r.theta = theta(k);
    r.delta = delta(k);
    r.xi = xi(k);
    r.eta = eta(k);
    r.eta_expansion = eta_expansion(k);
    r.primal_residual = primal_residual(k);
    return r;
  }

 private:
  const IterateTriple& iterate(int k) const { return traj_.iterates.at(static_cast<std::size_t>(k)); }
  const RelaxedTriple& relaxed(int k) const { return traj_.relaxed.at(static_cast<std::size_t>(k)); }

  Vector constraint(const Vector& x, const Vector& y) const {
    return spec_.A.apply(x) + spec_.B.apply(y) - spec_.c;
  }

  Vector dual_error(int k) const {
    const IterateTriple& w = iterate(k);
    return (w.z - ref_.z) + sigma_ * (rho_ - 1.0) * spec_.A.apply(w.x - ref_.x);
  }

  const ProblemSpec& spec_;
  const Trajectory& traj_;
  ReferencePoint ref_;
  double sigma_;
  double rho_;
  double lambda_;
  SelfAdjointOp x_prox_;
  SelfAdjointOp y_prox_;
  SelfAdjointOp x_metric_;
};

/// One record per k = 1..K-1 for a trajectory with iterates 0..K. The res
/// field is filled from `residual_history` when it is long enough.
inline std::vector<CertificateRecord> certificate_bundle(
    const ProblemSpec& spec, const Trajectory& traj, const ReferencePoint& ref, double sigma,
    double rho, double lambda, const std::vector<double>& residual_history = {}) {
  std::vector<CertificateRecord> out;
  const CertificateEvaluator eval(spec, traj, ref, sigma, rho, lambda);
  for (int k = 1; k <= eval.last_index(); ++k) {
    CertificateRecord r = eval.record(k);
    if (static_cast<std::size_t>(k) < residual_history.size()) {
      r.res = residual_history[static_cast<std::size_t>(k)];
    }
    out.push_back(r);
  }
  return out;
}

/// Slacks of
///
///   Psi_k - Psi_{k+1} >= theta_k + sigma (2 - rho) ||A* x^k + B* y^k - c||^2
///
/// and
///
///   [Psi_k + (2 - rho) ||x~^k - x^k||^2_{upper(f1) + S}
///        + sigma (1 - lambda)(2 - rho) ||A* x^k + B* y^{k-1} - c||^2] - [same at k + 1]
///     >= delta_k - xi_k
///
/// for k = 1..K-1.
inline std::vector<DescentSlack> check_descent_inequality(const ProblemSpec& spec,
                                                          const Trajectory& traj,
                                                          const ReferencePoint& ref,
                                                          const SolverConfig& cfg) {
  std::vector<DescentSlack> out;
  const CertificateEvaluator eval(spec, traj, ref, cfg.sigma, cfg.rho, cfg.certificate_lambda);
  if (eval.last_index() < 1) return out;
  double psi_k = eval.psi(1);
  double aug_k = eval.psi_augmented(1);
  for (int k = 1; k <= eval.last_index(); ++k) {
    const double psi_next = eval.psi(k + 1);
    const double aug_next = eval.psi_augmented(k + 1);
    const double r = eval.primal_residual(k);
    DescentSlack s;
    s.k = k;
    s.pivot = psi_k - psi_next - eval.theta(k) - cfg.sigma * (2.0 - cfg.rho) * r * r;
    s.convergence = aug_k - aug_next - (eval.delta(k) - eval.xi(k));
    s.tolerance = 1e-6 * (1.0 + psi_k);
    out.push_back(s);
    psi_k = psi_next;
    aug_k = aug_next;
  }
  return out;
}

}  // namespace gadmm
