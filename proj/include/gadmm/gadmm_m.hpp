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

// Majorized generalized ADMM (G-ADMM-M). From the relaxed point w~^k:
//
//   x^k   = argmin f2(x) + 1/2 ||x - x~^k||^2_F + <grad f1(x~^k) + sigma A(A* x~^k + B* y~^k - c + z~^k / sigma), x>
//   z^k   = z~^k + sigma (A* x^k + B* y~^k - c)
//   y^k   = argmin h2(y) + 1/2 ||y - y~^k||^2_H + <grad h1(y~^k) + sigma B(A* x^k + B* y~^k - c + z^k / sigma), y>
//   w~^{k+1} = w~^k + rho (w^k - w~^k)
//
// with F = upper(f1) + S + sigma A A* and H = upper(h1) + T + sigma B B*.

#include <chrono>
#include <utility>
#include <vector>

#include "gadmm/certificates.hpp"
#include "gadmm/errors.hpp"
#include "gadmm/problem.hpp"
#include "gadmm/residual.hpp"
#include "gadmm/subproblem.hpp"

namespace gadmm {

inline Vector x_update(const PreparedProblem& p, const RelaxedTriple& relaxed) {
  return p.x_block.solve(relaxed.x, p.x_linear(relaxed.x, relaxed.y, relaxed.z));
}

inline Vector x_update(const ProblemSpec& spec, const RelaxedTriple& relaxed,
                       const SolverConfig& cfg) {
  cfg.validate();
  return x_update(PreparedProblem(spec, cfg.sigma), relaxed);
}

inline Vector z_update(const ProblemSpec& spec, const RelaxedTriple& relaxed, const Vector& x_new,
                       const SolverConfig& cfg) {
  return relaxed.z + cfg.sigma * (spec.A.apply(x_new) + spec.B.apply(relaxed.y) - spec.c);
}

inline Vector y_update(const PreparedProblem& p, const RelaxedTriple& relaxed, const Vector& x_new,
                       const Vector& z_new) {
  return p.y_block.solve(relaxed.y, p.y_linear(relaxed.y, x_new, z_new));
}

inline Vector y_update(const ProblemSpec& spec, const RelaxedTriple& relaxed, const Vector& x_new,
                       const Vector& z_new, const SolverConfig& cfg) {
  cfg.validate();
  return y_update(PreparedProblem(spec, cfg.sigma), relaxed, x_new, z_new);
}

/// w~ + rho (w - w~); rho = 1 returns the current iterate exactly.
inline RelaxedTriple relax_step(const RelaxedTriple& relaxed, const IterateTriple& current,
                                double rho) {
  RelaxedTriple out;
  out.k = relaxed.k + 1;
  if (rho == 1.0) {
    out.x = current.x;
    out.y = current.y;
    out.z = current.z;
  } else {
    out.x = relaxed.x + rho * (current.x - relaxed.x);
    out.y = relaxed.y + rho * (current.y - relaxed.y);
    out.z = relaxed.z + rho * (current.z - relaxed.z);
  }
  return out;
}

inline RelaxedTriple as_relaxed(const IterateTriple& w) { return {w.x, w.y, w.z, w.k}; }

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Residual bookkeeping shared by all three schemes.
inline void record_step(SolveReport& report, const SolverConfig& cfg, double res,
                        const IterateTriple& w) {
  report.residual_history.push_back(res);
  report.iterations += 1;
  report.final_iterate = w;
  if (res <= cfg.tol) report.termination = Termination::kConverged;
}

inline void check_init(const ProblemSpec& spec, const Vector& x, const Vector& y, const Vector& z) {
  if (x.size() != spec.dim_x() || y.size() != spec.dim_y() || z.size() != spec.dim_z()) {
    throw std::invalid_argument("solver: initial point dimension mismatch");
  }
}

// Certificates against the last iterate; callers with a better reference
// recompute them with certificate_bundle.
inline void attach_certificates(SolveReport& report, const ProblemSpec& spec,
                                const SolverConfig& cfg) {
  if (!report.trajectory || report.trajectory->iterates.empty()) return;
  report.certificate_history =
      certificate_bundle(spec, *report.trajectory, ReferencePoint::from(report.final_iterate),
                         cfg.sigma, cfg.rho, cfg.certificate_lambda, report.residual_history);
}

}  // namespace detail

/// Runs G-ADMM-M from `init` until Res <= tol or max_iter iterations.
///
/// With record_certificates set, the report also carries the full trajectory,
/// the dual-update chain identity errors, and certificate records measured
/// against the final iterate.
inline SolveReport solve_gadmm_m(const ProblemSpec& spec, const SolverConfig& cfg,
                                 const RelaxedTriple& init) {
  cfg.validate();
  detail::check_init(spec, init.x, init.y, init.z);
  const auto start = detail::Clock::now();
  const PreparedProblem p(spec, cfg.sigma);

  SolveReport report;
  report.final_iterate = {init.x, init.y, init.z, 0};
  if (cfg.record_certificates) report.trajectory.emplace();

  RelaxedTriple relaxed = init;
  relaxed.k = 0;
  IterateTriple prev;
  try {
    for (int k = 0; k < cfg.max_iter; ++k) {
      IterateTriple w;
      w.k = k;
      w.x = x_update(p, relaxed);
      w.z = relaxed.z + cfg.sigma * p.constraint_residual(w.x, relaxed.y);
      const Vector base = p.y_linear(relaxed.y, w.x, w.z);
      w.y = p.y_block.solve(relaxed.y, base);
      const Vector v = p.y_block.subgradient(w.y, relaxed.y, base);
      detail::record_step(report, cfg, kkt_residual(spec, w, v), w);

      if (report.trajectory) {
        if (k >= 1) {
          const Vector predicted =
              prev.z + cfg.sigma * cfg.rho * p.constraint_residual(w.x, prev.y) +
              cfg.sigma * (cfg.rho - 1.0) * spec.A.apply(prev.x - w.x);
          report.chain_identity_errors.push_back((w.z - predicted).norm() / (1.0 + w.z.norm()));
        }
        report.trajectory->iterates.push_back(w);
        report.trajectory->relaxed.push_back(relaxed);
      }
      relaxed = relax_step(relaxed, w, cfg.rho);
      prev = std::move(w);
      if (report.converged()) break;
    }
  } catch (const SubproblemError& e) {
    report.termination = Termination::kSubproblemFailure;
    report.message = e.what();
  }
  if (report.trajectory) {
    report.trajectory->relaxed.push_back(relaxed);
    if (report.termination != Termination::kSubproblemFailure) {
      detail::attach_certificates(report, spec, cfg);
    }
  }
  report.wall_time = detail::seconds_since(start);
  return report;
}

inline SolveReport solve_gadmm_m(const ProblemSpec& spec, const SolverConfig& cfg) {
  return solve_gadmm_m(spec, cfg, RelaxedTriple::zeros(spec));
}

}  // namespace gadmm
