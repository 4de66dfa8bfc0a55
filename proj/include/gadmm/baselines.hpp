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

// Baselines sharing the subproblem machinery of G-ADMM-M.
//
// M-ADMM (majorized ADMM with dual step tau):
//   x^{k+1} from anchor x^k with (y^k, z^k); y^{k+1} from anchor y^k with
//   (x^{k+1}, z^k); z^{k+1} = z^k + tau sigma (A* x^{k+1} + B* y^{k+1} - c).
//
// M-GADMM (majorized generalized ADMM): the relaxed scheme of G-ADMM-M, but
// the majorization and proximal terms are anchored at the previous iterate
// w^{k-1} (w~^0 for the first step) rather than at the relaxed point.

#include <utility>

#include "gadmm/errors.hpp"
#include "gadmm/gadmm_m.hpp"
#include "gadmm/problem.hpp"
#include "gadmm/residual.hpp"
#include "gadmm/subproblem.hpp"

namespace gadmm {

/// M-ADMM from `init`. Uses cfg.tau; cfg.rho is ignored. A recorded
/// trajectory stores the previous iterate as each step's relaxed point.
inline SolveReport solve_m_admm(const ProblemSpec& spec, const SolverConfig& cfg,
                                const IterateTriple& init) {
  cfg.validate();
  detail::check_init(spec, init.x, init.y, init.z);
  const auto start = detail::Clock::now();
  const PreparedProblem p(spec, cfg.sigma);

  SolveReport report;
  report.final_iterate = init;
  report.final_iterate.k = 0;
  if (cfg.record_certificates) report.trajectory.emplace();

  IterateTriple cur = report.final_iterate;
  try {
    for (int k = 0; k < cfg.max_iter; ++k) {
      IterateTriple next;
      next.k = k;
      next.x = p.x_block.solve(cur.x, p.x_linear(cur.x, cur.y, cur.z));
      const Vector base = p.y_linear(cur.y, next.x, cur.z);
      next.y = p.y_block.solve(cur.y, base);
      next.z = cur.z + cfg.tau * cfg.sigma * p.constraint_residual(next.x, next.y);
      const Vector v = p.y_block.subgradient(next.y, cur.y, base);
      detail::record_step(report, cfg, kkt_residual(spec, next, v), next);
      if (report.trajectory) {
        report.trajectory->iterates.push_back(next);
        report.trajectory->relaxed.push_back(as_relaxed(cur));
      }
      cur = std::move(next);
      if (report.converged()) break;
    }
  } catch (const SubproblemError& e) {
    report.termination = Termination::kSubproblemFailure;
    report.message = e.what();
  }
  if (report.trajectory) report.trajectory->relaxed.push_back(as_relaxed(cur));
  report.wall_time = detail::seconds_since(start);
  return report;
}

inline SolveReport solve_m_admm(const ProblemSpec& spec, const SolverConfig& cfg) {
  return solve_m_admm(spec, cfg, IterateTriple::zeros(spec));
}

/// M-GADMM from `init`. Uses cfg.rho.
inline SolveReport solve_m_gadmm(const ProblemSpec& spec, const SolverConfig& cfg,
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
  IterateTriple anchor = report.final_iterate;
  try {
    for (int k = 0; k < cfg.max_iter; ++k) {
      IterateTriple w;
      w.k = k;
      w.x = p.x_block.solve(anchor.x, p.x_linear(anchor.x, relaxed.y, relaxed.z));
      w.z = relaxed.z + cfg.sigma * p.constraint_residual(w.x, relaxed.y);
      const Vector base = p.y_linear(anchor.y, w.x, w.z);
      w.y = p.y_block.solve(anchor.y, base);
      const Vector v = p.y_block.subgradient(w.y, anchor.y, base);
      detail::record_step(report, cfg, kkt_residual(spec, w, v), w);
      if (report.trajectory) {
        report.trajectory->iterates.push_back(w);
        report.trajectory->relaxed.push_back(relaxed);
      }
      relaxed = relax_step(relaxed, w, cfg.rho);
      anchor = std::move(w);
      if (report.converged()) break;
    }
  } catch (const SubproblemError& e) {
    report.termination = Termination::kSubproblemFailure;
    report.message = e.what();
  }
  if (report.trajectory) report.trajectory->relaxed.push_back(relaxed);
  report.wall_time = detail::seconds_since(start);
  return report;
}

inline SolveReport solve_m_gadmm(const ProblemSpec& spec, const SolverConfig& cfg) {
  return solve_m_gadmm(spec, cfg, RelaxedTriple::zeros(spec));
}

}  // namespace gadmm
