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


// Solves one seeded benchmark instance with the three solvers and prints a
// short report.

#include <cstdio>

#include "gadmm/gadmm.hpp"

int main() {
  const gadmm::BenchInstance inst = gadmm::generate_instance(200, 100, 0.0, 0);
  const gadmm::SolverConfig cfg = gadmm::bench_config();
  const gadmm::ProblemSpec spec = gadmm::to_problem_spec(inst, cfg.sigma);

  for (const gadmm::SolverKind kind : gadmm::all_solvers()) {
    const gadmm::SolveReport rep = gadmm::run_solver(kind, spec, cfg);
    std::printf("%-9s %-10s iter %5d  res %.2e  objective %.6f  time %.3fs\n",
                gadmm::solver_name(kind), gadmm::to_string(rep.termination), rep.iterations,
                rep.final_residual(), gadmm::objective(spec, rep.final_iterate), rep.wall_time);
  }
  return 0;
}
