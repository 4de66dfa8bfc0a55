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


// gadmm_bench: benchmark runner and diagnostics front end.
//
//   gadmm_bench bench --m 200 --n 500 --chi 0 --seeds 0,1,2 --format table
//   gadmm_bench bench --instance fixtures/case1
//   gadmm_bench generate --m 50 --n 30 --chi 2mu --seed 4 --out fixtures/case1
//   gadmm_bench verify
//
// Exit status: 0 when every run converged (or every check passed), 2 when
// some run did not converge, 1 on usage or input errors.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "gadmm/gadmm.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotConverged = 2;

struct BenchArgs {
  std::vector<gadmm::Index> m = {200};
  std::vector<gadmm::Index> n = {500};
  std::string chi = "0";
  std::vector<std::uint64_t> seeds = {0};
  double sigma = 0.8;
  double tol = 1e-5;
  int max_iter = 20000;
  std::vector<std::string> solvers;
  std::string out;
  std::string format = "table";
  std::string instance;
  unsigned threads = 0;
};

void warn_zero_rows(const gadmm::BenchInstance& inst) {
  if (inst.zero_rows.empty()) return;
  std::cerr << "warning: " << inst.zero_rows.size() << " zero row(s) of H; their D entry is set to 1"
            << std::endl;
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream file(path);
  if (!file) {
    std::cerr << "error: cannot write " << path << std::endl;
    return kExitUsage;
  }
  file << text;
  return kExitOk;
}

int run_bench(const BenchArgs& a) {
  gadmm::SolverConfig cfg = gadmm::bench_config();
  cfg.sigma = a.sigma;
  cfg.tol = a.tol;
  cfg.max_iter = a.max_iter;
  std::vector<gadmm::SolverKind> solvers = gadmm::all_solvers();
  if (!a.solvers.empty()) {
    solvers.clear();
    for (const std::string& s : a.solvers) solvers.push_back(gadmm::parse_solver(s));
  }
  cfg.validate();

  std::vector<gadmm::BenchRow> rows;
  if (!a.instance.empty()) {
    const gadmm::BenchInstance inst = gadmm::load_instance(a.instance);
    warn_zero_rows(inst);
    const gadmm::ProblemSpec spec = gadmm::to_problem_spec(inst, cfg.sigma);
    for (const gadmm::SolverKind kind : solvers) {
      const gadmm::SolveReport rep = gadmm::run_solver(kind, spec, cfg);
      rows.push_back({inst.m, inst.n, gadmm::solver_name(kind), rep.iterations, rep.wall_time,
                      rep.final_residual(), inst.seed, gadmm::to_string(rep.termination),
                      spec.objective(rep.final_iterate.x, rep.final_iterate.y)});
    }
  } else {
    if (a.m.size() != a.n.size()) {
      throw CLI::ValidationError("--m and --n must list the same number of sizes");
    }
    gadmm::BenchOptions opt;
    for (std::size_t i = 0; i < a.m.size(); ++i) opt.sizes.emplace_back(a.m[i], a.n[i]);
    opt.chi = gadmm::parse_chi_mode(a.chi);
    opt.seeds = a.seeds;
    opt.cfg = cfg;
    opt.solvers = solvers;
    opt.threads = a.threads;
    rows = gadmm::run_benchmark(opt);
  }

  const int written = write_output(gadmm::emit_report(rows, a.format), a.out);
  if (written != kExitOk) return written;
  for (const gadmm::BenchRow& r : rows) {
    if (r.termination != "converged") return kExitNotConverged;
  }
  return kExitOk;
}

int run_generate(gadmm::Index m, gadmm::Index n, const std::string& chi, std::uint64_t seed,
                 const std::string& out) {
  const gadmm::BenchInstance inst =
      gadmm::generate_instance(m, n, gadmm::chi_value(gadmm::parse_chi_mode(chi), n), seed);
  warn_zero_rows(inst);
  gadmm::save_instance(out, inst);
  std::cout << "wrote " << m << "x" << n << " instance (seed " << seed << ") to " << out << "\n";
  return kExitOk;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

bool report_check(const char* name, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
  return pass;
}

int run_verify(int trials, std::uint64_t seed) {
  bool ok = true;
  const gadmm::IdentityReport ids = gadmm::check_operator_identities(trials, 16, seed);
  ok &= report_check("operator identities", ids.passed(),
                     std::to_string(ids.trials) + " trials, max violation " +
                         sci(ids.max_violation));

  const gadmm::BenchInstance inst = gadmm::generate_instance(60, 40, 0.0, seed);
  const gadmm::ProblemSpec spec = gadmm::to_problem_spec(inst, 0.8);
  gadmm::SolverConfig ref_cfg = gadmm::bench_config();
  ref_cfg.tol = 1e-10;
  ref_cfg.max_iter = 200000;
  const gadmm::SolveReport ref = gadmm::solve_gadmm_m(spec, ref_cfg);
  gadmm::SolverConfig cfg = gadmm::bench_config();
  cfg.record_certificates = true;
  const gadmm::SolveReport rep = gadmm::solve_gadmm_m(spec, cfg);
  double chain = 0.0;
  for (const double e : rep.chain_identity_errors) chain = std::max(chain, e);
  ok &= report_check("chain identity", rep.converged() && chain <= 1e-8,
                     std::to_string(rep.iterations) + " iterations, max error " +
                         sci(chain));

  int bad = 0;
  std::size_t checked = 0;
  if (ref.converged() && rep.trajectory) {
    const auto slacks = gadmm::check_descent_inequality(
        spec, *rep.trajectory, gadmm::ReferencePoint::from(ref.final_iterate), cfg);
    checked = slacks.size();
    for (const auto& s : slacks) bad += s.ok() ? 0 : 1;
  }
  ok &= report_check("descent certificates", ref.converged() && checked > 0 && bad == 0,
                     std::to_string(checked) + " indices, " + std::to_string(bad) + " violations");
  return ok ? kExitOk : kExitNotConverged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark and diagnostics for majorized generalized ADMM solvers"};
  app.require_subcommand(1);

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run solvers on seeded benchmark instances");
  bench_cmd->add_option("--m", bench.m, "Row counts, paired with --n")->delimiter(',');
  bench_cmd->add_option("--n", bench.n, "Column counts, paired with --m")->delimiter(',');
  bench_cmd->add_option("--chi", bench.chi, "Penalty weight: 0 or 2mu")
      ->check(CLI::IsMember({"0", "2mu"}));
  bench_cmd->add_option("--seeds", bench.seeds, "Instance seeds")->delimiter(',');
  bench_cmd->add_option("--sigma", bench.sigma, "Penalty parameter")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--tol", bench.tol, "Stopping tolerance on Res")->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--max-iter", bench.max_iter, "Iteration cap")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--solvers", bench.solvers, "Subset of M-ADMM,M-GADMM,G-ADMM-M")
      ->delimiter(',');
  bench_cmd->add_option("--out", bench.out, "Write the report to this file");
  bench_cmd->add_option("--format", bench.format, "csv or table")
      ->check(CLI::IsMember({"csv", "table"}));
  bench_cmd->add_option("--instance", bench.instance, "Run on a saved instance directory");
  bench_cmd->add_option("--threads", bench.threads, "Worker count (default GADMM_THREADS)");

  gadmm::Index gen_m = 50, gen_n = 30;
  std::string gen_chi = "0", gen_out;
  std::uint64_t gen_seed = 0;
  CLI::App* gen_cmd = app.add_subcommand("generate", "Write a seeded instance as Matrix Market files");
  gen_cmd->add_option("--m", gen_m, "Rows of H")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--n", gen_n, "Columns of H")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--chi", gen_chi, "Penalty weight: 0 or 2mu")->check(CLI::IsMember({"0", "2mu"}));
  gen_cmd->add_option("--seed", gen_seed, "Instance seed");
  gen_cmd->add_option("--out", gen_out, "Output directory")->required();

  int verify_trials = 1000;
  std::uint64_t verify_seed = 1;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the diagnostics suites");
  verify_cmd->add_option("--trials", verify_trials, "Identity trials")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify_seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bench_cmd) return run_bench(bench);
    if (*gen_cmd) return run_generate(gen_m, gen_n, gen_chi, gen_seed, gen_out);
    if (*verify_cmd) return run_verify(verify_trials, verify_seed);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitUsage;
  }
  return kExitUsage;
}
