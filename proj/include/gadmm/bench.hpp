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
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gadmm/baselines.hpp"
#include "gadmm/benchmark_terms.hpp"
#include "gadmm/gadmm_m.hpp"
#include "gadmm/instance.hpp"
#include "gadmm/matrix_market.hpp"
#include "gadmm/problem.hpp"
#include "gadmm/spectral.hpp"

namespace gadmm {

enum class LambdaMethod { kPowerIteration, kDenseEigen };

/// The benchmark as a ProblemSpec:
///
///   f1 = 0, f2 = indicator of R^m_+, A* = I, S = 0,
///   h1 as in bench_h1_term, h2 = mu ||.||_1, B* = H,
///   T = lambda I - (upper(h1) + sigma H^T H),
///
/// so the y-metric collapses to lambda I. Residuals are normalized by
/// 1 + ||c|| and 1 + ||b||.
inline ProblemSpec to_problem_spec(const BenchInstance& inst, double sigma,
                                   LambdaMethod method = LambdaMethod::kPowerIteration) {
  if (!(sigma > 0.0)) throw std::invalid_argument("to_problem_spec: sigma must be positive");
  SmoothTerm h1 = bench_h1_term(inst);
  LinearMap b = LinearMap::dense(inst.H);
  const SelfAdjointOp k = coupled_curvature(h1.upper(), b, sigma);
  double lambda = 0.0;
  if (method == LambdaMethod::kDenseEigen) {
    // Round-off in the eigensolver may land just below lambda_max.
    lambda = dense_lambda_max(k) * (1.0 + 1e-12);
  } else {
    const LambdaEstimate est = estimate_lambda_max(k, 1e-9);
    if (!est.converged) {
      throw ConvergenceError("to_problem_spec: power iteration did not converge after " +
                             std::to_string(est.iterations) + " iterations");
    }
    lambda = est.value;
  }
  ProblemSpec spec{SmoothTerm::zero(inst.m),
                   ProxOracle::nonneg(),
                   std::move(h1),
                   ProxOracle::l1(inst.mu),
                   LinearMap::identity(inst.m),
                   std::move(b),
                   inst.c,
                   SelfAdjointOp::zero(inst.m),
                   SelfAdjointOp::shifted_complement(lambda, k),
                   std::nullopt,
                   std::nullopt,
                   {1.0 + inst.c.norm(), 1.0 + inst.b.norm()}};
  return spec;
}

enum class SolverKind { kMAdmm, kMGadmm, kGadmmM };

inline const char* solver_name(SolverKind s) {
  switch (s) {
    case SolverKind::kMAdmm: return "M-ADMM";
    case SolverKind::kMGadmm: return "M-GADMM";
    case SolverKind::kGadmmM: return "G-ADMM-M";
  }
  return "unknown";
}

/// Accepts the display names and the lowercase forms madmm, mgadmm, gadmm-m.
inline SolverKind parse_solver(const std::string& name) {
  if (name == "M-ADMM" || name == "madmm" || name == "m-admm") return SolverKind::kMAdmm;
  if (name == "M-GADMM" || name == "mgadmm" || name == "m-gadmm") return SolverKind::kMGadmm;
  if (name == "G-ADMM-M" || name == "gadmm-m" || name == "gadmmm") return SolverKind::kGadmmM;
  throw std::invalid_argument("unknown solver '" + name + "'");
}

inline const std::vector<SolverKind>& all_solvers() {
  static const std::vector<SolverKind> kAll = {SolverKind::kMAdmm, SolverKind::kMGadmm,
                                               SolverKind::kGadmmM};
  return kAll;
}

/// Solver parameters used by the benchmark: sigma 0.8, tol 1e-5, rho 1.9,
/// tau 1.618, at most 20000 iterations.
inline SolverConfig bench_config() {
  SolverConfig cfg;
  cfg.sigma = 0.8;
  cfg.tol = 1e-5;
  cfg.rho = 1.9;
  cfg.tau = 1.618;
  cfg.max_iter = 20000;
  return cfg;
}

inline SolveReport run_solver(SolverKind kind, const ProblemSpec& spec, const SolverConfig& cfg) {
  switch (kind) {
    case SolverKind::kMAdmm: return solve_m_admm(spec, cfg);
    case SolverKind::kMGadmm: return solve_m_gadmm(spec, cfg);
    case SolverKind::kGadmmM: return solve_gadmm_m(spec, cfg);
  }
  throw std::invalid_argument("run_solver: unknown solver");
}

/// Penalty weight chi: zero or twice mu.
enum class ChiMode { kZero, kTwoMu };

inline double chi_value(ChiMode mode, Index n) {
  return mode == ChiMode::kZero ? 0.0 : 2.0 * bench_mu(n);
}

inline ChiMode parse_chi_mode(const std::string& s) {
  if (s == "0") return ChiMode::kZero;
  if (s == "2mu") return ChiMode::kTwoMu;
  throw std::invalid_argument("chi must be '0' or '2mu', got '" + s + "'");
}

struct BenchRow {
  Index m = 0;
  Index n = 0;
  std::string solver;
  int iterations = 0;
  double time_s = 0.0;
  double res = 0.0;
  std::uint64_t seed = 0;
  std::string termination;
  double objective = 0.0;

  bool operator==(const BenchRow& o) const {
    return std::tie(m, n, solver, iterations, time_s, res, seed, termination, objective) ==
           std::tie(o.m, o.n, o.solver, o.iterations, o.time_s, o.res, o.seed, o.termination,
                    o.objective);
  }
};

struct BenchOptions {
  std::vector<std::pair<Index, Index>> sizes;
  ChiMode chi = ChiMode::kZero;
  std::vector<std::uint64_t> seeds;
  SolverConfig cfg = bench_config();
  std::vector<SolverKind> solvers = all_solvers();
  /// 0 means GADMM_THREADS if set, else the hardware concurrency.
  unsigned threads = 0;
};

/// Worker count: `requested` if nonzero, else GADMM_THREADS, else the
/// hardware concurrency; never below 1.
inline unsigned bench_threads(unsigned requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GADMM_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// One row per (size, seed, solver), ordered by size, then seed, then solver
/// as listed. Each (size, seed) instance is generated once and shared by its
/// solvers; instances run concurrently on up to bench_threads() workers.
inline std::vector<BenchRow> run_benchmark(const BenchOptions& opt) {
  opt.cfg.validate();
  struct Job {
    Index m, n;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (const auto& [m, n] : opt.sizes) {
    for (const std::uint64_t seed : opt.seeds) jobs.push_back({m, n, seed});
  }
  const std::size_t per_job = opt.solvers.size();
  std::vector<BenchRow> rows(jobs.size() * per_job);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      try {
        const Job& job = jobs[j];
        const BenchInstance inst =
            generate_instance(job.m, job.n, chi_value(opt.chi, job.n), job.seed);
        const ProblemSpec spec = to_problem_spec(inst, opt.cfg.sigma);
        for (std::size_t s = 0; s < per_job; ++s) {
          const SolveReport rep = run_solver(opt.solvers[s], spec, opt.cfg);
          BenchRow& row = rows[j * per_job + s];
          row.m = job.m;
          row.n = job.n;
          row.solver = solver_name(opt.solvers[s]);
          row.iterations = rep.iterations;
          row.time_s = rep.wall_time;
          row.res = rep.final_residual();
          row.seed = job.seed;
          row.termination = to_string(rep.termination);
          row.objective = spec.objective(rep.final_iterate.x, rep.final_iterate.y);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const unsigned threads =
      static_cast<unsigned>(std::min<std::size_t>(bench_threads(opt.threads), jobs.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

namespace detail {
inline std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}
}  // namespace detail

inline constexpr const char* kReportHeader = "m,n,solver,iter,time_s,res,seed,termination,objective";

/// Renders rows as "csv" (header m,n,solver,iter,time_s,res followed by
/// seed,termination,objective; reals in %.6g) or "table" (one line per
/// instance with Iter/Time/Res grouped by solver).
inline std::string emit_report(const std::vector<BenchRow>& rows, const std::string& format) {
  std::ostringstream out;
  if (format == "csv") {
    out << kReportHeader << '\n';
    for (const BenchRow& r : rows) {
      out << r.m << ',' << r.n << ',' << r.solver << ',' << r.iterations << ','
          << detail::fmt6(r.time_s) << ',' << detail::fmt6(r.res) << ',' << r.seed << ','
          << r.termination << ',' << detail::fmt6(r.objective) << '\n';
    }
    return out.str();
  }
  if (format != "table") throw std::invalid_argument("emit_report: unknown format '" + format + "'");

  std::vector<std::string> solvers;
  std::vector<std::tuple<Index, Index, std::uint64_t>> keys;
  std::map<std::tuple<Index, Index, std::uint64_t, std::string>, const BenchRow*> cell;
  for (const BenchRow& r : rows) {
    if (std::find(solvers.begin(), solvers.end(), r.solver) == solvers.end()) {
      solvers.push_back(r.solver);
    }
    const auto key = std::make_tuple(r.m, r.n, r.seed);
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    cell[std::make_tuple(r.m, r.n, r.seed, r.solver)] = &r;
  }
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%6s %6s %5s", "m", "n", "seed");
  out << buf;
  for (const std::string& s : solvers) {
    std::snprintf(buf, sizeof(buf), " | %-28s", s.c_str());
    out << buf;
  }
  out << '\n';
  std::snprintf(buf, sizeof(buf), "%6s %6s %5s", "", "", "");
  out << buf;
  for (std::size_t i = 0; i < solvers.size(); ++i) {
    std::snprintf(buf, sizeof(buf), " | %7s %9s %10s", "Iter", "Time", "Res");
    out << buf;
  }
  out << '\n';
  for (const auto& [m, n, seed] : keys) {
    std::snprintf(buf, sizeof(buf), "%6lld %6lld %5llu", static_cast<long long>(m),
                  static_cast<long long>(n), static_cast<unsigned long long>(seed));
    out << buf;
    for (const std::string& s : solvers) {
      const auto it = cell.find(std::make_tuple(m, n, seed, s));
      if (it == cell.end()) {
        std::snprintf(buf, sizeof(buf), " | %7s %9s %10s", "-", "-", "-");
      } else {
        const BenchRow& r = *it->second;
        std::snprintf(buf, sizeof(buf), " | %7d %9.3f %10.2e%s", r.iterations, r.time_s, r.res,
                      r.termination == "converged" ? "" : "*");
      }
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

/// Parses the csv produced by emit_report.
inline std::vector<BenchRow> parse_report(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != kReportHeader) {
    throw std::invalid_argument("parse_report: unexpected header");
  }
  std::vector<BenchRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) f.push_back(item);
    if (f.size() != 9) throw std::invalid_argument("parse_report: expected 9 fields: " + line);
    try {
      BenchRow r;
      r.m = std::stoll(f[0]);
      r.n = std::stoll(f[1]);
      r.solver = f[2];
      r.iterations = std::stoi(f[3]);
      r.time_s = std::stod(f[4]);
      r.res = std::stod(f[5]);
      r.seed = std::stoull(f[6]);
      r.termination = f[7];
      r.objective = std::stod(f[8]);
      rows.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("parse_report: malformed row: " + line);
    }
  }
  return rows;
}

/// Writes Q.mtx, H.mtx, b.mtx, c.mtx and instance.json (m, n, chi, seed)
/// into `dir`, creating it if needed.
inline void save_instance(const std::filesystem::path& dir, const BenchInstance& inst) {
  std::filesystem::create_directories(dir);
  save_matrix_market((dir / "Q.mtx").string(), inst.Q);
  save_matrix_market((dir / "H.mtx").string(), inst.H);
  save_matrix_market((dir / "b.mtx").string(), inst.b);
  save_matrix_market((dir / "c.mtx").string(), inst.c);
  nlohmann::json meta = {{"m", inst.m}, {"n", inst.n}, {"chi", inst.chi}, {"seed", inst.seed}};
  std::ofstream out(dir / "instance.json");
  if (!out) throw std::runtime_error("save_instance: cannot write " + (dir / "instance.json").string());
  out << meta.dump(2) << '\n';
}

inline BenchInstance load_instance(const std::filesystem::path& dir) {
  std::ifstream meta_in(dir / "instance.json");
  if (!meta_in) throw std::runtime_error("load_instance: cannot read " + (dir / "instance.json").string());
  const nlohmann::json meta = nlohmann::json::parse(meta_in);
  Matrix b = load_matrix_market((dir / "b.mtx").string());
  Matrix c = load_matrix_market((dir / "c.mtx").string());
  if (b.cols() != 1 || c.cols() != 1) throw std::runtime_error("load_instance: b and c must be vectors");
  BenchInstance inst = assemble_instance(load_matrix_market((dir / "Q.mtx").string()),
                                         load_matrix_market((dir / "H.mtx").string()), b.col(0),
                                         c.col(0), meta.at("chi").get<double>(),
                                         meta.at("seed").get<std::uint64_t>());
  if (inst.m != meta.at("m").get<Index>() || inst.n != meta.at("n").get<Index>()) {
    throw std::runtime_error("load_instance: dimensions disagree with instance.json");
  }
  return inst;
}

}  // namespace gadmm
