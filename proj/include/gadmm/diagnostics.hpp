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
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gadmm/certificates.hpp"
#include "gadmm/linops.hpp"
#include "gadmm/problem.hpp"
#include "gadmm/residual.hpp"

namespace gadmm {

struct IdentityReport {
  int trials = 0;
  double max_violation = 0.0;
  int failures = 0;
  double tolerance = 1e-10;

  bool passed() const { return failures == 0; }
};

/// Largest relative violation, over one operator and one set of vectors, of
///
///   ||u||^2_G + ||v||^2_G >= 1/2 ||u - v||^2_G,
///   2 <u, Gv> = ||u||^2_G + ||v||^2_G - ||u - v||^2_G = ||u + v||^2_G - ||u||^2_G - ||v||^2_G,
///   2 <u1 - u2, G(v1 - v2)> = ||u1 - v2||^2_G + ||u2 - v1||^2_G - ||u1 - v1||^2_G - ||u2 - v2||^2_G.
///
/// Each violation is divided by 1 plus the sum of the magnitudes of the terms
/// involved.
inline double operator_identity_violation(const SelfAdjointOp& g, const Vector& u, const Vector& v,
                                          const Vector& u1, const Vector& u2, const Vector& v1,
                                          const Vector& v2) {
  const double uu = g.quadform(u);
  const double vv = g.quadform(v);
  const double dd = g.quadform(u - v);
  const double ss = g.quadform(u + v);
  const double cross = 2.0 * u.dot(g.apply(v));

  double worst = 0.0;
  auto note = [&worst](double gap, double scale) { worst = std::max(worst, gap / (1.0 + scale)); };

  note(std::max(0.0, 0.5 * dd - (uu + vv)), std::abs(uu) + std::abs(vv) + std::abs(dd));
  note(std::abs(cross - (uu + vv - dd)), std::abs(cross) + std::abs(uu) + std::abs(vv) + std::abs(dd));
  note(std::abs(cross - (ss - uu - vv)), std::abs(cross) + std::abs(ss) + std::abs(uu) + std::abs(vv));

  const double lhs = 2.0 * (u1 - u2).dot(g.apply(v1 - v2));
  const double a = g.quadform(u1 - v2);
  const double b = g.quadform(u2 - v1);
  const double c = g.quadform(u1 - v1);
  const double d = g.quadform(u2 - v2);
  note(std::abs(lhs - (a + b - c - d)), std::abs(lhs) + a + b + c + d);
  return worst;
}

/// Samples `trials` random PSD operators G = M^T M (M of random rank in
/// 0..dim) and standard-normal vectors, and reports the largest violation.
inline IdentityReport check_operator_identities(int trials, Index dim, std::uint64_t seed,
                                                double tolerance = 1e-10) {
  if (trials < 1) throw std::invalid_argument("check_operator_identities: trials must be >= 1");
  if (dim < 1) throw std::invalid_argument("check_operator_identities: dim must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_int_distribution<Index> rank_dist(0, dim);
  auto vec = [&] {
    Vector out(dim);
    for (Index i = 0; i < dim; ++i) out[i] = normal(rng);
    return out;
  };

  IdentityReport report;
  report.tolerance = tolerance;
  for (int t = 0; t < trials; ++t) {
    const Index rank = rank_dist(rng);
    Matrix m(rank, dim);
    for (Index j = 0; j < dim; ++j) {
      for (Index i = 0; i < rank; ++i) m(i, j) = normal(rng);
    }
    Matrix gm = m.transpose() * m;
    gm = 0.5 * (gm + gm.transpose()).eval();
    const SelfAdjointOp g = SelfAdjointOp::dense(std::move(gm));
    const Vector u = vec(), v = vec(), u1 = vec(), u2 = vec(), v1 = vec(), v2 = vec();
    const double violation = operator_identity_violation(g, u, v, u1, u2, v1, v2);
    report.max_violation = std::max(report.max_violation, violation);
    if (violation > tolerance) ++report.failures;
    ++report.trials;
  }
  return report;
}

/// f1(x) + f2(x) + h1(y) + h2(y) at an iterate.
inline double objective(const ProblemSpec& spec, const IterateTriple& w) {
  return spec.objective(w.x, w.y);
}

/// CSV with header k,psi,theta,delta,xi,eta,primal_residual,res.
inline void write_certificates_csv(std::ostream& out, const std::vector<CertificateRecord>& records) {
  out << "k,psi,theta,delta,xi,eta,primal_residual,res\n";
  char line[512];
  for (const CertificateRecord& r : records) {
    std::snprintf(line, sizeof(line), "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.k, r.psi,
                  r.theta, r.delta, r.xi, r.eta, r.primal_residual, r.res);
    out << line;
  }
}

}  // namespace gadmm
