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

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gtest/gtest.h"
#include "test_support.h"

namespace gadmm {
namespace {

using testing::Rng;

// argmin_t mu |t| + w/2 (t - v)^2 by golden-section search; accurate to about 1e-8.
double scalar_l1_oracle(double v, double mu, double w) {
  auto f = [&](double t) { return mu * std::abs(t) + 0.5 * w * (t - v) * (t - v); };
  double lo = -std::abs(v) - 1.0;
  double hi = std::abs(v) + 1.0;
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int it = 0; it < 200; ++it) {
    const double a = hi - r * (hi - lo);
    const double b = lo + r * (hi - lo);
    if (f(a) < f(b)) {
      hi = b;
    } else {
      lo = a;
    }
  }
  return 0.5 * (lo + hi);
}

TEST(ProxL1Test, ZeroMuLeavesInputUnchanged) {
  Rng rng(1);
  const Vector v = rng.vector(7);
  EXPECT_EQ(prox_l1(v, 0.0, Vector::Ones(7)), v);
}

TEST(ProxL1Test, TwoCoordinateExampleMatchesScalarOracle) {
  Vector v(2);
  v << 2.0, -0.5;
  const Vector y = prox_l1(v, 1.0, Vector::Ones(2));
  EXPECT_NEAR(y[0], scalar_l1_oracle(2.0, 1.0, 1.0), 1e-7);
  EXPECT_NEAR(y[1], scalar_l1_oracle(-0.5, 1.0, 1.0), 1e-7);
  EXPECT_DOUBLE_EQ(y[0], 1.0);
  EXPECT_DOUBLE_EQ(y[1], 0.0);
}

TEST(ProxL1Test, ZeroInputGivesZero) {
  EXPECT_EQ(prox_l1(Vector::Zero(4), 3.0, Vector::Ones(4)), Vector::Zero(4));
}

TEST(ProxL1Test, SubdifferentialOptimality) {
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const Vector v = 3.0 * rng.vector(9);
    Vector w(9);
    for (Index i = 0; i < 9; ++i) w[i] = rng.uniform(0.1, 5.0);
    const double mu = rng.uniform(0.0, 4.0);
    const Vector y = prox_l1(v, mu, w);
    for (Index i = 0; i < 9; ++i) {
      // -w_i (y_i - v_i) must lie in mu * d|y_i|.
      const double g = -w[i] * (y[i] - v[i]);
      if (y[i] != 0.0) {
        EXPECT_NEAR(g, mu * (y[i] > 0 ? 1.0 : -1.0), 1e-10 * (1.0 + mu));
      } else {
        EXPECT_LE(std::abs(g), mu + 1e-10);
      }
    }
  }
}

TEST(ProxL1Test, RejectsNonpositiveWeight) {
  Vector w(2);
  w << 1.0, 0.0;
  EXPECT_THROW(prox_l1(Vector::Ones(2), 1.0, w), std::invalid_argument);
  EXPECT_THROW(prox_l1(Vector::Ones(2), -1.0, Vector::Ones(2)), std::invalid_argument);
  EXPECT_THROW(prox_l1(Vector::Ones(2), 1.0, Vector::Ones(3)), std::invalid_argument);
}

TEST(ProjectNonnegTest, Examples) {
  Vector feasible(3);
  feasible << 0.0, 1.5, 2.0;
  EXPECT_EQ(project_nonneg(feasible), feasible);
  Vector v(2);
  v << -1.0, 2.0;
  Vector expected(2);
  expected << 0.0, 2.0;
  EXPECT_EQ(project_nonneg(v), expected);
  EXPECT_EQ(project_nonneg(project_nonneg(v)), project_nonneg(v));
}

TEST(ProjectNonnegTest, WeightsDoNotMoveMinimizer) {
  Rng rng(3);
  const ProxOracle nonneg = ProxOracle::nonneg();
  for (int trial = 0; trial < 20; ++trial) {
    const Vector v = rng.vector(6);
    Vector w(6);
    for (Index i = 0; i < 6; ++i) w[i] = rng.uniform(0.01, 10.0);
    EXPECT_EQ(nonneg.prox(v, w), project_nonneg(v));
  }
}

TEST(ProxOracleTest, NonexpansiveAndInDomain) {
  Rng rng(4);
  const ProxOracle l1 = ProxOracle::l1(0.7);
  const ProxOracle nonneg = ProxOracle::nonneg();
  for (int trial = 0; trial < 50; ++trial) {
    const Vector u = rng.vector(8);
    const Vector v = rng.vector(8);
    const Vector ones = Vector::Ones(8);
    for (const ProxOracle* g : {&l1, &nonneg}) {
      const Vector pu = g->prox(u, ones);
      const Vector pv = g->prox(v, ones);
      EXPECT_LE((pu - pv).norm(), (u - v).norm() + 1e-14);
      EXPECT_TRUE(std::isfinite(g->value(pu)));
    }
  }
  Vector neg(2);
  neg << -1.0, 1.0;
  EXPECT_EQ(nonneg.value(neg), std::numeric_limits<double>::infinity());
  EXPECT_TRUE(ProxOracle::zero().is_zero());
}

TEST(QuadraticMajorantTest, ExactAtAnchor) {
  Rng rng(5);
  const BenchInstance inst = generate_instance(12, 8, 2.0 * bench_mu(8), 5);
  const SmoothTerm h1 = bench_h1_term(inst);
  const Vector anchor = rng.vector(8);
  EXPECT_EQ(quadratic_majorant(h1, anchor).evaluate(anchor), h1.value(anchor));
  EXPECT_THROW(quadratic_majorant(h1, rng.vector(3)), std::invalid_argument);
}

TEST(QuadraticMajorantTest, QuadraticIsItsOwnModel) {
  Rng rng(6);
  const SmoothTerm f = SmoothTerm::quadratic(rng.psd(7, 7), rng.vector(7));
  const QuadraticMajorant maj = quadratic_majorant(f, rng.vector(7));
  for (int trial = 0; trial < 20; ++trial) {
    const Vector x = rng.vector(7);
    EXPECT_NEAR(maj.evaluate(x), f.value(x), 1e-12 * (1.0 + std::abs(f.value(x))));
  }
}

// Scaled so that a good share of penalty coordinates are active.
Vector bench_point(Rng& rng, const BenchInstance& inst) {
  return (4.0 / std::sqrt(static_cast<double>(inst.n))) * rng.vector(inst.n);
}

TEST(BenchH1Test, SandwichBoundsOnSampledPairs) {
  for (const std::uint64_t seed : {5u, 6u, 7u}) {
    const BenchInstance inst = generate_instance(40, 25, 2.0 * bench_mu(25), seed);
    const SmoothTerm h1 = bench_h1_term(inst);
    Rng rng(seed + 100);
    int active = 0;
    for (int pair = 0; pair < 100; ++pair) {
      const Vector x = bench_point(rng, inst);
      const Vector xp = bench_point(rng, inst);
      const double gap = h1.value(x) - h1.value(xp) - (x - xp).dot(h1.gradient(xp));
      const double slack = 1e-10 * (1.0 + std::abs(h1.value(x)));
      EXPECT_LE(gap, 0.5 * h1.upper().quadform(x - xp) + slack);
      EXPECT_GE(gap, 0.5 * h1.lower().quadform(x - xp) - slack);
      active += (inst.D.cwiseProduct(inst.d - inst.H * xp).array() > 0.0).count() > 0;
    }
    EXPECT_GT(active, 0) << "penalty never active for seed " << seed;
  }
}

TEST(BenchH1Test, UpperMinusLowerIsSemidefinite) {
  const BenchInstance inst = generate_instance(30, 20, 2.0 * bench_mu(20), 1);
  const SmoothTerm h1 = bench_h1_term(inst);
  const Matrix diff = h1.upper().to_dense() - h1.lower().to_dense();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(diff);
  EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-10 * (1.0 + diff.norm()));
}

TEST(BenchH1GradientTest, WithoutPenaltyIsAffine) {
  Rng rng(8);
  const BenchInstance inst = generate_instance(10, 6, 0.0, 8);
  const Vector y = rng.vector(6);
  EXPECT_LE((bench_h1_gradient(y, inst) - (inst.Q * y - inst.b)).norm(), 1e-12 * (1.0 + y.norm()));
  EXPECT_EQ(bench_h1_upper(inst).to_dense(), inst.Q);
}

TEST(BenchH1GradientTest, InactiveProjectionIsAffine) {
  // With y = 0 the projection argument is D(c - 5); pick c small so it is <= 0.
  BenchInstance inst = generate_instance(10, 6, 3.0, 9);
  inst = assemble_instance(inst.Q, inst.H, inst.b, Vector::Zero(10), 3.0, 9);
  const Vector y = Vector::Zero(6);
  EXPECT_EQ(bench_h1_gradient(y, inst), inst.Q * y - inst.b);
  EXPECT_THROW(bench_h1_gradient(Vector::Zero(5), inst), std::invalid_argument);
}

TEST(BenchH1GradientTest, MatchesCentralDifferencesAwayFromKinks) {
  const BenchInstance inst = generate_instance(40, 25, 2.0 * bench_mu(25), 9);
  Rng rng(9);
  int checked = 0;
  while (checked < 20) {
    const Vector y = bench_point(rng, inst);
    const double h = 1e-6 * (1.0 + y.norm());
    const Vector arg = inst.D.cwiseProduct(inst.d - inst.H * y);
    if ((arg.cwiseAbs().array() <= 2.0 * h).any()) continue;
    const Vector g = bench_h1_gradient(y, inst);
    Vector fd(inst.n);
    for (Index j = 0; j < inst.n; ++j) {
      Vector yp = y, ym = y;
      yp[j] += h;
      ym[j] -= h;
      fd[j] = (bench_h1_value(yp, inst) - bench_h1_value(ym, inst)) / (2.0 * h);
    }
    EXPECT_LE((g - fd).norm(), 1e-6 * (1.0 + g.norm()));
    ++checked;
  }
}

}  // namespace
}  // namespace gadmm
