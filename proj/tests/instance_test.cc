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
#include <random>
#include <stdexcept>

#include "gtest/gtest.h"
#include "test_support.h"

namespace gadmm {
namespace {

using testing::Rng;

TEST(GenerateInstanceTest, MuForNHundredIsFifty) {
  EXPECT_DOUBLE_EQ(bench_mu(100), 50.0);
  EXPECT_DOUBLE_EQ(generate_instance(3, 100, 0.0, 0).mu, 50.0);
}

TEST(GenerateInstanceTest, DIsCMinusFive) {
  const BenchInstance inst = generate_instance(15, 9, 1.0, 4);
  EXPECT_EQ(inst.d, (inst.c.array() - 5.0).matrix());
}

TEST(GenerateInstanceTest, DeterministicForFixedSeed) {
  const BenchInstance a = generate_instance(20, 12, 3.0, 42);
  const BenchInstance b = generate_instance(20, 12, 3.0, 42);
  EXPECT_EQ(a.Q, b.Q);
  EXPECT_EQ(a.H, b.H);
  EXPECT_EQ(a.b, b.b);
  EXPECT_EQ(a.c, b.c);
  EXPECT_EQ(a.D, b.D);
  const BenchInstance other = generate_instance(20, 12, 3.0, 43);
  EXPECT_NE(a.H, other.H);
}

TEST(GenerateInstanceTest, InvariantsHoldForSeedsZeroToNine) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const BenchInstance inst = generate_instance(25, 15, 2.0 * bench_mu(15), seed);
    ASSERT_EQ(inst.Q.rows(), 15);
    ASSERT_EQ(inst.H.rows(), 25);
    EXPECT_EQ(inst.Q, inst.Q.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> eig(inst.Q);
    EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-10 * inst.Q.norm()) << "seed " << seed;
    const Matrix dh = inst.D.asDiagonal() * inst.H;
    for (Index i = 0; i < inst.m; ++i) {
      EXPECT_NEAR(dh.row(i).norm(), 1.0, 1e-12) << "seed " << seed << " row " << i;
    }
    EXPECT_TRUE((inst.d.array() <= inst.c.array()).all());
    EXPECT_TRUE((inst.D.array() > 0.0).all());
    EXPECT_TRUE(inst.zero_rows.empty());
  }
}

TEST(GenerateInstanceTest, FeasibleByConstruction) {
  // Replays the draw order G, H, b, e, y0 to recover the planted point.
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const BenchInstance inst = generate_instance(40, 10, 0.0, seed);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (Index i = 0; i < 10 * 10 + 40 * 10 + 10; ++i) normal(rng);
    Vector e(40), y0(10);
    for (Index i = 0; i < 40; ++i) e[i] = normal(rng);
    for (Index i = 0; i < 10; ++i) y0[i] = normal(rng);
    const Vector x = inst.c - inst.H * (y0 / std::sqrt(10.0));
    EXPECT_LE((x - e.cwiseAbs()).norm(), 1e-12 * (1.0 + x.norm()));
    EXPECT_TRUE((x.array() >= 0.0).all());
  }
}

TEST(GenerateInstanceTest, RejectsEmptyDimensions) {
  EXPECT_THROW(generate_instance(0, 3, 0.0, 0), std::invalid_argument);
  EXPECT_THROW(generate_instance(3, 0, 0.0, 0), std::invalid_argument);
}

TEST(AssembleInstanceTest, ZeroRowGetsUnitScale) {
  Matrix h(3, 2);
  h << 3.0, 4.0, 0.0, 0.0, 1.0, 0.0;
  const BenchInstance inst =
      assemble_instance(Matrix::Identity(2, 2), h, Vector::Zero(2), Vector::Ones(3), 0.0);
  ASSERT_EQ(inst.zero_rows.size(), 1u);
  EXPECT_EQ(inst.zero_rows[0], 1);
  EXPECT_DOUBLE_EQ(inst.D[0], 0.2);
  EXPECT_DOUBLE_EQ(inst.D[1], 1.0);
  EXPECT_DOUBLE_EQ(inst.D[2], 1.0);
  EXPECT_THROW(assemble_instance(Matrix::Identity(2, 2), h, Vector::Zero(2), Vector::Ones(2), 0.0),
               std::invalid_argument);
  EXPECT_THROW(assemble_instance(Matrix::Identity(2, 2), h, Vector::Zero(2), Vector::Ones(3), -1.0),
               std::invalid_argument);
}

TEST(ToProblemSpecTest, NoPenaltyKeepsQAsUpperCurvature) {
  const BenchInstance inst = generate_instance(20, 10, 0.0, 3);
  const ProblemSpec spec = to_problem_spec(inst, 0.8);
  EXPECT_EQ(spec.h1.upper().to_dense(), inst.Q);
  EXPECT_EQ(spec.h1.lower().to_dense(), inst.Q);
}

TEST(ToProblemSpecTest, YMetricIsExactlyScaledIdentity) {
  for (const double chi : {0.0, 2.0 * bench_mu(10)}) {
    const BenchInstance inst = generate_instance(20, 10, chi, 3);
    const ProblemSpec spec = to_problem_spec(inst, 0.8);
    const SelfAdjointOp h = y_metric(spec, 0.8);
    ASSERT_EQ(h.kind(), SelfAdjointOp::Kind::kScaledIdentity);
    const Matrix k = inst.Q + chi * (inst.D.asDiagonal() * inst.H).transpose() *
                                  (inst.D.asDiagonal() * inst.H) +
                     0.8 * inst.H.transpose() * inst.H;
    Eigen::SelfAdjointEigenSolver<Matrix> eig(k);
    EXPECT_NEAR(h.identity_scale(), eig.eigenvalues().maxCoeff(),
                1e-8 * eig.eigenvalues().maxCoeff());
    const SelfAdjointOp f = x_metric(spec, 0.8);
    EXPECT_TRUE(f.is_diagonal());
    EXPECT_TRUE((f.diagonal_entries().array() == 0.8).all());
  }
}

TEST(ToProblemSpecTest, ProximalTermsSemidefiniteOnFiveSeeds) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const BenchInstance inst = generate_instance(18, 12, 2.0 * bench_mu(12), seed);
    const ProblemSpec spec = to_problem_spec(inst, 0.8);
    Rng rng(seed);
    const double lambda = y_metric(spec, 0.8).identity_scale();
    for (int s = 0; s < 50; ++s) {
      const Vector v = rng.vector(12);
      EXPECT_GE(spec.T.quadform(v), -1e-8 * lambda * v.squaredNorm());
      const Vector u = rng.vector(18);
      EXPECT_GT(x_metric(spec, 0.8).quadform(u), 0.0);
    }
    EXPECT_NO_THROW(spec.validate());
  }
}

TEST(ToProblemSpecTest, DenseEigenMethodAgreesWithPowerIteration) {
  const BenchInstance inst = generate_instance(30, 20, 0.0, 1);
  const double power = y_metric(to_problem_spec(inst, 0.8), 0.8).identity_scale();
  const double dense =
      y_metric(to_problem_spec(inst, 0.8, LambdaMethod::kDenseEigen), 0.8).identity_scale();
  EXPECT_NEAR(power, dense, 1e-8 * dense);
  EXPECT_THROW(to_problem_spec(inst, 0.0), std::invalid_argument);
}

}  // namespace
}  // namespace gadmm
