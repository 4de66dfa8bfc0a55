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
#include <stdexcept>

#include "gtest/gtest.h"
#include "test_support.h"

namespace gadmm {
namespace {

using testing::Rng;

TEST(LinearMapTest, AdjointConsistencyOnRandomSamples) {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Index rows = rng.integer(1, 12);
    const Index cols = rng.integer(1, 12);
    const LinearMap map = LinearMap::dense(rng.matrix(rows, cols));
    const Vector v = rng.vector(cols);
    const Vector w = rng.vector(rows);
    const double lhs = map.apply(v).dot(w);
    const double rhs = v.dot(map.adjoint_apply(w));
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * (1.0 + std::abs(lhs)));
  }
}

TEST(LinearMapTest, IdentityActsTrivially) {
  const LinearMap id = LinearMap::identity(4);
  const Vector v = Vector::LinSpaced(4, -1.0, 2.0);
  EXPECT_EQ(id.apply(v), v);
  EXPECT_EQ(id.adjoint_apply(v), v);
  EXPECT_EQ(id.to_dense(), Matrix::Identity(4, 4));
}

TEST(LinearMapTest, RejectsWrongDimensions) {
  const LinearMap map = LinearMap::dense(Matrix::Ones(2, 3));
  EXPECT_THROW(map.apply(Vector::Ones(2)), std::invalid_argument);
  EXPECT_THROW(map.adjoint_apply(Vector::Ones(3)), std::invalid_argument);
}

TEST(SelfAdjointOpTest, SymmetryAndSemidefinitenessOnSamples) {
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = rng.integer(1, 10);
    const SelfAdjointOp g = SelfAdjointOp::dense(rng.psd(n, rng.integer(0, n)));
    const Vector u = rng.vector(n);
    const Vector v = rng.vector(n);
    const double a = g.apply(u).dot(v);
    const double b = u.dot(g.apply(v));
    EXPECT_LE(std::abs(a - b), 1e-12 * (1.0 + std::abs(a)));
    EXPECT_GE(g.quadform(v), -1e-12 * v.squaredNorm());
    EXPECT_NEAR(g.seminorm(v), std::sqrt(std::max(g.quadform(v), 0.0)), 1e-14);
  }
}

TEST(SelfAdjointOpTest, RejectsAsymmetricMatrix) {
  Matrix m(2, 2);
  m << 1.0, 2.0, 0.0, 1.0;
  EXPECT_THROW(SelfAdjointOp::dense(m), std::invalid_argument);
}

TEST(SelfAdjointOpTest, SumsKeepDiagonalStructure) {
  const SelfAdjointOp a = SelfAdjointOp::identity(3, 2.0);
  const SelfAdjointOp b = SelfAdjointOp::identity(3, 0.5);
  const SelfAdjointOp sum = a + b;
  EXPECT_EQ(sum.kind(), SelfAdjointOp::Kind::kScaledIdentity);
  EXPECT_DOUBLE_EQ(sum.identity_scale(), 2.5);

  const SelfAdjointOp d = SelfAdjointOp::diagonal(Vector::LinSpaced(3, 1.0, 3.0));
  const SelfAdjointOp mixed = a + d;
  EXPECT_TRUE(mixed.is_diagonal());
  EXPECT_EQ(mixed.diagonal_entries(), Vector::LinSpaced(3, 3.0, 5.0));
  EXPECT_EQ((SelfAdjointOp::zero(3) + d).diagonal_entries(), d.diagonal_entries());
}

TEST(SelfAdjointOpTest, ShiftedComplementTelescopesToExactIdentity) {
  Rng rng(8);
  const SelfAdjointOp k = SelfAdjointOp::dense(rng.psd(6, 6));
  const SelfAdjointOp t = SelfAdjointOp::shifted_complement(42.0, k);
  const SelfAdjointOp sum = k + t;
  EXPECT_EQ(sum.kind(), SelfAdjointOp::Kind::kScaledIdentity);
  EXPECT_EQ(sum.identity_scale(), 42.0);

  // A separately built but bitwise-equal matrix collapses as well.
  const SelfAdjointOp copy = SelfAdjointOp::dense(k.to_dense());
  EXPECT_EQ((t + copy).kind(), SelfAdjointOp::Kind::kScaledIdentity);

  // A different matrix does not.
  const SelfAdjointOp other = SelfAdjointOp::dense(rng.psd(6, 6));
  EXPECT_EQ((t + other).kind(), SelfAdjointOp::Kind::kDense);
  const Vector v = rng.vector(6);
  EXPECT_LE((t.apply(v) - (42.0 * v - k.apply(v))).norm(), 1e-12 * (1.0 + v.norm()));
}

TEST(SelfAdjointOpTest, GramOfIdentityMapIsIdentity) {
  const SelfAdjointOp g = gram(LinearMap::identity(5));
  EXPECT_EQ(g.kind(), SelfAdjointOp::Kind::kScaledIdentity);
  EXPECT_EQ(g.identity_scale(), 1.0);
}

TEST(EstimateLambdaMaxTest, IdentityOnDimFive) {
  const LambdaEstimate est = estimate_lambda_max(SelfAdjointOp::identity(5));
  EXPECT_TRUE(est.converged);
  EXPECT_NEAR(est.value, 1.0, 1e-8);
}

TEST(EstimateLambdaMaxTest, DiagonalOneTwoThree) {
  Vector d(3);
  d << 1.0, 2.0, 3.0;
  EXPECT_NEAR(estimate_lambda_max(SelfAdjointOp::diagonal(d)).value, 3.0, 1e-8);

  Matrix dense = Matrix::Zero(3, 3);
  dense.diagonal() = d;
  const LambdaEstimate est = estimate_lambda_max(SelfAdjointOp::dense(dense));
  EXPECT_TRUE(est.converged);
  EXPECT_NEAR(est.value, 3.0, 1e-8);
}

TEST(EstimateLambdaMaxTest, MatchesDenseEigensolverOnSeedSeven) {
  Rng rng(7);
  const Matrix m = rng.psd(8, 8);
  const SelfAdjointOp op = SelfAdjointOp::dense(m);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(m);
  const double exact = eig.eigenvalues().maxCoeff();
  const LambdaEstimate est = estimate_lambda_max(op);
  EXPECT_TRUE(est.converged);
  EXPECT_LE(std::abs(est.value - exact), 1e-8 * exact);
  EXPECT_GE(est.value, exact * (1.0 - 1e-10));
}

TEST(EstimateLambdaMaxTest, ShiftedOperatorIsSemidefinite) {
  Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const SelfAdjointOp op = SelfAdjointOp::dense(rng.psd(15, 15));
    const double lambda = estimate_lambda_max(op).value;
    const SelfAdjointOp t = SelfAdjointOp::shifted_complement(lambda, op);
    for (int s = 0; s < 20; ++s) {
      const Vector v = rng.vector(15);
      EXPECT_GE(t.quadform(v), -1e-8 * v.squaredNorm());
    }
  }
}

TEST(EstimateLambdaMaxTest, ReportsNonConvergenceAndBadInput) {
  Rng rng(3);
  const SelfAdjointOp op = SelfAdjointOp::dense(rng.psd(20, 20));
  const LambdaEstimate est = estimate_lambda_max(op, 1e-14, 2);
  EXPECT_FALSE(est.converged);
  EXPECT_EQ(est.iterations, 2);
  EXPECT_GT(est.value, 0.0);
  EXPECT_THROW(estimate_lambda_max(SelfAdjointOp::zero(0)), std::invalid_argument);
  EXPECT_THROW(dense_lambda_max(SelfAdjointOp::zero(0)), std::invalid_argument);
}

}  // namespace
}  // namespace gadmm
