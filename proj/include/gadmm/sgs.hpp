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

// Symmetric Gauss-Seidel (sGS) decomposition of a block quadratic.
//
// For Q = U + Sigma + U^T with Sigma the block diagonal and U the strictly
// block-upper part, one backward sweep (blocks s..2) followed by one forward
// sweep (blocks 1..s) minimizes
//
//   g(x_1) + 1/2 <x, Q x> + <l, x> + 1/2 ||x - anchor||^2_S,  S = U Sigma^{-1} U^T,
//
// exactly, where g acts on the first block only.

#include <memory>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "gadmm/linops.hpp"
#include "gadmm/prox.hpp"

namespace gadmm {

/// A symmetric PSD matrix partitioned into consecutive diagonal blocks.
///
/// Diagonal blocks are factorized on construction. A block whose smallest
/// eigenvalue is not above 1e-12 * ||Sigma_i|| is flagged singular; the sGS
/// operations then fail with a BlockSolveError naming it.
class BlockQuadratic {
 public:
  BlockQuadratic(Matrix q, std::vector<Index> block_dims)
      : q_(std::make_shared<const Matrix>(std::move(q))), dims_(std::move(block_dims)) {
    if (q_->rows() != q_->cols()) throw std::invalid_argument("BlockQuadratic: matrix not square");
    if (dims_.empty()) throw std::invalid_argument("BlockQuadratic: no blocks");
    offsets_.reserve(dims_.size() + 1);
    offsets_.push_back(0);
    for (const Index d : dims_) {
      if (d <= 0) throw std::invalid_argument("BlockQuadratic: block sizes must be positive");
      offsets_.push_back(offsets_.back() + d);
    }
    if (offsets_.back() != q_->rows()) {
      throw std::invalid_argument("BlockQuadratic: block sizes do not sum to the dimension");
    }
    const double scale = 1.0 + q_->cwiseAbs().maxCoeff();
    if ((*q_ - q_->transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
      throw std::invalid_argument("BlockQuadratic: matrix not symmetric");
    }

    factors_.reserve(dims_.size());
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      const Matrix block = diagonal_block(static_cast<Index>(i));
      Eigen::SelfAdjointEigenSolver<Matrix> eig(block, Eigen::EigenvaluesOnly);
      const double norm = eig.eigenvalues().cwiseAbs().maxCoeff();
      const bool ok = eig.eigenvalues().minCoeff() > 1e-12 * norm && norm > 0.0;
      factors_.emplace_back(block);
      singular_.push_back(!ok || factors_.back().info() != Eigen::Success);
    }
  }

  Index dim() const { return q_->rows(); }
  Index num_blocks() const { return static_cast<Index>(dims_.size()); }
  const std::vector<Index>& block_dims() const { return dims_; }
  Index offset(Index i) const { return offsets_[static_cast<std::size_t>(i)]; }
  Index block_dim(Index i) const { return dims_[static_cast<std::size_t>(i)]; }
  const Matrix& matrix() const { return *q_; }

  Matrix diagonal_block(Index i) const {
    return q_->block(offset(i), offset(i), block_dim(i), block_dim(i));
  }

  bool is_singular(Index i) const { return singular_[static_cast<std::size_t>(i)]; }

  /// Solves Sigma_i u = rhs.
  Vector solve_block(Index i, const Vector& rhs) const {
    if (is_singular(i)) throw BlockSolveError(i, "singular diagonal block");
    Vector u = factors_[static_cast<std::size_t>(i)].solve(rhs);
    if (!u.allFinite()) throw BlockSolveError(i, "block solve produced non-finite values");
    return u;
  }

  Matrix solve_block(Index i, const Matrix& rhs) const {
    if (is_singular(i)) throw BlockSolveError(i, "singular diagonal block");
    Matrix u = factors_[static_cast<std::size_t>(i)].solve(rhs);
    if (!u.allFinite()) throw BlockSolveError(i, "block solve produced non-finite values");
    return u;
  }

  /// Strictly block-upper part U as a dense matrix.
  Matrix strict_upper() const {
    Matrix u = Matrix::Zero(dim(), dim());
    for (Index i = 0; i < num_blocks(); ++i) {
      const Index tail = dim() - offset(i + 1);
      if (tail > 0) {
        u.block(offset(i), offset(i + 1), block_dim(i), tail) =
            q_->block(offset(i), offset(i + 1), block_dim(i), tail);
      }
    }
    return u;
  }

 private:
  std::shared_ptr<const Matrix> q_;
  std::vector<Index> dims_;
  std::vector<Index> offsets_;
  std::vector<Eigen::LLT<Matrix>> factors_;
  std::vector<bool> singular_;
};

/// S = U Sigma^{-1} U^T for the block partition of q. Zero for a single block.
inline SelfAdjointOp sgs_operator(const BlockQuadratic& q) {
  for (Index i = 0; i < q.num_blocks(); ++i) {
    if (q.is_singular(i)) throw BlockSolveError(i, "singular diagonal block");
  }
  if (q.num_blocks() == 1) return SelfAdjointOp::zero(q.dim());

  const Matrix u = q.strict_upper();
  // Sigma^{-1} U^T, one block row at a time.
  Matrix inv_ut(q.dim(), q.dim());
  const Matrix ut = u.transpose();
  for (Index i = 0; i < q.num_blocks(); ++i) {
    inv_ut.middleRows(q.offset(i), q.block_dim(i)) =
        q.solve_block(i, Matrix(ut.middleRows(q.offset(i), q.block_dim(i))));
  }
  Matrix s = u * inv_ut;
  s = 0.5 * (s + s.transpose()).eval();
  return SelfAdjointOp::dense(std::move(s));
}

/// Minimizes g(x_1) + 1/2 <x, Qx> + <linear_term, x> + 1/2 ||x - anchor||^2_S
/// with S = sgs_operator(q), by a backward sweep over blocks s..2 followed by
/// a forward sweep over blocks 1..s.
///
/// With `prox_first` null the first block is a plain linear solve and the
/// result equals the solution of (Q + S) x = -linear_term + S anchor. With a
/// prox oracle, the first diagonal block must be diagonal so the block
/// subproblem is a weighted prox.
inline Vector sgs_sweep(const BlockQuadratic& q, const ProxOracle* prox_first,
                        const Vector& linear_term, const Vector& anchor) {
  if (linear_term.size() != q.dim() || anchor.size() != q.dim()) {
    throw std::invalid_argument("sgs_sweep: dimension mismatch");
  }
  const Index s = q.num_blocks();
  const Matrix& m = q.matrix();
  const Vector r = -linear_term;

  // Contribution of blocks j != i to row block i: sum_j Q_ij w_j.
  auto coupling = [&](Index i, const Vector& lower, const Vector& upper) {
    const Index off = q.offset(i);
    const Index len = q.block_dim(i);
    Vector acc = Vector::Zero(len);
    if (off > 0) acc += m.block(off, 0, len, off) * lower.head(off);
    const Index tail = q.dim() - q.offset(i + 1);
    if (tail > 0) acc += m.block(off, q.offset(i + 1), len, tail) * upper.tail(tail);
    return acc;
  };

  Vector backward = anchor;
  for (Index i = s - 1; i >= 1; --i) {
    const Vector rhs = r.segment(q.offset(i), q.block_dim(i)) - coupling(i, anchor, backward);
    backward.segment(q.offset(i), q.block_dim(i)) = q.solve_block(i, rhs);
  }

  Vector x = backward;
  for (Index i = 0; i < s; ++i) {
    const Vector rhs = r.segment(q.offset(i), q.block_dim(i)) - coupling(i, x, backward);
    if (i == 0 && prox_first != nullptr && !prox_first->is_zero()) {
      if (q.is_singular(0)) throw BlockSolveError(0, "singular diagonal block");
      const Matrix block = q.diagonal_block(0);
      const Vector d = block.diagonal();
      if (!block.isDiagonal(0.0)) {
        throw BlockSolveError(0, "prox on the first block requires a diagonal block");
      }
      x.head(q.block_dim(0)) = prox_first->prox(rhs.cwiseQuotient(d), d);
    } else {
      x.segment(q.offset(i), q.block_dim(i)) = q.solve_block(i, rhs);
    }
  }
  return x;
}

}  // namespace gadmm
