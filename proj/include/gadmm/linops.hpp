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
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "gadmm/errors.hpp"

namespace gadmm {

/// Linear operator between two Euclidean spaces, v -> Mv with adjoint w -> M^T w.
///
/// Stored either as an identity (no storage) or as a dense matrix. The
/// matrix is shared and immutable, so copies are cheap and thread-safe.
class LinearMap {
 public:
  enum class Kind { kIdentity, kDense };

  static LinearMap identity(Index dim) {
    if (dim < 0) throw std::invalid_argument("LinearMap: negative dimension");
    return LinearMap(Kind::kIdentity, dim, dim, nullptr);
  }

  static LinearMap dense(Matrix m) {
    const Index rows = m.rows();
    const Index cols = m.cols();
    return LinearMap(Kind::kDense, rows, cols,
                     std::make_shared<const Matrix>(std::move(m)));
  }

  Kind kind() const { return kind_; }
  Index rows() const { return rows_; }
  Index cols() const { return cols_; }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("LinearMap::apply: dimension mismatch");
    if (kind_ == Kind::kIdentity) return v;
    return (*matrix_) * v;
  }

  Vector adjoint_apply(const Vector& w) const {
    if (w.size() != rows_) {
      throw std::invalid_argument("LinearMap::adjoint_apply: dimension mismatch");
    }
    if (kind_ == Kind::kIdentity) return w;
    return matrix_->transpose() * w;
  }

  Matrix to_dense() const {
    if (kind_ == Kind::kIdentity) return Matrix::Identity(rows_, cols_);
    return *matrix_;
  }

 private:
  LinearMap(Kind kind, Index rows, Index cols, std::shared_ptr<const Matrix> m)
      : kind_(kind), rows_(rows), cols_(cols), matrix_(std::move(m)) {}

  Kind kind_;
  Index rows_;
  Index cols_;
  std::shared_ptr<const Matrix> matrix_;
};

/// Self-adjoint positive semidefinite operator G on a Euclidean space.
///
/// The representation keeps track of structure so that callers can detect
/// when a metric is a multiple of the identity or diagonal. The
/// shifted-complement kind stores `shift * I - K` symbolically; adding the
/// very same K back (bitwise equal) collapses to `shift * I` exactly.
class SelfAdjointOp {
 public:
  enum class Kind { kZero, kScaledIdentity, kDiagonal, kDense, kShiftedComplement };

  static SelfAdjointOp zero(Index dim) { return SelfAdjointOp(Kind::kZero, dim); }

  static SelfAdjointOp identity(Index dim, double scale = 1.0) {
    if (scale == 0.0) return zero(dim);
    SelfAdjointOp op(Kind::kScaledIdentity, dim);
    op.scale_ = scale;
    return op;
  }

  static SelfAdjointOp diagonal(Vector d) {
    SelfAdjointOp op(Kind::kDiagonal, d.size());
    op.diagonal_ = std::make_shared<const Vector>(std::move(d));
    return op;
  }

  /// Wraps a dense matrix; the matrix must be symmetric to 1e-12 relative.
  static SelfAdjointOp dense(Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("SelfAdjointOp: matrix not square");
    const double scale = 1.0 + m.cwiseAbs().maxCoeff();
    if (m.size() > 0 && (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
      throw std::invalid_argument("SelfAdjointOp: matrix not symmetric");
    }
    SelfAdjointOp op(Kind::kDense, m.rows());
    op.matrix_ = std::make_shared<const Matrix>(std::move(m));
    return op;
  }

  /// shift * I - base, with base kept by reference to its storage.
  static SelfAdjointOp shifted_complement(double shift, const SelfAdjointOp& base) {
    SelfAdjointOp op(Kind::kShiftedComplement, base.dim());
    op.scale_ = shift;
    op.matrix_ = base.kind_ == Kind::kDense ? base.matrix_
                                            : std::make_shared<const Matrix>(base.to_dense());
    return op;
  }

  Kind kind() const { return kind_; }
  Index dim() const { return dim_; }

  /// True for the zero, scaled-identity, and diagonal kinds.
  bool is_diagonal() const {
    return kind_ == Kind::kZero || kind_ == Kind::kScaledIdentity || kind_ == Kind::kDiagonal;
  }

  /// Diagonal entries of the matrix; the full operator when is_diagonal() holds.
  Vector diagonal_entries() const {
    switch (kind_) {
      case Kind::kZero: return Vector::Zero(dim_);
      case Kind::kScaledIdentity: return Vector::Constant(dim_, scale_);
      case Kind::kDiagonal: return *diagonal_;
      case Kind::kDense: return matrix_->diagonal();
      case Kind::kShiftedComplement:
        return Vector::Constant(dim_, scale_) - matrix_->diagonal();
    }
    return {};
  }

  /// Multiplier of the identity for kScaledIdentity, 0 for kZero.
  double identity_scale() const { return kind_ == Kind::kScaledIdentity ? scale_ : 0.0; }

  Vector apply(const Vector& v) const {
    if (v.size() != dim_) throw std::invalid_argument("SelfAdjointOp::apply: dimension mismatch");
    switch (kind_) {
      case Kind::kZero: return Vector::Zero(dim_);
      case Kind::kScaledIdentity: return scale_ * v;
      case Kind::kDiagonal: return diagonal_->cwiseProduct(v);
      case Kind::kDense: return (*matrix_) * v;
      case Kind::kShiftedComplement: return scale_ * v - (*matrix_) * v;
    }
    return {};
  }

  double quadform(const Vector& v) const {
    if (kind_ == Kind::kZero) return 0.0;
    return v.dot(apply(v));
  }

  /// sqrt(<v, Gv>); tiny negative round-off is clamped to zero.
  double seminorm(const Vector& v) const { return std::sqrt(std::max(quadform(v), 0.0)); }

  Matrix to_dense() const {
    switch (kind_) {
      case Kind::kZero: return Matrix::Zero(dim_, dim_);
      case Kind::kScaledIdentity: return scale_ * Matrix::Identity(dim_, dim_);
      case Kind::kDiagonal: return diagonal_->asDiagonal();
      case Kind::kDense: return *matrix_;
      case Kind::kShiftedComplement:
        return scale_ * Matrix::Identity(dim_, dim_) - *matrix_;
    }
    return {};
  }

  friend SelfAdjointOp operator*(double alpha, const SelfAdjointOp& op) {
    if (alpha == 0.0) return zero(op.dim_);
    switch (op.kind_) {
      case Kind::kZero: return op;
      case Kind::kScaledIdentity: return identity(op.dim_, alpha * op.scale_);
      case Kind::kDiagonal: return diagonal(alpha * (*op.diagonal_));
      case Kind::kDense:
      case Kind::kShiftedComplement: return dense(alpha * op.to_dense());
    }
    return op;
  }

  friend SelfAdjointOp operator+(const SelfAdjointOp& a, const SelfAdjointOp& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("SelfAdjointOp: dimension mismatch in sum");
    if (a.kind_ == Kind::kZero) return b;
    if (b.kind_ == Kind::kZero) return a;
    if (a.kind_ == Kind::kScaledIdentity && b.kind_ == Kind::kScaledIdentity) {
      return identity(a.dim_, a.scale_ + b.scale_);
    }
    if (a.is_diagonal() && b.is_diagonal()) {
      return diagonal(a.diagonal_entries() + b.diagonal_entries());
    }
    if (const auto collapsed = telescope(a, b)) return *collapsed;
    if (const auto collapsed = telescope(b, a)) return *collapsed;
    return dense(a.to_dense() + b.to_dense());
  }

 private:
  SelfAdjointOp(Kind kind, Index dim) : kind_(kind), dim_(dim) {
    if (dim < 0) throw std::invalid_argument("SelfAdjointOp: negative dimension");
  }

  // (shift*I - K) + K == shift*I when both K are the same matrix bit for bit.
  static std::optional<SelfAdjointOp> telescope(const SelfAdjointOp& complement,
                                                const SelfAdjointOp& other) {
    if (complement.kind_ != Kind::kShiftedComplement || other.kind_ != Kind::kDense) {
      return std::nullopt;
    }
    if (complement.matrix_ != other.matrix_ && *complement.matrix_ != *other.matrix_) {
      return std::nullopt;
    }
    return identity(complement.dim_, complement.scale_);
  }

  Kind kind_;
  Index dim_;
  double scale_ = 0.0;
  std::shared_ptr<const Vector> diagonal_;
  std::shared_ptr<const Matrix> matrix_;
};

/// M^T M for the map M, i.e. the operator A A* on the domain of M.
inline SelfAdjointOp gram(const LinearMap& map) {
  if (map.kind() == LinearMap::Kind::kIdentity) return SelfAdjointOp::identity(map.cols());
  const Matrix m = map.to_dense();
  Matrix g = m.transpose() * m;
  // Symmetrize to remove round-off asymmetry from the product.
  g = 0.5 * (g + g.transpose()).eval();
  return SelfAdjointOp::dense(std::move(g));
}

}  // namespace gadmm
