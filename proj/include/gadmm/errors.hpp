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

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace gadmm {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Raised when a diagonal block of a BlockQuadratic cannot be factorized, or
// when a block-level solve inside a symmetric Gauss-Seidel sweep fails.
class BlockSolveError : public std::runtime_error {
 public:
  BlockSolveError(Index block, const std::string& what)
      : std::runtime_error("block " + std::to_string(block) + ": " + what),
        block_(block) {}

  Index block() const { return block_; }

 private:
  Index block_;
};

// Raised when a subproblem has no exact solver for its metric.
class SubproblemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an iterative spectral estimate fails to reach its tolerance
// and the caller requires a certified bound.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gadmm
