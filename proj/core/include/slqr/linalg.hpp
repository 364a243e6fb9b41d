// Copyright 2026 The slqr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>

#include <span>
#include <string>
#include <vector>

namespace slqr {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Real symmetric matrix.
///
/// Construction symmetrizes the input as (M + M')/2 and records the Frobenius
/// norm of the discarded skew part. Inputs whose skew part exceeds
/// `kAsymmetryTolerance * ||M||` are rejected with DimensionError, so every
/// instance is exactly symmetric and safe to hand to symmetric eigen-solvers.
class SymMatrix {
 public:
  static constexpr double kAsymmetryTolerance = 1e-8;

  SymMatrix() = default;
  explicit SymMatrix(const Matrix& m);

  static SymMatrix zero(Eigen::Index n);
  static SymMatrix identity(Eigen::Index n);

  /// Symmetrizes without the asymmetry check. Reserved for matrices that are
  /// symmetric by construction up to rounding (sums of outer products).
  static SymMatrix symmetrized(const Matrix& m);

  const Matrix& matrix() const noexcept { return m_; }
  Eigen::Index dim() const noexcept { return m_.rows(); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  /// Frobenius norm of the skew part removed at construction.
  double asymmetry() const noexcept { return asymmetry_; }
  double norm() const { return m_.norm(); }

  Vector eigenvalues() const;
  double min_eigenvalue() const;
  double max_eigenvalue() const;

  /// min eigenvalue >= -tol * max(1, ||M||)
  bool is_psd(double tol = 1e-10) const;
  /// min eigenvalue > tol
  bool is_pd(double tol = 0.0) const;

  Matrix block(Eigen::Index row, Eigen::Index col, Eigen::Index rows,
               Eigen::Index cols) const {
    return m_.block(row, col, rows, cols);
  }

 private:
  Matrix m_;
  double asymmetry_ = 0.0;
};

/// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Column-stacking vectorization; vec(A X B) = (B' (x) A) vec(X).
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols);

/// Duplication matrix D_d with vec(X) = D_d vech(X) for symmetric d x d X.
/// vech stacks the lower triangle column by column.
Matrix duplication_matrix(Eigen::Index d);
Vector vech(const Matrix& m);
Matrix unvech(const Vector& v, Eigen::Index d);

/// [I_n; F] for an m x n gain F.
Matrix stack_identity_over(const Matrix& f);

bool all_finite(const Matrix& m);

/// Ratio of extreme singular values; +inf for a singular matrix.
double condition_number(const Matrix& m);

std::string shape_string(const Matrix& m);

}  // namespace slqr
