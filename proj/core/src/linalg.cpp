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

#include "slqr/linalg.hpp"

#include <cmath>
#include <limits>

#include "slqr/errors.hpp"

namespace slqr {

SymMatrix::SymMatrix(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("symmetric matrix must be square, got " +
                         shape_string(m));
  }
  if (!all_finite(m)) {
    throw InvalidInputError("symmetric matrix has non-finite entries");
  }
  const Matrix skew = 0.5 * (m - m.transpose());
  asymmetry_ = skew.norm();
  if (asymmetry_ > kAsymmetryTolerance * m.norm()) {
    throw DimensionError("matrix is not symmetric: skew norm " +
                         std::to_string(asymmetry_));
  }
  m_ = 0.5 * (m + m.transpose());
}

SymMatrix SymMatrix::zero(Eigen::Index n) { return SymMatrix(Matrix::Zero(n, n)); }

SymMatrix SymMatrix::identity(Eigen::Index n) {
  return SymMatrix(Matrix::Identity(n, n));
}

SymMatrix SymMatrix::symmetrized(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("symmetric matrix must be square, got " +
                         shape_string(m));
  }
  SymMatrix s;
  s.asymmetry_ = (0.5 * (m - m.transpose())).norm();
  s.m_ = 0.5 * (m + m.transpose());
  return s;
}

Vector SymMatrix::eigenvalues() const {
  if (m_.size() == 0) return Vector();
  Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw EigenSolverError("symmetric eigen-solver failed");
  }
  return es.eigenvalues();
}

double SymMatrix::min_eigenvalue() const {
  const Vector ev = eigenvalues();
  return ev.size() == 0 ? 0.0 : ev.minCoeff();
}

double SymMatrix::max_eigenvalue() const {
  const Vector ev = eigenvalues();
  return ev.size() == 0 ? 0.0 : ev.maxCoeff();
}

bool SymMatrix::is_psd(double tol) const {
  return min_eigenvalue() >= -tol * std::max(1.0, norm());
}

bool SymMatrix::is_pd(double tol) const { return min_eigenvalue() > tol; }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector vec(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols) {
    throw DimensionError("unvec: vector of length " + std::to_string(v.size()) +
                         " cannot be reshaped to " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

Matrix duplication_matrix(Eigen::Index d) {
  const Eigen::Index half = d * (d + 1) / 2;
  Matrix dup = Matrix::Zero(d * d, half);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = j; i < d; ++i, ++k) {
      dup(i + j * d, k) = 1.0;
      dup(j + i * d, k) = 1.0;
    }
  }
  return dup;
}

Vector vech(const Matrix& m) {
  const Eigen::Index d = m.rows();
  Vector v(d * (d + 1) / 2);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = j; i < d; ++i) v(k++) = m(i, j);
  }
  return v;
}

Matrix unvech(const Vector& v, Eigen::Index d) {
  if (v.size() != d * (d + 1) / 2) {
    throw DimensionError("unvech: length mismatch");
  }
  Matrix m(d, d);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = j; i < d; ++i, ++k) {
      m(i, j) = v(k);
      m(j, i) = v(k);
    }
  }
  return m;
}

Matrix stack_identity_over(const Matrix& f) {
  const Eigen::Index n = f.cols();
  Matrix out(n + f.rows(), n);
  out.topRows(n).setIdentity();
  out.bottomRows(f.rows()) = f;
  return out;
}

bool all_finite(const Matrix& m) { return m.allFinite(); }

double condition_number(const Matrix& m) {
  if (m.size() == 0) return 1.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const Vector& s = svd.singularValues();
  const double smallest = s(s.size() - 1);
  if (smallest == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smallest;
}

std::string shape_string(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace slqr
