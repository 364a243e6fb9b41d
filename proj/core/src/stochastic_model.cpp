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

#include "slqr/stochastic_model.hpp"

#include <sstream>

#include "slqr/errors.hpp"

namespace slqr {

FeedbackGain::FeedbackGain(Matrix f) : f_(std::move(f)) {
  if (!all_finite(f_)) {
    throw InvalidInputError("feedback gain has non-finite entries");
  }
}

FeedbackGain FeedbackGain::zero(Eigen::Index m, Eigen::Index n) {
  return FeedbackGain(Matrix::Zero(m, n));
}

LambdaBlock::LambdaBlock(const SymMatrix& q, const SymMatrix& r)
    : n_(q.dim()), m_(r.dim()) {
  Matrix lam = Matrix::Zero(n_ + m_, n_ + m_);
  lam.topLeftCorner(n_, n_) = q.matrix();
  lam.bottomRightCorner(m_, m_) = r.matrix();
  value_ = SymMatrix(lam);
}

SymMatrix LambdaBlock::Q() const {
  return SymMatrix(value_.matrix().topLeftCorner(n_, n_));
}

SymMatrix LambdaBlock::R() const {
  return SymMatrix(value_.matrix().bottomRightCorner(m_, m_));
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i) os << "; ";
    os << issues[i];
  }
  return os.str();
}

namespace {

void check_shape(std::vector<std::string>& issues, const Matrix& m,
                 Eigen::Index rows, Eigen::Index cols, const std::string& what) {
  if (m.rows() != rows || m.cols() != cols) {
    issues.push_back(what + " has shape " + shape_string(m) + ", expected " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  } else if (!all_finite(m)) {
    issues.push_back(what + " has non-finite entries");
  }
}

}  // namespace

ValidationReport validate_system(const StochasticLinearSystem& sys,
                                 const CostWeights& w) {
  ValidationReport report;
  auto& issues = report.issues;
  const Eigen::Index n = sys.A.rows();
  const Eigen::Index m = sys.B.cols();

  if (n == 0) issues.push_back("A is empty");
  if (m == 0) issues.push_back("B has no columns");
  check_shape(issues, sys.A, n, n, "A");
  check_shape(issues, sys.B, n, m, "B");

  if (sys.C.size() != sys.D.size()) {
    issues.push_back("channel-count mismatch: C has " +
                     std::to_string(sys.C.size()) + " matrices, D has " +
                     std::to_string(sys.D.size()));
  }
  if (sys.C.empty()) issues.push_back("no noise channels (N must be >= 1)");
  for (std::size_t i = 0; i < sys.C.size(); ++i) {
    check_shape(issues, sys.C[i], n, n, "C[" + std::to_string(i) + "]");
  }
  for (std::size_t i = 0; i < sys.D.size(); ++i) {
    check_shape(issues, sys.D[i], n, m, "D[" + std::to_string(i) + "]");
  }

  check_shape(issues, w.Q.matrix(), n, n, "Q");
  check_shape(issues, w.R.matrix(), m, m, "R");
  if (w.Q.dim() > 0 && w.Q.min_eigenvalue() < -1e-12 * std::max(1.0, w.Q.norm())) {
    issues.push_back("Q not positive semidefinite");
  }
  if (w.R.dim() > 0 && !w.R.is_pd()) {
    issues.push_back("R not positive definite");
  }
  return report;
}

void require_consistent(const StochasticLinearSystem& sys) {
  const Eigen::Index n = sys.n();
  const Eigen::Index m = sys.m();
  if (sys.A.cols() != n) {
    throw DimensionError("A must be square, got " + shape_string(sys.A));
  }
  if (sys.B.rows() != n) {
    throw DimensionError("B has " + std::to_string(sys.B.rows()) +
                         " rows, expected " + std::to_string(n));
  }
  if (sys.C.size() != sys.D.size()) {
    throw DimensionError("channel-count mismatch between C and D");
  }
  for (std::size_t i = 0; i < sys.C.size(); ++i) {
    if (sys.C[i].rows() != n || sys.C[i].cols() != n) {
      throw DimensionError("C[" + std::to_string(i) + "] has shape " +
                           shape_string(sys.C[i]));
    }
    if (sys.D[i].rows() != n || sys.D[i].cols() != m) {
      throw DimensionError("D[" + std::to_string(i) + "] has shape " +
                           shape_string(sys.D[i]));
    }
  }
}

void require_consistent(const StochasticLinearSystem& sys, const FeedbackGain& f) {
  require_consistent(sys);
  if (f.inputs() != sys.m() || f.states() != sys.n()) {
    throw DimensionError("gain has shape " + shape_string(f.matrix()) +
                         ", expected " + std::to_string(sys.m()) + "x" +
                         std::to_string(sys.n()));
  }
}

void require_consistent(const StochasticLinearSystem& sys, const CostWeights& w) {
  require_consistent(sys);
  if (w.Q.dim() != sys.n()) throw DimensionError("Q does not match n");
  if (w.R.dim() != sys.m()) throw DimensionError("R does not match m");
}

ClosedLoop close_loop(const StochasticLinearSystem& sys, const FeedbackGain& f) {
  require_consistent(sys, f);
  ClosedLoop cl;
  cl.A = sys.A + sys.B * f.matrix();
  cl.C.reserve(sys.channels());
  for (std::size_t i = 0; i < sys.channels(); ++i) {
    cl.C.push_back(sys.C[i] + sys.D[i] * f.matrix());
  }
  return cl;
}

namespace {

Matrix lift(const Matrix& top, const Matrix& f) {
  // [I; F] * top
  Matrix out(top.rows() + f.rows(), top.cols());
  out.topRows(top.rows()) = top;
  out.bottomRows(f.rows()) = f * top;
  return out;
}

Matrix side_by_side(const Matrix& left, const Matrix& right) {
  Matrix out(left.rows(), left.cols() + right.cols());
  out << left, right;
  return out;
}

}  // namespace

AugmentedSystem augment(const StochasticLinearSystem& sys, const FeedbackGain& f) {
  require_consistent(sys, f);
  AugmentedSystem aug;
  aug.A = lift(side_by_side(sys.A, sys.B), f.matrix());
  aug.C = augmented_diffusion(sys.C, sys.D, f);
  return aug;
}

std::vector<Matrix> augmented_diffusion(const std::vector<Matrix>& c,
                                        const std::vector<Matrix>& d,
                                        const FeedbackGain& f) {
  if (c.size() != d.size()) {
    throw DimensionError("channel-count mismatch between C and D");
  }
  std::vector<Matrix> out;
  out.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].rows() != d[i].rows() || c[i].cols() != f.states() ||
        d[i].cols() != f.inputs()) {
      throw DimensionError("diffusion channel " + std::to_string(i) +
                           " does not match the gain");
    }
    out.push_back(lift(side_by_side(c[i], d[i]), f.matrix()));
  }
  return out;
}

LambdaBlock lambda_of(const CostWeights& w) { return LambdaBlock(w.Q, w.R); }

}  // namespace slqr
