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

#include <string>
#include <vector>

#include "slqr/linalg.hpp"

namespace slqr {

/// Discrete-time plant with multiplicative noise on N independent channels:
///
///   x_{k+1} = A x_k + B u_k + sum_i (C_i x_k + D_i u_k) w^i_k
///
/// where each w^i_k is zero-mean, unit-variance and independent across i and
/// k. The single-channel system is the N = 1 case.
///
/// This is a plain aggregate so that malformed systems can be built and
/// diagnosed with validate_system(); operations call require_consistent()
/// before touching the matrices.
struct StochasticLinearSystem {
  Matrix A;
  Matrix B;
  std::vector<Matrix> C;
  std::vector<Matrix> D;
  std::string name;

  Eigen::Index n() const noexcept { return A.rows(); }
  Eigen::Index m() const noexcept { return B.cols(); }
  std::size_t channels() const noexcept { return C.size(); }
};

/// Quadratic stage cost x'Qx + u'Ru.
struct CostWeights {
  SymMatrix Q;
  SymMatrix R;
};

/// Stabilizing-gain candidate u_k = F x_k, F is m x n.
class FeedbackGain {
 public:
  FeedbackGain() = default;
  explicit FeedbackGain(Matrix f);

  static FeedbackGain zero(Eigen::Index m, Eigen::Index n);

  const Matrix& matrix() const noexcept { return f_; }
  Eigen::Index inputs() const noexcept { return f_.rows(); }
  Eigen::Index states() const noexcept { return f_.cols(); }
  double norm() const { return f_.norm(); }

 private:
  Matrix f_;
};

/// (A + BF, {C_i + D_i F})
struct ClosedLoop {
  Matrix A;
  std::vector<Matrix> C;
};

/// Dynamics of v_k = [x_k; u_k] under u_k = F x_k for k >= 1:
///   A_F = [A B; FA FB],  C_F,i = [C_i D_i; F C_i F D_i].
struct AugmentedSystem {
  Matrix A;
  std::vector<Matrix> C;
};

/// diag(Q, R) on the augmented space.
class LambdaBlock {
 public:
  LambdaBlock(const SymMatrix& q, const SymMatrix& r);

  const SymMatrix& value() const noexcept { return value_; }
  const Matrix& matrix() const noexcept { return value_.matrix(); }
  Eigen::Index states() const noexcept { return n_; }
  Eigen::Index inputs() const noexcept { return m_; }

  SymMatrix Q() const;
  SymMatrix R() const;

 private:
  SymMatrix value_;
  Eigen::Index n_;
  Eigen::Index m_;
};

struct ValidationReport {
  std::vector<std::string> issues;

  bool ok() const noexcept { return issues.empty(); }
  std::string summary() const;
};

/// Lists every shape, finiteness and sign violation; never throws.
ValidationReport validate_system(const StochasticLinearSystem& sys,
                                 const CostWeights& w);

/// Throws DimensionError unless all matrices agree with (n, m) and the two
/// channel lists have equal length. An empty channel list is accepted here;
/// validate_system() is where N >= 1 is enforced.
void require_consistent(const StochasticLinearSystem& sys);
void require_consistent(const StochasticLinearSystem& sys, const FeedbackGain& f);
void require_consistent(const StochasticLinearSystem& sys, const CostWeights& w);

ClosedLoop close_loop(const StochasticLinearSystem& sys, const FeedbackGain& f);
AugmentedSystem augment(const StochasticLinearSystem& sys, const FeedbackGain& f);
LambdaBlock lambda_of(const CostWeights& w);

/// C_F,i = [I; F][C_i D_i] built from the diffusion matrices alone.
std::vector<Matrix> augmented_diffusion(const std::vector<Matrix>& c,
                                        const std::vector<Matrix>& d,
                                        const FeedbackGain& f);

}  // namespace slqr
