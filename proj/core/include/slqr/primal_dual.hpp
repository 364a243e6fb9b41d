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

#include <vector>

#include "slqr/iteration_log.hpp"
#include "slqr/riccati_pi.hpp"
#include "slqr/stochastic_model.hpp"

namespace slqr {

/// Dual variable X on the augmented space, partitioned after the first n
/// rows and columns.
class DualIterate {
 public:
  DualIterate() = default;
  DualIterate(SymMatrix x, Eigen::Index states);

  const SymMatrix& value() const noexcept { return x_; }
  const Matrix& matrix() const noexcept { return x_.matrix(); }
  Eigen::Index states() const noexcept { return n_; }
  Eigen::Index inputs() const noexcept { return x_.dim() - n_; }

  Matrix X11() const;
  Matrix X12() const;
  Matrix X22() const;

 private:
  SymMatrix x_;
  Eigen::Index n_ = 0;
};

/// Primal variable S of the trace-minimization problem and the initial-moment
/// matrix Xi it was generated from.
struct PrimalIterate {
  SymMatrix S;
  SymMatrix Xi;
  Eigen::Index states = 0;

  Matrix S11() const { return S.block(0, 0, states, states); }
  Matrix S12() const { return S.block(0, states, states, S.dim() - states); }
  Matrix S22() const {
    return S.block(states, states, S.dim() - states, S.dim() - states);
  }
};

/// Solves A_F'XA_F + sum C_F'XC_F + Lambda = X. Throws NotStabilizingError
/// when F is not stabilizing.
DualIterate dual_update(const StochasticLinearSystem& sys, const CostWeights& w,
                        const FeedbackGain& f);

/// F = -X22^{-1} X12'. Throws SingularSystemError when X22 is singular or its
/// condition number exceeds kMaxX22Condition; no regularization is attempted.
inline constexpr double kMaxX22Condition = 1e12;
FeedbackGain primal_update(const DualIterate& x);

/// [I F'] X [I; F]: the value matrix of F carried by the dual iterate.
SymMatrix induced_value(const DualIterate& x, const FeedbackGain& f);

struct PrimalDualResult {
  DualIterate X;
  FeedbackGain F;
  /// Value matrix induced by the last dual iterate and the gain it was built from.
  SymMatrix P;
  IterationLog log;

  bool converged() const noexcept { return log.converged; }
};

/// Model-based primal-dual loop: dual_update then primal_update until
/// ||F^i - F^{i+1}|| <= tol. Log entries carry X^i as `value` and the induced
/// value matrix's GARE residual.
PrimalDualResult run_model_based(const StochasticLinearSystem& sys,
                                 const CostWeights& w, const FeedbackGain& f0,
                                 IterationOptions options = {});

struct KKTReport {
  /// ||A_F S A_F' + sum C_F S C_F' + Xi - S||
  double r_primal = 0.0;
  /// lambda_min(S)
  double s_min = 0.0;
  /// ||A_F'XA_F + sum C_F'XC_F + Lambda - X||
  double r_dual = 0.0;
  /// ||(X12' + X22 F)([A B]S[A B]' + sum [C_i D_i]S[C_i D_i]')||
  double r_station = 0.0;
  /// ||X0|| with X0 the dual slack recovered from the stationarity of the
  /// Lagrangian in S.
  double x0_norm = 0.0;
  /// |Tr(S X0)|
  double complementarity = 0.0;
};

KKTReport kkt_residuals(const StochasticLinearSystem& sys, const CostWeights& w,
                        const SymMatrix& stil, const DualIterate& x,
                        const FeedbackGain& f, const SymMatrix& xi);

/// Tr(Lambda S) - Tr(Xi X)
double duality_gap(const SymMatrix& stil, const DualIterate& x, const LambdaBlock& lam,
                   const SymMatrix& xi);

struct Certificate {
  SymMatrix Stil;
  KKTReport kkt;
  double primal_value = 0.0;  // Tr(Lambda S)
  double dual_value = 0.0;    // Tr(Xi X)
  double duality_gap = 0.0;
};

/// Builds S from the augmented dual GLE with forcing Xi and reports the KKT
/// residuals and duality gap of (S, X, F).
Certificate certify(const StochasticLinearSystem& sys, const CostWeights& w,
                    const FeedbackGain& f, const DualIterate& x, const SymMatrix& xi);

// Unmodified trace-minimization problem, kept as a verification path.

/// S = [I; F] S11 [I; F]' with S11 solving the closed-loop dual GLE forced by Z.
PrimalIterate solve_primal_p1(const StochasticLinearSystem& sys, const FeedbackGain& f,
                              const SymMatrix& z);

/// F = S12' S11^{-1}
FeedbackGain gain_from_primal(const PrimalIterate& s);

/// Largest ||z z' - [A B]vv'[A B]' - sum [C_i D_i]vv'[C_i D_i]'|| over the
/// pairs (z_l, v_l): how far the initial states are from matching v0.
double initial_state_mismatch(const StochasticLinearSystem& sys,
                              const std::vector<Vector>& z,
                              const std::vector<Vector>& v0);

}  // namespace slqr
