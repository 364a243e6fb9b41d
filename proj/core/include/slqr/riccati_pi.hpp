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

#include "slqr/iteration_log.hpp"
#include "slqr/stochastic_model.hpp"

namespace slqr {

/// Stopping rule shared by the iterative solvers: stop once
/// ||F^(i+1) - F^(i)|| <= tol, give up after max_iter gain evaluations.
struct IterationOptions {
  double tol = 1e-9;
  int max_iter = 100;
};

struct GareSolution {
  SymMatrix P;
  FeedbackGain F;
  /// Q-function matrix built from P.
  SymMatrix X;
  IterationLog log;

  bool converged() const noexcept { return log.converged; }
};

/// Value matrix of the gain F: solves
///   (A+BF)'P(A+BF) + sum_i (C_i+D_iF)'P(C_i+D_iF) + Q + F'RF = P.
/// Throws NotStabilizingError when F does not stabilize the plant.
SymMatrix policy_evaluate(const StochasticLinearSystem& sys, const CostWeights& w,
                          const FeedbackGain& f);

/// F = -(R + B'PB + sum D'PD)^{-1} (B'PA + sum D'PC)
FeedbackGain policy_improve(const StochasticLinearSystem& sys, const CostWeights& w,
                            const SymMatrix& p);

/// Off-line policy iteration from a stabilizing F0. Non-convergence within
/// max_iter is reported through log.converged, not thrown. Exact
/// detectability of (A, C | Q) is checked but only produces a warning.
GareSolution solve_gare_pi(const StochasticLinearSystem& sys, const CostWeights& w,
                           const FeedbackGain& f0, IterationOptions options = {});

/// A'PA + sum C'PC + Q - (A'PB + sum C'PD)(R + B'PB + sum D'PD)^{-1}(B'PA + sum D'PC) - P
SymMatrix gare_residual(const StochasticLinearSystem& sys, const CostWeights& w,
                        const SymMatrix& p);

/// X = [Q + A'PA + sum C'PC, A'PB + sum C'PD; (.)', R + B'PB + sum D'PD]
SymMatrix optimal_qfunction(const StochasticLinearSystem& sys, const CostWeights& w,
                            const SymMatrix& p);

/// tr(Z P): summed cost of the initial states z_l with Z = sum z_l z_l'.
double value_of(const SymMatrix& p, const SymMatrix& z);

}  // namespace slqr
