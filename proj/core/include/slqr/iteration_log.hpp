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

#include <limits>
#include <string>
#include <vector>

#include "slqr/linalg.hpp"

namespace slqr {

/// One iteration of policy iteration, the model-based primal-dual loop or the
/// data-driven loop. Fields that an algorithm does not produce stay NaN.
struct IterationRecord {
  static constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

  int iter = 0;
  /// P^(i) for policy iteration, X^i for the primal-dual loops.
  Matrix value;
  /// Gain that was evaluated at this iteration (F^(i)).
  Matrix gain;
  /// Gain produced by this iteration (F^(i+1)).
  Matrix next_gain;
  /// Frobenius norm of the GARE residual at the induced value matrix.
  double gare_residual = kUnset;
  /// ||F^(i+1) - F^(i)||
  double step_norm = kUnset;
  /// Spectral radius of the closed-loop Lyapunov operator under `gain`.
  double spectral_radius = kUnset;
  /// lambda_min(P^(i-1) - P^(i)); NaN at i = 0.
  double decrease_min_eig = kUnset;
  double rel_err_F = kUnset;
  double rel_err_X = kUnset;
  double stil_min_eig = kUnset;
  double wall_time_s = 0.0;
};

struct IterationLog {
  std::vector<IterationRecord> entries;
  bool converged = false;
  std::vector<std::string> warnings;

  bool empty() const noexcept { return entries.empty(); }
  std::size_t size() const noexcept { return entries.size(); }
};

/// When false the wall_time_s column is written as 0 so that repeated runs
/// produce byte-identical files.
struct CsvOptions {
  bool include_timing = false;
};

/// Columns: iter, gare_residual, step_norm, wall_time_s
std::string to_iteration_csv(const IterationLog& log, CsvOptions options = {});

/// Columns: iter, rel_err_F, rel_err_X, step_norm, Stil_min_eig, wall_time_s
std::string to_learning_csv(const IterationLog& log, CsvOptions options = {});

/// Shortest round-trip decimal form of a double ("nan" for NaN).
std::string format_double(double value);

}  // namespace slqr
