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

#include <complex>
#include <span>
#include <vector>

#include "slqr/linalg.hpp"

namespace slqr {

/// Matrix of the generalized Lyapunov operator X -> A X A' + sum_i C_i X C_i'
/// in column-stacked coordinates: M = A (x) A + sum_i C_i (x) C_i.
struct LyapOperatorMatrix {
  Matrix M;
  Eigen::Index state_dim = 0;

  /// Applies the operator through M (reshaping X in and out).
  Matrix apply(const Matrix& x) const;
};

struct SpectrumReport {
  std::vector<std::complex<double>> eigenvalues;
  double spectral_radius = 0.0;
  bool asms = false;
};

/// An empty channel list is treated as a single zero channel.
LyapOperatorMatrix lyap_operator_matrix(const Matrix& a, std::span<const Matrix> cs);

/// Mean-square stability of x_{k+1} = A x_k + sum_i C_i x_k w^i_k:
/// asms iff spectral_radius < 1 - margin.
SpectrumReport is_asms(const Matrix& a, std::span<const Matrix> cs,
                       double margin = 0.0);

struct GleOptions {
  /// Refuse (NotStabilizingError) when the pair is not mean-square stable.
  /// Disabling it exposes the raw linear solve, which for unstable pairs
  /// either fails as singular or returns an indefinite matrix.
  bool require_asms = true;
};

/// Solves A'SA + sum_i C_i'SC_i + Q = S.
SymMatrix solve_gle_primal(const Matrix& a, std::span<const Matrix> cs,
                           const SymMatrix& q, GleOptions options = {});

/// Solves ASA' + sum_i C_i S C_i' + Xi = S.
SymMatrix solve_gle_dual(const Matrix& a, std::span<const Matrix> cs,
                         const SymMatrix& xi, GleOptions options = {});

/// A'SA + sum C'SC + Q - S
Matrix gle_primal_residual(const Matrix& a, std::span<const Matrix> cs,
                           const Matrix& q, const Matrix& s);
/// ASA' + sum CSC' + Xi - S
Matrix gle_dual_residual(const Matrix& a, std::span<const Matrix> cs,
                         const Matrix& xi, const Matrix& s);

/// Default relative tolerance for the PBH null tests.
inline constexpr double kPbhTolerance = 1e-8;

/// Stochastic PBH test for exact observability of (A, C | Q): true iff no
/// nonzero X with D_{A,C} X = lambda X and ||Q X|| <= tol ||Q|| ||X|| exists,
/// for any complex lambda. Candidates are searched over the full (complex)
/// eigenspace of each distinct eigenvalue, not only the eigenvectors the
/// solver happens to return.
bool pbh_exact_observability(const Matrix& a, std::span<const Matrix> cs,
                             const SymMatrix& q, double tol = kPbhTolerance);

/// As above, restricted to eigenvalues with |lambda| >= 1 - tol.
bool pbh_exact_detectability(const Matrix& a, std::span<const Matrix> cs,
                             const SymMatrix& q, double tol = kPbhTolerance);

}  // namespace slqr
