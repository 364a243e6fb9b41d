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

#include "slqr/ms_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "slqr/errors.hpp"

namespace slqr {

namespace {

void require_square_family(const Matrix& a, std::span<const Matrix> cs) {
  if (a.rows() != a.cols()) {
    throw DimensionError("operator matrix needs square A, got " + shape_string(a));
  }
  for (const Matrix& c : cs) {
    if (c.rows() != a.rows() || c.cols() != a.cols()) {
      throw DimensionError("diffusion matrix has shape " + shape_string(c) +
                           ", expected " + shape_string(a));
    }
  }
}

// Sum of kron(X_i, X_i) over {a} and cs, optionally with every factor
// transposed.
Matrix kron_sum(const Matrix& a, std::span<const Matrix> cs, bool transposed) {
  Matrix t = transposed ? Matrix(a.transpose()) : a;
  Matrix out = kron(t, t);
  for (const Matrix& c : cs) {
    t = transposed ? Matrix(c.transpose()) : c;
    out += kron(t, t);
  }
  return out;
}

SymMatrix solve_vectorized(const Matrix& op, const SymMatrix& rhs,
                           Eigen::Index d) {
  const Matrix lhs = Matrix::Identity(op.rows(), op.cols()) - op;
  Eigen::PartialPivLU<Matrix> lu(lhs);
  const double rcond = lu.rcond();
  if (!(rcond > 1e-13)) {
    throw SingularSystemError(
        "generalized Lyapunov system is singular (spectral radius near 1)",
        rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity());
  }
  const Vector s = lu.solve(vec(rhs.matrix()));
  return SymMatrix::symmetrized(unvec(s, d, d));
}

void require_asms(const Matrix& a, std::span<const Matrix> cs) {
  const SpectrumReport report = is_asms(a, cs);
  if (!report.asms) {
    std::ostringstream os;
    os << "system is not asymptotically stable in mean square (spectral radius "
       << report.spectral_radius << ")";
    throw NotStabilizingError(os.str(), report.spectral_radius);
  }
}

// Numerical eigenspace basis (orthonormal columns) of M for eigenvalue
// lambda.
ComplexMatrix eigenspace(const ComplexMatrix& m, std::complex<double> lambda,
                         double threshold) {
  ComplexMatrix shifted = m;
  shifted.diagonal().array() -= lambda;
  Eigen::JacobiSVD<ComplexMatrix> svd(shifted, Eigen::ComputeFullV);
  const Vector& sv = svd.singularValues();
  const Eigen::Index dim = sv.size();
  Eigen::Index count = 0;
  for (Eigen::Index i = dim - 1; i >= 0 && sv(i) <= threshold; --i) ++count;
  count = std::max<Eigen::Index>(count, 1);
  return svd.matrixV().rightCols(count);
}

// True if some eigen-direction of the operator (restricted to eigenvalues
// with modulus >= min_modulus) is annihilated by Q.
bool has_unobserved_mode(const Matrix& a, std::span<const Matrix> cs,
                         const SymMatrix& q, double tol, double min_modulus) {
  require_square_family(a, cs);
  if (q.dim() != a.rows()) {
    throw DimensionError("Q does not match the state dimension");
  }
  const Eigen::Index d = a.rows();
  const LyapOperatorMatrix op = lyap_operator_matrix(a, cs);
  Eigen::EigenSolver<Matrix> es(op.M, /*computeEigenvectors=*/true);
  if (es.info() != Eigen::Success) {
    throw EigenSolverError("eigen-decomposition of the Lyapunov operator failed");
  }
  const ComplexVector lambdas = es.eigenvalues();
  const ComplexMatrix vectors = es.eigenvectors();
  const ComplexMatrix mc = op.M.cast<std::complex<double>>();
  const ComplexMatrix q_lift =
      kron(ComplexMatrix(ComplexMatrix::Identity(d, d)),
           ComplexMatrix(q.matrix().cast<std::complex<double>>()));
  const double q_scale = q.norm();
  const double op_scale = std::max(1.0, op.M.norm());
  const double cluster_tol = 1e-6 * op_scale;
  const double space_tol = 1e-7 * op_scale;

  std::vector<bool> visited(static_cast<std::size_t>(lambdas.size()), false);
  for (Eigen::Index i = 0; i < lambdas.size(); ++i) {
    if (visited[i]) continue;
    std::vector<Eigen::Index> cluster{i};
    visited[i] = true;
    for (Eigen::Index j = i + 1; j < lambdas.size(); ++j) {
      if (!visited[j] && std::abs(lambdas(j) - lambdas(i)) <= cluster_tol) {
        cluster.push_back(j);
        visited[j] = true;
      }
    }
    std::complex<double> lambda = 0.0;
    for (Eigen::Index j : cluster) lambda += lambdas(j);
    lambda /= static_cast<double>(cluster.size());
    if (std::abs(lambda) < min_modulus) continue;

    ComplexMatrix basis;
    if (cluster.size() == 1) {
      basis = vectors.col(i).normalized();
    } else {
      basis = eigenspace(mc, lambda, space_tol);
    }
    const ComplexMatrix images = q_lift * basis;
    Eigen::JacobiSVD<ComplexMatrix> svd(images);
    const double smallest = svd.singularValues()(svd.singularValues().size() - 1);
    if (smallest <= tol * q_scale) return true;
  }
  return false;
}

}  // namespace

Matrix LyapOperatorMatrix::apply(const Matrix& x) const {
  return unvec(M * vec(x), state_dim, state_dim);
}

LyapOperatorMatrix lyap_operator_matrix(const Matrix& a, std::span<const Matrix> cs) {
  require_square_family(a, cs);
  return LyapOperatorMatrix{kron_sum(a, cs, /*transposed=*/false), a.rows()};
}

SpectrumReport is_asms(const Matrix& a, std::span<const Matrix> cs, double margin) {
  const LyapOperatorMatrix op = lyap_operator_matrix(a, cs);
  SpectrumReport report;
  if (op.M.size() == 0) {
    report.asms = true;
    return report;
  }
  Eigen::EigenSolver<Matrix> es(op.M, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw EigenSolverError("eigenvalues of the Lyapunov operator did not converge");
  }
  const ComplexVector ev = es.eigenvalues();
  report.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  for (const auto& lambda : report.eigenvalues) {
    report.spectral_radius = std::max(report.spectral_radius, std::abs(lambda));
  }
  report.asms = report.spectral_radius < 1.0 - margin;
  return report;
}

SymMatrix solve_gle_primal(const Matrix& a, std::span<const Matrix> cs,
                           const SymMatrix& q, GleOptions options) {
  require_square_family(a, cs);
  if (q.dim() != a.rows()) {
    throw DimensionError("forcing term does not match the state dimension");
  }
  if (options.require_asms) require_asms(a, cs);
  return solve_vectorized(kron_sum(a, cs, /*transposed=*/true), q, a.rows());
}

SymMatrix solve_gle_dual(const Matrix& a, std::span<const Matrix> cs,
                         const SymMatrix& xi, GleOptions options) {
  require_square_family(a, cs);
  if (xi.dim() != a.rows()) {
    throw DimensionError("forcing term does not match the state dimension");
  }
  if (options.require_asms) require_asms(a, cs);
  return solve_vectorized(kron_sum(a, cs, /*transposed=*/false), xi, a.rows());
}

Matrix gle_primal_residual(const Matrix& a, std::span<const Matrix> cs,
                           const Matrix& q, const Matrix& s) {
  Matrix r = a.transpose() * s * a + q - s;
  for (const Matrix& c : cs) r += c.transpose() * s * c;
  return r;
}

Matrix gle_dual_residual(const Matrix& a, std::span<const Matrix> cs,
                         const Matrix& xi, const Matrix& s) {
  Matrix r = a * s * a.transpose() + xi - s;
  for (const Matrix& c : cs) r += c * s * c.transpose();
  return r;
}

bool pbh_exact_observability(const Matrix& a, std::span<const Matrix> cs,
                             const SymMatrix& q, double tol) {
  return !has_unobserved_mode(a, cs, q, tol, 0.0);
}

bool pbh_exact_detectability(const Matrix& a, std::span<const Matrix> cs,
                             const SymMatrix& q, double tol) {
  return !has_unobserved_mode(a, cs, q, tol, 1.0 - tol);
}

}  // namespace slqr
