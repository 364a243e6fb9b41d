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

#include "slqr/riccati_pi.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <sstream>

#include "slqr/errors.hpp"
#include "slqr/ms_analysis.hpp"

namespace slqr {

namespace {

struct GareTerms {
  Matrix inner;  // R + B'PB + sum D'PD
  Matrix cross;  // B'PA + sum D'PC
  Matrix drift;  // A'PA + sum C'PC
};

GareTerms gare_terms(const StochasticLinearSystem& sys, const CostWeights& w,
                     const SymMatrix& p) {
  require_consistent(sys, w);
  if (p.dim() != sys.n()) {
    throw DimensionError("value matrix is " + shape_string(p.matrix()) +
                         ", expected a square matrix of the state dimension");
  }
  const Matrix& pm = p.matrix();
  GareTerms t;
  t.inner = w.R.matrix() + sys.B.transpose() * pm * sys.B;
  t.cross = sys.B.transpose() * pm * sys.A;
  t.drift = sys.A.transpose() * pm * sys.A;
  for (std::size_t i = 0; i < sys.channels(); ++i) {
    const Matrix& c = sys.C[i];
    const Matrix& d = sys.D[i];
    t.inner += d.transpose() * pm * d;
    t.cross += d.transpose() * pm * c;
    t.drift += c.transpose() * pm * c;
  }
  return t;
}

Matrix solve_inner(const Matrix& inner, const Matrix& rhs) {
  Eigen::LDLT<Matrix> ldlt(inner);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
    throw SingularSystemError("R + B'PB + sum D'PD is not positive definite",
                              condition_number(inner));
  }
  const double cond = condition_number(inner);
  if (!(cond < 1e14)) {
    throw SingularSystemError("R + B'PB + sum D'PD is numerically singular", cond);
  }
  return ldlt.solve(rhs);
}

double closed_loop_radius(const StochasticLinearSystem& sys, const FeedbackGain& f) {
  const ClosedLoop cl = close_loop(sys, f);
  return is_asms(cl.A, cl.C).spectral_radius;
}

}  // namespace

SymMatrix policy_evaluate(const StochasticLinearSystem& sys, const CostWeights& w,
                          const FeedbackGain& f) {
  require_consistent(sys, w);
  const ClosedLoop cl = close_loop(sys, f);
  const Matrix& fm = f.matrix();
  const SymMatrix forcing =
      SymMatrix::symmetrized(w.Q.matrix() + fm.transpose() * w.R.matrix() * fm);
  return solve_gle_primal(cl.A, cl.C, forcing);
}

FeedbackGain policy_improve(const StochasticLinearSystem& sys, const CostWeights& w,
                            const SymMatrix& p) {
  const GareTerms t = gare_terms(sys, w, p);
  return FeedbackGain(-solve_inner(t.inner, t.cross));
}

SymMatrix gare_residual(const StochasticLinearSystem& sys, const CostWeights& w,
                        const SymMatrix& p) {
  const GareTerms t = gare_terms(sys, w, p);
  const Matrix r = t.drift + w.Q.matrix() -
                   t.cross.transpose() * solve_inner(t.inner, t.cross) - p.matrix();
  return SymMatrix::symmetrized(r);
}

SymMatrix optimal_qfunction(const StochasticLinearSystem& sys, const CostWeights& w,
                            const SymMatrix& p) {
  const GareTerms t = gare_terms(sys, w, p);
  const Eigen::Index n = sys.n();
  const Eigen::Index m = sys.m();
  Matrix x(n + m, n + m);
  x.topLeftCorner(n, n) = w.Q.matrix() + t.drift;
  x.topRightCorner(n, m) = t.cross.transpose();
  x.bottomLeftCorner(m, n) = t.cross;
  x.bottomRightCorner(m, m) = t.inner;
  return SymMatrix::symmetrized(x);
}

double value_of(const SymMatrix& p, const SymMatrix& z) {
  if (p.dim() != z.dim()) {
    throw DimensionError("value_of: P is " + shape_string(p.matrix()) + " but Z is " +
                         shape_string(z.matrix()));
  }
  return (z.matrix() * p.matrix()).trace();
}

GareSolution solve_gare_pi(const StochasticLinearSystem& sys, const CostWeights& w,
                           const FeedbackGain& f0, IterationOptions options) {
  require_consistent(sys, w);
  require_consistent(sys, f0);
  if (options.max_iter < 0) throw InvalidInputError("max_iter must be >= 0");
  if (!(options.tol >= 0.0)) throw InvalidInputError("tol must be >= 0");

  GareSolution sol;
  if (!pbh_exact_detectability(sys.A, sys.C, w.Q)) {
    sol.log.warnings.emplace_back(
        "(A, C | Q) failed the exact-detectability test; convergence to the "
        "stabilizing GARE solution is not guaranteed");
  }

  FeedbackGain f = f0;
  SymMatrix p = policy_evaluate(sys, w, f);
  SymMatrix p_prev;
  for (int i = 0; i < options.max_iter; ++i) {
    const auto start = std::chrono::steady_clock::now();
    if (i > 0) p = policy_evaluate(sys, w, f);
    const FeedbackGain next = policy_improve(sys, w, p);

    IterationRecord rec;
    rec.iter = i;
    rec.value = p.matrix();
    rec.gain = f.matrix();
    rec.next_gain = next.matrix();
    rec.gare_residual = gare_residual(sys, w, p).norm();
    rec.step_norm = (next.matrix() - f.matrix()).norm();
    rec.spectral_radius = closed_loop_radius(sys, f);
    if (i > 0) {
      rec.decrease_min_eig =
          SymMatrix::symmetrized(p_prev.matrix() - p.matrix()).min_eigenvalue();
      if (rec.decrease_min_eig < -1e-8 * std::max(1.0, p.norm())) {
        std::ostringstream os;
        os << "value sequence increased at iteration " << i
           << " (min eigenvalue of the decrease " << rec.decrease_min_eig << ")";
        sol.log.warnings.push_back(os.str());
      }
    }
    rec.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    sol.log.entries.push_back(std::move(rec));

    p_prev = p;
    f = next;
    if (sol.log.entries.back().step_norm <= options.tol) {
      sol.log.converged = true;
      break;
    }
  }

  sol.P = p;
  sol.F = options.max_iter == 0 ? f0 : f;
  sol.X = optimal_qfunction(sys, w, p);
  return sol;
}

}  // namespace slqr
