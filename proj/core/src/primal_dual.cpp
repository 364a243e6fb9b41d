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

#include "slqr/primal_dual.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "slqr/errors.hpp"
#include "slqr/ms_analysis.hpp"

namespace slqr {

namespace {

double closed_loop_radius(const StochasticLinearSystem& sys, const FeedbackGain& f) {
  const ClosedLoop cl = close_loop(sys, f);
  return is_asms(cl.A, cl.C).spectral_radius;
}

// [A B] and [C_i D_i]
Matrix top_block(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

}  // namespace

DualIterate::DualIterate(SymMatrix x, Eigen::Index states)
    : x_(std::move(x)), n_(states) {
  if (states < 0 || states > x_.dim()) {
    throw DimensionError("dual iterate partition is outside the matrix");
  }
}

Matrix DualIterate::X11() const { return x_.block(0, 0, n_, n_); }
Matrix DualIterate::X12() const { return x_.block(0, n_, n_, inputs()); }
Matrix DualIterate::X22() const { return x_.block(n_, n_, inputs(), inputs()); }

DualIterate dual_update(const StochasticLinearSystem& sys, const CostWeights& w,
                        const FeedbackGain& f) {
  require_consistent(sys, w);
  const AugmentedSystem aug = augment(sys, f);
  return DualIterate(solve_gle_primal(aug.A, aug.C, lambda_of(w).value()), sys.n());
}

FeedbackGain primal_update(const DualIterate& x) {
  const Matrix x22 = x.X22();
  const double cond = condition_number(x22);
  if (!(cond <= kMaxX22Condition)) {
    throw SingularSystemError("X22 is singular or too ill-conditioned to invert", cond);
  }
  return FeedbackGain(-x22.partialPivLu().solve(x.X12().transpose()));
}

SymMatrix induced_value(const DualIterate& x, const FeedbackGain& f) {
  if (f.states() != x.states() || f.inputs() != x.inputs()) {
    throw DimensionError("gain " + shape_string(f.matrix()) +
                         " does not match the dual iterate partition");
  }
  const Matrix lift = stack_identity_over(f.matrix());
  return SymMatrix::symmetrized(lift.transpose() * x.matrix() * lift);
}

PrimalDualResult run_model_based(const StochasticLinearSystem& sys,
                                 const CostWeights& w, const FeedbackGain& f0,
                                 IterationOptions options) {
  require_consistent(sys, w);
  require_consistent(sys, f0);
  if (options.max_iter < 0) throw InvalidInputError("max_iter must be >= 0");
  if (!(options.tol >= 0.0)) throw InvalidInputError("tol must be >= 0");

  PrimalDualResult res;
  FeedbackGain f = f0;
  FeedbackGain evaluated = f0;
  DualIterate x = dual_update(sys, w, f);
  SymMatrix p_prev;
  for (int i = 0; i < options.max_iter; ++i) {
    const auto start = std::chrono::steady_clock::now();
    if (i > 0) x = dual_update(sys, w, f);
    evaluated = f;
    const FeedbackGain next = primal_update(x);
    const SymMatrix p = induced_value(x, f);

    IterationRecord rec;
    rec.iter = i;
    rec.value = x.matrix();
    rec.gain = f.matrix();
    rec.next_gain = next.matrix();
    rec.gare_residual = gare_residual(sys, w, p).norm();
    rec.step_norm = (next.matrix() - f.matrix()).norm();
    rec.spectral_radius = closed_loop_radius(sys, f);
    if (i > 0) {
      rec.decrease_min_eig =
          SymMatrix::symmetrized(p_prev.matrix() - p.matrix()).min_eigenvalue();
    }
    rec.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    res.log.entries.push_back(std::move(rec));

    p_prev = p;
    f = next;
    if (res.log.entries.back().step_norm <= options.tol) {
      res.log.converged = true;
      break;
    }
  }
  res.P = induced_value(x, evaluated);
  res.X = x;
  res.F = f;
  return res;
}

KKTReport kkt_residuals(const StochasticLinearSystem& sys, const CostWeights& w,
                        const SymMatrix& stil, const DualIterate& x,
                        const FeedbackGain& f, const SymMatrix& xi) {
  require_consistent(sys, w);
  const AugmentedSystem aug = augment(sys, f);
  const Eigen::Index d = aug.A.rows();
  if (stil.dim() != d || xi.dim() != d || x.value().dim() != d ||
      x.states() != sys.n()) {
    throw DimensionError("KKT inputs do not match the augmented dimension");
  }
  const Matrix& s = stil.matrix();
  const LambdaBlock lam = lambda_of(w);

  KKTReport r;
  r.r_primal = gle_dual_residual(aug.A, aug.C, xi.matrix(), s).norm();
  r.s_min = d > 0 ? stil.min_eigenvalue() : 0.0;
  const Matrix x0 = gle_primal_residual(aug.A, aug.C, lam.matrix(), x.matrix());
  r.r_dual = x0.norm();
  r.x0_norm = x0.norm();
  r.complementarity = std::abs((s * x0).trace());

  const Matrix ab = top_block(sys.A, sys.B);
  Matrix psi = ab * s * ab.transpose();
  for (std::size_t i = 0; i < sys.channels(); ++i) {
    const Matrix cd = top_block(sys.C[i], sys.D[i]);
    psi += cd * s * cd.transpose();
  }
  r.r_station = ((x.X12().transpose() + x.X22() * f.matrix()) * psi).norm();
  return r;
}

double duality_gap(const SymMatrix& stil, const DualIterate& x, const LambdaBlock& lam,
                   const SymMatrix& xi) {
  if (stil.dim() != lam.value().dim() || xi.dim() != x.value().dim() ||
      stil.dim() != xi.dim()) {
    throw DimensionError("duality_gap inputs have inconsistent dimensions");
  }
  return (lam.matrix() * stil.matrix()).trace() - (xi.matrix() * x.matrix()).trace();
}

Certificate certify(const StochasticLinearSystem& sys, const CostWeights& w,
                    const FeedbackGain& f, const DualIterate& x, const SymMatrix& xi) {
  const AugmentedSystem aug = augment(sys, f);
  Certificate c;
  c.Stil = solve_gle_dual(aug.A, aug.C, xi);
  c.kkt = kkt_residuals(sys, w, c.Stil, x, f, xi);
  const LambdaBlock lam = lambda_of(w);
  c.primal_value = (lam.matrix() * c.Stil.matrix()).trace();
  c.dual_value = (xi.matrix() * x.matrix()).trace();
  c.duality_gap = duality_gap(c.Stil, x, lam, xi);
  return c;
}

PrimalIterate solve_primal_p1(const StochasticLinearSystem& sys, const FeedbackGain& f,
                              const SymMatrix& z) {
  const ClosedLoop cl = close_loop(sys, f);
  const SymMatrix s11 = solve_gle_dual(cl.A, cl.C, z);
  const Matrix lift = stack_identity_over(f.matrix());
  PrimalIterate out;
  out.S = SymMatrix::symmetrized(lift * s11.matrix() * lift.transpose());
  out.Xi = z;
  out.states = sys.n();
  return out;
}

FeedbackGain gain_from_primal(const PrimalIterate& s) {
  const Matrix s11 = s.S11();
  const double cond = condition_number(s11);
  if (!(cond < 1e14)) {
    throw SingularSystemError("S11 is singular; the gain cannot be recovered", cond);
  }
  return FeedbackGain(s11.transpose().partialPivLu().solve(s.S12()).transpose());
}

double initial_state_mismatch(const StochasticLinearSystem& sys,
                              const std::vector<Vector>& z,
                              const std::vector<Vector>& v0) {
  require_consistent(sys);
  if (z.size() != v0.size()) {
    throw DimensionError("initial state lists have different lengths");
  }
  const Matrix ab = top_block(sys.A, sys.B);
  double worst = 0.0;
  for (std::size_t l = 0; l < z.size(); ++l) {
    if (z[l].size() != sys.n() || v0[l].size() != sys.n() + sys.m()) {
      throw DimensionError("initial state vector has the wrong length");
    }
    const Matrix vv = v0[l] * v0[l].transpose();
    Matrix target = ab * vv * ab.transpose();
    for (std::size_t i = 0; i < sys.channels(); ++i) {
      const Matrix cd = top_block(sys.C[i], sys.D[i]);
      target += cd * vv * cd.transpose();
    }
    worst = std::max(worst, (z[l] * z[l].transpose() - target).norm());
  }
  return worst;
}

}  // namespace slqr
