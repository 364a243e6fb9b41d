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

#include "slqr/model_free.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "slqr/errors.hpp"

namespace slqr {

namespace {

Vector concat(const Vector& x, const Vector& u) {
  Vector v(x.size() + u.size());
  v << x, u;
  return v;
}

bool exploded(const Vector& x) { return !x.allFinite() || x.norm() > kExplosionNorm; }

void check_plant_gain(const Plant& plant, const FeedbackGain& f) {
  if (f.inputs() != plant.inputs() || f.states() != plant.states()) {
    throw DimensionError("gain " + shape_string(f.matrix()) +
                         " does not match the plant dimensions");
  }
}

}  // namespace

LinearPlant::LinearPlant(StochasticLinearSystem sys) : sys_(std::move(sys)) {
  require_consistent(sys_);
}

Vector LinearPlant::step(const Vector& x, const Vector& u, NoiseSource& noise) const {
  Vector next = sys_.A * x + sys_.B * u;
  for (std::size_t i = 0; i < sys_.channels(); ++i) {
    const double wi = noise.next();
    next += (sys_.C[i] * x + sys_.D[i] * u) * wi;
  }
  return next;
}

Rollout simulate_rollout(const Plant& plant, const FeedbackGain& f, const Vector& v0,
                         int horizon, NoiseSource& noise) {
  check_plant_gain(plant, f);
  const Eigen::Index n = plant.states();
  const Eigen::Index m = plant.inputs();
  if (v0.size() != n + m) {
    throw DimensionError("initial augmented state has length " +
                         std::to_string(v0.size()) + ", expected " +
                         std::to_string(n + m));
  }
  if (horizon < 0) throw InvalidInputError("rollout horizon must be >= 0");

  Rollout r;
  r.seed = noise.seed();
  r.v.reserve(static_cast<std::size_t>(horizon) + 2);
  r.v.push_back(v0);
  Vector x = v0.head(n);
  Vector u = v0.tail(m);
  for (int k = 0; k <= horizon; ++k) {
    x = plant.step(x, u, noise);
    if (exploded(x)) {
      r.exploded = true;
      break;
    }
    u = f.matrix() * x;
    r.v.push_back(concat(x, u));
  }
  return r;
}

Rollout simulate_rollout(const StochasticLinearSystem& sys, const FeedbackGain& f,
                         const Vector& v0, int horizon, NoiseSource& noise) {
  const LinearPlant plant(sys);
  return simulate_rollout(plant, f, v0, horizon, noise);
}

SymMatrix xi_of(const std::vector<Vector>& v0) {
  if (v0.empty()) throw DataError("no initial vectors");
  const Eigen::Index d = v0.front().size();
  Matrix xi = Matrix::Zero(d, d);
  for (const Vector& v : v0) {
    if (v.size() != d) throw DimensionError("initial vectors have different lengths");
    xi += v * v.transpose();
  }
  SymMatrix out = SymMatrix::symmetrized(xi);
  const double lo = out.min_eigenvalue();
  if (!(lo > 1e-12 * std::max(1.0, out.max_eigenvalue()))) {
    std::ostringstream os;
    os << "initial vectors do not span the augmented space (min eigenvalue of Xi " << lo
       << ")";
    throw DataError(os.str());
  }
  return out;
}

std::vector<Vector> generate_initial_basis(Eigen::Index n, Eigen::Index m, std::size_t r,
                                           const std::vector<double>& scales) {
  const auto d = static_cast<std::size_t>(n + m);
  if (n < 1 || m < 1) throw InvalidInputError("n and m must be positive");
  if (r < d) {
    throw InvalidInputError("need at least n+m = " + std::to_string(d) +
                            " initial vectors, got " + std::to_string(r));
  }
  if (!scales.empty() && scales.size() != d) {
    throw DimensionError("initial-vector scales must have length n+m");
  }
  std::vector<Vector> out;
  out.reserve(r);
  for (std::size_t l = 0; l < r; ++l) {
    const std::size_t j = l % d;
    Vector v = Vector::Zero(static_cast<Eigen::Index>(d));
    v(static_cast<Eigen::Index>(j)) = scales.empty() ? 1.0 : scales[j];
    out.push_back(std::move(v));
  }
  xi_of(out);
  return out;
}

std::vector<Vector> random_initial_basis(Eigen::Index n, Eigen::Index m, std::size_t r,
                                         std::uint64_t seed) {
  const auto d = static_cast<std::size_t>(n + m);
  if (n < 1 || m < 1) throw InvalidInputError("n and m must be positive");
  if (r < d) {
    throw InvalidInputError("need at least n+m = " + std::to_string(d) +
                            " initial vectors, got " + std::to_string(r));
  }
  NoiseSource noise(seed, NoiseKind::gaussian);
  std::vector<Vector> out;
  out.reserve(r);
  for (std::size_t l = 0; l < r; ++l) {
    Vector v(static_cast<Eigen::Index>(d));
    for (Eigen::Index j = 0; j < v.size(); ++j) v(j) = noise.next();
    out.push_back(v.normalized());
  }
  xi_of(out);
  return out;
}

DataMatrices propagate_second_moment(const AugmentedSystem& aug, const SymMatrix& v0,
                                     int horizon) {
  if (horizon < 0) throw InvalidInputError("horizon must be >= 0");
  const Eigen::Index d = aug.A.rows();
  if (aug.A.cols() != d || v0.dim() != d) {
    throw DimensionError("second-moment propagation needs matching square matrices");
  }
  Matrix v = v0.matrix();
  Matrix stil = Matrix::Zero(d, d);
  for (int k = 0; k <= horizon; ++k) {
    stil += v;
    if (k == horizon) break;
    Matrix next = aug.A * v * aug.A.transpose();
    for (const Matrix& c : aug.C) next += c * v * c.transpose();
    v = 0.5 * (next + next.transpose());
  }
  DataMatrices dm;
  dm.Stil = SymMatrix::symmetrized(stil);
  dm.W = dm.Stil.matrix() * aug.A.transpose();
  dm.horizon = horizon;
  dm.paths = 0;
  return dm;
}

DataMatrices estimate_data_matrices(const RolloutBatch& batch) {
  if (batch.rollouts.empty()) throw DataError("empty rollout batch");
  const std::size_t steps = static_cast<std::size_t>(batch.horizon) + 2;
  const Eigen::Index d = batch.rollouts.front().v.empty()
                             ? 0
                             : batch.rollouts.front().v.front().size();

  // (initial_index, rollout_index) -> position, fixing the reduction order.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> order;
  for (std::size_t i = 0; i < batch.rollouts.size(); ++i) {
    const Rollout& r = batch.rollouts[i];
    if (r.exploded) {
      std::ostringstream os;
      os << "rollout " << r.rollout_index << " from initial vector " << r.initial_index
         << " exploded; the gain is not stabilizing the plant";
      throw DataError(os.str());
    }
    if (r.v.size() != steps) {
      throw DataError("rollout length does not match the batch horizon");
    }
    if (!order.emplace(std::make_pair(r.initial_index, r.rollout_index), i).second) {
      throw DataError("duplicate rollout index in batch");
    }
  }

  const std::size_t groups = std::max<std::size_t>(batch.initial_count, 1);
  std::vector<Matrix> s_sum(groups, Matrix::Zero(d, d));
  std::vector<Matrix> w_sum(groups, Matrix::Zero(d, d));
  std::vector<int> count(groups, 0);
  for (const auto& [key, idx] : order) {
    const std::size_t l = key.first;
    if (l >= groups) throw DataError("rollout initial index out of range");
    const Rollout& r = batch.rollouts[idx];
    Matrix s = Matrix::Zero(d, d);
    Matrix w = Matrix::Zero(d, d);
    for (std::size_t k = 0; k + 1 < steps; ++k) {
      s.noalias() += r.v[k] * r.v[k].transpose();
      w.noalias() += r.v[k] * r.v[k + 1].transpose();
    }
    s_sum[l] += s;
    w_sum[l] += w;
    ++count[l];
  }

  Matrix stil = Matrix::Zero(d, d);
  Matrix wm = Matrix::Zero(d, d);
  int min_paths = std::numeric_limits<int>::max();
  for (std::size_t l = 0; l < groups; ++l) {
    if (count[l] == 0) {
      throw DataError("initial vector " + std::to_string(l) + " has no rollouts");
    }
    stil += s_sum[l] / count[l];
    wm += w_sum[l] / count[l];
    min_paths = std::min(min_paths, count[l]);
  }
  DataMatrices dm;
  dm.Stil = SymMatrix::symmetrized(stil);
  dm.W = wm;
  dm.horizon = batch.horizon;
  dm.paths = min_paths;
  return dm;
}

DualIterate solve_dual_from_data(const DataMatrices& dm,
                                 const std::vector<Matrix>& c_blocks,
                                 const LambdaBlock& lam) {
  const Eigen::Index d = dm.Stil.dim();
  if (dm.W.rows() != d || dm.W.cols() != d || lam.value().dim() != d) {
    throw DimensionError("data matrices and Lambda have inconsistent dimensions");
  }
  for (const Matrix& c : c_blocks) {
    if (c.rows() != d || c.cols() != d) {
      throw DimensionError("diffusion block has shape " + shape_string(c) +
                           ", expected the augmented dimension");
    }
  }
  if (!all_finite(dm.Stil.matrix()) || !all_finite(dm.W)) {
    throw DataError("data matrices contain non-finite entries");
  }
  const double smin = d > 0 ? dm.Stil.min_eigenvalue() : 0.0;
  if (!(smin > 0.0)) {
    std::ostringstream os;
    os << "Stil is not positive definite (min eigenvalue " << smin << ")";
    throw DataError(os.str());
  }

  const Matrix& s = dm.Stil.matrix();
  Matrix op = kron(dm.W, dm.W) - kron(s, s);
  for (const Matrix& c : c_blocks) {
    const Matrix sc = s * c.transpose();
    op += kron(sc, sc);
  }
  const Matrix reduced = op * duplication_matrix(d);
  const Vector rhs = -vec(s * lam.matrix() * s);

  Eigen::JacobiSVD<Matrix> svd(reduced, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& sv = svd.singularValues();
  const double cond = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1)
                                              : std::numeric_limits<double>::infinity();
  if (!(cond <= 1e12)) {
    throw SingularSystemError(
        "data-driven dual system is singular or ill-conditioned (insufficient data or "
        "non-stabilizing gain)",
        cond);
  }
  const Vector sol = svd.solve(rhs);
  const Matrix x = unvech(sol, d);

  Matrix residual = dm.W * x * dm.W.transpose() + s * (lam.matrix() - x) * s;
  for (const Matrix& c : c_blocks) residual += s * (c.transpose() * x * c) * s;
  const double bound = 1e-8 * s.squaredNorm() * std::max(1.0, x.norm());
  if (!(residual.norm() <= bound)) {
    std::ostringstream os;
    os << "data-driven dual solve residual " << residual.norm() << " exceeds " << bound;
    throw DataError(os.str());
  }
  return DualIterate(SymMatrix::symmetrized(x), lam.states());
}

void validate(const LearnConfig& cfg) {
  if (cfg.horizon < 0) throw InvalidInputError("horizon must be >= 0");
  if (cfg.paths < 1) throw InvalidInputError("paths must be >= 1");
  if (!(cfg.tol >= 0.0)) throw InvalidInputError("tol must be >= 0");
  if (cfg.max_iter < 0) throw InvalidInputError("max_iter must be >= 0");
  if (cfg.threads < 1) throw InvalidInputError("threads must be >= 1");
}

SampledDataSource::SampledDataSource(const Plant& plant, std::vector<Vector> initial,
                                     LearnConfig cfg)
    : plant_(plant), initial_(std::move(initial)), cfg_(cfg) {
  validate(cfg_);
  xi_of(initial_);
  if (initial_.front().size() != plant_.states() + plant_.inputs()) {
    throw DimensionError("initial vectors do not match the plant dimensions");
  }
}

RolloutBatch SampledDataSource::simulate(const FeedbackGain& f, int iteration) const {
  check_plant_gain(plant_, f);
  const std::size_t r = initial_.size();
  const auto h = static_cast<std::size_t>(cfg_.paths);
  RolloutBatch batch;
  batch.horizon = cfg_.horizon;
  batch.initial_count = r;
  batch.rollouts.resize(r * h);

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const std::size_t l = idx / h;
      const std::size_t j = idx % h;
      NoiseSource noise(
          derive_seed(cfg_.master_seed, static_cast<std::uint64_t>(iteration), l, j),
          cfg_.noise);
      Rollout ro = simulate_rollout(plant_, f, initial_[l], cfg_.horizon, noise);
      ro.initial_index = l;
      ro.rollout_index = j;
      batch.rollouts[idx] = std::move(ro);
    }
  };

  const std::size_t total = r * h;
  const auto workers =
      std::min<std::size_t>(static_cast<std::size_t>(cfg_.threads), total);
  if (workers <= 1) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t t = 0; t < workers; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(total, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
    for (std::thread& th : pool) th.join();
  }
  return batch;
}

DataMatrices SampledDataSource::collect(const FeedbackGain& f, int iteration) {
  DataMatrices dm = estimate_data_matrices(simulate(f, iteration));
  dm.paths = cfg_.paths;
  return dm;
}

ExactMomentSource::ExactMomentSource(StochasticLinearSystem sys,
                                     std::vector<Vector> initial, int horizon)
    : sys_(std::move(sys)), xi_(xi_of(initial)), horizon_(horizon) {
  require_consistent(sys_);
  if (xi_.dim() != sys_.n() + sys_.m()) {
    throw DimensionError("initial vectors do not match the system dimensions");
  }
}

DataMatrices ExactMomentSource::collect(const FeedbackGain& f, int /*iteration*/) {
  return propagate_second_moment(augment(sys_, f), xi_, horizon_);
}

LearnResult run_primal_dual_from_data(DataSource& source,
                                      const std::vector<Matrix>& known_c,
                                      const std::vector<Matrix>& known_d,
                                      const CostWeights& w, const FeedbackGain& f0,
                                      IterationOptions options,
                                      const std::optional<LearningReference>& reference) {
  if (known_c.size() != known_d.size()) {
    throw DimensionError("channel-count mismatch between known C and D lists");
  }
  if (options.max_iter < 0) throw InvalidInputError("max_iter must be >= 0");
  const LambdaBlock lam = lambda_of(w);
  if (f0.states() != lam.states() || f0.inputs() != lam.inputs()) {
    throw DimensionError("initial gain does not match the cost weights");
  }
  const double f_ref_norm = reference ? reference->F.norm() : 0.0;
  const double x_ref_norm = reference ? reference->X.norm() : 0.0;
  const double blowup = kDivergenceFactor * std::max(1.0, f0.norm());

  LearnResult res;
  FeedbackGain f = f0;
  for (int i = 0; i < options.max_iter; ++i) {
    const auto start = std::chrono::steady_clock::now();
    const DataMatrices dm = source.collect(f, i);
    const DualIterate x =
        solve_dual_from_data(dm, augmented_diffusion(known_c, known_d, f), lam);
    const FeedbackGain next = primal_update(x);
    if (!all_finite(next.matrix()) || next.norm() > blowup) {
      std::ostringstream os;
      os << "learned gain diverged at iteration " << i << " (norm " << next.norm()
         << ")";
      throw DivergenceError(os.str());
    }

    IterationRecord rec;
    rec.iter = i;
    rec.value = x.matrix();
    rec.gain = f.matrix();
    rec.next_gain = next.matrix();
    rec.step_norm = (next.matrix() - f.matrix()).norm();
    rec.stil_min_eig = dm.Stil.min_eigenvalue();
    if (reference) {
      rec.rel_err_F = (next.matrix() - reference->F).norm() / f_ref_norm;
      rec.rel_err_X = (x.matrix() - reference->X).norm() / x_ref_norm;
    }
    rec.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    res.log.entries.push_back(std::move(rec));

    res.X = x;
    f = next;
    if (res.log.entries.back().step_norm <= options.tol) {
      res.log.converged = true;
      break;
    }
  }
  res.F = f;
  return res;
}

LearnResult run_partially_model_free(const Plant& plant,
                                     const std::vector<Matrix>& known_c,
                                     const std::vector<Matrix>& known_d,
                                     const CostWeights& w, const FeedbackGain& f0,
                                     const LearnConfig& cfg,
                                     const std::optional<LearningReference>& reference) {
  validate(cfg);
  const std::size_t r = cfg.initial_count == 0
                            ? static_cast<std::size_t>(plant.states() + plant.inputs())
                            : cfg.initial_count;
  SampledDataSource source(plant, generate_initial_basis(plant.states(), plant.inputs(), r),
                           cfg);
  return run_primal_dual_from_data(source, known_c, known_d, w, f0,
                                   IterationOptions{cfg.tol, cfg.max_iter}, reference);
}

double mc_cost(const Plant& plant, const CostWeights& w, const FeedbackGain& f,
               const Vector& z, int horizon, int paths, std::uint64_t seed,
               NoiseKind noise) {
  check_plant_gain(plant, f);
  if (z.size() != plant.states()) throw DimensionError("initial state has wrong length");
  if (horizon < 0 || paths < 1) throw InvalidInputError("need horizon >= 0, paths >= 1");
  const Matrix& q = w.Q.matrix();
  const Matrix& rm = w.R.matrix();
  double total = 0.0;
  for (int h = 0; h < paths; ++h) {
    NoiseSource src(derive_seed(seed, 0, 0, static_cast<std::uint64_t>(h)), noise);
    Vector x = z;
    double path = 0.0;
    for (int k = 0; k <= horizon; ++k) {
      const Vector u = f.matrix() * x;
      path += x.dot(q * x) + u.dot(rm * u);
      if (k == horizon) break;
      x = plant.step(x, u, src);
      if (exploded(x)) {
        throw DataError("Monte-Carlo path exploded; the gain is not stabilizing");
      }
    }
    total += path;
  }
  return total / paths;
}

}  // namespace slqr
