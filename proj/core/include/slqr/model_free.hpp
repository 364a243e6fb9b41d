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

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "slqr/iteration_log.hpp"
#include "slqr/primal_dual.hpp"
#include "slqr/rng.hpp"
#include "slqr/stochastic_model.hpp"

namespace slqr {

/// Black-box sampler of one transition x_{k+1} given (x_k, u_k). The learner
/// only ever sees plants through this interface.
class Plant {
 public:
  virtual ~Plant() = default;
  virtual Eigen::Index states() const = 0;
  virtual Eigen::Index inputs() const = 0;
  virtual Vector step(const Vector& x, const Vector& u, NoiseSource& noise) const = 0;
};

/// x_{k+1} = A x + B u + sum_i (C_i x + D_i u) w_i, one draw per channel.
class LinearPlant final : public Plant {
 public:
  explicit LinearPlant(StochasticLinearSystem sys);

  Eigen::Index states() const override { return sys_.n(); }
  Eigen::Index inputs() const override { return sys_.m(); }
  Vector step(const Vector& x, const Vector& u, NoiseSource& noise) const override;

 private:
  StochasticLinearSystem sys_;
};

/// Rollouts whose state norm exceeds this are stopped and flagged.
inline constexpr double kExplosionNorm = 1e12;

/// Augmented states v_0..v_{M+1}; u_0 is taken from v_0, u_k = F x_k after.
struct Rollout {
  std::vector<Vector> v;
  std::uint64_t seed = 0;
  std::size_t initial_index = 0;
  std::size_t rollout_index = 0;
  bool exploded = false;
};

struct RolloutBatch {
  std::vector<Rollout> rollouts;
  int horizon = 0;
  std::size_t initial_count = 0;
};

Rollout simulate_rollout(const Plant& plant, const FeedbackGain& f, const Vector& v0,
                         int horizon, NoiseSource& noise);
Rollout simulate_rollout(const StochasticLinearSystem& sys, const FeedbackGain& f,
                         const Vector& v0, int horizon, NoiseSource& noise);

/// Xi = sum_l v_l v_l'. Throws DataError unless Xi is positive definite.
SymMatrix xi_of(const std::vector<Vector>& v0);

/// r scaled standard-basis vectors of R^{n+m}, cycling through the basis when
/// r > n+m. `scales` (length n+m, or empty for all ones) multiplies e_j.
/// Throws InvalidInputError when r < n+m.
std::vector<Vector> generate_initial_basis(Eigen::Index n, Eigen::Index m,
                                           std::size_t r,
                                           const std::vector<double>& scales = {});

/// r independent uniformly random unit vectors; Xi is checked PD.
std::vector<Vector> random_initial_basis(Eigen::Index n, Eigen::Index m, std::size_t r,
                                         std::uint64_t seed);

/// Stil = sum_l sum_{k<=M} E[v_k v_k'], W = sum_l sum_{k<=M} E[v_k v_{k+1}'].
struct DataMatrices {
  SymMatrix Stil;
  Matrix W;
  int horizon = 0;
  int paths = 0;
};

/// Exact moments: V_{k+1} = A_F V_k A_F' + sum C_F V_k C_F', W = Stil A_F'.
DataMatrices propagate_second_moment(const AugmentedSystem& aug, const SymMatrix& v0,
                                     int horizon);

/// Sample averages per initial vector, summed over initial vectors. Each
/// rollout is reduced on its own and the partial sums are combined in
/// (initial_index, rollout_index) order. Throws DataError for an empty batch,
/// an initial vector without rollouts, or an exploded rollout.
DataMatrices estimate_data_matrices(const RolloutBatch& batch);

/// Solves W X W' + Stil (sum C_F' X C_F) Stil + Stil (Lambda - X) Stil = 0 for
/// symmetric X in vech coordinates. Throws DataError when Stil is not
/// positive definite or the residual check fails, SingularSystemError when the
/// reduced system is singular or its condition exceeds 1e12.
DualIterate solve_dual_from_data(const DataMatrices& dm,
                                 const std::vector<Matrix>& c_blocks,
                                 const LambdaBlock& lam);

struct LearnConfig {
  int horizon = 50;          // M
  int paths = 200;           // H
  std::size_t initial_count = 0;  // r; 0 means n+m
  double tol = 1e-9;
  int max_iter = 20;
  std::uint64_t master_seed = 1;
  NoiseKind noise = NoiseKind::gaussian;
  /// Rollout worker threads; results do not depend on this value.
  int threads = 1;
};

/// Throws InvalidInputError for out-of-range fields.
void validate(const LearnConfig& cfg);

/// Produces the data matrices of a gain at a given learning iteration.
class DataSource {
 public:
  virtual ~DataSource() = default;
  virtual DataMatrices collect(const FeedbackGain& f, int iteration) = 0;
};

/// Monte-Carlo estimate from rollouts of a black-box plant.
class SampledDataSource final : public DataSource {
 public:
  SampledDataSource(const Plant& plant, std::vector<Vector> initial, LearnConfig cfg);
  DataMatrices collect(const FeedbackGain& f, int iteration) override;

  RolloutBatch simulate(const FeedbackGain& f, int iteration) const;

 private:
  const Plant& plant_;
  std::vector<Vector> initial_;
  LearnConfig cfg_;
};

/// Exact expectations from the full model; a test oracle, not a learner input.
class ExactMomentSource final : public DataSource {
 public:
  ExactMomentSource(StochasticLinearSystem sys, std::vector<Vector> initial, int horizon);
  DataMatrices collect(const FeedbackGain& f, int iteration) override;

 private:
  StochasticLinearSystem sys_;
  SymMatrix xi_;
  int horizon_;
};

/// Optional ground truth for the relative-error columns of the log.
struct LearningReference {
  Matrix F;
  Matrix X;
};

struct LearnResult {
  DualIterate X;
  FeedbackGain F;
  IterationLog log;

  bool converged() const noexcept { return log.converged; }
};

/// Gains whose norm exceeds this multiple of max(1, ||F0||) abort learning.
inline constexpr double kDivergenceFactor = 1e6;

/// Data-driven primal-dual loop over any data source. In log entry i,
/// rel_err_F refers to the gain produced by iteration i and rel_err_X to X^i.
LearnResult run_primal_dual_from_data(DataSource& source,
                                      const std::vector<Matrix>& known_c,
                                      const std::vector<Matrix>& known_d,
                                      const CostWeights& w, const FeedbackGain& f0,
                                      IterationOptions options,
                                      const std::optional<LearningReference>& reference = {});

/// Partially model-free learning: drift matrices are reached only through
/// `plant`; the diffusion matrices are supplied openly.
LearnResult run_partially_model_free(const Plant& plant,
                                     const std::vector<Matrix>& known_c,
                                     const std::vector<Matrix>& known_d,
                                     const CostWeights& w, const FeedbackGain& f0,
                                     const LearnConfig& cfg,
                                     const std::optional<LearningReference>& reference = {});

/// (1/H) sum_h sum_{k<=horizon} x_k'Qx_k + u_k'Ru_k with u_k = F x_k, x_0 = z.
/// Throws DataError if a path explodes.
double mc_cost(const Plant& plant, const CostWeights& w, const FeedbackGain& f,
               const Vector& z, int horizon, int paths, std::uint64_t seed,
               NoiseKind noise = NoiseKind::gaussian);

}  // namespace slqr
