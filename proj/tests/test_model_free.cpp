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

#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <set>

#include "oracles.hpp"
#include "slqr/arm_model.hpp"
#include "slqr/errors.hpp"
#include "slqr/ms_analysis.hpp"
#include "slqr/model_free.hpp"

namespace slqr {
namespace {

using slqr::testing::RandomInstance;

StochasticLinearSystem noiseless(StochasticLinearSystem sys) {
  for (Matrix& c : sys.C) c.setZero();
  for (Matrix& d : sys.D) d.setZero();
  return sys;
}

TEST(Rng, DeriveSeedSeparatesIndexTuples) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t it = 0; it < 4; ++it)
    for (std::uint64_t l = 0; l < 8; ++l)
      for (std::uint64_t h = 0; h < 64; ++h) seen.insert(derive_seed(7, it, l, h));
  EXPECT_EQ(seen.size(), 4u * 8u * 64u);
  EXPECT_NE(derive_seed(1, 0, 0, 0), derive_seed(2, 0, 0, 0));
  EXPECT_EQ(derive_seed(3, 1, 2, 3), derive_seed(3, 1, 2, 3));
}

TEST(Rng, NoiseKindsAndDeterminism) {
  NoiseSource a(42, NoiseKind::gaussian);
  NoiseSource b(42, NoiseKind::gaussian);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  NoiseSource r(42, NoiseKind::rademacher);
  double sum = 0.0;
  double sq = 0.0;
  const int count = 20000;
  for (int i = 0; i < count; ++i) {
    const double v = r.next();
    EXPECT_TRUE(v == 1.0 || v == -1.0);
    sum += v;
    sq += v * v;
  }
  EXPECT_LT(std::abs(sum / count), 0.05);
  EXPECT_DOUBLE_EQ(sq / count, 1.0);
  EXPECT_EQ(parse_noise_kind("rademacher"), NoiseKind::rademacher);
  EXPECT_EQ(to_string(NoiseKind::gaussian), "gaussian");
  EXPECT_THROW(parse_noise_kind("uniform"), InvalidInputError);
}

TEST(InitialBasis, StandardBasisGivesIdentity) {
  const auto v = generate_initial_basis(2, 1, 3);
  EXPECT_EQ(xi_of(v).matrix(), Matrix::Identity(3, 3));
}

TEST(InitialBasis, TooFewVectorsRejected) {
  EXPECT_THROW(generate_initial_basis(2, 1, 2), InvalidInputError);
}

TEST(InitialBasis, RankDeficientSetRejected) {
  const std::vector<Vector> dup(3, Vector::Unit(3, 0));
  EXPECT_THROW(xi_of(dup), DataError);
}

TEST(InitialBasis, ScalesAndCycling) {
  const auto v = generate_initial_basis(1, 1, 5, {2.0, 3.0});
  ASSERT_EQ(v.size(), 5u);
  EXPECT_EQ(xi_of(v).matrix(), (Matrix(2, 2) << 12.0, 0.0, 0.0, 18.0).finished());
}

TEST(InitialBasis, RandomUnitVectorsArePositiveDefinite) {
  const auto v = random_initial_basis(3, 2, 10, 99);
  for (const Vector& x : v) EXPECT_NEAR(x.norm(), 1.0, 1e-15);
  EXPECT_GT(xi_of(v).min_eigenvalue(), 0.0);
}

TEST(SimulateRollout, NoiselessMatchesMatrixPowers) {
  const RandomInstance inst = slqr::testing::random_stabilizable(41);
  const StochasticLinearSystem sys = noiseless(inst.sys);
  const FeedbackGain f(inst.f0);
  const Eigen::Index d = sys.n() + sys.m();
  const Vector v0 = Vector::LinSpaced(d, 1.0, 2.0);
  NoiseSource noise(1, NoiseKind::gaussian);
  const Rollout r = simulate_rollout(sys, f, v0, 10, noise);
  ASSERT_EQ(r.v.size(), 12u);
  const AugmentedSystem aug = augment(sys, f);
  Vector top(sys.n());
  top = sys.A * v0.head(sys.n()) + sys.B * v0.tail(sys.m());
  Vector expected(d);
  expected << top, f.matrix() * top;
  for (int k = 1; k <= 11; ++k) {
    EXPECT_LE((r.v[static_cast<std::size_t>(k)] - expected).norm(), 1e-10 * (1.0 + expected.norm()));
    expected = aug.A * expected;
  }
}

TEST(SimulateRollout, FixedSeedIsBitIdentical) {
  const RandomInstance inst = slqr::testing::random_stabilizable(42);
  const FeedbackGain f(inst.f0);
  const Vector v0 = Vector::Ones(inst.sys.n() + inst.sys.m());
  NoiseSource a(5, NoiseKind::gaussian);
  NoiseSource b(5, NoiseKind::gaussian);
  const Rollout ra = simulate_rollout(inst.sys, f, v0, 30, a);
  const Rollout rb = simulate_rollout(inst.sys, f, v0, 30, b);
  ASSERT_EQ(ra.v.size(), rb.v.size());
  for (std::size_t k = 0; k < ra.v.size(); ++k) EXPECT_EQ(ra.v[k], rb.v[k]);
  EXPECT_EQ(ra.seed, 5u);
}

TEST(SimulateRollout, ExplosionIsFlagged) {
  StochasticLinearSystem sys = slqr::testing::scalar_system();
  sys.A(0, 0) = 50.0;
  NoiseSource noise(1, NoiseKind::gaussian);
  const Rollout r = simulate_rollout(sys, FeedbackGain(Matrix::Zero(1, 1)),
                                     Vector::Ones(2), 100, noise);
  EXPECT_TRUE(r.exploded);
  EXPECT_LT(r.v.size(), 102u);
}

TEST(SimulateRollout, ShapeErrors) {
  NoiseSource noise(1, NoiseKind::gaussian);
  EXPECT_THROW(simulate_rollout(slqr::testing::scalar_system(), FeedbackGain(Matrix::Zero(1, 1)),
                                Vector::Ones(3), 5, noise),
               DimensionError);
}

TEST(PropagateSecondMoment, HorizonZero) {
  const RandomInstance inst = slqr::testing::random_stabilizable(43);
  const AugmentedSystem aug = augment(inst.sys, FeedbackGain(inst.f0));
  const Eigen::Index d = aug.A.rows();
  const DataMatrices dm = propagate_second_moment(aug, SymMatrix::identity(d), 0);
  EXPECT_EQ(dm.Stil.matrix(), Matrix::Identity(d, d));
  EXPECT_EQ(dm.W, aug.A.transpose());
}

TEST(PropagateSecondMoment, ZeroInitialMoment) {
  const RandomInstance inst = slqr::testing::random_stabilizable(44);
  const AugmentedSystem aug = augment(inst.sys, FeedbackGain(inst.f0));
  const DataMatrices dm = propagate_second_moment(aug, SymMatrix::zero(aug.A.rows()), 20);
  EXPECT_TRUE(dm.Stil.matrix().isZero(0.0));
  EXPECT_TRUE(dm.W.isZero(0.0));
}

TEST(PropagateSecondMoment, LongHorizonApproachesDualGle) {
  const RandomInstance inst = slqr::testing::random_stabilizable(45);
  const AugmentedSystem aug = augment(inst.sys, FeedbackGain(inst.f0));
  const SymMatrix v0 = SymMatrix::identity(aug.A.rows());
  const SymMatrix limit = solve_gle_dual(aug.A, aug.C, v0);
  const DataMatrices dm = propagate_second_moment(aug, v0, 2000);
  EXPECT_LE((dm.Stil.matrix() - limit.matrix()).norm(), 1e-10 * (1.0 + limit.norm()));
}

RolloutBatch batch_from(const StochasticLinearSystem& sys, const FeedbackGain& f,
                        const std::vector<Vector>& initial, int horizon, int paths,
                        std::uint64_t seed) {
  RolloutBatch b;
  b.horizon = horizon;
  b.initial_count = initial.size();
  for (std::size_t l = 0; l < initial.size(); ++l) {
    for (int h = 0; h < paths; ++h) {
      NoiseSource noise(derive_seed(seed, 0, l, static_cast<std::uint64_t>(h)),
                        NoiseKind::gaussian);
      Rollout r = simulate_rollout(sys, f, initial[l], horizon, noise);
      r.initial_index = l;
      r.rollout_index = static_cast<std::size_t>(h);
      b.rollouts.push_back(std::move(r));
    }
  }
  return b;
}

TEST(EstimateDataMatrices, NoiselessSinglePathIsExact) {
  const RandomInstance inst = slqr::testing::random_stabilizable(46);
  const StochasticLinearSystem sys = noiseless(inst.sys);
  const FeedbackGain f(inst.f0);
  const auto initial = generate_initial_basis(sys.n(), sys.m(), sys.n() + sys.m());
  const DataMatrices est = estimate_data_matrices(batch_from(sys, f, initial, 15, 1, 1));
  const DataMatrices exact = propagate_second_moment(augment(sys, f), xi_of(initial), 15);
  EXPECT_LE((est.Stil.matrix() - exact.Stil.matrix()).norm(), 1e-10 * (1.0 + exact.Stil.norm()));
  EXPECT_LE((est.W - exact.W).norm(), 1e-10 * (1.0 + exact.W.norm()));
}

TEST(EstimateDataMatrices, LargeSampleWithinFivePercent) {
  const RandomInstance plant = slqr::testing::two_state_plant();
  const FeedbackGain f(plant.f0);
  const auto initial = generate_initial_basis(2, 1, 3);
  const DataMatrices est = estimate_data_matrices(batch_from(plant.sys, f, initial, 20, 10000, 3));
  const DataMatrices exact = propagate_second_moment(augment(plant.sys, f), xi_of(initial), 20);
  EXPECT_LE((est.Stil.matrix() - exact.Stil.matrix()).norm(), 0.05 * exact.Stil.norm());
  EXPECT_LE((est.W - exact.W).norm(), 0.05 * exact.W.norm());
}

TEST(EstimateDataMatrices, RejectsEmptyAndExplodedBatches) {
  EXPECT_THROW(estimate_data_matrices(RolloutBatch{}), DataError);
  const RandomInstance plant = slqr::testing::two_state_plant();
  RolloutBatch b =
      batch_from(plant.sys, FeedbackGain(plant.f0), generate_initial_basis(2, 1, 3), 5, 2, 1);
  b.rollouts[3].exploded = true;
  EXPECT_THROW(estimate_data_matrices(b), DataError);
}

TEST(EstimateDataMatrices, IndependentOfRolloutOrder) {
  const RandomInstance plant = slqr::testing::two_state_plant();
  RolloutBatch b =
      batch_from(plant.sys, FeedbackGain(plant.f0), generate_initial_basis(2, 1, 3), 10, 7, 1);
  const DataMatrices a = estimate_data_matrices(b);
  std::reverse(b.rollouts.begin(), b.rollouts.end());
  const DataMatrices c = estimate_data_matrices(b);
  EXPECT_EQ(a.Stil.matrix(), c.Stil.matrix());
  EXPECT_EQ(a.W, c.W);
}

class ExactMoments : public ::testing::TestWithParam<int> {};

TEST_P(ExactMoments, DataSolveEqualsModelBasedDualUpdate) {
  const RandomInstance inst = slqr::testing::random_stabilizable(1200 + GetParam());
  const FeedbackGain f(inst.f0);
  const DualIterate model = dual_update(inst.sys, inst.w, f);
  const AugmentedSystem aug = augment(inst.sys, f);
  for (int horizon : {0, 1, 5, 50}) {
    const DataMatrices dm =
        propagate_second_moment(aug, SymMatrix::identity(aug.A.rows()), horizon);
    const DualIterate x = solve_dual_from_data(
        dm, augmented_diffusion(inst.sys.C, inst.sys.D, f), lambda_of(inst.w));
    EXPECT_LE((x.matrix() - model.matrix()).norm(), 1e-8 * (1.0 + model.value().norm()))
        << "M = " << horizon;
  }
}

TEST_P(ExactMoments, LearningLoopReproducesModelBasedIterates) {
  const RandomInstance inst = slqr::testing::random_stabilizable(1200 + GetParam());
  const FeedbackGain f0(inst.f0);
  const PrimalDualResult pd = run_model_based(inst.sys, inst.w, f0);
  ExactMomentSource source(inst.sys,
                           generate_initial_basis(inst.sys.n(), inst.sys.m(),
                                                  inst.sys.n() + inst.sys.m()),
                           10);
  const LearnResult learn =
      run_primal_dual_from_data(source, inst.sys.C, inst.sys.D, inst.w, f0, {});
  ASSERT_TRUE(learn.converged());
  ASSERT_EQ(learn.log.size(), pd.log.size());
  for (std::size_t i = 0; i < pd.log.size(); ++i) {
    const auto& a = pd.log.entries[i];
    const auto& b = learn.log.entries[i];
    EXPECT_LE((a.value - b.value).norm(), 1e-8 * (1.0 + a.value.norm()));
    EXPECT_LE((a.next_gain - b.next_gain).norm(), 1e-8);
  }
}

INSTANTIATE_TEST_SUITE_P(Instances, ExactMoments, ::testing::Range(0, 10));

TEST(SolveDualFromData, DeterministicPlantWithoutChannels) {
  const RandomInstance inst = slqr::testing::random_deterministic(61);
  const FeedbackGain f(inst.f0);
  const AugmentedSystem aug = augment(inst.sys, f);
  const DataMatrices dm = propagate_second_moment(aug, SymMatrix::identity(aug.A.rows()), 8);
  const DualIterate x = solve_dual_from_data(dm, {}, lambda_of(inst.w));
  const std::vector<Matrix> none;
  const SymMatrix ref = solve_gle_primal(aug.A, none, lambda_of(inst.w).value());
  EXPECT_LE((x.matrix() - ref.matrix()).norm(), 1e-8 * (1.0 + ref.norm()));
}

TEST(SolveDualFromData, ZeroLambdaGivesZero) {
  const RandomInstance inst = slqr::testing::random_stabilizable(62);
  const FeedbackGain f(inst.f0);
  const AugmentedSystem aug = augment(inst.sys, f);
  const DataMatrices dm = propagate_second_moment(aug, SymMatrix::identity(aug.A.rows()), 5);
  const LambdaBlock zero(SymMatrix::zero(inst.sys.n()), SymMatrix::zero(inst.sys.m()));
  EXPECT_LE(solve_dual_from_data(dm, aug.C, zero).matrix().norm(), 1e-12);
}

TEST(SolveDualFromData, RejectsSingularStil) {
  const RandomInstance inst = slqr::testing::random_stabilizable(63);
  const FeedbackGain f(inst.f0);
  const AugmentedSystem aug = augment(inst.sys, f);
  DataMatrices dm = propagate_second_moment(aug, SymMatrix::identity(aug.A.rows()), 0);
  dm.Stil = SymMatrix::zero(aug.A.rows());
  EXPECT_THROW(solve_dual_from_data(dm, aug.C, lambda_of(inst.w)), DataError);
}

TEST(SolveDualFromData, ErrorShrinksLikeInverseSquareRootOfPaths) {
  const RandomInstance plant = slqr::testing::two_state_plant();
  const FeedbackGain f(plant.f0);
  const auto initial = generate_initial_basis(2, 1, 3);
  const DualIterate exact = dual_update(plant.sys, plant.w, f);
  const std::vector<Matrix> blocks = augmented_diffusion(plant.sys.C, plant.sys.D, f);
  const int seeds = 8;
  std::vector<double> err;
  for (int h : {100, 1000, 10000}) {
    double sum = 0.0;
    for (int s = 0; s < seeds; ++s) {
      const DataMatrices dm =
          estimate_data_matrices(batch_from(plant.sys, f, initial, 25, h, 500 + s));
      sum += (solve_dual_from_data(dm, blocks, lambda_of(plant.w)).matrix() - exact.matrix())
                 .norm();
    }
    err.push_back(sum / seeds);
  }
  // A tenfold increase in H should shrink the error by sqrt(10), within a
  // factor of three either way.
  const double target = std::sqrt(10.0);
  for (std::size_t i = 0; i + 1 < err.size(); ++i) {
    const double ratio = err[i] / err[i + 1];
    EXPECT_GT(ratio, target / 3.0) << "H step " << i;
    EXPECT_LT(ratio, target * 3.0) << "H step " << i;
  }
}

LearnConfig small_config() {
  LearnConfig cfg;
  cfg.horizon = 30;
  cfg.paths = 100;
  cfg.max_iter = 6;
  cfg.master_seed = 17;
  return cfg;
}

TEST(RunPartiallyModelFree, SeedDeterminismAndThreadIndependence) {
  const RandomInstance plant = slqr::testing::two_state_plant();
  const LinearPlant lp(plant.sys);
  LearnConfig cfg = small_config();
  const LearnResult a =
      run_partially_model_free(lp, plant.sys.C, plant.sys.D, plant.w, FeedbackGain(plant.f0), cfg);
  const LearnResult b =
      run_partially_model_free(lp, plant.sys.C, plant.sys.D, plant.w, FeedbackGain(plant.f0), cfg);
  cfg.threads = 4;
  const LearnResult c =
      run_partially_model_free(lp, plant.sys.C, plant.sys.D, plant.w, FeedbackGain(plant.f0), cfg);
  ASSERT_EQ(a.log.size(), b.log.size());
  ASSERT_EQ(a.log.size(), c.log.size());
  for (std::size_t i = 0; i < a.log.size(); ++i) {
    EXPECT_EQ(a.log.entries[i].value, b.log.entries[i].value);
    EXPECT_EQ(a.log.entries[i].next_gain, b.log.entries[i].next_gain);
    EXPECT_EQ(a.log.entries[i].value, c.log.entries[i].value);
    EXPECT_EQ(a.log.entries[i].next_gain, c.log.entries[i].next_gain);
  }
  cfg.master_seed = 18;
  const LearnResult d =
      run_partially_model_free(lp, plant.sys.C, plant.sys.D, plant.w, FeedbackGain(plant.f0), cfg);
  EXPECT_NE(a.log.entries.back().next_gain, d.log.entries.back().next_gain);
}

// Counts transitions and exposes nothing but the sampler interface.
class CountingPlant final : public Plant {
 public:
  explicit CountingPlant(const StochasticLinearSystem& sys) : inner_(sys) {}
  Eigen::Index states() const override { return inner_.states(); }
  Eigen::Index inputs() const override { return inner_.inputs(); }
  Vector step(const Vector& x, const Vector& u, NoiseSource& noise) const override {
    ++calls_;
    return inner_.step(x, u, noise);
  }
  long calls() const { return calls_.load(); }

 private:
  LinearPlant inner_;
  mutable std::atomic<long> calls_{0};
};

TEST(RunPartiallyModelFree, DriftReachedOnlyThroughSampler) {
  const RandomInstance plant = slqr::testing::two_state_plant();
  const CountingPlant counting(plant.sys);
  const LinearPlant direct(plant.sys);
  const LearnConfig cfg = small_config();
  const LearnResult a = run_partially_model_free(counting, plant.sys.C, plant.sys.D, plant.w,
                                                 FeedbackGain(plant.f0), cfg);
  const LearnResult b = run_partially_model_free(direct, plant.sys.C, plant.sys.D, plant.w,
                                                 FeedbackGain(plant.f0), cfg);
  EXPECT_EQ(a.F.matrix(), b.F.matrix());
  // r * H rollouts of M + 1 transitions per iteration.
  EXPECT_EQ(counting.calls(), static_cast<long>(a.log.size()) * 3 * cfg.paths * (cfg.horizon + 1));
}

TEST(RunPartiallyModelFree, RademacherNoiseConverges) {
  const RandomInstance plant = slqr::testing::two_state_plant();
  const GareSolution ref = solve_gare_pi(plant.sys, plant.w, FeedbackGain(plant.f0));
  LearnConfig cfg = small_config();
  cfg.noise = NoiseKind::rademacher;
  cfg.paths = 400;
  const LearnResult res = run_partially_model_free(LinearPlant(plant.sys), plant.sys.C,
                                                   plant.sys.D, plant.w, FeedbackGain(plant.f0),
                                                   cfg, LearningReference{ref.F.matrix(), ref.X.matrix()});
  EXPECT_LT(res.log.entries.back().rel_err_F, 0.05);
}

TEST(RunPartiallyModelFree, ArmLearningApproachesModelBasedGain) {
  const ArmModel arm = build_arm_model(ArmParams{});
  const FeedbackGain f0(arm_default_initial_gain());
  const PrimalDualResult pd = run_model_based(arm.system, arm.weights, f0);
  LearnConfig cfg;
  cfg.max_iter = 5;
  const LearnResult res =
      run_partially_model_free(LinearPlant(arm.system), arm.system.C, arm.system.D, arm.weights,
                               f0, cfg, LearningReference{pd.F.matrix(), pd.X.matrix()});
  ASSERT_EQ(res.log.size(), 5u);
  // The first update starts far from the optimum; later ones sit at the
  // sampling noise floor.
  for (const IterationRecord& r : res.log.entries) {
    EXPECT_GT(r.stil_min_eig, 0.0);
    if (r.iter >= 1) {
      EXPECT_LT(r.rel_err_F, 0.05) << "iteration " << r.iter;
    }
  }
  EXPECT_LT(res.log.entries.back().rel_err_F, res.log.entries.front().rel_err_F);
}

TEST(LearnConfig, ValidationRejectsOutOfRangeFields) {
  LearnConfig cfg;
  EXPECT_NO_THROW(validate(cfg));
  cfg.paths = 0;
  EXPECT_THROW(validate(cfg), InvalidInputError);
  cfg = {};
  cfg.horizon = -1;
  EXPECT_THROW(validate(cfg), InvalidInputError);
  cfg = {};
  cfg.threads = 0;
  EXPECT_THROW(validate(cfg), InvalidInputError);
  cfg = {};
  cfg.tol = std::nan("");
  EXPECT_THROW(validate(cfg), InvalidInputError);
}

TEST(McCost, ZeroInitialStateCostsNothing) {
  const RandomInstance plant = slqr::testing::two_state_plant();
  EXPECT_EQ(mc_cost(LinearPlant(plant.sys), plant.w, FeedbackGain(plant.f0), Vector::Zero(2), 50,
                    10, 1),
            0.0);
}

TEST(McCost, NoiselessScalarGeometricSeries) {
  StochasticLinearSystem sys = noiseless(slqr::testing::scalar_system());
  const double f = -0.5;
  const double a = 1.0 + f;  // closed loop 0.5
  const int horizon = 60;
  const double per_step = 1.0 + f * f;  // q + f r f
  double expected = 0.0;
  for (int k = 0; k <= horizon; ++k) expected += per_step * std::pow(a * a, k);
  const double got = mc_cost(LinearPlant(sys), slqr::testing::scalar_weights(),
                             FeedbackGain(Matrix::Constant(1, 1, f)), Vector::Ones(1), horizon, 3, 1);
  EXPECT_NEAR(got, expected, 1e-12 * expected);
}

TEST(McCost, MatchesPolicyValue) {
  const RandomInstance plant = slqr::testing::two_state_plant();
  const FeedbackGain f(plant.f0);
  const SymMatrix p = policy_evaluate(plant.sys, plant.w, f);
  const Vector z = Eigen::Vector2d(0.4, 1.0);
  const double exact = z.dot(p.matrix() * z);
  const double mc = mc_cost(LinearPlant(plant.sys), plant.w, f, z, 60, 10000, 3);
  EXPECT_NEAR(mc, exact, 0.05 * exact);
}

TEST(McCost, NearOptimalScalarPolicyWithinTwoPercent) {
  const FeedbackGain f(Matrix::Constant(1, 1, -0.6292));
  const StochasticLinearSystem sys = slqr::testing::scalar_system();
  const SymMatrix p = policy_evaluate(sys, slqr::testing::scalar_weights(), f);
  const double mc =
      mc_cost(LinearPlant(sys), slqr::testing::scalar_weights(), f, Vector::Ones(1), 60, 10000, 9);
  EXPECT_NEAR(mc, p(0, 0), 0.02 * p(0, 0));
}

TEST(McCost, ExplodingPathThrows) {
  StochasticLinearSystem sys = slqr::testing::scalar_system();
  sys.A(0, 0) = 50.0;
  EXPECT_THROW(mc_cost(LinearPlant(sys), slqr::testing::scalar_weights(),
                       FeedbackGain(Matrix::Zero(1, 1)), Vector::Ones(1), 200, 2, 1),
               DataError);
}

}  // namespace
}  // namespace slqr
