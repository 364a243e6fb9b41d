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

#include <random>

#include "oracles.hpp"
#include "slqr/arm_model.hpp"
#include "slqr/errors.hpp"
#include "slqr/ms_analysis.hpp"
#include "slqr/primal_dual.hpp"

namespace slqr {
namespace {

using slqr::testing::RandomInstance;

const CostWeights kUnit = {SymMatrix::identity(1), SymMatrix::identity(1)};

DualIterate scalar_dual(double x11, double x12, double x22) {
  return DualIterate(SymMatrix((Matrix(2, 2) << x11, x12, x12, x22).finished()), 1);
}

class RandomPd : public ::testing::TestWithParam<int> {
 protected:
  RandomInstance inst = slqr::testing::random_stabilizable(900 + GetParam());
};

TEST_P(RandomPd, DualUpdateInducesPolicyValue) {
  const FeedbackGain f(inst.f0);
  const DualIterate x = dual_update(inst.sys, inst.w, f);
  const SymMatrix p = policy_evaluate(inst.sys, inst.w, f);
  EXPECT_LE((induced_value(x, f).matrix() - p.matrix()).norm(), 1e-9 * (1.0 + p.norm()));
  EXPECT_TRUE(x.value().is_psd());
  const AugmentedSystem aug = augment(inst.sys, f);
  EXPECT_LE(gle_primal_residual(aug.A, aug.C, lambda_of(inst.w).matrix(), x.matrix()).norm(),
            1e-10 * (1.0 + x.value().norm()));
}

TEST_P(RandomPd, OptimalGainGivesOptimalQFunction) {
  const GareSolution sol = solve_gare_pi(inst.sys, inst.w, FeedbackGain(inst.f0));
  const DualIterate x = dual_update(inst.sys, inst.w, sol.F);
  EXPECT_LE((x.matrix() - sol.X.matrix()).norm(), 1e-8 * (1.0 + sol.X.norm()));
}

TEST_P(RandomPd, IteratesMatchPolicyIteration) {
  const FeedbackGain f0(inst.f0);
  const GareSolution pi = solve_gare_pi(inst.sys, inst.w, f0);
  const PrimalDualResult pd = run_model_based(inst.sys, inst.w, f0);
  ASSERT_TRUE(pd.converged());
  ASSERT_EQ(pd.log.size(), pi.log.size());
  for (std::size_t i = 0; i < pd.log.size(); ++i) {
    const auto& a = pi.log.entries[i];
    const auto& b = pd.log.entries[i];
    const DualIterate xi(SymMatrix::symmetrized(b.value), inst.sys.n());
    EXPECT_LE((induced_value(xi, FeedbackGain(b.gain)).matrix() - a.value).norm(), 1e-9);
    EXPECT_LE((b.next_gain - a.next_gain).norm(), 1e-9);
  }
  EXPECT_LE((pd.F.matrix() - pi.F.matrix()).norm(), 1e-9);
  EXPECT_LE((pd.P.matrix() - pi.P.matrix()).norm(), 1e-9 * (1.0 + pi.P.norm()));
}

TEST_P(RandomPd, CertificateAtOptimum) {
  const PrimalDualResult pd = run_model_based(inst.sys, inst.w, FeedbackGain(inst.f0));
  const Eigen::Index d = inst.sys.n() + inst.sys.m();
  const Certificate c = certify(inst.sys, inst.w, pd.F, pd.X, SymMatrix::identity(d));
  EXPECT_LE(c.kkt.r_primal, 1e-8);
  EXPECT_LE(c.kkt.r_dual, 1e-8);
  EXPECT_LE(c.kkt.r_station, 1e-8);
  EXPECT_LE(c.kkt.complementarity, 1e-8);
  EXPECT_GT(c.kkt.s_min, 0.0);
  EXPECT_LE(std::abs(c.duality_gap), 1e-8 * (1.0 + std::abs(c.dual_value)));
  // The gap is a trace identity, so recompute it independently.
  const double primal = (lambda_of(inst.w).matrix() * c.Stil.matrix()).trace();
  const double dual = pd.X.matrix().trace();
  EXPECT_NEAR(c.primal_value, primal, 1e-10 * (1.0 + std::abs(primal)));
  EXPECT_NEAR(c.dual_value, dual, 1e-10 * (1.0 + std::abs(dual)));
}

TEST_P(RandomPd, TracesAgreeForAnyStabilizingGain) {
  // Per-policy identity: Tr(Lambda S_F) = Tr(Xi X_F) for a suboptimal F.
  std::mt19937_64 rng(GetParam());
  std::normal_distribution<double> g;
  const Eigen::Index d = inst.sys.n() + inst.sys.m();
  Matrix h(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) h(i, j) = g(rng);
  const SymMatrix xi = SymMatrix::symmetrized(h * h.transpose() + 0.1 * Matrix::Identity(d, d));
  const FeedbackGain f(inst.f0);
  const DualIterate x = dual_update(inst.sys, inst.w, f);
  const AugmentedSystem aug = augment(inst.sys, f);
  const SymMatrix s = solve_gle_dual(aug.A, aug.C, xi);
  const double gap = duality_gap(s, x, lambda_of(inst.w), xi);
  EXPECT_LE(std::abs(gap), 1e-9 * (1.0 + std::abs((xi.matrix() * x.matrix()).trace())));
}

TEST_P(RandomPd, UnmodifiedPrimalStructure) {
  std::mt19937_64 rng(100 + GetParam());
  std::normal_distribution<double> g;
  const Eigen::Index n = inst.sys.n();
  Matrix h(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) h(i, j) = g(rng);
  const SymMatrix z = SymMatrix::symmetrized(h * h.transpose() + 0.1 * Matrix::Identity(n, n));
  const FeedbackGain f(inst.f0);
  const PrimalIterate s = solve_primal_p1(inst.sys, f, z);
  const Matrix lift = stack_identity_over(f.matrix());
  EXPECT_LE((s.S.matrix() - lift * s.S11() * lift.transpose()).norm(), 1e-9 * (1.0 + s.S.norm()));
  const ClosedLoop cl = close_loop(inst.sys, f);
  EXPECT_LE(gle_dual_residual(cl.A, cl.C, z.matrix(), s.S11()).norm(), 1e-10 * (1.0 + s.S.norm()));
  EXPECT_LE((gain_from_primal(s).matrix() - f.matrix()).norm(), 1e-8 * (1.0 + f.norm()));
  EXPECT_TRUE(s.S.is_psd());
}

TEST_P(RandomPd, AugmentedDualSolutionIsPsdForStabilizingGain) {
  const FeedbackGain f(inst.f0);
  const AugmentedSystem aug = augment(inst.sys, f);
  const Eigen::Index d = inst.sys.n() + inst.sys.m();
  EXPECT_TRUE(solve_gle_dual(aug.A, aug.C, SymMatrix::identity(d)).is_psd());
}

INSTANTIATE_TEST_SUITE_P(Instances, RandomPd, ::testing::Range(0, 12));

TEST(DualUpdate, ZeroLambdaGivesZero) {
  const RandomInstance inst = slqr::testing::random_stabilizable(12);
  const CostWeights zero{SymMatrix::zero(inst.sys.n()), SymMatrix::zero(inst.sys.m())};
  EXPECT_TRUE(dual_update(inst.sys, zero, FeedbackGain(inst.f0)).matrix().isZero(1e-300));
}

TEST(DualUpdate, NonStabilizingGainThrows) {
  EXPECT_THROW(dual_update(slqr::testing::scalar_system(), kUnit,
                           FeedbackGain(Matrix::Constant(1, 1, 0.0))),
               NotStabilizingError);
}

TEST(DualGle, UnstableAugmentedSystemIsSingularOrIndefinite) {
  // Scalar plant a = 1, b = 1: f = 0 gives radius 1.04, f = 0.5 gives 2.29.
  for (double f : {0.0, 0.5, -2.5}) {
    const FeedbackGain gain(Matrix::Constant(1, 1, f));
    const AugmentedSystem aug = augment(slqr::testing::scalar_system(), gain);
    try {
      const SymMatrix s = solve_gle_dual(aug.A, aug.C, SymMatrix::identity(2), {false});
      EXPECT_FALSE(s.is_psd()) << "f = " << f;
    } catch (const SingularSystemError&) {
      SUCCEED();
    }
  }
}

TEST(PrimalUpdate, Examples) {
  EXPECT_TRUE(primal_update(scalar_dual(3.0, 0.0, 2.0)).matrix().isZero(0.0));
  EXPECT_DOUBLE_EQ(primal_update(scalar_dual(3.0, 1.0, 2.0)).matrix()(0, 0), -0.5);
}

TEST(PrimalUpdate, OptimalQFunctionGivesOptimalGain) {
  const auto root = slqr::testing::scalar_gare_root(1.0, 1.0, 0.2, 0.0, 1.0, 1.0);
  const SymMatrix x = optimal_qfunction(slqr::testing::scalar_system(), kUnit,
                                        SymMatrix(Matrix::Constant(1, 1, root.p)));
  EXPECT_NEAR(primal_update(DualIterate(x, 1)).matrix()(0, 0), -0.62924, 1e-5);
  EXPECT_NEAR(primal_update(DualIterate(x, 1)).matrix()(0, 0), root.f, 1e-14);
}

TEST(PrimalUpdate, SingularOrIllConditionedBlockThrows) {
  EXPECT_THROW(primal_update(scalar_dual(1.0, 0.0, 0.0)), SingularSystemError);
  const Matrix x = Eigen::Vector3d(1.0, 1.0, 1e-14).asDiagonal().toDenseMatrix();
  EXPECT_THROW(primal_update(DualIterate(SymMatrix(x), 1)), SingularSystemError);
}

TEST(DualIterate, Blocks) {
  Matrix m(3, 3);
  m << 1, 2, 3, 2, 4, 5, 3, 5, 6;
  const DualIterate x(SymMatrix(m), 1);
  EXPECT_EQ(x.X11(), Matrix::Constant(1, 1, 1.0));
  EXPECT_EQ(x.X12(), (Matrix(1, 2) << 2, 3).finished());
  EXPECT_EQ(x.X22(), (Matrix(2, 2) << 4, 5, 5, 6).finished());
  EXPECT_EQ(x.inputs(), 2);
}

TEST(RunModelBased, ScalarExample) {
  const auto root = slqr::testing::scalar_gare_root(1.0, 1.0, 0.2, 0.0, 1.0, 1.0);
  const PrimalDualResult pd = run_model_based(slqr::testing::scalar_system(), kUnit,
                                              FeedbackGain(Matrix::Constant(1, 1, -0.5)));
  ASSERT_TRUE(pd.converged());
  EXPECT_NEAR(pd.P(0, 0), root.p, 1e-10);
  EXPECT_NEAR(pd.F.matrix()(0, 0), root.f, 1e-10);
}

TEST(RunModelBased, ArmAgreesWithPolicyIteration) {
  const ArmModel arm = build_arm_model(ArmParams{});
  const FeedbackGain f0(arm_default_initial_gain());
  const GareSolution pi = solve_gare_pi(arm.system, arm.weights, f0);
  const PrimalDualResult pd = run_model_based(arm.system, arm.weights, f0);
  ASSERT_TRUE(pd.converged());
  EXPECT_LE((pd.F.matrix() - pi.F.matrix()).norm(), 1e-8);
  EXPECT_EQ(pd.log.size(), pi.log.size());
}

TEST(RunModelBased, IterationLimitFlagged) {
  const PrimalDualResult pd = run_model_based(slqr::testing::scalar_system(), kUnit,
                                              FeedbackGain(Matrix::Constant(1, 1, -0.5)),
                                              {1e-9, 0});
  EXPECT_FALSE(pd.converged());
}

TEST(KktResiduals, StationarityGrowsWithGainPerturbation) {
  const RandomInstance inst = slqr::testing::random_stabilizable(31);
  const PrimalDualResult pd = run_model_based(inst.sys, inst.w, FeedbackGain(inst.f0));
  const Eigen::Index d = inst.sys.n() + inst.sys.m();
  const SymMatrix xi = SymMatrix::identity(d);
  double previous = certify(inst.sys, inst.w, pd.F, pd.X, xi).kkt.r_station;
  EXPECT_LE(previous, 1e-8);
  const Matrix dir = Matrix::Ones(inst.sys.m(), inst.sys.n());
  for (double eps : {1e-3, 1e-2, 5e-2}) {
    const FeedbackGain f(pd.F.matrix() + eps * dir);
    const AugmentedSystem aug = augment(inst.sys, f);
    const SymMatrix s = solve_gle_dual(aug.A, aug.C, xi);
    const double r = kkt_residuals(inst.sys, inst.w, s, pd.X, f, xi).r_station;
    EXPECT_GT(r, previous);
    previous = r;
  }
}

TEST(KktResiduals, DegenerateZeros) {
  const RandomInstance inst = slqr::testing::random_stabilizable(32);
  const Eigen::Index d = inst.sys.n() + inst.sys.m();
  const CostWeights zero{SymMatrix::zero(inst.sys.n()), SymMatrix::zero(inst.sys.m())};
  const KKTReport r = kkt_residuals(inst.sys, zero, SymMatrix::zero(d),
                                    DualIterate(SymMatrix::zero(d), inst.sys.n()),
                                    FeedbackGain(inst.f0), SymMatrix::zero(d));
  EXPECT_EQ(r.r_primal, 0.0);
  EXPECT_EQ(r.r_dual, 0.0);
  EXPECT_EQ(r.r_station, 0.0);
  EXPECT_EQ(r.x0_norm, 0.0);
  EXPECT_EQ(r.complementarity, 0.0);
}

TEST(DualityGap, ZeroWeightsAndMoments) {
  const SymMatrix s = SymMatrix::identity(3);
  const DualIterate x(SymMatrix::identity(3), 2);
  const LambdaBlock lam(SymMatrix::zero(2), SymMatrix::zero(1));
  EXPECT_EQ(duality_gap(s, x, lam, SymMatrix::zero(3)), 0.0);
}

TEST(InitialStateMismatch, ConsistentPairsVanish) {
  const RandomInstance inst = slqr::testing::random_stabilizable(33);
  const Eigen::Index d = inst.sys.n() + inst.sys.m();
  // Deterministic plant so z z' = [A B] v v' [A B]' exactly for z = [A B] v.
  StochasticLinearSystem det = inst.sys;
  for (Matrix& c : det.C) c.setZero();
  for (Matrix& dd : det.D) dd.setZero();
  Matrix top(inst.sys.n(), d);
  top << det.A, det.B;
  std::vector<Vector> v0;
  std::vector<Vector> z;
  for (Eigen::Index l = 0; l < d; ++l) {
    v0.push_back(Vector::Unit(d, l));
    z.push_back(top * v0.back());
  }
  EXPECT_LE(initial_state_mismatch(det, z, v0), 1e-14);
  z.front()(0) += 1.0;
  EXPECT_GT(initial_state_mismatch(det, z, v0), 0.1);
}

}  // namespace
}  // namespace slqr
