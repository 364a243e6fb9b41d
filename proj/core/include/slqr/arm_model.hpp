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

#include "slqr/stochastic_model.hpp"

namespace slqr {

/// Planar reaching arm driven through a first-order actuator with
/// control-dependent noise on two channels.
///
///   dp = v dt,  m dv = (a - b v + f) dt,  tau da = (u - a) dt + d_eta
///   f = chi [13 -18; 18 13] v,  d_eta = D1 u d_eta1 + D2 u d_eta2
struct ArmParams {
  double mass = 1.3;
  double damping = 10.0;
  double tau = 0.05;
  double d1 = 0.15;
  double d2 = 0.05;
  double chi = 2.0 / 3.0;
  double dt = 0.1;
  bool include_force_field = false;
};

/// Throws InvalidInputError on non-positive mass, damping, tau or dt, on
/// non-finite noise gains, or on chi outside [2/3, 1] with the field on.
void validate(const ArmParams& p);

struct ArmModel {
  StochasticLinearSystem system;
  CostWeights weights;
};

/// Euler discretization with step dt: A = I + dt A_c, B = dt B_c, C_i = 0,
/// D_i = sqrt(dt) [0; 0; D_i^c / tau].
ArmModel build_arm_model(const ArmParams& p);

/// Continuous generator A_c (force-field block included when enabled).
Matrix arm_generator(const ArmParams& p);

/// Stabilizing initial gain for the default parameters.
Matrix arm_default_initial_gain();
/// Initial gain printed with the original benchmark. It does not stabilize the
/// default-parameter model.
Matrix arm_published_initial_gain();
/// Optimal gain printed with the original benchmark, a structural target only.
Matrix arm_published_optimal_gain();

}  // namespace slqr
