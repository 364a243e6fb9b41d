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

#include "slqr/arm_model.hpp"

#include <cmath>

#include "slqr/errors.hpp"

namespace slqr {

void validate(const ArmParams& p) {
  auto positive = [](double v, const char* name) {
    if (!(std::isfinite(v) && v > 0.0)) {
      throw InvalidInputError(std::string(name) + " must be positive and finite");
    }
  };
  positive(p.mass, "mass");
  positive(p.damping, "damping");
  positive(p.tau, "tau");
  positive(p.dt, "dt");
  if (!std::isfinite(p.d1) || !std::isfinite(p.d2)) {
    throw InvalidInputError("noise gains must be finite");
  }
  if (p.include_force_field && !(p.chi >= 2.0 / 3.0 - 1e-12 && p.chi <= 1.0)) {
    throw InvalidInputError("chi must lie in [2/3, 1] when the force field is on");
  }
}

Matrix arm_generator(const ArmParams& p) {
  const Matrix i2 = Matrix::Identity(2, 2);
  Matrix velocity = -(p.damping / p.mass) * i2;
  if (p.include_force_field) {
    Matrix field(2, 2);
    field << 13.0, -18.0, 18.0, 13.0;
    velocity += (p.chi / p.mass) * field;
  }
  Matrix ac = Matrix::Zero(6, 6);
  ac.block(0, 2, 2, 2) = i2;
  ac.block(2, 2, 2, 2) = velocity;
  ac.block(2, 4, 2, 2) = i2 / p.mass;
  ac.block(4, 4, 2, 2) = -i2 / p.tau;
  return ac;
}

ArmModel build_arm_model(const ArmParams& p) {
  validate(p);
  ArmModel model;
  StochasticLinearSystem& sys = model.system;
  sys.name = p.include_force_field ? "arm-force-field" : "arm";
  sys.A = Matrix::Identity(6, 6) + p.dt * arm_generator(p);
  sys.B = Matrix::Zero(6, 2);
  sys.B.block(4, 0, 2, 2) = (p.dt / p.tau) * Matrix::Identity(2, 2);

  Matrix d1c(2, 2);
  d1c << p.d1, 0.0, p.d2, 0.0;
  Matrix d2c(2, 2);
  d2c << 0.0, -p.d2, 0.0, p.d1;
  const double gain = std::sqrt(p.dt) / p.tau;
  for (const Matrix& dc : {d1c, d2c}) {
    Matrix d = Matrix::Zero(6, 2);
    d.block(4, 0, 2, 2) = gain * dc;
    sys.C.push_back(Matrix::Zero(6, 6));
    sys.D.push_back(d);
  }

  Matrix q = Matrix::Zero(6, 6);
  q.block(0, 0, 2, 2) << 2000.0, -40.0, -40.0, 1000.0;
  q.block(2, 2, 2, 2) << 20.0, -1.0, -1.0, 20.0;
  q.block(4, 4, 2, 2) = 0.01 * Matrix::Identity(2, 2);
  model.weights.Q = SymMatrix(q);
  model.weights.R = SymMatrix(0.01 * Matrix::Identity(2, 2));
  return model;
}

Matrix arm_default_initial_gain() {
  Matrix f(2, 6);
  f << -0.4119, 0.0, -0.055, 0.0, 0.4106, 0.0,  //
      0.0, -0.4119, 0.0, -0.055, 0.0, 0.4106;
  return f;
}

Matrix arm_published_initial_gain() {
  Matrix f(2, 6);
  f << -0.0273, -0.0258, 23.4596, 5.7615, 0.2648, -1.2886,  //
      0.0238, 0.0055, -13.8178, 12.2552, 0.5310, 0.8847;
  return f;
}

Matrix arm_published_optimal_gain() {
  Matrix f(2, 6);
  f << -46.7316, 2.9776, 13.6867, 13.2318, 0.5664, -1.0728,  //
      -4.5899, -26.2364, -9.4265, 10.6473, 0.4846, 0.6437;
  return f;
}

}  // namespace slqr
