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

#include <stdexcept>
#include <string>

namespace slqr {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix shapes that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input: bad JSON, out-of-range parameters, invalid weights.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// A gain (or open-loop pair) whose generalized Lyapunov operator has
/// spectral radius >= 1, i.e. the system is not asymptotically stable in
/// mean square.
class NotStabilizingError : public Error {
 public:
  NotStabilizingError(const std::string& what, double spectral_radius)
      : Error(what), spectral_radius_(spectral_radius) {}

  double spectral_radius() const noexcept { return spectral_radius_; }

 private:
  double spectral_radius_;
};

/// A linear system that is singular or too ill-conditioned to trust.
class SingularSystemError : public Error {
 public:
  SingularSystemError(const std::string& what, double condition)
      : Error(what), condition_(condition) {}

  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

class EigenSolverError : public Error {
 public:
  using Error::Error;
};

/// Trajectory data that cannot support the data-driven dual solve: exploded
/// rollouts, empty batches, second-moment matrices that are not positive
/// definite.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Learned gains growing without bound.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace slqr
