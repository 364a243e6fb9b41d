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
#include <random>
#include <string>
#include <string_view>

namespace slqr {

/// Zero-mean, unit-variance scalar noise laws.
enum class NoiseKind { gaussian, rademacher };

std::string to_string(NoiseKind kind);
/// Throws InvalidInputError for anything but "gaussian" or "rademacher".
NoiseKind parse_noise_kind(std::string_view text);

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed of one rollout's private stream. Distinct index tuples give
/// independent-looking seeds; the mapping never depends on thread layout.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t iteration,
                          std::uint64_t initial_index, std::uint64_t rollout_index) noexcept;

/// Deterministic scalar noise stream over mt19937_64.
class NoiseSource {
 public:
  NoiseSource(std::uint64_t seed, NoiseKind kind);

  double next();
  NoiseKind kind() const noexcept { return kind_; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
  NoiseKind kind_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace slqr
