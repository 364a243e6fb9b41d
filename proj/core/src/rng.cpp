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

#include "slqr/rng.hpp"

#include "slqr/errors.hpp"

namespace slqr {

std::string to_string(NoiseKind kind) {
  return kind == NoiseKind::gaussian ? "gaussian" : "rademacher";
}

NoiseKind parse_noise_kind(std::string_view text) {
  if (text == "gaussian") return NoiseKind::gaussian;
  if (text == "rademacher") return NoiseKind::rademacher;
  throw InvalidInputError("unknown noise kind '" + std::string(text) +
                          "' (expected gaussian or rademacher)");
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t iteration,
                          std::uint64_t initial_index,
                          std::uint64_t rollout_index) noexcept {
  std::uint64_t h = mix64(master);
  h = mix64(h ^ iteration);
  h = mix64(h ^ initial_index);
  return mix64(h ^ rollout_index);
}

NoiseSource::NoiseSource(std::uint64_t seed, NoiseKind kind)
    : seed_(seed), kind_(kind), engine_(seed) {}

double NoiseSource::next() {
  if (kind_ == NoiseKind::gaussian) return normal_(engine_);
  return (engine_() >> 63) != 0 ? 1.0 : -1.0;
}

}  // namespace slqr
