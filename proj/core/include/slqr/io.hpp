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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "slqr/arm_model.hpp"
#include "slqr/model_free.hpp"
#include "slqr/primal_dual.hpp"
#include "slqr/riccati_pi.hpp"

namespace slqr {

/// JSON system document: A, B, C (list), D (list), Q, R as row-major nested
/// arrays; optional "name" and "F0". Numbers are written in shortest
/// round-trip form, so parse(serialize(s)) reproduces every bit.
struct SystemSpec {
  StochasticLinearSystem system;
  CostWeights weights;
  std::optional<Matrix> initial_gain;
};

/// Throws InvalidInputError on malformed JSON, missing fields, ragged rows or
/// any violation reported by validate_system().
SystemSpec parse_system_spec(std::string_view text);
std::string serialize_system_spec(const SystemSpec& spec);

/// Accepts a bare nested array or an object with an "F" member.
Matrix parse_gain(std::string_view text);
std::string serialize_gain(const Matrix& f);

/// Fields absent from the document keep their value in `base`.
LearnConfig parse_learn_config(std::string_view text, const LearnConfig& base = {});
std::string serialize_learn_config(const LearnConfig& cfg);

ArmParams parse_arm_params(std::string_view text, const ArmParams& base = {});
std::string serialize_arm_params(const ArmParams& p);

std::string serialize_gare_solution(const GareSolution& sol);
std::string serialize_primal_dual(const PrimalDualResult& res);
std::string serialize_certificate(const Certificate& cert);

/// Throws InvalidInputError if the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);
/// Throws Error if the file cannot be written.
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace slqr
