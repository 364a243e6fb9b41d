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

#include "slqr/arm_model.hpp"
#include "slqr/errors.hpp"
#include "slqr/io.hpp"
#include "slqr/iteration_log.hpp"
#include "slqr/linalg.hpp"
#include "slqr/model_free.hpp"
#include "slqr/ms_analysis.hpp"
#include "slqr/primal_dual.hpp"
#include "slqr/report.hpp"
#include "slqr/riccati_pi.hpp"
#include "slqr/rng.hpp"
#include "slqr/stochastic_model.hpp"
#include "slqr/svg_plot.hpp"

namespace slqr {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace slqr
