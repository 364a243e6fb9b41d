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
#include <span>
#include <string>
#include <vector>

#include "slqr/iteration_log.hpp"

namespace slqr {

struct ReportOptions {
  std::string csv_name = "learn_log.csv";
  std::string error_svg_name = "convergence.svg";
  std::string gain_svg_name = "gain_elements.svg";
  /// Per-experiment table, written only for more than one experiment.
  std::string experiments_csv_name = "learn_experiments.csv";
  CsvOptions csv;
  /// Drawn as dashed horizontal lines in the gain-element plot.
  std::optional<Matrix> reference_gain;
};

struct ReportFiles {
  std::filesystem::path csv;
  std::optional<std::filesystem::path> experiments_csv;
  std::optional<std::filesystem::path> error_svg;
  std::optional<std::filesystem::path> gain_svg;
};

/// Writes the learning CSV of the first experiment, the relative-error plot
/// (log scale, per-experiment traces plus their mean) and the per-element
/// trajectory plot of the first experiment's gains. An empty log yields a
/// header-only CSV and no plots. Throws Error if out_dir cannot be written.
ReportFiles emit_convergence_report(std::span<const IterationLog> experiments,
                                    const std::filesystem::path& out_dir,
                                    const ReportOptions& options = {});

ReportFiles emit_convergence_report(const IterationLog& log,
                                    const std::filesystem::path& out_dir,
                                    const ReportOptions& options = {});

/// Mean of a record field per iteration over the experiments that reached it,
/// ignoring NaN entries; NaN where no experiment contributes.
std::vector<double> mean_curve(std::span<const IterationLog> experiments,
                               double IterationRecord::*field);

/// Columns: experiment, iter, rel_err_F, rel_err_X, step_norm, Stil_min_eig, wall_time_s
std::string to_experiments_csv(std::span<const IterationLog> experiments,
                               CsvOptions options = {});

}  // namespace slqr
