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

#include "slqr/report.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "slqr/errors.hpp"
#include "slqr/io.hpp"
#include "slqr/svg_plot.hpp"

namespace slqr {

namespace {

bool has_finite(std::span<const IterationLog> experiments, double IterationRecord::*field) {
  for (const IterationLog& log : experiments) {
    for (const IterationRecord& r : log.entries) {
      if (std::isfinite(r.*field)) return true;
    }
  }
  return false;
}

PlotSpec error_plot(std::span<const IterationLog> experiments) {
  PlotSpec spec;
  spec.title = "Relative error of learned gain and Q-function";
  spec.x_label = "iteration";
  spec.y_label = "relative error";
  spec.log_y = true;

  struct Field {
    double IterationRecord::*member;
    const char* name;
    const char* color;
  };
  const Field fields[] = {{&IterationRecord::rel_err_F, "F", "#1f77b4"},
                          {&IterationRecord::rel_err_X, "X", "#d62728"}};
  const bool several = experiments.size() > 1;
  for (const Field& fd : fields) {
    if (!has_finite(experiments, fd.member)) continue;
    if (several) {
      for (const IterationLog& log : experiments) {
        PlotSeries trace;
        trace.color = fd.color;
        trace.opacity = 0.25;
        trace.stroke_width = 1.0;
        trace.markers = false;
        for (const IterationRecord& r : log.entries) {
          trace.x.push_back(r.iter + 1);
          trace.y.push_back(r.*fd.member);
        }
        spec.series.push_back(std::move(trace));
      }
    }
    PlotSeries mean;
    mean.label = several ? std::string("mean ") + fd.name : std::string(fd.name);
    mean.color = fd.color;
    mean.stroke_width = 2.0;
    mean.dashed = several;
    const std::vector<double> m = mean_curve(experiments, fd.member);
    for (std::size_t i = 0; i < m.size(); ++i) {
      mean.x.push_back(static_cast<double>(i + 1));
      mean.y.push_back(m[i]);
    }
    spec.series.push_back(std::move(mean));
  }
  return spec;
}

PlotSpec gain_plot(const IterationLog& log, const std::optional<Matrix>& reference) {
  PlotSpec spec;
  spec.title = "Learned gain elements";
  spec.x_label = "iteration";
  spec.y_label = "F(i, j)";
  const Matrix& first = log.entries.front().next_gain;
  std::size_t color = 0;
  for (Eigen::Index i = 0; i < first.rows(); ++i) {
    for (Eigen::Index j = 0; j < first.cols(); ++j, ++color) {
      PlotSeries s;
      s.label = "F(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      s.color = palette_color(color);
      s.x.push_back(0.0);
      s.y.push_back(log.entries.front().gain(i, j));
      for (const IterationRecord& r : log.entries) {
        s.x.push_back(r.iter + 1);
        s.y.push_back(r.next_gain(i, j));
      }
      if (reference && reference->rows() == first.rows() &&
          reference->cols() == first.cols()) {
        PlotSeries ref;
        ref.color = s.color;
        ref.dashed = true;
        ref.markers = false;
        ref.stroke_width = 1.0;
        ref.x = {s.x.front(), s.x.back()};
        ref.y = {(*reference)(i, j), (*reference)(i, j)};
        spec.series.push_back(std::move(ref));
      }
      spec.series.push_back(std::move(s));
    }
  }
  return spec;
}

void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw Error("cannot create output directory " + dir.string());
  }
}

}  // namespace

std::vector<double> mean_curve(std::span<const IterationLog> experiments,
                               double IterationRecord::*field) {
  std::size_t longest = 0;
  for (const IterationLog& log : experiments) longest = std::max(longest, log.size());
  std::vector<double> out(longest, std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i = 0; i < longest; ++i) {
    double sum = 0.0;
    int count = 0;
    for (const IterationLog& log : experiments) {
      if (i >= log.size()) continue;
      const double v = log.entries[i].*field;
      if (std::isnan(v)) continue;
      sum += v;
      ++count;
    }
    if (count > 0) out[i] = sum / count;
  }
  return out;
}

std::string to_experiments_csv(std::span<const IterationLog> experiments,
                               CsvOptions options) {
  std::ostringstream os;
  os << "experiment,iter,rel_err_F,rel_err_X,step_norm,Stil_min_eig,wall_time_s\n";
  for (std::size_t e = 0; e < experiments.size(); ++e) {
    for (const IterationRecord& r : experiments[e].entries) {
      os << e << ',' << r.iter << ',' << format_double(r.rel_err_F) << ','
         << format_double(r.rel_err_X) << ',' << format_double(r.step_norm) << ','
         << format_double(r.stil_min_eig) << ','
         << format_double(options.include_timing ? r.wall_time_s : 0.0) << '\n';
    }
  }
  return os.str();
}

ReportFiles emit_convergence_report(std::span<const IterationLog> experiments,
                                    const std::filesystem::path& out_dir,
                                    const ReportOptions& options) {
  ensure_directory(out_dir);
  ReportFiles files;
  files.csv = out_dir / options.csv_name;
  const IterationLog empty;
  const IterationLog& first = experiments.empty() ? empty : experiments.front();
  write_text_file(files.csv, to_learning_csv(first, options.csv));

  if (experiments.size() > 1) {
    files.experiments_csv = out_dir / options.experiments_csv_name;
    write_text_file(*files.experiments_csv, to_experiments_csv(experiments, options.csv));
  }
  if (first.empty()) return files;

  const PlotSpec errors = error_plot(experiments);
  if (!errors.series.empty()) {
    files.error_svg = out_dir / options.error_svg_name;
    write_text_file(*files.error_svg, render_svg(errors));
  }
  files.gain_svg = out_dir / options.gain_svg_name;
  write_text_file(*files.gain_svg, render_svg(gain_plot(first, options.reference_gain)));
  return files;
}

ReportFiles emit_convergence_report(const IterationLog& log,
                                    const std::filesystem::path& out_dir,
                                    const ReportOptions& options) {
  return emit_convergence_report(std::span<const IterationLog>(&log, 1), out_dir, options);
}

}  // namespace slqr
