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

#include "slqr/iteration_log.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

namespace slqr {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  (void)ec;
  return std::string(buf.data(), ptr);
}

std::string to_iteration_csv(const IterationLog& log, CsvOptions options) {
  std::ostringstream os;
  os << "iter,gare_residual,step_norm,wall_time_s\n";
  for (const IterationRecord& r : log.entries) {
    os << r.iter << ',' << format_double(r.gare_residual) << ','
       << format_double(r.step_norm) << ','
       << format_double(options.include_timing ? r.wall_time_s : 0.0) << '\n';
  }
  return os.str();
}

std::string to_learning_csv(const IterationLog& log, CsvOptions options) {
  std::ostringstream os;
  os << "iter,rel_err_F,rel_err_X,step_norm,Stil_min_eig,wall_time_s\n";
  for (const IterationRecord& r : log.entries) {
    os << r.iter << ',' << format_double(r.rel_err_F) << ','
       << format_double(r.rel_err_X) << ',' << format_double(r.step_norm) << ','
       << format_double(r.stil_min_eig) << ','
       << format_double(options.include_timing ? r.wall_time_s : 0.0) << '\n';
  }
  return os.str();
}

}  // namespace slqr
