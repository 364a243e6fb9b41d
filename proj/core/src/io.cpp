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

#include "slqr/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "slqr/errors.hpp"

namespace slqr {

namespace {

using json = nlohmann::json;

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, const std::string& name) {
  if (!j.is_array()) throw InvalidInputError(name + " must be an array of rows");
  if (j.empty()) return Matrix(0, 0);
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  Matrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != cols) {
      throw InvalidInputError(name + " has a ragged or non-array row " + std::to_string(i));
    }
    for (std::size_t k = 0; k < cols; ++k) {
      if (!row[k].is_number()) {
        throw InvalidInputError(name + "[" + std::to_string(i) + "][" +
                                std::to_string(k) + "] is not a number");
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          row[k].get<double>();
    }
  }
  return m;
}

std::vector<Matrix> matrix_list_from_json(const json& j, const std::string& name) {
  if (!j.is_array()) throw InvalidInputError(name + " must be an array of matrices");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(matrix_from_json(j[i], name + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InvalidInputError(std::string("invalid JSON: ") + e.what());
  }
}

const json& require_field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw InvalidInputError(std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

SymMatrix sym_from_json(const json& j, const std::string& name) {
  try {
    return SymMatrix(matrix_from_json(j, name));
  } catch (const InvalidInputError&) {
    throw;
  } catch (const Error& e) {
    throw InvalidInputError(name + ": " + e.what());
  }
}

template <typename T>
void read_if_present(const json& doc, const char* key, T& target) {
  if (!doc.contains(key)) return;
  try {
    target = doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("field '") + key + "': " + e.what());
  }
}

json log_summary(const IterationLog& log) {
  json j;
  j["converged"] = log.converged;
  j["iterations"] = log.entries.size();
  j["warnings"] = log.warnings;
  return j;
}

}  // namespace

SystemSpec parse_system_spec(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw InvalidInputError("system document must be a JSON object");
  SystemSpec spec;
  StochasticLinearSystem& sys = spec.system;
  sys.A = matrix_from_json(require_field(doc, "A"), "A");
  sys.B = matrix_from_json(require_field(doc, "B"), "B");
  sys.C = matrix_list_from_json(require_field(doc, "C"), "C");
  sys.D = matrix_list_from_json(require_field(doc, "D"), "D");
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw InvalidInputError("name must be a string");
    sys.name = doc["name"].get<std::string>();
  }
  spec.weights.Q = sym_from_json(require_field(doc, "Q"), "Q");
  spec.weights.R = sym_from_json(require_field(doc, "R"), "R");
  if (doc.contains("F0")) spec.initial_gain = matrix_from_json(doc["F0"], "F0");

  const ValidationReport report = validate_system(sys, spec.weights);
  if (!report.ok()) throw InvalidInputError("invalid system: " + report.summary());
  if (spec.initial_gain) {
    const Matrix& f = *spec.initial_gain;
    if (f.rows() != sys.m() || f.cols() != sys.n() || !all_finite(f)) {
      throw InvalidInputError("F0 has shape " + shape_string(f) + ", expected " +
                              std::to_string(sys.m()) + "x" + std::to_string(sys.n()));
    }
  }
  return spec;
}

std::string serialize_system_spec(const SystemSpec& spec) {
  json doc;
  const StochasticLinearSystem& sys = spec.system;
  if (!sys.name.empty()) doc["name"] = sys.name;
  doc["A"] = matrix_to_json(sys.A);
  doc["B"] = matrix_to_json(sys.B);
  doc["C"] = json::array();
  for (const Matrix& c : sys.C) doc["C"].push_back(matrix_to_json(c));
  doc["D"] = json::array();
  for (const Matrix& d : sys.D) doc["D"].push_back(matrix_to_json(d));
  doc["Q"] = matrix_to_json(spec.weights.Q.matrix());
  doc["R"] = matrix_to_json(spec.weights.R.matrix());
  if (spec.initial_gain) doc["F0"] = matrix_to_json(*spec.initial_gain);
  return doc.dump(2) + "\n";
}

Matrix parse_gain(std::string_view text) {
  const json doc = parse_document(text);
  const Matrix f =
      doc.is_object() ? matrix_from_json(require_field(doc, "F"), "F") : matrix_from_json(doc, "F");
  if (!all_finite(f)) throw InvalidInputError("gain has non-finite entries");
  return f;
}

std::string serialize_gain(const Matrix& f) {
  json doc;
  doc["F"] = matrix_to_json(f);
  return doc.dump(2) + "\n";
}

LearnConfig parse_learn_config(std::string_view text, const LearnConfig& base) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw InvalidInputError("learn config must be a JSON object");
  LearnConfig cfg = base;
  read_if_present(doc, "horizon", cfg.horizon);
  read_if_present(doc, "paths", cfg.paths);
  read_if_present(doc, "initial_count", cfg.initial_count);
  read_if_present(doc, "tol", cfg.tol);
  read_if_present(doc, "max_iter", cfg.max_iter);
  read_if_present(doc, "master_seed", cfg.master_seed);
  read_if_present(doc, "threads", cfg.threads);
  if (doc.contains("noise")) {
    if (!doc["noise"].is_string()) throw InvalidInputError("noise must be a string");
    cfg.noise = parse_noise_kind(doc["noise"].get<std::string>());
  }
  validate(cfg);
  return cfg;
}

std::string serialize_learn_config(const LearnConfig& cfg) {
  json doc;
  doc["horizon"] = cfg.horizon;
  doc["paths"] = cfg.paths;
  doc["initial_count"] = cfg.initial_count;
  doc["tol"] = cfg.tol;
  doc["max_iter"] = cfg.max_iter;
  doc["master_seed"] = cfg.master_seed;
  doc["noise"] = to_string(cfg.noise);
  doc["threads"] = cfg.threads;
  return doc.dump(2) + "\n";
}

ArmParams parse_arm_params(std::string_view text, const ArmParams& base) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw InvalidInputError("arm parameters must be a JSON object");
  ArmParams p = base;
  read_if_present(doc, "mass", p.mass);
  read_if_present(doc, "damping", p.damping);
  read_if_present(doc, "tau", p.tau);
  read_if_present(doc, "d1", p.d1);
  read_if_present(doc, "d2", p.d2);
  read_if_present(doc, "chi", p.chi);
  read_if_present(doc, "dt", p.dt);
  read_if_present(doc, "include_force_field", p.include_force_field);
  validate(p);
  return p;
}

std::string serialize_arm_params(const ArmParams& p) {
  json doc;
  doc["mass"] = p.mass;
  doc["damping"] = p.damping;
  doc["tau"] = p.tau;
  doc["d1"] = p.d1;
  doc["d2"] = p.d2;
  doc["chi"] = p.chi;
  doc["dt"] = p.dt;
  doc["include_force_field"] = p.include_force_field;
  return doc.dump(2) + "\n";
}

std::string serialize_gare_solution(const GareSolution& sol) {
  json doc = log_summary(sol.log);
  doc["P"] = matrix_to_json(sol.P.matrix());
  doc["F"] = matrix_to_json(sol.F.matrix());
  doc["X"] = matrix_to_json(sol.X.matrix());
  if (!sol.log.entries.empty()) {
    doc["gare_residual"] = sol.log.entries.back().gare_residual;
    doc["step_norm"] = sol.log.entries.back().step_norm;
  }
  return doc.dump(2) + "\n";
}

std::string serialize_primal_dual(const PrimalDualResult& res) {
  json doc = log_summary(res.log);
  doc["P"] = matrix_to_json(res.P.matrix());
  doc["F"] = matrix_to_json(res.F.matrix());
  doc["X"] = matrix_to_json(res.X.matrix());
  if (!res.log.entries.empty()) {
    doc["gare_residual"] = res.log.entries.back().gare_residual;
    doc["step_norm"] = res.log.entries.back().step_norm;
  }
  return doc.dump(2) + "\n";
}

std::string serialize_certificate(const Certificate& cert) {
  json doc;
  doc["r_primal"] = cert.kkt.r_primal;
  doc["s_min"] = cert.kkt.s_min;
  doc["r_dual"] = cert.kkt.r_dual;
  doc["r_station"] = cert.kkt.r_station;
  doc["x0_norm"] = cert.kkt.x0_norm;
  doc["complementarity"] = cert.kkt.complementarity;
  doc["primal_value"] = cert.primal_value;
  doc["dual_value"] = cert.dual_value;
  doc["duality_gap"] = cert.duality_gap;
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInputError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace slqr
