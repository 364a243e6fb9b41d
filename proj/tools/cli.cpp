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

#include "cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "slqr/slqr.hpp"

namespace slqr::cli {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

constexpr int kDefaultSolverIterations = 100;

/// Everything a run depends on. A manifest stores the resolved request, so a
/// rerun does not touch the original input files.
struct Request {
  std::string command;
  std::string input_path;
  json input;                // system document (solve, pd, learn)
  std::string f0_choice;     // flag value as given
  std::optional<Matrix> f0;  // resolved initial gain
  double tol = 1e-9;
  std::optional<int> max_iter;
  LearnConfig learn;
  int experiments = 1;
  ArmParams arm;
  bool no_learn = false;
  bool timing = false;
  fs::path out = "slqr_out";
};

struct Outcome {
  int code = kSuccess;
  std::vector<std::string> outputs;
  json summary = json::object();
};

// Failures that happen after inputs were accepted: the solver ran but could
// not finish. Mapped to kNotConverged.
class RunFailure : public Error {
 public:
  using Error::Error;
};

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from(const json& j) { return parse_gain(json{{"F", j}}.dump()); }

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

json versions() {
  std::ostringstream eigen;
  eigen << EIGEN_WORLD_VERSION << '.' << EIGEN_MAJOR_VERSION << '.' << EIGEN_MINOR_VERSION;
  return json{{"slqr", kVersion}, {"eigen", eigen.str()}, {"compiler", __VERSION__}};
}

json learn_json(const LearnConfig& cfg) { return json::parse(serialize_learn_config(cfg)); }

std::uint64_t experiment_seed(std::uint64_t master, int e) {
  return master + static_cast<std::uint64_t>(e);
}

json request_json(const Request& r) {
  json j;
  j["command"] = r.command;
  j["input_path"] = r.input_path;
  j["input"] = r.input;
  j["f0_choice"] = r.f0_choice;
  j["f0"] = r.f0 ? matrix_json(*r.f0) : json(nullptr);
  j["tol"] = r.tol;
  j["max_iter"] = r.max_iter ? json(*r.max_iter) : json(nullptr);
  j["learn"] = learn_json(r.learn);
  j["experiments"] = r.experiments;
  j["arm_params"] = json::parse(serialize_arm_params(r.arm));
  j["no_learn"] = r.no_learn;
  j["timing"] = r.timing;
  return j;
}

Request request_from_manifest(const json& m) {
  const json& j = m.at("request");
  Request r;
  r.command = j.at("command").get<std::string>();
  r.input_path = j.value("input_path", "");
  r.input = j.at("input");
  r.f0_choice = j.value("f0_choice", "");
  if (!j.at("f0").is_null()) r.f0 = matrix_from(j.at("f0"));
  r.tol = j.at("tol").get<double>();
  if (!j.at("max_iter").is_null()) r.max_iter = j.at("max_iter").get<int>();
  r.learn = parse_learn_config(j.at("learn").dump());
  r.experiments = j.at("experiments").get<int>();
  r.arm = parse_arm_params(j.at("arm_params").dump());
  r.no_learn = j.at("no_learn").get<bool>();
  r.timing = j.at("timing").get<bool>();
  return r;
}

void write_artifact(const Request& r, Outcome& o, const std::string& name,
                    const std::string& content) {
  write_text_file(r.out / name, content);
  o.outputs.push_back(name);
}

SystemSpec system_of(const Request& r) { return parse_system_spec(r.input.dump()); }

FeedbackGain initial_gain(const Request& r, const SystemSpec& spec) {
  if (!r.f0) {
    throw InvalidInputError(
        "no initial gain: pass --f0 <gain.json|zero> or add an F0 field to the input");
  }
  const Matrix& f = *r.f0;
  if (f.rows() != spec.system.m() || f.cols() != spec.system.n()) {
    throw InvalidInputError("--f0 gain has shape " + shape_string(f) + ", expected " +
                            std::to_string(spec.system.m()) + "x" +
                            std::to_string(spec.system.n()));
  }
  return FeedbackGain(f);
}

// Rejects a non-stabilizing initial gain as invalid input, with its radius.
void require_stabilizing(const StochasticLinearSystem& sys, const FeedbackGain& f) {
  const ClosedLoop cl = close_loop(sys, f);
  const SpectrumReport rep = is_asms(cl.A, cl.C);
  if (!rep.asms) {
    std::ostringstream os;
    os << "initial gain is not stabilizing: spectral radius of the closed-loop "
          "Lyapunov operator is "
       << rep.spectral_radius << " (must be < 1)";
    throw NotStabilizingError(os.str(), rep.spectral_radius);
  }
}

CsvOptions csv_options(const Request& r) { return CsvOptions{r.timing}; }

IterationOptions solver_options(const Request& r) {
  return IterationOptions{r.tol, r.max_iter.value_or(kDefaultSolverIterations)};
}

template <typename F>
auto guarded(const std::string& stage, F&& fn) {
  try {
    return fn();
  } catch (const NotStabilizingError&) {
    throw;
  } catch (const InvalidInputError&) {
    throw;
  } catch (const DimensionError&) {
    throw;
  } catch (const Error& e) {
    throw RunFailure(stage + ": " + e.what());
  }
}

void run_pi(const Request& r, const SystemSpec& spec, const FeedbackGain& f0,
            const std::string& prefix, Outcome& o, std::ostream& out,
            std::optional<GareSolution>* keep = nullptr) {
  GareSolution sol = guarded("policy iteration", [&] {
    return solve_gare_pi(spec.system, spec.weights, f0, solver_options(r));
  });
  write_artifact(r, o, prefix + "solution.json", serialize_gare_solution(sol));
  write_artifact(r, o, prefix + "iterations.csv", to_iteration_csv(sol.log, csv_options(r)));
  for (const std::string& w : sol.log.warnings) out << "warning: " << w << '\n';
  out << "policy iteration: " << (sol.converged() ? "converged" : "did not converge")
      << " after " << sol.log.size() << " iterations";
  if (!sol.log.empty()) out << ", GARE residual " << sol.log.entries.back().gare_residual;
  out << '\n';
  o.summary["pi"] = {{"converged", sol.converged()},
                     {"iterations", sol.log.size()},
                     {"F", matrix_json(sol.F.matrix())}};
  if (!sol.converged()) o.code = kNotConverged;
  if (keep) *keep = std::move(sol);
}

void run_pd(const Request& r, const SystemSpec& spec, const FeedbackGain& f0,
            const std::string& prefix, Outcome& o, std::ostream& out,
            std::optional<PrimalDualResult>* keep = nullptr) {
  PrimalDualResult res = guarded("primal-dual iteration", [&] {
    return run_model_based(spec.system, spec.weights, f0, solver_options(r));
  });
  write_artifact(r, o, prefix + "solution.json", serialize_primal_dual(res));
  write_artifact(r, o, prefix + "iterations.csv", to_iteration_csv(res.log, csv_options(r)));
  out << "primal-dual iteration: " << (res.converged() ? "converged" : "did not converge")
      << " after " << res.log.size() << " iterations\n";
  o.summary["pd"] = {{"converged", res.converged()},
                     {"iterations", res.log.size()},
                     {"F", matrix_json(res.F.matrix())}};
  if (!res.log.empty()) {
    const Eigen::Index d = spec.system.n() + spec.system.m();
    const Certificate cert = guarded("certification", [&] {
      return certify(spec.system, spec.weights, res.F, res.X, SymMatrix::identity(d));
    });
    write_artifact(r, o, "kkt.json", serialize_certificate(cert));
    out << "KKT residuals: primal " << cert.kkt.r_primal << ", dual " << cert.kkt.r_dual
        << ", stationarity " << cert.kkt.r_station << ", duality gap "
        << cert.duality_gap << '\n';
  }
  if (!res.converged()) o.code = kNotConverged;
  if (keep) *keep = std::move(res);
}

void run_learning(const Request& r, const SystemSpec& spec, const FeedbackGain& f0,
                  const std::optional<LearningReference>& reference, Outcome& o,
                  std::ostream& out) {
  const LinearPlant plant(spec.system);
  std::vector<IterationLog> logs;
  std::vector<Matrix> finals;
  for (int e = 0; e < r.experiments; ++e) {
    LearnConfig cfg = r.learn;
    cfg.master_seed = experiment_seed(r.learn.master_seed, e);
    const LearnResult res = guarded("learning experiment " + std::to_string(e), [&] {
      return run_partially_model_free(plant, spec.system.C, spec.system.D, spec.weights,
                                      f0, cfg, reference);
    });
    logs.push_back(res.log);
    finals.push_back(res.F.matrix());
  }

  ReportOptions ro;
  ro.csv = csv_options(r);
  if (reference) ro.reference_gain = reference->F;
  const ReportFiles files = emit_convergence_report(logs, r.out, ro);
  auto record = [&](const std::optional<fs::path>& p) {
    if (p) o.outputs.push_back(p->filename().string());
  };
  record(files.csv);
  record(files.experiments_csv);
  record(files.error_svg);
  record(files.gain_svg);

  json gains;
  gains["F"] = matrix_json(finals.front());
  if (finals.size() > 1) {
    gains["F_experiments"] = json::array();
    for (const Matrix& f : finals) gains["F_experiments"].push_back(matrix_json(f));
  }
  write_artifact(r, o, "gain_final.json", gains.dump(2) + "\n");

  json learn_summary = {{"experiments", r.experiments}, {"iterations", logs.front().size()}};
  if (reference && !logs.front().empty()) {
    const std::vector<double> mean_f =
        mean_curve(logs, &IterationRecord::rel_err_F);
    learn_summary["final_mean_rel_err_F"] = mean_f.back();
    out << "learning: " << r.experiments << " experiment(s), " << logs.front().size()
        << " iterations, final mean relative gain error " << mean_f.back() << '\n';
  } else {
    out << "learning: " << r.experiments << " experiment(s), " << logs.front().size()
        << " iterations\n";
  }
  o.summary["learn"] = learn_summary;
}

Outcome execute(const Request& r, std::ostream& out) {
  Outcome o;
  if (r.command == "solve") {
    const SystemSpec spec = system_of(r);
    const FeedbackGain f0 = initial_gain(r, spec);
    require_stabilizing(spec.system, f0);
    run_pi(r, spec, f0, "", o, out);
  } else if (r.command == "pd") {
    const SystemSpec spec = system_of(r);
    const FeedbackGain f0 = initial_gain(r, spec);
    require_stabilizing(spec.system, f0);
    run_pd(r, spec, f0, "", o, out);
  } else if (r.command == "learn") {
    const SystemSpec spec = system_of(r);
    const FeedbackGain f0 = initial_gain(r, spec);
    require_stabilizing(spec.system, f0);
    validate(r.learn);
    std::optional<LearningReference> reference;
    try {
      const GareSolution ref =
          solve_gare_pi(spec.system, spec.weights, f0, IterationOptions{});
      if (ref.converged()) reference = LearningReference{ref.F.matrix(), ref.X.matrix()};
    } catch (const Error& e) {
      out << "warning: no model-based reference (" << e.what() << ")\n";
    }
    run_learning(r, spec, f0, reference, o, out);
  } else if (r.command == "arm") {
    const ArmModel model = build_arm_model(r.arm);
    SystemSpec spec{model.system, model.weights, r.f0};
    write_artifact(r, o, "arm_system.json", serialize_system_spec(spec));
    const FeedbackGain f0 = initial_gain(r, spec);
    require_stabilizing(spec.system, f0);

    std::optional<GareSolution> pi;
    std::optional<PrimalDualResult> pd;
    run_pi(r, spec, f0, "", o, out, &pi);
    run_pd(r, spec, f0, "pd_", o, out, &pd);
    const double gain_gap = (pi->F.matrix() - pd->F.matrix()).norm();
    o.summary["pi_pd_gain_difference"] = gain_gap;
    o.summary["published_optimal_gain_relative_distance"] =
        (pi->F.matrix() - arm_published_optimal_gain()).norm() /
        arm_published_optimal_gain().norm();
    out << "PI vs primal-dual gain difference: " << gain_gap << '\n';
    if (!r.no_learn && pi->converged()) {
      validate(r.learn);
      run_learning(r, spec, f0, LearningReference{pi->F.matrix(), pi->X.matrix()}, o, out);
    }
    write_artifact(r, o, "arm_report.json", o.summary.dump(2) + "\n");
  } else {
    throw InvalidInputError("unknown command '" + r.command + "'");
  }
  return o;
}

int finish(const Request& r, std::ostream& out, std::ostream& err,
           std::optional<json> rerun_of = std::nullopt) {
  const std::string started = utc_now();
  Outcome o;
  try {
    o = execute(r, out);
  } catch (const RunFailure& e) {
    err << "error: " << e.what() << '\n';
    o.code = kNotConverged;
  } catch (const NotStabilizingError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  json manifest;
  manifest["tool"] = "slqr";
  manifest["versions"] = versions();
  manifest["request"] = request_json(r);
  manifest["seeds"] = json::object();
  manifest["seeds"]["master_seed"] = r.learn.master_seed;
  if (r.command == "learn" || (r.command == "arm" && !r.no_learn)) {
    json seeds = json::array();
    for (int e = 0; e < r.experiments; ++e) seeds.push_back(experiment_seed(r.learn.master_seed, e));
    manifest["seeds"]["experiment_seeds"] = seeds;
  }
  manifest["outputs"] = o.outputs;
  manifest["exit_code"] = o.code;
  manifest["started_utc"] = started;
  manifest["finished_utc"] = utc_now();
  if (rerun_of) manifest["rerun_of"] = *rerun_of;
  try {
    write_text_file(r.out / "manifest.json", manifest.dump(2) + "\n");
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  out << "artifacts written to " << r.out.string() << '\n';
  return o.code;
}

void add_output(CLI::App* sub, Request& r) {
  sub->add_option("--out", r.out, "Output directory")->capture_default_str();
}

void add_solver(CLI::App* sub, Request& r, std::optional<int>& max_iter) {
  sub->add_option("--tol", r.tol, "Gain-step tolerance")->capture_default_str();
  sub->add_option("--max-iter", max_iter, "Iteration limit");
  sub->add_flag("--timing", r.timing, "Record wall-clock times in CSV files");
}

struct LearnFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> horizon;
  std::optional<int> paths;
  std::optional<std::size_t> initial_count;
  std::optional<std::string> noise;
  std::optional<int> threads;
};

void add_learn(CLI::App* sub, Request& r, LearnFlags& lf) {
  sub->add_option("--config", lf.config_path, "Learning configuration JSON");
  sub->add_option("--seed", lf.seed, "Master RNG seed");
  sub->add_option("--horizon", lf.horizon, "Truncation horizon M");
  sub->add_option("--paths", lf.paths, "Sample paths H per initial vector");
  sub->add_option("--initial-count", lf.initial_count, "Number of initial vectors r");
  sub->add_option("--noise", lf.noise, "gaussian or rademacher");
  sub->add_option("--threads", lf.threads, "Rollout worker threads");
  sub->add_option("--experiments", r.experiments, "Independent learning experiments")
      ->capture_default_str();
}

void resolve_learn(Request& r, const LearnFlags& lf, const std::optional<int>& max_iter) {
  LearnConfig cfg;
  if (!lf.config_path.empty()) cfg = parse_learn_config(read_text_file(lf.config_path), cfg);
  if (lf.seed) cfg.master_seed = *lf.seed;
  if (lf.horizon) cfg.horizon = *lf.horizon;
  if (lf.paths) cfg.paths = *lf.paths;
  if (lf.initial_count) cfg.initial_count = *lf.initial_count;
  if (lf.noise) cfg.noise = parse_noise_kind(*lf.noise);
  if (lf.threads) cfg.threads = *lf.threads;
  if (max_iter) cfg.max_iter = *max_iter;
  cfg.tol = r.tol;
  validate(cfg);
  if (r.experiments < 1) throw InvalidInputError("--experiments must be >= 1");
  r.learn = cfg;
}

void resolve_gain_flag(Request& r, const SystemSpec* spec) {
  const std::string& choice = r.f0_choice;
  if (choice.empty()) {
    if (spec && spec->initial_gain) r.f0 = spec->initial_gain;
    return;
  }
  if (r.command == "arm" && choice == "default") {
    r.f0 = arm_default_initial_gain();
  } else if (r.command == "arm" && choice == "published") {
    r.f0 = arm_published_initial_gain();
  } else if (choice == "zero") {
    if (!spec) throw InvalidInputError("--f0 zero needs a system input");
    r.f0 = Matrix::Zero(spec->system.m(), spec->system.n());
  } else {
    r.f0 = parse_gain(read_text_file(choice));
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stochastic LQR with multiplicative noise: policy iteration, "
               "primal-dual iteration and partially model-free learning"};
  app.require_subcommand(1);

  Request r;
  std::optional<int> max_iter;
  LearnFlags lf;
  std::string manifest_path;

  CLI::App* solve = app.add_subcommand("solve", "Solve the GARE by policy iteration");
  CLI::App* pd = app.add_subcommand("pd", "Model-based primal-dual iteration with KKT certificate");
  CLI::App* learn = app.add_subcommand("learn", "Partially model-free primal-dual learning");
  CLI::App* arm = app.add_subcommand("arm", "Reaching-arm benchmark: PI, primal-dual and learning");
  CLI::App* rerun = app.add_subcommand("rerun", "Repeat a run from its manifest.json");

  for (CLI::App* sub : {solve, pd, learn}) {
    sub->add_option("--input", r.input_path, "System JSON")->required();
    sub->add_option("--f0", r.f0_choice, "Initial gain: JSON file or 'zero'");
    add_solver(sub, r, max_iter);
    add_output(sub, r);
  }
  add_learn(learn, r, lf);

  std::string params_path;
  arm->add_option("--params", params_path, "Arm parameter JSON");
  arm->add_option("--f0", r.f0_choice, "Initial gain: 'default', 'published' or a JSON file")
      ->default_str("default");
  arm->add_flag("--no-learn", r.no_learn, "Skip the model-free stage");
  add_solver(arm, r, max_iter);
  add_output(arm, r);
  add_learn(arm, r, lf);

  rerun->add_option("manifest", manifest_path, "manifest.json of an earlier run")->required();
  std::optional<std::string> rerun_out;
  rerun->add_option("--out", rerun_out, "Output directory (default: <manifest dir>/rerun)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (*rerun) {
      const json manifest = json::parse(read_text_file(manifest_path));
      Request again = request_from_manifest(manifest);
      again.out = rerun_out ? fs::path(*rerun_out) : fs::path(manifest_path).parent_path() / "rerun";
      return finish(again, out, err, json(manifest_path));
    }

    const SystemSpec* spec_ptr = nullptr;
    std::optional<SystemSpec> spec;
    if (*solve || *pd || *learn) {
      r.command = *solve ? "solve" : (*pd ? "pd" : "learn");
      const std::string text = read_text_file(r.input_path);
      spec = parse_system_spec(text);
      r.input = json::parse(text);
      spec_ptr = &*spec;
    } else {
      r.command = "arm";
      if (r.f0_choice.empty()) r.f0_choice = "default";
      if (!params_path.empty()) r.arm = parse_arm_params(read_text_file(params_path));
      validate(r.arm);
    }
    r.max_iter = max_iter;
    resolve_gain_flag(r, spec_ptr);
    if (*learn || *arm) resolve_learn(r, lf, max_iter);
  } catch (const json::exception& e) {
    err << "error: invalid JSON: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return finish(r, out, err);
}

}  // namespace slqr::cli
