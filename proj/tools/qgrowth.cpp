// SPDX-License-Identifier: Apache-2.0
//
// qgrowth - simulate, fit, inspect and self-check the unified family of
// continuous growth models.
//
//   qgrowth table                      list the model rows
//   qgrowth simulate --model ...       write a trajectory table
//   qgrowth fit --model ... --input    estimate free parameters from a CSV
//   qgrowth check                      closed-form / numeric cross-check

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qgrowth/qgrowth.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::invalid_argument("cannot open output file: " + path);
  os << content;
}

std::map<std::string, double> parse_assignments(const std::vector<std::string>& raw) {
  std::map<std::string, double> out;
  for (const auto& item : raw) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("expected name=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    try {
      std::size_t used = 0;
      const double value = std::stod(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing junk");
      if (out.contains(name)) throw std::invalid_argument("duplicate");
      out[name] = value;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad parameter assignment '" + item + "'");
    }
  }
  return out;
}

std::vector<double> parse_time_list(const std::string& raw) {
  std::vector<double> out;
  std::stringstream ss(raw);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(std::stod(cell));
  return out;
}

std::vector<double> linspace(double start, double stop, int count) {
  if (count < 1) throw std::invalid_argument("t-count must be >= 1");
  if (count == 1) return {start};
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i)
    out[i] = start + (stop - start) * static_cast<double>(i) / (count - 1);
  out.back() = stop;
  return out;
}

json params_json(const qgrowth::GrowthParams& P) {
  json j;
  j["qprime"] = P.q_prime;
  j["q"] = P.q;
  j["gamma"] = P.gamma;
  j["kappa"] = P.kappa;
  j["epsilon"] = P.effort;
  j["p0"] = P.p0;
  return j;
}

std::string comment_line(const std::string& command, const std::string& model,
                         const std::map<std::string, double>& params) {
  std::ostringstream os;
  os << "qgrowth " << command << " model=" << model;
  for (const auto& [k, v] : params) os << ' ' << k << '=' << qgrowth::format_number(v);
  return os.str();
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

struct SimulateOptions {
  std::string model;
  std::vector<std::string> params;
  double t_start = 0.0, t_stop = 10.0;
  int t_count = 101;
  std::string times;
  std::string output = "-";
  std::string format = "csv";
  double rel_tol = 1e-9, abs_tol = 1e-12;
  bool no_header_comment = false;
};

int run_simulate(const SimulateOptions& opt) {
  const qgrowth::ModelKind kind = qgrowth::parse_model_kind(opt.model);
  const auto params = parse_assignments(opt.params);
  const std::vector<double> grid =
      opt.times.empty() ? linspace(opt.t_start, opt.t_stop, opt.t_count)
                        : parse_time_list(opt.times);
  qgrowth::IntegratorConfig cfg;
  cfg.rel_tol = opt.rel_tol;
  cfg.abs_tol = opt.abs_tol;

  const qgrowth::GrowthParams bound = qgrowth::model_table(kind, params);
  const qgrowth::Solution sol = qgrowth::solve_params(bound, grid, cfg);

  std::ostringstream os;
  if (opt.format == "csv") {
    std::optional<std::string> comment;
    if (!opt.no_header_comment) comment = comment_line("simulate", opt.model, params);
    qgrowth::write_trajectory_csv(os, sol.trajectory, sol.method, comment);
  } else if (opt.format == "json") {
    json j;
    j["schema_version"] = 1;
    j["model"] = opt.model;
    j["params"] = params_json(bound);
    json data;
    data["method"] = std::string(to_string(sol.method));
    data["t"] = sol.trajectory.times;
    data["p"] = sol.trajectory.values;
    json flags = json::array();
    for (auto f : sol.trajectory.flags) flags.push_back(std::string(to_string(f)));
    data["flag"] = flags;
    j["data"] = data;
    os << j.dump(2) << '\n';
  } else {
    throw std::invalid_argument("unknown format: " + opt.format);
  }
  write_output(opt.output, os.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// fit
// ---------------------------------------------------------------------------

struct FitOptions {
  std::string model;
  std::string input;
  std::string output;
  std::string free_list;
  std::vector<std::string> params;
  std::vector<std::string> lower, upper;
  std::optional<double> n_inf;
  std::string loss = "log";
  int max_evals = 10000;
  double rel_tol = 1e-9, abs_tol = 1e-12;
  bool no_header_comment = false;
};

std::vector<std::string> split_names(const std::string& raw) {
  std::vector<std::string> out;
  std::stringstream ss(raw);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    if (!cell.empty()) out.push_back(cell);
  }
  return out;
}

int run_fit(const FitOptions& opt) {
  const qgrowth::ModelKind kind = qgrowth::parse_model_kind(opt.model);
  std::ifstream is(opt.input);
  if (!is) throw std::invalid_argument("cannot open input file: " + opt.input);
  const qgrowth::CsvSeries csv = qgrowth::read_series_csv(is);

  qgrowth::ObservationSeries series;
  series.times = csv.times;
  series.values = csv.values;
  series.normalized = csv.normalized;
  if (opt.n_inf) series.carrying_capacity = *opt.n_inf;

  qgrowth::FitConfig cfg;
  cfg.values = parse_assignments(opt.params);
  cfg.loss = (opt.loss == "linear") ? qgrowth::LossSpace::linear : qgrowth::LossSpace::log;
  if (opt.loss != "linear" && opt.loss != "log")
    throw std::invalid_argument("unknown loss space: " + opt.loss);
  cfg.max_evals = opt.max_evals;
  cfg.forward.rel_tol = opt.rel_tol;
  cfg.forward.abs_tol = opt.abs_tol;
  constexpr double inf = std::numeric_limits<double>::infinity();
  for (const auto& [k, v] : parse_assignments(opt.lower)) cfg.bounds[k] = {v, inf};
  for (const auto& [k, v] : parse_assignments(opt.upper)) {
    auto it = cfg.bounds.find(k);
    if (it == cfg.bounds.end())
      cfg.bounds[k] = {-inf, v};
    else
      it->second.second = v;
  }
  const std::vector<std::string> free_names = split_names(opt.free_list);
  if (std::count(free_names.begin(), free_names.end(), "n_inf") > 0 && opt.n_inf &&
      !cfg.values.contains("n_inf"))
    cfg.values["n_inf"] = *opt.n_inf;

  const qgrowth::FitResult result = qgrowth::fit(series, kind, free_names, cfg);

  json j;
  j["schema_version"] = 1;
  j["model"] = opt.model;
  j["params"] = params_json(result.params);
  json data;
  data["free"] = result.free_values;
  data["sse"] = result.sse;
  data["n_evals"] = result.n_evals;
  data["converged"] = result.converged;
  data["loss_space"] = std::string(to_string(result.loss_space));
  j["data"] = data;
  write_output(opt.output, j.dump(2) + "\n");

  // Fitted trajectory at the observation times, next to the report.
  if (opt.output != "-" && !opt.output.empty()) {
    std::filesystem::path traj_path(opt.output);
    traj_path.replace_extension();
    traj_path += ".traj.csv";
    const qgrowth::Solution sol = qgrowth::solve_params(result.params, series.times, cfg.forward);
    std::ostringstream os;
    std::optional<std::string> comment;
    if (!opt.no_header_comment)
      comment = comment_line("fit", opt.model, cfg.values);
    qgrowth::write_trajectory_csv(os, sol.trajectory, sol.method, comment);
    write_output(traj_path.string(), os.str());
  }
  return result.converged ? kExitOk : kExitNoConvergence;
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

struct TableOptions {
  std::string output = "-";
  std::string format = "text";
};

int run_table(const TableOptions& opt) {
  std::ostringstream os;
  if (opt.format == "json") {
    json rows = json::array();
    for (const auto& row : qgrowth::model_rows()) {
      if (!row.in_summary_table) continue;
      json r;
      r["model"] = std::string(row.name);
      r["label"] = std::string(row.label);
      r["qprime"] = std::string(row.qprime_s);
      r["q"] = std::string(row.q_s);
      r["gamma"] = std::string(row.gamma_s);
      r["kappa"] = std::string(row.kappa_s);
      r["equation"] = std::string(row.equation);
      rows.push_back(r);
    }
    os << rows.dump(2) << '\n';
  } else if (opt.format == "csv") {
    os << "model,label,qprime,q,gamma,kappa,equation\n";
    for (const auto& row : qgrowth::model_rows()) {
      if (!row.in_summary_table) continue;
      os << row.name << ",\"" << row.label << "\"," << row.qprime_s << ',' << row.q_s
         << ',' << row.gamma_s << ',' << row.kappa_s << ",\"" << row.equation << "\"\n";
    }
  } else if (opt.format == "text") {
    os << "model · q' · q · gamma · kappa · equation ('*' = free parameter)\n";
    for (const auto& row : qgrowth::model_rows()) {
      if (!row.in_summary_table) continue;
      os << "  " << row.label << ":  q'=" << row.qprime_s << "  q=" << row.q_s
         << "  gamma=" << row.gamma_s << "  kappa=" << row.kappa_s << "  |  "
         << row.equation << '\n';
    }
  } else {
    throw std::invalid_argument("unknown format: " + opt.format);
  }
  write_output(opt.output, os.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

struct CheckOptions {
  std::string model;  // empty = all
  std::string output = "-";
  std::string format = "text";
  double rel_tol = 1e-9, abs_tol = 1e-12;
  double threshold = 1e-6;
};

struct CheckCase {
  std::string model;
  std::map<std::string, double> params;
  bool beta_comparison;  // beta-vs-ode instead of analytic-vs-ode
};

const std::vector<CheckCase>& check_cases() {
  static const std::vector<CheckCase> cases = {
      {"Malthus", {{"r", 1.0}, {"p0", 0.001}}, false},
      {"Verhulst", {{"r", 1.0}, {"p0", 0.001}}, false},
      {"Gompertz", {{"kappa", 1.0}, {"p0", 0.001}}, false},
      {"HyperGompertz", {{"gamma", 1.5}, {"kappa", 1.0}, {"p0", 0.001}}, false},
      {"Richards", {{"q", 2.0}, {"kappa", 1.0}, {"p0", 0.001}}, false},
      {"Mitscherlich", {{"kappa", 1.0}, {"p0", 0.001}}, false},
      {"SpecializedVonBertalanffy", {{"kappa", 1.0}, {"p0", 0.001}}, false},
      {"GeneralizedVonBertalanffy", {{"q", 2.0}, {"kappa", 1.0}, {"p0", 0.001}}, false},
      {"Turner", {{"q", 2.0}, {"gamma", 1.5}, {"kappa", 1.0}, {"p0", 0.001}}, false},
      {"Blumberg", {{"qprime", 0.9}, {"gamma", 0.5}, {"kappa", 1.0}, {"p0", 0.001}}, true},
      {"TsoularisWallace",
       {{"qprime", 0.8}, {"q", 2.0}, {"gamma", 0.5}, {"kappa", 1.0}, {"p0", 0.001}},
       true},
  };
  return cases;
}

int run_check(const CheckOptions& opt) {
  qgrowth::IntegratorConfig cfg;
  cfg.rel_tol = opt.rel_tol;
  cfg.abs_tol = opt.abs_tol;
  const std::vector<double> grid = linspace(0.0, 10.0, 101);

  struct Row {
    std::string model, comparison;
    double max_delta;
    bool pass;
  };
  std::vector<Row> rows;
  bool matched_any = false;
  for (const auto& cc : check_cases()) {
    if (!opt.model.empty() && cc.model != opt.model) continue;
    matched_any = true;
    const auto kind = qgrowth::parse_model_kind(cc.model);
    const auto params = qgrowth::model_table(kind, cc.params);
    const qgrowth::Trajectory reference =
        cc.beta_comparison ? qgrowth::propagate_beta(params, grid)
                           : qgrowth::solve_params(params, grid).trajectory;
    const qgrowth::Trajectory numeric = qgrowth::integrate(params, grid, cfg);
    double max_delta = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
      max_delta = std::max(max_delta,
                           std::fabs(reference.values[i] - numeric.values[i]));
    rows.push_back({cc.model, cc.beta_comparison ? "beta-vs-ode" : "analytic-vs-ode",
                    max_delta, max_delta <= opt.threshold});
  }
  if (!matched_any) throw std::invalid_argument("check: no case matches model " + opt.model);

  bool all_pass = true;
  for (const auto& r : rows) all_pass = all_pass && r.pass;

  std::ostringstream os;
  if (opt.format == "json") {
    json j;
    j["schema_version"] = 1;
    j["model"] = opt.model.empty() ? "all" : opt.model;
    j["params"] = json::object();
    json data;
    json jrows = json::array();
    for (const auto& r : rows) {
      json jr;
      jr["model"] = r.model;
      jr["comparison"] = r.comparison;
      jr["max_delta"] = r.max_delta;
      jr["threshold"] = opt.threshold;
      jr["pass"] = r.pass;
      jrows.push_back(jr);
    }
    data["rows"] = jrows;
    data["pass"] = all_pass;
    j["data"] = data;
    os << j.dump(2) << '\n';
  } else if (opt.format == "csv") {
    os << "model,comparison,max_delta,threshold,status\n";
    for (const auto& r : rows)
      os << r.model << ',' << r.comparison << ',' << qgrowth::format_number(r.max_delta)
         << ',' << qgrowth::format_number(opt.threshold) << ','
         << (r.pass ? "pass" : "fail") << '\n';
  } else {
    for (const auto& r : rows) {
      std::ostringstream line;
      line << (r.pass ? "[pass] " : "[FAIL] ") << r.model << " (" << r.comparison
           << "): max |delta| = " << qgrowth::format_number(r.max_delta)
           << "  threshold = " << qgrowth::format_number(opt.threshold);
      os << line.str() << '\n';
    }
    os << (all_pass ? "all comparisons within threshold\n"
                    : "one or more comparisons exceeded the threshold\n");
  }
  write_output(opt.output, os.str());
  return all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unified continuous growth models: simulate, fit, inspect, self-check"};
  app.require_subcommand(1);

  SimulateOptions sim;
  auto* sim_cmd = app.add_subcommand("simulate", "write a trajectory table");
  sim_cmd->add_option("--model", sim.model, "model row name")->required();
  sim_cmd->add_option("--param", sim.params, "model parameter name=value (repeatable)");
  sim_cmd->add_option("--t-start", sim.t_start, "first sample time");
  sim_cmd->add_option("--t-stop", sim.t_stop, "last sample time");
  sim_cmd->add_option("--t-count", sim.t_count, "number of samples");
  sim_cmd->add_option("--times", sim.times, "explicit comma-separated sample times");
  sim_cmd->add_option("--output", sim.output, "output path ('-' = stdout)");
  sim_cmd->add_option("--format", sim.format, "csv|json");
  sim_cmd->add_option("--rel-tol", sim.rel_tol, "integrator relative tolerance");
  sim_cmd->add_option("--abs-tol", sim.abs_tol, "integrator absolute tolerance");
  sim_cmd->add_flag("--no-header-comment", sim.no_header_comment,
                    "omit the leading comment line in CSV output");

  FitOptions fit;
  auto* fit_cmd = app.add_subcommand("fit", "estimate free parameters from a CSV series");
  fit_cmd->add_option("--model", fit.model, "model row name")->required();
  fit_cmd->add_option("--input", fit.input, "CSV with columns t and p (or n)")->required();
  fit_cmd->add_option("--output", fit.output, "JSON report path")->required();
  fit_cmd->add_option("--free", fit.free_list, "comma-separated free parameter names")
      ->required();
  fit_cmd->add_option("--param", fit.params,
                      "parameter name=value: fixed values and initial guesses");
  fit_cmd->add_option("--lower", fit.lower, "lower bound name=value (repeatable)");
  fit_cmd->add_option("--upper", fit.upper, "upper bound name=value (repeatable)");
  double n_inf_value = 0.0;
  auto* n_inf_opt = fit_cmd->add_option("--n-inf", n_inf_value,
                                        "carrying capacity for raw-count input");
  fit_cmd->add_option("--loss", fit.loss, "linear|log residual space");
  fit_cmd->add_option("--max-evals", fit.max_evals, "objective evaluation budget");
  fit_cmd->add_option("--rel-tol", fit.rel_tol, "forward-model relative tolerance");
  fit_cmd->add_option("--abs-tol", fit.abs_tol, "forward-model absolute tolerance");
  fit_cmd->add_flag("--no-header-comment", fit.no_header_comment,
                    "omit the comment line in the trajectory CSV");

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "list the model rows");
  table_cmd->add_option("--output", table.output, "output path ('-' = stdout)");
  table_cmd->add_option("--format", table.format, "text|csv|json");

  CheckOptions check;
  auto* check_cmd =
      app.add_subcommand("check", "closed-form / implicit / numeric cross-check");
  check_cmd->add_option("--model", check.model, "restrict to one model row");
  check_cmd->add_option("--output", check.output, "output path ('-' = stdout)");
  check_cmd->add_option("--format", check.format, "text|csv|json");
  check_cmd->add_option("--rel-tol", check.rel_tol, "integrator relative tolerance");
  check_cmd->add_option("--abs-tol", check.abs_tol, "integrator absolute tolerance");
  check_cmd->add_option("--threshold", check.threshold, "pass/fail tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sim_cmd->parsed()) return run_simulate(sim);
    if (fit_cmd->parsed()) {
      if (n_inf_opt->count() > 0) fit.n_inf = n_inf_value;
      return run_fit(fit);
    }
    if (table_cmd->parsed()) return run_table(table);
    if (check_cmd->parsed()) return run_check(check);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
