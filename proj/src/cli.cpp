#include "grover/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "grover/error.hpp"
#include "grover/io.hpp"
#include "grover/reduced.hpp"
#include "grover/restart.hpp"
#include "grover/sweep.hpp"

namespace grover::cli {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Output {
  Json json;
  std::string csv;
};

std::vector<Index> parse_index_list(const std::string &text) {
  std::vector<Index> values;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) continue;
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      if (token.front() == '-') throw std::invalid_argument(token);
      value = std::stoull(token, &used);
    } catch (const std::exception &) {
      throw UsageError("not a non-negative integer: '" + token + "'");
    }
    if (used != token.size()) throw UsageError("not a non-negative integer: '" + token + "'");
    values.push_back(value);
  }
  return values;
}

template <typename T>
void put_optional(Json &doc, const char *key, const std::optional<T> &value) {
  if (value) {
    doc[key] = *value;
  } else {
    doc[key] = nullptr;
  }
}

Json config_json(const RunConfig &config) {
  Json doc;
  doc["subcommand"] = config.subcommand;
  put_optional(doc, "n", config.n);
  put_optional(doc, "ell", config.ell);
  put_optional(doc, "marked", config.marked);
  put_optional(doc, "m_max", config.m_max);
  put_optional(doc, "j", config.j);
  put_optional(doc, "trials", config.trials);
  doc["seed"] = config.seed;
  doc["format"] = config.format;
  doc["memory_cap"] = config.memory_cap;
  doc["grid_n"] = config.grid_n;
  doc["grid_ell"] = config.grid_ell;
  return doc;
}

Json envelope(const RunConfig &config) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["config"] = config_json(config);
  return doc;
}

std::string csv_row(const std::vector<std::string> &cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) line += ',';
    line += cells[i];
  }
  return line + '\n';
}

Index require_n(const RunConfig &config) {
  if (!config.n) throw UsageError(config.subcommand + " requires --n");
  return *config.n;
}

/// Marked count from --ell or --marked, exactly one of which must be given.
Index resolve_ell(const RunConfig &config) {
  const Index n = require_n(config);
  if (config.ell && config.marked) throw UsageError("--ell and --marked are mutually exclusive");
  if (config.ell) return *config.ell;
  if (config.marked) return new_instance(n, parse_index_list(*config.marked)).ell();
  throw UsageError(config.subcommand + " requires --ell or --marked");
}

SearchInstance resolve_instance(const RunConfig &config) {
  const Index n = require_n(config);
  if (config.ell && config.marked) throw UsageError("--ell and --marked are mutually exclusive");
  if (config.marked) return new_instance(n, parse_index_list(*config.marked));
  if (config.ell) return random_instance(n, *config.ell, config.seed);
  throw UsageError(config.subcommand + " requires --ell or --marked");
}

void check_memory_cap(const RunConfig &config, Index n) {
  if (n > config.memory_cap) {
    throw Error(ErrorCode::BudgetExceeded,
                "n = " + std::to_string(n) + " exceeds the memory cap of " +
                    std::to_string(config.memory_cap) +
                    " amplitudes; raise it with --memory-cap");
  }
}

std::vector<std::string> plan_cells(const RestartPlan &plan) {
  return {format_double(plan.j_continuous),
          std::to_string(plan.j_integer),
          format_double(plan.expected_cost),
          format_double(plan.success_probability_per_trial),
          plan.residual ? format_double(*plan.residual) : std::string(),
          std::to_string(plan.iterations_used),
          plan.stationary ? "true" : "false"};
}

const std::vector<std::string> kPlanHeader = {
    "j_continuous",  "j_integer", "expected_cost", "success_probability_per_trial",
    "residual",      "iterations_used", "stationary"};

Output run_angles(const RunConfig &config) {
  const auto angles = spectral_angles(require_n(config), resolve_ell(config));
  Output result;
  result.json = envelope(config);
  const Json summary = angles_summary(angles);
  result.json.update(summary);
  result.csv = csv_row({"n", "ell", "theta", "alpha", "m_opt", "p_opt", "m_asymptotic"});
  result.csv += csv_row({std::to_string(angles.n), std::to_string(angles.ell),
                         format_double(angles.theta), format_double(angles.alpha),
                         std::to_string(summary["m_opt"].get<std::size_t>()),
                         format_double(summary["p_opt"].get<double>()),
                         format_double(summary["m_asymptotic"].get<double>())});
  return result;
}

Output run_simulate(const RunConfig &config) {
  const SearchInstance inst = resolve_instance(config);
  check_memory_cap(config, inst.n());
  const std::size_t m_max =
      config.m_max.value_or(optimal_iterations(spectral_angles(inst)).m);
  const IterationTrace trace = evolve(inst, m_max, false, config.memory_cap);
  Output result;
  result.json = envelope(config);
  result.json["instance"] = to_json(inst);
  result.json.update(to_json(trace));
  result.csv = to_csv(trace);
  return result;
}

Output run_optimal(const RunConfig &config) {
  const Index n = require_n(config);
  const auto angles = spectral_angles(n, resolve_ell(config));
  const auto best = optimal_iterations(angles);
  const double m_asymptotic = asymptotic_iterations(angles.n, angles.ell);
  // Cross-check on the full state vector whenever it fits.
  std::optional<double> p_simulated;
  if (n <= config.memory_cap) {
    const SearchInstance inst = resolve_instance(config);
    p_simulated = evolve(inst, best.m, false, config.memory_cap).probabilities.back();
  }
  Output result;
  result.json = envelope(config);
  result.json["n"] = angles.n;
  result.json["ell"] = angles.ell;
  result.json["m_opt"] = best.m;
  result.json["p_opt"] = best.p;
  result.json["alpha_over_theta"] = angles.alpha / angles.theta;
  result.json["m_asymptotic"] = m_asymptotic;
  put_optional(result.json, "p_simulated", p_simulated);
  result.csv = csv_row({"n", "ell", "m_opt", "p_opt", "alpha_over_theta", "m_asymptotic",
                        "p_simulated"});
  result.csv += csv_row({std::to_string(angles.n), std::to_string(angles.ell),
                         std::to_string(best.m), format_double(best.p),
                         format_double(angles.alpha / angles.theta),
                         format_double(m_asymptotic),
                         p_simulated ? format_double(*p_simulated) : std::string()});
  return result;
}

Output run_restart_plan(const RunConfig &config) {
  const auto angles = spectral_angles(require_n(config), resolve_ell(config));
  const RestartPlan plan = integer_stop_point(angles);
  Output result;
  result.json = envelope(config);
  result.json["n"] = angles.n;
  result.json["ell"] = angles.ell;
  result.json["theta"] = angles.theta;
  result.json["alpha"] = angles.alpha;
  result.json.update(to_json(plan));
  std::vector<std::string> header = {"n", "ell"};
  header.insert(header.end(), kPlanHeader.begin(), kPlanHeader.end());
  std::vector<std::string> cells = {std::to_string(angles.n), std::to_string(angles.ell)};
  const auto plan_row = plan_cells(plan);
  cells.insert(cells.end(), plan_row.begin(), plan_row.end());
  result.csv = csv_row(header) + csv_row(cells);
  return result;
}

Output run_montecarlo(const RunConfig &config) {
  const SearchInstance inst = resolve_instance(config);
  check_memory_cap(config, inst.n());
  const std::size_t j = config.j.value_or(integer_stop_point(spectral_angles(inst)).j_integer);
  const std::size_t trials = config.trials.value_or(10000);
  if (j < 1) throw UsageError("--j must be at least 1");
  if (trials < 1) throw UsageError("--trials must be at least 1");
  const MonteCarloReport report =
      simulate_restarts(inst, j, trials, config.seed, config.memory_cap);
  Output result;
  result.json = envelope(config);
  result.json["instance"] = to_json(inst);
  result.json.update(to_json(report));
  result.csv = csv_row({"trials", "j", "mean_trials_to_success", "mean_total_iterations",
                        "empirical_success_rate", "simulated_success_probability", "seed"});
  result.csv += csv_row({std::to_string(report.trials), std::to_string(report.j),
                         format_double(report.mean_trials_to_success),
                         format_double(report.mean_total_iterations),
                         format_double(report.empirical_success_rate),
                         format_double(report.simulated_success_probability),
                         std::to_string(report.seed)});
  return result;
}

Output run_sweep(const RunConfig &config) {
  std::vector<Index> grid_n;
  for (const auto &token : config.grid_n) {
    const auto values = parse_index_list(token);
    grid_n.insert(grid_n.end(), values.begin(), values.end());
  }
  std::vector<EllSpec> grid_ell;
  for (const auto &list : config.grid_ell) {
    std::stringstream stream(list);
    std::string token;
    while (std::getline(stream, token, ',')) {
      if (token.empty()) continue;
      try {
        grid_ell.push_back(EllSpec::parse(token));
      } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
      }
    }
  }
  const SweepResult table = sweep(grid_n, grid_ell);

  Output result;
  result.json = envelope(config);
  Json rows = Json::array();
  std::vector<std::string> header = {"n",     "ell",   "theta",        "alpha",
                                     "m_opt", "p_opt", "m_asymptotic", "degenerate"};
  header.insert(header.end(), kPlanHeader.begin(), kPlanHeader.end());
  result.csv = csv_row(header);
  std::vector<double> x;
  std::vector<double> y;
  for (const SweepRow &row : table.rows) {
    Json entry;
    entry["n"] = row.n;
    entry["ell"] = row.ell;
    entry["theta"] = row.angles.theta;
    entry["alpha"] = row.angles.alpha;
    entry["m_opt"] = row.optimum.m;
    entry["p_opt"] = row.optimum.p;
    entry["m_asymptotic"] = row.m_asymptotic;
    entry["degenerate"] = row.degenerate;
    entry["restart"] = to_json(row.restart);
    rows.push_back(std::move(entry));

    std::vector<std::string> cells = {std::to_string(row.n),
                                      std::to_string(row.ell),
                                      format_double(row.angles.theta),
                                      format_double(row.angles.alpha),
                                      std::to_string(row.optimum.m),
                                      format_double(row.optimum.p),
                                      format_double(row.m_asymptotic),
                                      row.degenerate ? "true" : "false"};
    const auto plan_row = plan_cells(row.restart);
    cells.insert(cells.end(), plan_row.begin(), plan_row.end());
    result.csv += csv_row(cells);

    x.push_back(std::sqrt(static_cast<double>(row.n) / static_cast<double>(row.ell)));
    y.push_back(static_cast<double>(row.optimum.m));
  }
  result.json["rows"] = std::move(rows);
  result.json["skipped"] = table.skipped;
  bool distinct = false;
  for (double value : x) distinct = distinct || value != x.front();
  if (distinct) {
    const LineFit fit = fit_line(x, y);
    result.json["fit"] = {{"x", "sqrt(n/ell)"},
                          {"y", "m_opt"},
                          {"slope", fit.slope},
                          {"intercept", fit.intercept}};
  } else {
    result.json["fit"] = nullptr;
  }
  return result;
}

Output run_baseline(const RunConfig &config) {
  const Index n = require_n(config);
  const Index ell = resolve_ell(config);
  const auto angles = spectral_angles(n, ell);
  const auto best = optimal_iterations(angles);
  const RestartPlan plan = integer_stop_point(angles);
  const double classical = classical_expected_queries(n, ell);
  Output result;
  result.json = envelope(config);
  result.json["n"] = n;
  result.json["ell"] = ell;
  result.json["classical_expected_queries"] = classical;
  result.json["quantum_m_opt"] = best.m;
  result.json["quantum_p_opt"] = best.p;
  result.json["quantum_m_asymptotic"] = asymptotic_iterations(n, ell);
  result.json["restart_j"] = plan.j_integer;
  result.json["restart_expected_cost"] = plan.expected_cost;
  result.csv = csv_row({"n", "ell", "classical_expected_queries", "quantum_m_opt",
                        "quantum_p_opt", "quantum_m_asymptotic", "restart_j",
                        "restart_expected_cost"});
  result.csv += csv_row({std::to_string(n), std::to_string(ell), format_double(classical),
                         std::to_string(best.m), format_double(best.p),
                         format_double(asymptotic_iterations(n, ell)),
                         std::to_string(plan.j_integer), format_double(plan.expected_cost)});
  return result;
}

void write_error(std::ostream &err, std::string_view code, const std::string &message) {
  Json doc;
  doc["error"] = code;
  doc["message"] = message;
  err << doc.dump() << '\n';
}

} // namespace

int run_cli(const std::vector<std::string> &arguments, std::ostream &out, std::ostream &err) {
  CLI::App app{"Multi-target Grover search simulator and restart-strategy solver",
               "grover-lab"};
  app.require_subcommand(1);
  RunConfig config;

  const std::vector<std::pair<std::string, std::string>> subcommands = {
      {"angles", "Rotation angles and the optimal iteration count"},
      {"simulate", "Full state-vector simulation of the marked probability per step"},
      {"optimal", "Optimal single-shot iteration count, checked on the state vector"},
      {"restart-plan", "Optimal stop point of the restart strategy"},
      {"montecarlo", "Monte Carlo run of the restart strategy"},
      {"sweep", "Angles, optima and restart plans over a grid of (n, ell)"},
      {"baseline", "Classical expected queries against the quantum iteration counts"},
  };
  for (const auto &[name, description] : subcommands) {
    CLI::App *sub = app.add_subcommand(name, description);
    sub->add_option("--n", config.n, "Database size");
    sub->add_option("--ell", config.ell, "Number of marked items (placed at random by --seed)");
    sub->add_option("--marked", config.marked, "Explicit marked indices, comma separated");
    sub->add_option("--m-max", config.m_max, "Number of Grover steps to simulate");
    sub->add_option("--j", config.j, "Restart stop point");
    sub->add_option("--trials", config.trials, "Monte Carlo trials");
    sub->add_option("--seed", config.seed, "Seed for random instances and sampling");
    sub->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", config.out, "Write results to this path instead of stdout");
    sub->add_option("--memory-cap", config.memory_cap, "Largest n the simulator may allocate");
    sub->add_option("--grid-n", config.grid_n, "Sweep sizes, comma separated")->delimiter(',');
    sub->add_option("--grid-ell", config.grid_ell,
                    "Sweep marked counts: integers or N/k, comma separated")
        ->delimiter(',');
    sub->callback([&config, name = name] { config.subcommand = name; });
  }

  std::vector<std::string> reversed(arguments.rbegin(), arguments.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError &e) {
    write_error(err, "UsageError", e.what());
    return kUsageError;
  }

  static const std::map<std::string, std::function<Output(const RunConfig &)>> handlers = {
      {"angles", run_angles},     {"simulate", run_simulate},
      {"optimal", run_optimal},   {"restart-plan", run_restart_plan},
      {"montecarlo", run_montecarlo}, {"sweep", run_sweep},
      {"baseline", run_baseline},
  };

  try {
    const Output result = handlers.at(config.subcommand)(config);
    const std::string text = config.format == "csv" ? result.csv : result.json.dump(2) + "\n";
    if (config.out) {
      std::ofstream file(*config.out, std::ios::binary);
      if (!file || !(file << text)) {
        write_error(err, "IoError", "cannot write " + *config.out);
        return kRuntimeError;
      }
    } else {
      out << text;
    }
    return kSuccess;
  } catch (const UsageError &e) {
    write_error(err, "UsageError", e.what());
    return kUsageError;
  } catch (const Error &e) {
    write_error(err, to_string(e.code()), e.what());
    return kRuntimeError;
  } catch (const std::exception &e) {
    write_error(err, "RuntimeError", e.what());
    return kRuntimeError;
  }
}

} // namespace grover::cli
