#include "grover/io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <system_error>
#include <vector>

namespace grover {

std::string format_double(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc{}) throw std::system_error(std::make_error_code(ec));
  return std::string(buffer, end);
}

Json to_json(const SearchInstance &inst) {
  Json doc;
  doc["n"] = inst.n();
  doc["marked"] = std::vector<Index>(inst.marked().begin(), inst.marked().end());
  if (inst.seed()) {
    doc["seed"] = *inst.seed();
  } else {
    doc["seed"] = nullptr;
  }
  return doc;
}

SearchInstance instance_from_json(const Json &doc) {
  const auto marked = doc.at("marked").get<std::vector<Index>>();
  std::optional<std::uint64_t> seed;
  if (doc.contains("seed") && !doc.at("seed").is_null()) {
    seed = doc.at("seed").get<std::uint64_t>();
  }
  return SearchInstance(doc.at("n").get<Index>(), marked, seed);
}

Json to_json(const IterationTrace &trace) {
  Json doc;
  doc["m_max"] = trace.m_max();
  doc["probabilities"] = trace.probabilities;
  return doc;
}

std::string to_csv(const IterationTrace &trace) {
  std::string out = "m,probability\n";
  for (std::size_t m = 0; m < trace.probabilities.size(); ++m) {
    out += std::to_string(m);
    out += ',';
    out += format_double(trace.probabilities[m]);
    out += '\n';
  }
  return out;
}

Json angles_summary(const SpectralAngles &angles) {
  const auto best = optimal_iterations(angles);
  Json doc;
  doc["n"] = angles.n;
  doc["ell"] = angles.ell;
  doc["theta"] = angles.theta;
  doc["alpha"] = angles.alpha;
  doc["m_opt"] = best.m;
  doc["p_opt"] = best.p;
  doc["m_asymptotic"] = asymptotic_iterations(angles.n, angles.ell);
  return doc;
}

Json to_json(const RestartPlan &plan) {
  Json doc;
  doc["j_continuous"] = plan.j_continuous;
  doc["j_integer"] = plan.j_integer;
  doc["expected_cost"] = plan.expected_cost;
  doc["success_probability_per_trial"] = plan.success_probability_per_trial;
  if (plan.residual) {
    doc["residual"] = *plan.residual;
  } else {
    doc["residual"] = nullptr;
  }
  doc["iterations_used"] = plan.iterations_used;
  doc["stationary"] = plan.stationary;
  return doc;
}

Json to_json(const MonteCarloReport &report) {
  Json doc;
  doc["trials"] = report.trials;
  doc["j"] = report.j;
  doc["mean_trials_to_success"] = report.mean_trials_to_success;
  doc["mean_total_iterations"] = report.mean_total_iterations;
  doc["empirical_success_rate"] = report.empirical_success_rate;
  doc["simulated_success_probability"] = report.simulated_success_probability;
  doc["seed"] = report.seed;
  return doc;
}

std::string matrix_to_csv(const Eigen::MatrixXd &matrix) {
  std::string out;
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      if (j > 0) out += ',';
      out += format_double(matrix(i, j));
    }
    out += '\n';
  }
  return out;
}

} // namespace grover
