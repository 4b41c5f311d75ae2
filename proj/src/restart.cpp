#include "grover/restart.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "grover/error.hpp"
#include "grover/random.hpp"

namespace grover {

namespace {

constexpr double kSingularThreshold = 1e-15;
constexpr double kMinTrialProbability = 1e-12;

double phase(const SpectralAngles &angles, double j) { return j * angles.theta - angles.alpha; }

} // namespace

double expected_cost(const SpectralAngles &angles, double j) {
  const double c = std::cos(phase(angles, j));
  if (std::abs(c) <= kSingularThreshold) {
    throw Error(ErrorCode::SingularCost,
                "success probability vanishes at j = " + std::to_string(j));
  }
  return j / (c * c);
}

double expected_cost_derivative(const SpectralAngles &angles, double j) {
  const double x = phase(angles, j);
  const double c = std::cos(x);
  if (std::abs(c) <= kSingularThreshold) {
    throw Error(ErrorCode::SingularCost,
                "success probability vanishes at j = " + std::to_string(j));
  }
  return (1.0 + 2.0 * j * angles.theta * std::tan(x)) / (c * c);
}

double stationarity_residual(const SpectralAngles &angles, double j) {
  const double x = phase(angles, j);
  const double s = std::sin(x);
  if (std::abs(s) <= kSingularThreshold) {
    throw Error(ErrorCode::SingularCotangent,
                "cot(j theta - alpha) is singular at j = " + std::to_string(j));
  }
  return 2.0 * j * angles.theta + std::cos(x) / s;
}

double fixed_point_map(const SpectralAngles &angles, double j) {
  return (angles.alpha - std::atan(1.0 / (2.0 * angles.theta * j))) / angles.theta;
}

double first_order_seed(const SpectralAngles &angles) {
  const double discriminant = angles.alpha * angles.alpha - 2.0;
  if (discriminant < 0.0) {
    throw Error(ErrorCode::OutOfValidityRegion,
                "first-order seed needs alpha^2 >= 2, got alpha = " +
                    std::to_string(angles.alpha));
  }
  return (angles.alpha + std::sqrt(discriminant)) / (2.0 * angles.theta);
}

double default_seed(const SpectralAngles &angles) {
  if (angles.alpha * angles.alpha >= 2.0) return first_order_seed(angles);
  return std::max(1.0, angles.alpha / (2.0 * angles.theta));
}

bool has_stationary_point(const SpectralAngles &angles) {
  return angles.alpha >= std::numbers::pi / 4.0 + 0.5;
}

namespace {

// Fills the integer part of a plan from the cheaper of the given candidates.
void choose_integer(const SpectralAngles &angles, RestartPlan &plan, std::size_t lower,
                    std::size_t upper) {
  const double cost_lower = expected_cost(angles, static_cast<double>(lower));
  plan.j_integer = lower;
  plan.expected_cost = cost_lower;
  if (upper != lower) {
    const double cost_upper = expected_cost(angles, static_cast<double>(upper));
    if (cost_upper < cost_lower) {
      plan.j_integer = upper;
      plan.expected_cost = cost_upper;
    }
  }
  plan.success_probability_per_trial = success_probability(angles, plan.j_integer);
}

} // namespace

RestartPlan refine_stop_point(const SpectralAngles &angles, double j0, double tol,
                              std::size_t max_iter) {
  double j = j0;
  double step = std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  while (used < max_iter) {
    const double next = fixed_point_map(angles, j);
    step = std::abs(next - j);
    j = next;
    ++used;
    if (step <= std::max(tol, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(j))) {
      RestartPlan plan;
      plan.j_continuous = j;
      plan.iterations_used = used;
      plan.stationary = true;
      plan.residual = stationarity_residual(angles, j);
      const auto floor_j = static_cast<std::size_t>(std::floor(j));
      choose_integer(angles, plan, std::max<std::size_t>(1, floor_j),
                     std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(j))));
      return plan;
    }
  }
  throw Error(ErrorCode::NoConvergence, "fixed-point map did not converge in " +
                                            std::to_string(max_iter) + " steps (last |dj| = " +
                                            std::to_string(step) + ")");
}

namespace {

// Bisection for the minimum of E on (j_peak, alpha/theta), where the residual
// falls from >= 0 to -infinity. Used when the fixed-point map contracts too
// slowly, which happens as alpha approaches pi/4 + 1/2.
RestartPlan bisect_stop_point(const SpectralAngles &angles, std::size_t used) {
  double lo = std::max(0.0, (angles.alpha - std::numbers::pi / 4.0) / angles.theta);
  double hi = angles.alpha / angles.theta;
  for (int k = 0; k < 200; ++k, ++used) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double x = mid * angles.theta - angles.alpha;
    const double residual = 2.0 * mid * angles.theta + std::cos(x) / std::sin(x);
    (residual >= 0.0 ? lo : hi) = mid;
  }
  RestartPlan plan;
  plan.j_continuous = 0.5 * (lo + hi);
  plan.iterations_used = used;
  plan.stationary = true;
  plan.residual = stationarity_residual(angles, plan.j_continuous);
  const double j = plan.j_continuous;
  choose_integer(angles, plan, std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(j))),
                 std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(j))));
  return plan;
}

} // namespace

RestartPlan integer_stop_point(const SpectralAngles &angles) {
  if (has_stationary_point(angles)) {
    try {
      return refine_stop_point(angles, default_seed(angles));
    } catch (const Error &e) {
      if (e.code() != ErrorCode::NoConvergence) throw;
    }
    return bisect_stop_point(angles, kDefaultMaxIterations);
  }
  // E(j) >= j, so no integer beyond the best cost found so far can win.
  RestartPlan plan;
  plan.stationary = false;
  plan.expected_cost = std::numeric_limits<double>::infinity();
  for (std::size_t j = 1; static_cast<double>(j) < plan.expected_cost; ++j) {
    const double p = success_probability(angles, j);
    if (p <= kSingularThreshold) continue;
    const double cost = static_cast<double>(j) / p;
    if (cost < plan.expected_cost) {
      plan.expected_cost = cost;
      plan.j_integer = j;
      plan.success_probability_per_trial = p;
    }
    ++plan.iterations_used;
  }
  plan.j_continuous = static_cast<double>(plan.j_integer);
  return plan;
}

MonteCarloReport simulate_restarts(const SearchInstance &inst, std::size_t j,
                                   std::size_t trials, std::uint64_t seed, Index memory_cap) {
  if (j < 1 || trials < 1) {
    throw std::invalid_argument("simulate_restarts needs j >= 1 and trials >= 1");
  }
  detail::check_budget(inst.n(), memory_cap);
  StateVectorXd state = uniform_state(inst.n());
  for (std::size_t step = 0; step < j; ++step) grover_step_inplace(state, inst);

  MonteCarloReport report;
  report.trials = trials;
  report.j = j;
  report.seed = seed;
  report.simulated_success_probability = marked_probability(state, inst);
  if (report.simulated_success_probability < kMinTrialProbability) {
    throw Error(ErrorCode::SingularCost,
                "success probability per trial is " +
                    std::to_string(report.simulated_success_probability) + " at j = " +
                    std::to_string(j));
  }

  const MeasurementSampler sampler(state);
  std::uint64_t attempts = 0;
  for (std::size_t k = 0; k < trials; ++k) {
    SplitMix64 rng(derive_seed(seed, k));
    do {
      ++attempts;
    } while (!oracle_eval(inst, sampler.draw(rng)));
  }
  report.mean_trials_to_success =
      static_cast<double>(attempts) / static_cast<double>(trials);
  report.mean_total_iterations = static_cast<double>(j) * report.mean_trials_to_success;
  report.empirical_success_rate = static_cast<double>(trials) / static_cast<double>(attempts);
  return report;
}

} // namespace grover
