#pragma once

// Restart strategy: run j Grover steps, measure, check the result with the
// oracle, and start over from |s> on failure. Each trial succeeds with
// p = cos^2(j theta - alpha), so the expected number of steps is
//
//   E(j) = j sec^2(j theta - alpha) = j / p.
//
// Its stationary points solve 2 j theta = -cot(j theta - alpha).

#include <cstddef>
#include <cstdint>
#include <optional>

#include "grover/fullsim.hpp"
#include "grover/instance.hpp"
#include "grover/reduced.hpp"

namespace grover {

struct RestartPlan {
  double j_continuous = 0.0;
  std::size_t j_integer = 0;
  double expected_cost = 0.0;
  double success_probability_per_trial = 0.0;
  /// Stationarity residual at j_continuous. Empty when no stationary point
  /// exists and the plan comes from the integer scan.
  std::optional<double> residual;
  std::size_t iterations_used = 0;
  bool stationary = true;
};

struct MonteCarloReport {
  std::size_t trials = 0;
  std::size_t j = 0;
  double mean_trials_to_success = 0.0;
  double mean_total_iterations = 0.0;
  double empirical_success_rate = 0.0;
  /// Marked probability of the simulated j-step state.
  double simulated_success_probability = 0.0;
  std::uint64_t seed = 0;
};

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr std::size_t kDefaultMaxIterations = 200;

/// j / cos^2(j theta - alpha). Throws SingularCost where the cosine vanishes.
double expected_cost(const SpectralAngles &angles, double j);

/// E'(j) = sec^2(x) (1 + 2 j theta tan(x)), x = j theta - alpha.
double expected_cost_derivative(const SpectralAngles &angles, double j);

/// 2 j theta + cot(j theta - alpha). Throws SingularCotangent where the sine
/// vanishes.
double stationarity_residual(const SpectralAngles &angles, double j);

/// One step of j <- (alpha - atan(1 / (2 theta j))) / theta.
double fixed_point_map(const SpectralAngles &angles, double j);

/// Positive root of j^2 - (alpha/theta) j + 1/(2 theta^2) = 0, the
/// first-order solution of the stationarity equation. Needs alpha^2 >= 2;
/// throws OutOfValidityRegion otherwise.
double first_order_seed(const SpectralAngles &angles);

/// Seed used by the pipeline: first_order_seed when valid, otherwise
/// max(1, alpha / (2 theta)).
double default_seed(const SpectralAngles &angles);

/// On (0, alpha/theta) the residual is concave with maximum 2 alpha - pi/2 - 1
/// at j = (alpha - pi/4)/theta, so a minimum of E exists there iff
/// alpha >= pi/4 + 1/2 (l/N below about 0.0796).
bool has_stationary_point(const SpectralAngles &angles);

/// Iterates fixed_point_map from j0 until |dj| <= tol (floored at a few ulps of
/// j). Throws NoConvergence after max_iter steps.
RestartPlan refine_stop_point(const SpectralAngles &angles, double j0,
                              double tol = kDefaultTolerance,
                              std::size_t max_iter = kDefaultMaxIterations);

/// Full pipeline: seed, refine, and pick the cheaper integer neighbour. When
/// no stationary point exists, E increases away from small j and the exact
/// integer minimiser over j >= 1 is found by scanning. Near the existence
/// boundary, where the fixed-point map stalls, the root is bracketed and bisected.
RestartPlan integer_stop_point(const SpectralAngles &angles);

/// Monte Carlo run of the restart strategy on the full state vector. The
/// j-step state is evolved once and shared by all trials; trial k draws its
/// measurements from its own stream derive_seed(seed, k).
MonteCarloReport simulate_restarts(const SearchInstance &inst, std::size_t j,
                                   std::size_t trials, std::uint64_t seed,
                                   Index memory_cap = kDefaultMemoryCap);

} // namespace grover
