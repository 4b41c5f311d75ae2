// Acceptance suite: one PASS/FAIL line per criterion, with the measured
// deviation and wall time. Exit status is non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "grover/fullsim.hpp"
#include "grover/instance.hpp"
#include "grover/random.hpp"
#include "grover/reduced.hpp"
#include "grover/restart.hpp"
#include "grover/sweep.hpp"

using namespace grover;
using std::numbers::pi;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<Outcome()> check;
};

std::string fmt(const char *format, double a, double b = 0.0, double c = 0.0) {
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer), format, a, b, c);
  return buffer;
}

// Log-uniform integer in [lo, hi].
Index log_uniform(SplitMix64 &rng, Index lo, Index hi) {
  const double t = rng.uniform();
  const auto value = static_cast<Index>(
      std::floor(std::exp(std::log(static_cast<double>(lo)) +
                          t * (std::log(static_cast<double>(hi) + 1) -
                               std::log(static_cast<double>(lo))))));
  return std::clamp(value, lo, hi);
}

Outcome exact_small_cases() {
  double worst = 0.0;
  for (const auto &[n, marked] :
       std::vector<std::pair<Index, std::vector<Index>>>{{4, {2}}, {8, {3, 5}}}) {
    const auto inst = new_instance(n, marked);
    const auto angles = spectral_angles(inst);
    const auto trace = evolve(inst, 1);
    worst = std::max({worst, std::abs(trace.probabilities[1] - 1.0),
                      std::abs(trace.probabilities[1] - success_probability(angles, 1)),
                      std::abs(angles.theta - pi / 3), std::abs(angles.alpha - pi / 3)});
  }
  return {worst <= 1e-12, fmt("max |P_1 - 1| and angle error = %.3g", worst)};
}

Outcome full_vs_reduced() {
  SplitMix64 rng(20240601);
  double worst = 0.0;
  std::size_t steps = 0;
  for (int i = 0; i < 200; ++i) {
    const Index n = log_uniform(rng, 2, Index{1} << 16);
    const Index ell = log_uniform(rng, 1, n);
    const auto inst = random_instance(n, ell, rng());
    const auto angles = spectral_angles(inst);
    const std::size_t m_max = std::max<std::size_t>(4 * optimal_iterations(angles).m, 1);
    const auto trace = evolve(inst, m_max);
    for (std::size_t m = 0; m <= m_max; ++m) {
      worst = std::max(worst, std::abs(trace.probabilities[m] - success_probability(angles, m)));
    }
    steps += m_max;
  }
  return {worst <= 1e-10, fmt("max |P_full - cos^2| = %.3g over %.0f steps", worst,
                              static_cast<double>(steps))};
}

Outcome matrix_reductions() {
  SplitMix64 rng(77);
  double orthogonality = 0.0;
  double composition = 0.0;
  double conjugation = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Index ell = 1 + rng.below(64);
    const Index n = ell + 1 + rng.below((Index{1} << 16) - ell);
    const auto a = restricted_diffusion_matrix(n, ell);
    const auto u = restricted_grover_matrix(n, ell);
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(a.order(), a.order());
    orthogonality = std::max({orthogonality,
                              (a.entries.transpose() * a.entries - id).cwiseAbs().maxCoeff(),
                              (u.entries.transpose() * u.entries - id).cwiseAbs().maxCoeff()});
    const Eigen::MatrixXd composed = -(a.entries * restricted_oracle(ell));
    composition = std::max(composition, (u.entries - composed).cwiseAbs().maxCoeff());
    conjugation = std::max(
        conjugation,
        (restrict_to_plane(u) - reduced_step_matrix(spectral_angles(n, ell))).cwiseAbs().maxCoeff());
  }
  return {orthogonality <= 1e-12 && composition <= 1e-12 && conjugation <= 1e-12,
          fmt("orthogonality %.3g, U + A D %.3g, plane %.3g", orthogonality, composition,
              conjugation)};
}

Outcome iteration_count_law() {
  std::vector<double> x;
  std::vector<double> y;
  for (int e = 10; e <= 20; ++e) {
    const Index n = Index{1} << e;
    x.push_back(std::sqrt(static_cast<double>(n)));
    y.push_back(static_cast<double>(optimal_iterations(spectral_angles(n, 1)).m));
  }
  const double slope = fit_line(x, y).slope;
  const double relative = std::abs(slope / (pi / 4) - 1.0);
  const auto big = optimal_iterations(spectral_angles(Index{1} << 20, 1));
  return {relative <= 0.01 && big.m == 804 && big.p >= 0.9999,
          fmt("slope/(pi/4) - 1 = %.3g, m_opt(2^20) = %.0f, P = %.7f", relative,
              static_cast<double>(big.m), big.p)};
}

// Root of 2 j theta + cot(j theta - alpha) on (alpha/(2 theta), alpha/theta),
// bisected straight from the equation.
double bisect_root(double theta, double alpha) {
  auto f = [&](double j) { return 2 * j * theta + 1.0 / std::tan(j * theta - alpha); };
  double lo = alpha / (2 * theta);
  double hi = alpha / theta;
  if (!(f(lo) > 0)) return std::nan("");
  for (int i = 0; i < 300; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Outcome restart_solver() {
  SplitMix64 rng(31337);
  double worst_residual = 0.0;
  double worst_gap = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Index n = log_uniform(rng, 50, Index{1} << 24);
    const Index ell = 1 + rng.below(std::max<Index>(1, n / 50));
    const auto angles = spectral_angles(n, ell);
    const auto plan = refine_stop_point(angles, default_seed(angles));
    worst_residual = std::max(worst_residual, std::abs(*plan.residual));
    const double reference = bisect_root(angles.theta, angles.alpha);
    worst_gap = std::max(worst_gap, std::isnan(reference)
                                        ? 1.0
                                        : std::abs(plan.j_continuous - reference));
  }
  const auto a1000 = spectral_angles(1000, 1);
  const double seed = first_order_seed(a1000);
  const double root = refine_stop_point(a1000, seed).j_continuous;
  const double seed_error = std::abs(seed - root) / root;
  return {worst_residual <= 1e-9 && worst_gap <= 1e-8 && seed_error <= 0.1,
          fmt("max |residual| %.3g, max |j - j_bisect| %.3g, seed error %.3f", worst_residual,
              worst_gap, seed_error)};
}

Outcome geometric_expectation() {
  constexpr std::size_t kTrials = 100000;
  const auto coin = simulate_restarts(random_instance(2, 1, 0), 1, kTrials, 1);
  const double coin_sigma = std::sqrt((1 - 0.5) / 0.25 / kTrials);
  const double coin_z = std::abs(coin.mean_trials_to_success - 2.0) / coin_sigma;

  const auto inst = random_instance(1000, 1, 2);
  const auto plan = integer_stop_point(spectral_angles(inst));
  const auto report = simulate_restarts(inst, plan.j_integer, kTrials, 2);
  const double p = plan.success_probability_per_trial;
  const double sigma = plan.j_integer * std::sqrt((1 - p) / (p * p) / kTrials);
  const double z = std::abs(report.mean_total_iterations - plan.expected_cost) / sigma;
  return {coin_z <= 3 && z <= 3,
          fmt("|z| = %.2f at (2, 1, 1); |z| = %.2f at (1000, 1, j = %.0f)", coin_z, z,
              static_cast<double>(plan.j_integer))};
}

Outcome property_suite() {
  constexpr int kCases = 1000;
  SplitMix64 rng(4242);
  int failures = 0;
  double worst_norm = 0.0;
  double worst_spread = 0.0;
  double worst_involution = 0.0;
  double worst_ortho = 0.0;
  double worst_angle = 0.0;

  for (int i = 0; i < kCases; ++i) {
    // Involutions on arbitrary vectors.
    {
      const Index n = log_uniform(rng, 2, Index{1} << 12);
      const auto inst = random_instance(n, log_uniform(rng, 1, n), rng());
      const StateVectorXd v =
          StateVectorXd::NullaryExpr(static_cast<Eigen::Index>(n), [&] {
            return rng.uniform() - 0.5;
          }).normalized();
      failures += !(apply_oracle_reflection(apply_oracle_reflection(v, inst), inst).array() ==
                    v.array())
                       .all();
      worst_involution = std::max(
          worst_involution, (apply_average_inversion(apply_average_inversion(v)) - v)
                                .cwiseAbs()
                                .maxCoeff());
    }
    // Norm preservation and the two-amplitude structure along a long run.
    {
      const Index n = log_uniform(rng, 2, Index{1} << 16);
      const Index ell = log_uniform(rng, 1, n);
      const auto inst = random_instance(n, ell, rng());
      const auto steps =
          10 * static_cast<std::size_t>(std::ceil(pi / 4 * std::sqrt(double(n) / double(ell))));
      Eigen::Array<bool, Eigen::Dynamic, 1> is_marked(static_cast<Eigen::Index>(n));
      for (Index k = 0; k < n; ++k) is_marked(static_cast<Eigen::Index>(k)) = inst.contains(k);
      const bool has_unmarked = ell < n;
      StateVectorXd state = uniform_state(n);
      for (std::size_t m = 0; m < steps; ++m) {
        grover_step_inplace(state, inst);
        worst_norm = std::max(worst_norm, std::abs(state.norm() - 1.0));
        const double marked_value = state(static_cast<Eigen::Index>(inst.marked()[0]));
        double unmarked_value = 0.0;
        if (has_unmarked) {
          Eigen::Index first = 0;
          while (is_marked(first)) ++first;
          unmarked_value = state(first);
        }
        const double spread =
            (state.array() - is_marked.select(Eigen::ArrayXd::Constant(state.size(), marked_value),
                                              Eigen::ArrayXd::Constant(state.size(), unmarked_value)))
                .abs()
                .maxCoeff();
        worst_spread = std::max(worst_spread, spread);
      }
    }
    // U = -I on the orthocomplement.
    {
      const Index n = log_uniform(rng, 4, Index{1} << 12);
      const auto inst = random_instance(n, log_uniform(rng, 1, n), rng());
      worst_ortho = std::max(worst_ortho, orthocomplement_residual(inst, 5, rng()));
    }
    // alpha = pi/2 - theta/2.
    {
      const Index n = log_uniform(rng, 2, Index{1} << 20);
      const auto angles = spectral_angles(n, 1 + rng.below(n));
      worst_angle = std::max(worst_angle, std::abs(angles.alpha - (pi / 2 - angles.theta / 2)));
    }
  }
  const bool ok = failures == 0 && worst_involution <= 1e-12 && worst_norm <= 1e-12 &&
                  worst_spread <= 1e-12 && worst_ortho <= 1e-11 && worst_angle <= 1e-12;
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer),
                "%d cases each: I_L^2 failures %d, |(-I_s)^2 - I| %.2g, norm drift %.2g, "
                "two-amplitude spread %.2g, |Uv + v| %.2g, alpha identity %.2g",
                kCases, failures, worst_involution, worst_norm, worst_spread, worst_ortho,
                worst_angle);
  return {ok, buffer};
}

Outcome classical_baseline() {
  int mismatches = 0;
  int pairs = 0;
  for (unsigned n = 1; n <= 12; ++n) {
    for (unsigned ell = 1; ell <= n; ++ell) {
      std::uint64_t position_sum = 0;
      std::uint64_t placements = 0;
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<unsigned>(__builtin_popcount(mask)) != ell) continue;
        position_sum += static_cast<std::uint64_t>(__builtin_ctz(mask)) + 1;
        ++placements;
      }
      ++pairs;
      // Exact rational comparison, then the float the library returns.
      const bool exact = position_sum * (ell + 1) == static_cast<std::uint64_t>(n + 1) * placements;
      const double brute = static_cast<double>(position_sum) / static_cast<double>(placements);
      const bool close = std::abs(classical_expected_queries(n, ell) - brute) <= 1e-12;
      mismatches += !(exact && close);
    }
  }
  return {mismatches == 0, fmt("%.0f (n, ell) pairs, %.0f mismatches", pairs, mismatches)};
}

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1 exact small cases", 1e-3, exact_small_cases},
      {"2 full vs reduced equivalence", 60.0, full_vs_reduced},
      {"3 matrix reductions", 10.0, matrix_reductions},
      {"4 iteration-count law", 1.0, iteration_count_law},
      {"5 restart solver", 1.0, restart_solver},
      {"6 geometric expectation", 30.0, geometric_expectation},
      {"7 property suite", 60.0, property_suite},
      {"8 classical baseline", 60.0, classical_baseline},
  };

  int failed = 0;
  for (const auto &criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.check();
    } catch (const std::exception &e) {
      outcome = {false, std::string("threw: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < criterion.budget_seconds;
    const bool ok = outcome.ok && in_time;
    failed += !ok;
    std::printf("[%s] %-32s %s; %.4g s (limit %g s)%s\n", ok ? "PASS" : "FAIL",
                criterion.name.c_str(), outcome.detail.c_str(), seconds, criterion.budget_seconds,
                in_time ? "" : " TOO SLOW");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
