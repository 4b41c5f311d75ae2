#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "grover/instance.hpp"
#include "grover/reduced.hpp"
#include "grover/restart.hpp"

namespace grover {

/// A marked-count grid entry: either an absolute count or N / divisor.
struct EllSpec {
  Index value = 1;
  bool per_n = false;

  /// Parses "4" or "N/2". Throws std::invalid_argument on anything else.
  static EllSpec parse(const std::string &token);

  Index resolve(Index n) const noexcept { return per_n ? n / value : value; }
  std::string to_string() const;
};

struct SweepRow {
  Index n = 0;
  Index ell = 0;
  SpectralAngles angles;
  OptimalIterations optimum;
  double m_asymptotic = 0.0;
  RestartPlan restart;
  /// l = N/2: P_m = 1/2 for every m.
  bool degenerate = false;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  /// (N, l) pairs dropped because l resolved outside [1, N].
  std::size_t skipped = 0;
};

/// One row per valid (N, l), in grid order: N outer, l inner.
SweepResult sweep(std::span<const Index> grid_n, std::span<const EllSpec> grid_ell);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Ordinary least squares y = slope x + intercept. Needs two distinct x values.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

} // namespace grover
