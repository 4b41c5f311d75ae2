#include "grover/reduced.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace grover {

SpectralAngles spectral_angles(Index n, Index ell) {
  if (n < 2) {
    throw Error(ErrorCode::SizeTooSmall,
                "database size must be at least 2, got " + std::to_string(n));
  }
  if (ell < 1 || ell > n) {
    throw Error(ErrorCode::EllOutOfRange, "ell must lie in [1, " + std::to_string(n) +
                                              "], got " + std::to_string(ell));
  }
  const double size = static_cast<double>(n);
  const double root_marked = std::sqrt(static_cast<double>(ell));
  const double root_unmarked = std::sqrt(static_cast<double>(n - ell));
  SpectralAngles angles;
  angles.n = n;
  angles.ell = ell;
  angles.theta = std::atan2(2.0 * root_marked * root_unmarked / size,
                            (static_cast<double>(n) - 2.0 * static_cast<double>(ell)) / size);
  angles.alpha = std::atan2(root_unmarked, root_marked);
  return angles;
}

double success_probability(const SpectralAngles &angles, std::size_t m) {
  const double c = std::cos(static_cast<double>(m) * angles.theta - angles.alpha);
  return c * c;
}

OptimalIterations optimal_iterations(const SpectralAngles &angles) {
  const double ratio = angles.alpha / angles.theta;
  const auto lower = static_cast<std::size_t>(std::floor(ratio));
  const auto upper = static_cast<std::size_t>(std::ceil(ratio));
  const double p_lower = success_probability(angles, lower);
  const double p_upper = success_probability(angles, upper);
  if (p_upper > p_lower) return {upper, p_upper};
  return {lower, p_lower};
}

double asymptotic_iterations(Index n, Index ell) {
  if (ell < 1 || ell > n) {
    throw Error(ErrorCode::EllOutOfRange, "ell must lie in [1, n]");
  }
  return std::numbers::pi / 4.0 * std::sqrt(static_cast<double>(n) / static_cast<double>(ell));
}

IterationTrace predicted_trace(const SpectralAngles &angles, std::size_t m_max) {
  IterationTrace trace;
  trace.probabilities.reserve(m_max + 1);
  for (std::size_t m = 0; m <= m_max; ++m) {
    trace.probabilities.push_back(success_probability(angles, m));
  }
  return trace;
}

} // namespace grover
