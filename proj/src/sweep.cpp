#include "grover/sweep.hpp"

#include <charconv>
#include <stdexcept>

namespace grover {

namespace {

Index parse_index(std::string_view text) {
  Index value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("not a non-negative integer: '" + std::string(text) + "'");
  }
  return value;
}

} // namespace

EllSpec EllSpec::parse(const std::string &token) {
  std::string_view text = token;
  if (text.size() > 2 && (text[0] == 'N' || text[0] == 'n') && text[1] == '/') {
    const Index divisor = parse_index(text.substr(2));
    if (divisor == 0) throw std::invalid_argument("zero divisor in '" + token + "'");
    return {divisor, true};
  }
  return {parse_index(text), false};
}

std::string EllSpec::to_string() const {
  return per_n ? "N/" + std::to_string(value) : std::to_string(value);
}

SweepResult sweep(std::span<const Index> grid_n, std::span<const EllSpec> grid_ell) {
  SweepResult result;
  for (Index n : grid_n) {
    for (const EllSpec &spec : grid_ell) {
      const Index ell = spec.resolve(n);
      if (n < 2 || ell < 1 || ell > n) {
        ++result.skipped;
        continue;
      }
      SweepRow row;
      row.n = n;
      row.ell = ell;
      row.angles = spectral_angles(n, ell);
      row.optimum = optimal_iterations(row.angles);
      row.m_asymptotic = asymptotic_iterations(n, ell);
      row.restart = integer_stop_point(row.angles);
      row.degenerate = 2 * ell == n;
      result.rows.push_back(row);
    }
  }
  return result;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("fit_line needs at least two paired points");
  }
  const double count = static_cast<double>(x.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= count;
  mean_y /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mean_x) * (x[i] - mean_x);
    sxy += (x[i] - mean_x) * (y[i] - mean_y);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_line needs two distinct x values");
  const double slope = sxy / sxx;
  return {slope, mean_y - slope * mean_x};
}

} // namespace grover
