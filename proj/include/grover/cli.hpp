#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "grover/fullsim.hpp"
#include "grover/instance.hpp"

namespace grover::cli {

enum ExitCode : int { kSuccess = 0, kRuntimeError = 1, kUsageError = 2 };

struct RunConfig {
  std::string subcommand;
  std::optional<Index> n;
  std::optional<Index> ell;
  std::optional<std::string> marked;
  std::optional<std::size_t> m_max;
  std::optional<std::size_t> j;
  std::optional<std::size_t> trials;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::optional<std::string> out;
  Index memory_cap = kDefaultMemoryCap;
  std::vector<std::string> grid_n;
  std::vector<std::string> grid_ell;
};

/// Parses `arguments` (without the program name), runs the subcommand, and
/// writes results to `out` (or --out) and error objects to `err`.
int run_cli(const std::vector<std::string> &arguments, std::ostream &out, std::ostream &err);

} // namespace grover::cli
