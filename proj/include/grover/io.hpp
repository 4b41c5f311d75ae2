#pragma once

// Machine-readable renderings. Floats are written in the shortest decimal form
// that parses back to the same double, in JSON and CSV alike.

#include <string>

#include "json.hpp"

#include "grover/fullsim.hpp"
#include "grover/instance.hpp"
#include "grover/reduced.hpp"
#include "grover/restart.hpp"

namespace grover {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Shortest round-trip decimal form of `value`.
std::string format_double(double value);

Json to_json(const SearchInstance &inst);
/// Throws the same errors as the SearchInstance constructor, or
/// nlohmann::json exceptions for malformed documents.
SearchInstance instance_from_json(const Json &doc);

Json to_json(const IterationTrace &trace);
/// Columns m, probability with a header row.
std::string to_csv(const IterationTrace &trace);

/// {"n", "ell", "theta", "alpha", "m_opt", "p_opt", "m_asymptotic"}
Json angles_summary(const SpectralAngles &angles);

Json to_json(const RestartPlan &plan);
Json to_json(const MonteCarloReport &report);

/// Row-major, no header.
std::string matrix_to_csv(const Eigen::MatrixXd &matrix);

} // namespace grover
