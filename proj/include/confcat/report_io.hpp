#pragma once

#include <string>
#include <vector>

#include "confcat/bounds_engine.hpp"
#include <json.hpp>

namespace confcat::bounds {

/// {invariant, n, k, lower, upper, exact, conjecture_value, evidence: [...]}
nlohmann::json to_json(const BoundReport& r);
BoundReport report_from_json(const nlohmann::json& j);

/// Single report: one table row plus its evidence list.
std::string to_markdown(const BoundReport& r);

/// One row per (n,k); one column per invariant present in the reports.
std::string sweep_to_markdown(const std::vector<BoundReport>& reports);

/// "v" for exact values, "[lo, hi]" otherwise.
std::string interval_cell(const BoundReport& r);

}  // namespace confcat::bounds
