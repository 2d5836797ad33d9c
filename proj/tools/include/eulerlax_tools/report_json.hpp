#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "eulerlax/report.hpp"

namespace eulerlax::tools {

// Residual names split on '.' into nested objects:
//   "constraint.main1" -> {"constraint": {"main1": {...}}}.
// Metrics named eps_rel and mask_fraction are also hoisted to the top level.
nlohmann::json report_to_json(const ResidualReport& report);

// Writes pretty-printed JSON; parent directories are created.
void write_report(const std::string& path, const ResidualReport& report);

// Current UTC time as ISO 8601.
std::string utc_timestamp();

}  // namespace eulerlax::tools
