#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "eulerlax/report.hpp"
#include "eulerlax_tools/config.hpp"

namespace eulerlax::tools {

// Runs one verification suite and writes its artifacts (JSON report, CSV
// series, EULF snapshots) to the paths named in the config. Throws
// InvalidArgument for unusable configurations; numerical failures are
// recorded in the report instead of thrown.
ResidualReport run_suite(const ExperimentConfig& config);

struct ConvergenceRow {
  int n = 0;
  double residual = 0.0;
};

// Residual of `target` ("jacobi" or "darboux") for each grid size. `inputs`
// selects analytic (non-band-limited) or band-limited test fields. Requires
// at least three strictly increasing sizes.
std::vector<ConvergenceRow> convergence_study(const std::string& target,
                                              const std::vector<int>& sizes,
                                              const ExperimentConfig& config);

// CSV with header n,residual.
void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);

}  // namespace eulerlax::tools
