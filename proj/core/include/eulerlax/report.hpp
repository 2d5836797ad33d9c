#pragma once

#include <map>
#include <string>
#include <vector>

namespace eulerlax {

struct ResidualEntry {
  std::string name;  // dotted names nest in serialized reports ("constraint.main1")
  double linf = 0.0;
  double l2 = 0.0;
  double mask_fraction = 1.0;
  double tolerance = 0.0;
  // Informational entries are reported but do not enter the verdict.
  bool informational = false;
  // When true the entry passes if linf exceeds the tolerance (negative controls).
  bool expect_failure = false;

  bool pass() const noexcept {
    if (informational) return true;
    return expect_failure ? !(linf < tolerance) : linf < tolerance;
  }
};

// Outcome of one verification suite.
struct ResidualReport {
  std::string suite;
  std::string timestamp;
  std::vector<int> grid_counts;
  std::vector<double> grid_lengths;
  std::map<std::string, std::string> parameters;
  std::map<std::string, double> metrics;
  std::vector<ResidualEntry> residuals;
  std::vector<std::string> warnings;
  double runtime_ms = 0.0;

  ResidualEntry& add(ResidualEntry entry) {
    residuals.push_back(std::move(entry));
    return residuals.back();
  }
  const ResidualEntry* find(const std::string& name) const {
    for (const auto& r : residuals) {
      if (r.name == name) return &r;
    }
    return nullptr;
  }
  bool verdict() const noexcept {
    for (const auto& r : residuals) {
      if (!r.pass()) return false;
    }
    return true;
  }
};

}  // namespace eulerlax
