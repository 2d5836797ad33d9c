#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace eulerlax::tools {

// Parameters of one verification run. Fields a suite does not use are
// ignored by it but still round-trip through JSON.
struct ExperimentConfig {
  std::string suite;
  int n = 64;
  std::vector<int> sizes;          // converge: grid sizes, increasing
  std::uint64_t seed = 1;
  int count = 20;                  // number of seeded random cases
  int kmax = 0;                    // 0 selects the suite default
  std::optional<double> tol;       // empty selects the suite default
  std::string state = "eigenstate:k=1,l=1,A=1";
  std::string init;                // empty selects the suite default
  std::string phi0 = "omega";
  std::string f = "2+cos";
  std::string p = "square";
  double c = 0.25;
  double eps_rel = 1e-3;
  double dt = 0.0;                 // 0 selects the suite default (CFL for euler2d)
  double tend = 1.0;
  int snap_every = 10;
  std::array<double, 3> a1{1.0, 2.0, 3.0};
  std::array<double, 3> a2{-1.0, 0.0, 2.0};
  std::vector<double> eps{1e-1, 1e-2, 1e-3};
  std::string target = "jacobi";   // converge: suite whose residual is tracked
  std::string inputs = "analytic"; // converge: analytic | bandlimited
  std::string out;                 // primary artifact path (file or directory)
  std::string report;              // optional JSON report path
  int jobs = 1;

  // Throws InvalidArgument for values no suite can accept.
  void validate() const;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"jacobi",    "compat2d", "euler2d",
                                              "transport", "darboux",  "lax3d",
                                              "limit",     "converge"};
  return names;
}

nlohmann::json to_json(const ExperimentConfig& config);
// Rejects unknown keys and ill-typed values with InvalidArgument.
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);

// Parses "1,2,3" style lists.
std::vector<double> parse_number_list(const std::string& text);
std::array<double, 3> parse_vector3(const std::string& text);

}  // namespace eulerlax::tools
