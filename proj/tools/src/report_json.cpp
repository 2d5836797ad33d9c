#include "eulerlax_tools/report_json.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>

#include "eulerlax/errors.hpp"

namespace eulerlax::tools {

using nlohmann::json;

namespace {

// JSON has no representation for inf or NaN.
json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

json entry_to_json(const ResidualEntry& e) {
  json j;
  j["linf"] = number(e.linf);
  j["l2"] = number(e.l2);
  j["mask_fraction"] = number(e.mask_fraction);
  j["tolerance"] = number(e.tolerance);
  j["pass"] = e.pass();
  if (e.informational) j["informational"] = true;
  if (e.expect_failure) j["expect_failure"] = true;
  return j;
}

}  // namespace

json report_to_json(const ResidualReport& r) {
  json j;
  j["suite"] = r.suite;
  j["timestamp"] = r.timestamp;
  j["grid"] = {{"counts", r.grid_counts}, {"lengths", r.grid_lengths}};
  j["parameters"] = r.parameters;
  json metrics = json::object();
  for (const auto& [k, v] : r.metrics) metrics[k] = number(v);
  j["metrics"] = metrics;
  for (const char* key : {"eps_rel", "mask_fraction"}) {
    if (auto it = r.metrics.find(key); it != r.metrics.end()) j[key] = number(it->second);
  }

  json residuals = json::object();
  for (const auto& e : r.residuals) {
    json* node = &residuals;
    std::size_t start = 0;
    while (true) {
      const std::size_t dot = e.name.find('.', start);
      const std::string part = e.name.substr(start, dot == std::string::npos ? dot : dot - start);
      if (part.empty()) throw InvalidArgument("bad residual name '" + e.name + "'");
      if (dot == std::string::npos) {
        if (node->contains(part)) throw InvalidArgument("duplicate residual '" + e.name + "'");
        (*node)[part] = entry_to_json(e);
        break;
      }
      json& child = (*node)[part];
      if (child.is_null()) child = json::object();
      if (child.contains("linf")) {
        throw InvalidArgument("residual '" + e.name + "' nests under a leaf");
      }
      node = &child;
      start = dot + 1;
    }
  }
  j["residuals"] = residuals;
  j["warnings"] = r.warnings;
  j["verdict"] = r.verdict() ? "pass" : "fail";
  j["runtime_ms"] = r.runtime_ms;
  return j;
}

void write_report(const std::string& path, const ResidualReport& report) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p);
  if (!out) throw Error("cannot write report '" + path + "'");
  out << report_to_json(report).dump(2) << '\n';
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace eulerlax::tools
