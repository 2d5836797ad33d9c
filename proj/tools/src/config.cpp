#include "eulerlax_tools/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "eulerlax/errors.hpp"

namespace eulerlax::tools {

using nlohmann::json;

void ExperimentConfig::validate() const {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw InvalidArgument("unknown suite '" + suite + "'");
  }
  if (n < 8 || n % 2 != 0) throw InvalidArgument("n must be even and at least 8");
  if (count < 1) throw InvalidArgument("count must be positive");
  if (kmax < 0) throw InvalidArgument("kmax must be non-negative");
  if (tol && !(*tol > 0.0)) throw InvalidArgument("tol must be positive");
  if (!(eps_rel > 0.0 && eps_rel < 0.1)) throw InvalidArgument("eps_rel must lie in (0, 0.1)");
  if (dt < 0.0 || !std::isfinite(dt)) throw InvalidArgument("dt must be non-negative");
  if (!(tend >= 0.0)) throw InvalidArgument("tend must be non-negative");
  if (snap_every < 1) throw InvalidArgument("snap_every must be positive");
  if (jobs < 1) throw InvalidArgument("jobs must be positive");
  if (target != "jacobi" && target != "darboux") {
    throw InvalidArgument("converge target must be jacobi or darboux");
  }
  if (inputs != "analytic" && inputs != "bandlimited") {
    throw InvalidArgument("inputs must be analytic or bandlimited");
  }
}

json to_json(const ExperimentConfig& c) {
  json j;
  j["suite"] = c.suite;
  j["n"] = c.n;
  j["sizes"] = c.sizes;
  j["seed"] = c.seed;
  j["count"] = c.count;
  j["kmax"] = c.kmax;
  j["tol"] = c.tol ? json(*c.tol) : json(nullptr);
  j["state"] = c.state;
  j["init"] = c.init;
  j["phi0"] = c.phi0;
  j["f"] = c.f;
  j["p"] = c.p;
  j["c"] = c.c;
  j["eps_rel"] = c.eps_rel;
  j["dt"] = c.dt;
  j["tend"] = c.tend;
  j["snap_every"] = c.snap_every;
  j["a1"] = c.a1;
  j["a2"] = c.a2;
  j["eps"] = c.eps;
  j["target"] = c.target;
  j["inputs"] = c.inputs;
  j["out"] = c.out;
  j["report"] = c.report;
  j["jobs"] = c.jobs;
  return j;
}

namespace {

template <class T>
void read(const json& j, const char* key, T& dst) {
  auto it = j.find(key);
  if (it == j.end()) return;
  try {
    dst = it->get<T>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config key '") + key + "': " + e.what());
  }
}

}  // namespace

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("config must be a JSON object");
  const json reference = to_json(ExperimentConfig{});
  for (const auto& [key, value] : j.items()) {
    if (!reference.contains(key)) throw InvalidArgument("unknown config key '" + key + "'");
  }
  ExperimentConfig c;
  read(j, "suite", c.suite);
  read(j, "n", c.n);
  read(j, "sizes", c.sizes);
  read(j, "seed", c.seed);
  read(j, "count", c.count);
  read(j, "kmax", c.kmax);
  if (auto it = j.find("tol"); it != j.end() && !it->is_null()) {
    double t = 0.0;
    read(j, "tol", t);
    c.tol = t;
  }
  read(j, "state", c.state);
  read(j, "init", c.init);
  read(j, "phi0", c.phi0);
  read(j, "f", c.f);
  read(j, "p", c.p);
  read(j, "c", c.c);
  read(j, "eps_rel", c.eps_rel);
  read(j, "dt", c.dt);
  read(j, "tend", c.tend);
  read(j, "snap_every", c.snap_every);
  read(j, "a1", c.a1);
  read(j, "a2", c.a2);
  read(j, "eps", c.eps);
  read(j, "target", c.target);
  read(j, "inputs", c.inputs);
  read(j, "out", c.out);
  read(j, "report", c.report);
  read(j, "jobs", c.jobs);
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidArgument("config '" + path + "' is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("bad number '" + item + "' in list '" + text + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw InvalidArgument("bad number '" + item + "' in list '" + text + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw InvalidArgument("empty list");
  return out;
}

std::array<double, 3> parse_vector3(const std::string& text) {
  const auto v = parse_number_list(text);
  if (v.size() != 3) throw InvalidArgument("expected three components in '" + text + "'");
  return {v[0], v[1], v[2]};
}

}  // namespace eulerlax::tools
