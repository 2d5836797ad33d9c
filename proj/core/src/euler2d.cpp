#include "eulerlax/euler2d.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "eulerlax/errors.hpp"
#include "eulerlax/random_field.hpp"
#include "eulerlax/spectral2d.hpp"

namespace eulerlax {
namespace {

// "name:key=value,key=value" -> (name, {key: value}).
std::pair<std::string, std::map<std::string, std::string>> split_spec(const std::string& text) {
  const auto colon = text.find(':');
  std::pair<std::string, std::map<std::string, std::string>> out;
  out.first = text.substr(0, colon);
  if (colon == std::string::npos) return out;
  std::stringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("malformed state parameter '" + item + "'");
    out.second[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

double take_number(std::map<std::string, std::string>& params, const std::string& key,
                   double fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(it->second, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != it->second.size()) {
    throw InvalidArgument("state parameter " + key + " is not a number: " + it->second);
  }
  params.erase(it);
  return value;
}

int take_int(std::map<std::string, std::string>& params, const std::string& key, int fallback) {
  const double v = take_number(params, key, fallback);
  if (v != std::floor(v)) throw InvalidArgument("state parameter " + key + " must be an integer");
  return static_cast<int>(v);
}

void reject_leftovers(const std::map<std::string, std::string>& params, const std::string& kind) {
  if (!params.empty()) {
    throw InvalidArgument("unknown parameter '" + params.begin()->first + "' for " + kind);
  }
}

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

FlowState2D FlowState2D::from_vorticity(ScalarField2D omega, double t) {
  ScalarField2D psi = solve_poisson(omega);
  return {std::move(omega), std::move(psi), t};
}

SteadyStateSpec SteadyStateSpec::eigenstate(int k, int l, double amplitude) {
  SteadyStateSpec s;
  s.kind = Kind::LaplacianEigenstate;
  s.k = k;
  s.l = l;
  s.amplitude = amplitude;
  return s;
}

SteadyStateSpec SteadyStateSpec::shear(int m, double amplitude) {
  SteadyStateSpec s;
  s.kind = Kind::Shear;
  s.m = m;
  s.amplitude = amplitude;
  return s;
}

SteadyStateSpec SteadyStateSpec::parse(const std::string& text) {
  auto [name, params] = split_spec(text);
  SteadyStateSpec s;
  if (name == "eigenstate") {
    s = eigenstate(take_int(params, "k", 1), take_int(params, "l", 1),
                   take_number(params, "A", 1.0));
    if (s.k == 0 || s.l == 0) throw InvalidArgument("eigenstate needs nonzero k and l");
  } else if (name == "shear") {
    s = shear(take_int(params, "m", 1), take_number(params, "A", 1.0));
    if (s.m == 0) throw InvalidArgument("shear needs nonzero m");
  } else {
    throw InvalidArgument("unknown steady state '" + name + "'");
  }
  reject_leftovers(params, name);
  return s;
}

std::string SteadyStateSpec::to_string() const {
  if (kind == Kind::Shear) {
    return "shear:m=" + std::to_string(m) + ",A=" + format_number(amplitude);
  }
  return "eigenstate:k=" + std::to_string(k) + ",l=" + std::to_string(l) +
         ",A=" + format_number(amplitude);
}

FlowState2D SteadyStateSpec::build(const Grid2D& grid) const {
  const double kx0 = kTwoPi / grid.lx;
  const double ky0 = kTwoPi / grid.ly;
  ScalarField2D psi(grid);
  ScalarField2D omega(grid);
  if (kind == Kind::LaplacianEigenstate) {
    const double kx = k * kx0;
    const double ky = l * ky0;
    const double mu = kx * kx + ky * ky;
    psi = ScalarField2D::sample(grid, [&](double x, double y) {
      return amplitude * std::sin(kx * x) * std::sin(ky * y);
    });
    omega = -mu * psi;
  } else {
    const double ky = m * ky0;
    psi = ScalarField2D::sample(grid, [&](double, double y) { return amplitude * std::cos(ky * y); });
    omega = -(ky * ky) * psi;
  }
  return {std::move(omega), std::move(psi), 0.0};
}

FlowState2D make_initial_state(const std::string& spec, const Grid2D& grid) {
  if (spec.rfind("random", 0) == 0) {
    auto [name, params] = split_spec(spec);
    if (name != "random") throw InvalidArgument("unknown initial state '" + name + "'");
    const auto seed = static_cast<std::uint64_t>(take_int(params, "seed", 1));
    const int kmax = take_int(params, "kmax", 8);
    const double amp = take_number(params, "amp", 1.0);
    reject_leftovers(params, name);
    return FlowState2D::from_vorticity(amp * random_bandlimited(seed, kmax, grid));
  }
  return SteadyStateSpec::parse(spec).build(grid);
}

ScalarField2D advect_dealiased(const ScalarField2D& psi, const ScalarField2D& f) {
  require_same_grid(psi, f, "advect_dealiased");
  const SpectralCoeffs2D cp = dealias(to_spectral(psi));
  const SpectralCoeffs2D cf = dealias(to_spectral(f));
  const ScalarField2D px = to_physical(ddx(cp));
  const ScalarField2D py = to_physical(ddy(cp));
  const ScalarField2D fx = to_physical(ddx(cf));
  const ScalarField2D fy = to_physical(ddy(cf));
  ScalarField2D product(psi.grid());
  for (std::size_t n = 0; n < product.size(); ++n) {
    product[n] = px[n] * fy[n] - py[n] * fx[n];
  }
  SpectralCoeffs2D cprod = dealias(to_spectral(product));
  cprod.raw(0, 0) = 0.0;
  return to_physical(cprod);
}

ScalarField2D euler_rhs(const FlowState2D& state) {
  return -advect_dealiased(state.psi, state.omega);
}

double cfl_limit(const FlowState2D& state, double safety) {
  const Gradient2D g = gradient(state.psi);
  double umax = 0.0;
  for (std::size_t n = 0; n < g.x.size(); ++n) {
    umax = std::max(umax, std::hypot(g.x[n], g.y[n]));
  }
  if (umax == 0.0) return std::numeric_limits<double>::infinity();
  const Grid2D& grid = state.grid();
  return safety * std::min(grid.dx(), grid.dy()) / umax;
}

bool cfl_ok(const FlowState2D& state, double dt, double safety) {
  return dt <= cfl_limit(state, safety);
}

Rk4Result step_rk4_with_stages(const FlowState2D& state, double dt) {
  if (!(dt >= 0.0)) throw InvalidArgument("time step must be non-negative");
  if (dt == 0.0) return {state, {state.psi, state.psi, state.psi, state.psi}};

  Rk4Result out;
  const ScalarField2D& w0 = state.omega;

  out.stage_psi[0] = state.psi;
  const ScalarField2D k1 = -advect_dealiased(out.stage_psi[0], w0);

  const ScalarField2D w2 = w0 + (0.5 * dt) * k1;
  out.stage_psi[1] = solve_poisson(w2);
  const ScalarField2D k2 = -advect_dealiased(out.stage_psi[1], w2);

  const ScalarField2D w3 = w0 + (0.5 * dt) * k2;
  out.stage_psi[2] = solve_poisson(w3);
  const ScalarField2D k3 = -advect_dealiased(out.stage_psi[2], w3);

  const ScalarField2D w4 = w0 + dt * k3;
  out.stage_psi[3] = solve_poisson(w4);
  const ScalarField2D k4 = -advect_dealiased(out.stage_psi[3], w4);

  ScalarField2D next = w0;
  const double h6 = dt / 6.0;
  for (std::size_t n = 0; n < next.size(); ++n) {
    next[n] += h6 * (k1[n] + 2.0 * k2[n] + 2.0 * k3[n] + k4[n]);
  }
  out.next = FlowState2D::from_vorticity(std::move(next), state.t + dt);
  return out;
}

FlowState2D step_rk4(const FlowState2D& state, double dt) {
  return step_rk4_with_stages(state, dt).next;
}

std::vector<FlowState2D> integrate(const FlowState2D& initial, double dt, int nsteps) {
  if (nsteps < 0) throw InvalidArgument("step count must be non-negative");
  std::vector<FlowState2D> traj;
  traj.reserve(static_cast<std::size_t>(nsteps) + 1);
  traj.push_back(initial);
  for (int s = 0; s < nsteps; ++s) traj.push_back(step_rk4(traj.back(), dt));
  return traj;
}

FlowDiagnostics diagnostics(const FlowState2D& state) {
  const Gradient2D g = gradient(state.psi);
  double e = 0.0;
  double z = 0.0;
  for (std::size_t n = 0; n < g.x.size(); ++n) {
    e += g.x[n] * g.x[n] + g.y[n] * g.y[n];
    z += state.omega[n] * state.omega[n];
  }
  const double count = static_cast<double>(g.x.size());
  return {0.5 * e / count, 0.5 * z / count, state.omega.mean()};
}

}  // namespace eulerlax
