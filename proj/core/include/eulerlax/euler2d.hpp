#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "eulerlax/field2d.hpp"

namespace eulerlax {

// Vorticity, streamfunction and time, with laplacian(psi) = omega.
struct FlowState2D {
  ScalarField2D omega;
  ScalarField2D psi;
  double t = 0.0;

  // Solves for the zero-mean streamfunction.
  static FlowState2D from_vorticity(ScalarField2D omega, double t = 0.0);
  const Grid2D& grid() const noexcept { return omega.grid(); }
};

// Closed-form steady solutions of the 2D Euler equation:
//   eigenstate: psi = A sin(k x) sin(l y), omega = -(k^2 + l^2) psi
//   shear:      psi = A cos(m y),          omega = -m^2 psi
struct SteadyStateSpec {
  enum class Kind { LaplacianEigenstate, Shear };

  Kind kind = Kind::LaplacianEigenstate;
  int k = 1;
  int l = 1;
  int m = 1;
  double amplitude = 1.0;

  static SteadyStateSpec eigenstate(int k, int l, double amplitude = 1.0);
  static SteadyStateSpec shear(int m, double amplitude = 1.0);
  // "eigenstate:k=1,l=1,A=1" or "shear:m=2,A=0.5".
  static SteadyStateSpec parse(const std::string& text);
  std::string to_string() const;

  FlowState2D build(const Grid2D& grid) const;
};

// Accepts SteadyStateSpec strings plus "random:seed=7,kmax=8[,amp=1]" for a
// random band-limited vorticity.
FlowState2D make_initial_state(const std::string& spec, const Grid2D& grid);

// Dealiased {psi, f}: both operands and the product are truncated by the
// 2/3 rule, and the mean mode of the product is removed.
ScalarField2D advect_dealiased(const ScalarField2D& psi, const ScalarField2D& f);

// d omega / dt = -{psi, omega}, dealiased.
ScalarField2D euler_rhs(const FlowState2D& state);

// Largest stable step 0.5 * min(dx, dy) / max|u| with u = (-psi_y, psi_x).
// Infinity when the flow is at rest.
double cfl_limit(const FlowState2D& state, double safety = 0.5);
bool cfl_ok(const FlowState2D& state, double dt, double safety = 0.5);

struct Rk4Result {
  FlowState2D next;
  // Streamfunctions at the four classical RK4 stages (t, t+dt/2, t+dt/2, t+dt).
  std::array<ScalarField2D, 4> stage_psi;
};

// Classical RK4 on omega with the streamfunction re-solved at every stage.
// Throws InvalidArgument for dt < 0; dt == 0 returns the input state.
Rk4Result step_rk4_with_stages(const FlowState2D& state, double dt);
FlowState2D step_rk4(const FlowState2D& state, double dt);

// Trajectory of nsteps + 1 states starting from `initial`.
std::vector<FlowState2D> integrate(const FlowState2D& initial, double dt, int nsteps);

struct FlowDiagnostics {
  double energy = 0.0;      // 0.5 <|grad psi|^2>
  double enstrophy = 0.0;   // 0.5 <omega^2>
  double mean_vorticity = 0.0;
};

FlowDiagnostics diagnostics(const FlowState2D& state);

}  // namespace eulerlax
