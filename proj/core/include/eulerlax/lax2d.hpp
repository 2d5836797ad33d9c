#pragma once

#include <complex>
#include <ostream>
#include <vector>

#include "eulerlax/euler2d.hpp"
#include "eulerlax/field2d.hpp"
#include "eulerlax/norms.hpp"

namespace eulerlax {

// L phi = {omega, phi}.
ScalarField2D lax_L(const ScalarField2D& omega, const ScalarField2D& phi);
ComplexField2D lax_L(const ScalarField2D& omega, const ComplexField2D& phi);
// A phi = {psi, phi}.
ScalarField2D lax_A(const ScalarField2D& psi, const ScalarField2D& phi);
ComplexField2D lax_A(const ScalarField2D& psi, const ComplexField2D& phi);

// Candidate eigenfunction of L. The residual is always measured, never assumed.
struct LaxEigenfunction2D {
  ComplexField2D phi;
  std::complex<double> lambda{0.0, 0.0};
};

// L phi - lambda phi.
ComplexField2D eigen_residual(const ScalarField2D& omega, const LaxEigenfunction2D& eig);

// (d_t L + [A, L]) phi - {omega_t + {psi, omega}, phi}, assembled as
//   {omega_t, phi} + {psi, {omega, phi}} - {omega, {psi, phi}}
//     - {omega_t + {psi, omega}, phi}.
// Vanishes for arbitrary fields by the Jacobi identity.
ScalarField2D compatibility_residual_2d(const FlowState2D& state, const ScalarField2D& omega_t,
                                        const ScalarField2D& phi);

// Integrates d_t phi = -{psi(t), phi} along a trajectory produced by
// integrate(..., dt, ...). Stage streamfunctions are recomputed from each
// trajectory state so the coupled (omega, phi) system advances with one RK4
// scheme. Returns one phi per trajectory state.
std::vector<ScalarField2D> transport_phi(const std::vector<FlowState2D>& trajectory,
                                         const ScalarField2D& phi0, double dt);
std::vector<ComplexField2D> transport_phi(const std::vector<FlowState2D>& trajectory,
                                          const ComplexField2D& phi0, double dt);

struct MonitorSample {
  double t = 0.0;
  double linf = 0.0;
  double l2 = 0.0;
};

// Norms of L phi(t) - lambda phi(t) at each trajectory time. Descriptive only.
std::vector<MonitorSample> isospectrality_monitor(const std::vector<FlowState2D>& trajectory,
                                                  const std::vector<ComplexField2D>& phis,
                                                  std::complex<double> lambda);
std::vector<MonitorSample> isospectrality_monitor(const std::vector<FlowState2D>& trajectory,
                                                  const std::vector<ScalarField2D>& phis,
                                                  std::complex<double> lambda);

// CSV with header t,linf,l2.
void write_monitor_csv(std::ostream& out, const std::vector<MonitorSample>& samples);

}  // namespace eulerlax
