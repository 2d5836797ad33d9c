#include "eulerlax/lax2d.hpp"

#include <cmath>
#include <iomanip>

#include "eulerlax/errors.hpp"
#include "eulerlax/spectral2d.hpp"

namespace eulerlax {
namespace {

void check_spacing(const std::vector<FlowState2D>& trajectory, double dt) {
  if (trajectory.empty()) throw InvalidArgument("transport_phi: empty trajectory");
  if (!(dt > 0.0)) throw InvalidArgument("transport_phi: dt must be positive");
  for (std::size_t n = 0; n + 1 < trajectory.size(); ++n) {
    const double gap = trajectory[n + 1].t - trajectory[n].t;
    if (std::abs(gap - dt) > 1e-9 * dt) {
      throw InvalidArgument("transport_phi: trajectory spacing " + std::to_string(gap) +
                            " does not match dt " + std::to_string(dt));
    }
  }
}

// One RK4 step of d_t phi = -{psi(t), phi} given the flow's stage streamfunctions.
ScalarField2D transport_step(const std::array<ScalarField2D, 4>& psi, const ScalarField2D& phi,
                             double dt) {
  const ScalarField2D k1 = -advect_dealiased(psi[0], phi);
  const ScalarField2D k2 = -advect_dealiased(psi[1], phi + (0.5 * dt) * k1);
  const ScalarField2D k3 = -advect_dealiased(psi[2], phi + (0.5 * dt) * k2);
  const ScalarField2D k4 = -advect_dealiased(psi[3], phi + dt * k3);
  ScalarField2D next = phi;
  const double h6 = dt / 6.0;
  for (std::size_t n = 0; n < next.size(); ++n) {
    next[n] += h6 * (k1[n] + 2.0 * k2[n] + 2.0 * k3[n] + k4[n]);
  }
  return next;
}

}  // namespace

ScalarField2D lax_L(const ScalarField2D& omega, const ScalarField2D& phi) {
  return poisson_bracket(omega, phi);
}

ComplexField2D lax_L(const ScalarField2D& omega, const ComplexField2D& phi) {
  return {poisson_bracket(omega, phi.re), poisson_bracket(omega, phi.im)};
}

ScalarField2D lax_A(const ScalarField2D& psi, const ScalarField2D& phi) {
  return poisson_bracket(psi, phi);
}

ComplexField2D lax_A(const ScalarField2D& psi, const ComplexField2D& phi) {
  return {poisson_bracket(psi, phi.re), poisson_bracket(psi, phi.im)};
}

ComplexField2D eigen_residual(const ScalarField2D& omega, const LaxEigenfunction2D& eig) {
  ComplexField2D lphi = lax_L(omega, eig.phi);
  const double lr = eig.lambda.real();
  const double li = eig.lambda.imag();
  for (std::size_t n = 0; n < lphi.re.size(); ++n) {
    const double pr = eig.phi.re[n];
    const double pi = eig.phi.im[n];
    lphi.re[n] -= lr * pr - li * pi;
    lphi.im[n] -= lr * pi + li * pr;
  }
  return lphi;
}

ScalarField2D compatibility_residual_2d(const FlowState2D& state, const ScalarField2D& omega_t,
                                        const ScalarField2D& phi) {
  const ScalarField2D& omega = state.omega;
  const ScalarField2D& psi = state.psi;
  require_same_grid(omega, phi, "compatibility_residual_2d");
  require_same_grid(omega_t, phi, "compatibility_residual_2d");

  const ScalarField2D dtl = poisson_bracket(omega_t, phi);
  const ScalarField2D a_of_l = lax_A(psi, lax_L(omega, phi));
  const ScalarField2D l_of_a = lax_L(omega, lax_A(psi, phi));
  const ScalarField2D euler = omega_t + poisson_bracket(psi, omega);
  return (dtl + a_of_l - l_of_a) - poisson_bracket(euler, phi);
}

std::vector<ScalarField2D> transport_phi(const std::vector<FlowState2D>& trajectory,
                                         const ScalarField2D& phi0, double dt) {
  check_spacing(trajectory, dt);
  require_same_grid(trajectory.front().omega, phi0, "transport_phi");
  std::vector<ScalarField2D> phis;
  phis.reserve(trajectory.size());
  phis.push_back(phi0);
  for (std::size_t n = 0; n + 1 < trajectory.size(); ++n) {
    const Rk4Result stages = step_rk4_with_stages(trajectory[n], dt);
    phis.push_back(transport_step(stages.stage_psi, phis.back(), dt));
  }
  return phis;
}

std::vector<ComplexField2D> transport_phi(const std::vector<FlowState2D>& trajectory,
                                          const ComplexField2D& phi0, double dt) {
  check_spacing(trajectory, dt);
  require_same_grid(trajectory.front().omega, phi0.re, "transport_phi");
  std::vector<ComplexField2D> phis;
  phis.reserve(trajectory.size());
  phis.push_back(phi0);
  for (std::size_t n = 0; n + 1 < trajectory.size(); ++n) {
    const Rk4Result stages = step_rk4_with_stages(trajectory[n], dt);
    const ComplexField2D& prev = phis.back();
    phis.emplace_back(transport_step(stages.stage_psi, prev.re, dt),
                      transport_step(stages.stage_psi, prev.im, dt));
  }
  return phis;
}

std::vector<MonitorSample> isospectrality_monitor(const std::vector<FlowState2D>& trajectory,
                                                  const std::vector<ComplexField2D>& phis,
                                                  std::complex<double> lambda) {
  if (trajectory.size() != phis.size()) {
    throw InvalidArgument("isospectrality_monitor: trajectory and phi counts differ");
  }
  std::vector<MonitorSample> out;
  out.reserve(phis.size());
  for (std::size_t n = 0; n < phis.size(); ++n) {
    const Norms r = norms(eigen_residual(trajectory[n].omega, {phis[n], lambda}));
    out.push_back({trajectory[n].t, r.linf, r.l2});
  }
  return out;
}

std::vector<MonitorSample> isospectrality_monitor(const std::vector<FlowState2D>& trajectory,
                                                  const std::vector<ScalarField2D>& phis,
                                                  std::complex<double> lambda) {
  std::vector<ComplexField2D> complex_phis;
  complex_phis.reserve(phis.size());
  for (const auto& p : phis) complex_phis.emplace_back(p);
  return isospectrality_monitor(trajectory, complex_phis, lambda);
}

void write_monitor_csv(std::ostream& out, const std::vector<MonitorSample>& samples) {
  out << "t,linf,l2\n";
  out << std::setprecision(17);
  for (const auto& s : samples) out << s.t << ',' << s.linf << ',' << s.l2 << '\n';
}

}  // namespace eulerlax
