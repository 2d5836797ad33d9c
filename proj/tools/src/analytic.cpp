#include "eulerlax_tools/analytic.hpp"

#include <cmath>

#include "eulerlax/euler2d.hpp"
#include "eulerlax/kernel_functions.hpp"

namespace eulerlax::tools {

namespace {
constexpr double kTripleAmplitude = 1.5;
constexpr double kDarbouxAmplitude = 3.0;
}  // namespace

FieldTriple analytic_triple(const Grid2D& grid) {
  const double b = kTripleAmplitude;
  return {
      ScalarField2D::sample(grid, [b](double x, double y) { return std::exp(b * std::sin(x) * std::cos(y)); }),
      ScalarField2D::sample(grid, [b](double x, double y) { return std::exp(b * std::cos(x - 2.0 * y)); }),
      ScalarField2D::sample(grid, [b](double x, double y) { return std::exp(b * std::sin(2.0 * x + y)); }),
  };
}

DarbouxCase analytic_darboux_case(const Grid2D& grid) {
  const FlowState2D s = SteadyStateSpec::eigenstate(1, 1, kDarbouxAmplitude).build(grid);
  DarbouxCase c;
  c.omega = s.omega;
  c.psi = s.psi;
  c.f = build_kernel_solution(s.omega, KernelFunction::TwoPlusCos);
  c.p = build_kernel_solution(s.omega, KernelFunction::Square);
  c.bigF = 0.25 * s.omega;
  return c;
}

}  // namespace eulerlax::tools
