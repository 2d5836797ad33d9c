#include "eulerlax/kernel_functions.hpp"

#include <cmath>

#include "eulerlax/errors.hpp"

namespace eulerlax {

KernelFunction parse_kernel_function(const std::string& name) {
  if (name == "identity" || name == "s") return KernelFunction::Identity;
  if (name == "square" || name == "s^2" || name == "s2") return KernelFunction::Square;
  if (name == "cube" || name == "s^3" || name == "s3") return KernelFunction::Cube;
  if (name == "sin") return KernelFunction::Sin;
  if (name == "cos") return KernelFunction::Cos;
  if (name == "exp/4" || name == "exp(s/4)") return KernelFunction::ExpQuarter;
  if (name == "2+cos" || name == "2+cos(s)") return KernelFunction::TwoPlusCos;
  throw InvalidArgument("unknown kernel function '" + name + "'");
}

std::string kernel_function_name(KernelFunction h) {
  switch (h) {
    case KernelFunction::Identity: return "identity";
    case KernelFunction::Square: return "square";
    case KernelFunction::Cube: return "cube";
    case KernelFunction::Sin: return "sin";
    case KernelFunction::Cos: return "cos";
    case KernelFunction::ExpQuarter: return "exp/4";
    case KernelFunction::TwoPlusCos: return "2+cos";
  }
  return "unknown";
}

std::vector<KernelFunction> all_kernel_functions() {
  return {KernelFunction::Identity, KernelFunction::Square, KernelFunction::Cube,
          KernelFunction::Sin,      KernelFunction::Cos,    KernelFunction::ExpQuarter,
          KernelFunction::TwoPlusCos};
}

double evaluate(KernelFunction h, double s) {
  switch (h) {
    case KernelFunction::Identity: return s;
    case KernelFunction::Square: return s * s;
    case KernelFunction::Cube: return s * s * s;
    case KernelFunction::Sin: return std::sin(s);
    case KernelFunction::Cos: return std::cos(s);
    case KernelFunction::ExpQuarter: return std::exp(0.25 * s);
    case KernelFunction::TwoPlusCos: return 2.0 + std::cos(s);
  }
  return 0.0;
}

double derivative(KernelFunction h, double s) {
  switch (h) {
    case KernelFunction::Identity: return 1.0;
    case KernelFunction::Square: return 2.0 * s;
    case KernelFunction::Cube: return 3.0 * s * s;
    case KernelFunction::Sin: return std::cos(s);
    case KernelFunction::Cos: return -std::sin(s);
    case KernelFunction::ExpQuarter: return 0.25 * std::exp(0.25 * s);
    case KernelFunction::TwoPlusCos: return -std::sin(s);
  }
  return 0.0;
}

bool bounded_away_from_zero(KernelFunction h) {
  return h == KernelFunction::ExpQuarter || h == KernelFunction::TwoPlusCos;
}

ScalarField2D build_kernel_solution(const ScalarField2D& omega, KernelFunction h) {
  return omega.map([h](double s) { return evaluate(h, s); });
}

ScalarField2D build_kernel_solution(const ScalarField2D& omega, const std::string& name) {
  return build_kernel_solution(omega, parse_kernel_function(name));
}

}  // namespace eulerlax
