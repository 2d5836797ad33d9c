#pragma once

#include <string>
#include <vector>

#include "eulerlax/field2d.hpp"

namespace eulerlax {

// Smooth scalar functions h used to build kernel solutions h(omega).
enum class KernelFunction { Identity, Square, Cube, Sin, Cos, ExpQuarter, TwoPlusCos };

// Accepts canonical names ("identity", "square", "cube", "sin", "cos",
// "exp/4", "2+cos") and the aliases "s", "s^2", "s^3", "exp(s/4)".
KernelFunction parse_kernel_function(const std::string& name);
std::string kernel_function_name(KernelFunction h);
std::vector<KernelFunction> all_kernel_functions();

double evaluate(KernelFunction h, double s);
double derivative(KernelFunction h, double s);
// True when the function is bounded away from zero on the real line.
bool bounded_away_from_zero(KernelFunction h);

// Pointwise h(omega). Since {omega, h(omega)} = 0, this is a lambda = 0
// solution of the 2D Lax pair on any steady state.
ScalarField2D build_kernel_solution(const ScalarField2D& omega, KernelFunction h);
ScalarField2D build_kernel_solution(const ScalarField2D& omega, const std::string& name);

}  // namespace eulerlax
