#pragma once

#include <array>
#include <ostream>
#include <vector>

#include "eulerlax/field3d.hpp"

namespace eulerlax {

// Constant shift vector alpha defining D = alpha . grad.
struct ShiftVector {
  std::array<double, 3> alpha{0.0, 0.0, 0.0};

  bool is_zero() const noexcept { return alpha[0] == 0.0 && alpha[1] == 0.0 && alpha[2] == 0.0; }
  friend ShiftVector operator*(double s, const ShiftVector& v) {
    return {{s * v.alpha[0], s * v.alpha[1], s * v.alpha[2]}};
  }
  friend ShiftVector operator+(const ShiftVector& a, const ShiftVector& b) {
    return {{a.alpha[0] + b.alpha[0], a.alpha[1] + b.alpha[1], a.alpha[2] + b.alpha[2]}};
  }
};

// (a . grad) phi - (phi . grad) a.
VectorField3D lie_operator(const VectorField3D& a, const VectorField3D& phi);

// L phi = (omega . grad) phi - (phi . grad) omega [+ D1 phi].
VectorField3D lax3d_L(const VectorField3D& omega, const VectorField3D& phi,
                      const ShiftVector& shift = {});
ComplexVectorField3D lax3d_L(const VectorField3D& omega, const ComplexVectorField3D& phi,
                             const ShiftVector& shift = {});
// A phi = (q . grad) phi - (phi . grad) q [+ D2 phi].
VectorField3D lax3d_A(const VectorField3D& q, const VectorField3D& phi,
                      const ShiftVector& shift = {});
ComplexVectorField3D lax3d_A(const VectorField3D& q, const ComplexVectorField3D& phi,
                             const ShiftVector& shift = {});

// alpha_1 d_x phi + alpha_2 d_y phi + alpha_3 d_z phi, componentwise.
VectorField3D d_shift(const ShiftVector& alpha, const VectorField3D& phi);

// Left side of the shifted compatibility equation
//   omega_t + (q . grad) omega - (omega . grad) q + D2 omega - D1 q.
VectorField3D compatibility_residual_3v(const VectorField3D& omega_t, const VectorField3D& omega,
                                        const VectorField3D& q, const ShiftVector& a1,
                                        const ShiftVector& a2);

// [A, L] phi - ((B . grad) phi - (phi . grad) B) with
// B = (q . grad) omega - (omega . grad) q + D2 omega - D1 q and [A, L] phi
// from direct double application of the shifted operators. Vanishes for
// arbitrary fields.
VectorField3D commutator_identity_residual(const VectorField3D& q, const VectorField3D& omega,
                                           const VectorField3D& phi, const ShiftVector& a1,
                                           const ShiftVector& a2);

struct SpecializationResidual {
  double r1 = 0.0;  // ||(q . grad) omega - (omega . grad) q||, steady
  double r2 = 0.0;  // ||D1 q - D2 omega||
};
SpecializationResidual specialization_check(const VectorField3D& omega, const VectorField3D& q,
                                            const ShiftVector& a1, const ShiftVector& a2);

struct AbcFlow {
  VectorField3D u;
  VectorField3D omega;  // spectral curl of u
};

// u = (A sin z + C cos y, B sin x + A cos z, C sin y + B cos x) on the
// 2pi-periodic cube; curl u = u.
AbcFlow abc_flow(double A, double B, double C, const Grid3D& grid);

// Embeds a planar scalar g(x, y) as (0, 0, g) on a grid with nz samples.
VectorField3D embed_planar(const Grid3D& grid, const std::function<double(double, double)>& g);

struct AlphaLimitRow {
  double eps = 0.0;
  double diff_linf = 0.0;
};

struct AlphaLimitResult {
  std::vector<AlphaLimitRow> rows;
  // Least-squares slope of log(diff) against log(eps); NaN if any diff is 0.
  double order = 0.0;
  bool all_zero = false;
};

// For each eps, ||R(eps a1, eps a2) - R(0, 0)||_inf with
// R = compatibility_residual_3v(0, omega, q_base, ., .). Requires at least
// three positive, strictly decreasing eps values.
AlphaLimitResult alpha_limit_study(const VectorField3D& q_base, const VectorField3D& omega,
                                   const ShiftVector& a1, const ShiftVector& a2,
                                   const std::vector<double>& epsilons);

// CSV with header eps,diff_linf.
void write_alpha_limit_csv(std::ostream& out, const AlphaLimitResult& result);

}  // namespace eulerlax
