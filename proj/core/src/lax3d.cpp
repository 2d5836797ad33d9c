#include "eulerlax/lax3d.hpp"

#include <cmath>
#include <iomanip>
#include <limits>

#include "eulerlax/errors.hpp"

namespace eulerlax {
namespace {

VectorField3D lie_from(const VectorField3D& a, const Jacobian3D& ja, const VectorField3D& phi,
                       const Jacobian3D& jphi) {
  return directional(a, jphi) - directional(phi, ja);
}

VectorField3D shift_from(const ShiftVector& s, const Jacobian3D& j, const Grid3D& grid) {
  VectorField3D out(grid);
  const std::size_t n = grid.size();
  for (int i = 0; i < 3; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    ScalarField3D& dst = out[i];
    for (std::size_t p = 0; p < n; ++p) {
      dst[p] = s.alpha[0] * row[0][p] + s.alpha[1] * row[1][p] + s.alpha[2] * row[2][p];
    }
  }
  return out;
}

// Shifted operator v -> lie(a, v) + D v with the Jacobian of a cached.
class ShiftedOperator {
 public:
  ShiftedOperator(const VectorField3D& a, const ShiftVector& shift)
      : a_(a), ja_(jacobian(a)), shift_(shift) {}

  VectorField3D apply(const VectorField3D& v, const Jacobian3D& jv) const {
    VectorField3D out = lie_from(a_, ja_, v, jv);
    if (!shift_.is_zero()) out += shift_from(shift_, jv, v.grid());
    return out;
  }
  VectorField3D apply(const VectorField3D& v) const { return apply(v, jacobian(v)); }

  const Jacobian3D& jacobian_of_coefficient() const { return ja_; }

 private:
  const VectorField3D& a_;
  Jacobian3D ja_;
  ShiftVector shift_;
};

}  // namespace

VectorField3D lie_operator(const VectorField3D& a, const VectorField3D& phi) {
  require_same_grid(a, phi, "lie_operator");
  return lie_from(a, jacobian(a), phi, jacobian(phi));
}

VectorField3D lax3d_L(const VectorField3D& omega, const VectorField3D& phi,
                      const ShiftVector& shift) {
  require_same_grid(omega, phi, "lax3d_L");
  return ShiftedOperator(omega, shift).apply(phi);
}

ComplexVectorField3D lax3d_L(const VectorField3D& omega, const ComplexVectorField3D& phi,
                             const ShiftVector& shift) {
  require_same_grid(omega, phi.re, "lax3d_L");
  const ShiftedOperator op(omega, shift);
  return {op.apply(phi.re), op.apply(phi.im)};
}

VectorField3D lax3d_A(const VectorField3D& q, const VectorField3D& phi, const ShiftVector& shift) {
  require_same_grid(q, phi, "lax3d_A");
  return ShiftedOperator(q, shift).apply(phi);
}

ComplexVectorField3D lax3d_A(const VectorField3D& q, const ComplexVectorField3D& phi,
                             const ShiftVector& shift) {
  require_same_grid(q, phi.re, "lax3d_A");
  const ShiftedOperator op(q, shift);
  return {op.apply(phi.re), op.apply(phi.im)};
}

VectorField3D d_shift(const ShiftVector& alpha, const VectorField3D& phi) {
  for (double a : alpha.alpha) {
    if (!std::isfinite(a)) throw InvalidArgument("shift vector must be finite");
  }
  return shift_from(alpha, jacobian(phi), phi.grid());
}

VectorField3D compatibility_residual_3v(const VectorField3D& omega_t, const VectorField3D& omega,
                                        const VectorField3D& q, const ShiftVector& a1,
                                        const ShiftVector& a2) {
  require_same_grid(omega_t, omega, "compatibility_residual_3v");
  require_same_grid(omega, q, "compatibility_residual_3v");
  const Jacobian3D jw = jacobian(omega);
  const Jacobian3D jq = jacobian(q);
  VectorField3D out = omega_t + lie_from(q, jq, omega, jw);
  if (!a2.is_zero()) out += shift_from(a2, jw, omega.grid());
  if (!a1.is_zero()) out -= shift_from(a1, jq, omega.grid());
  return out;
}

VectorField3D commutator_identity_residual(const VectorField3D& q, const VectorField3D& omega,
                                           const VectorField3D& phi, const ShiftVector& a1,
                                           const ShiftVector& a2) {
  require_same_grid(q, omega, "commutator_identity_residual");
  require_same_grid(q, phi, "commutator_identity_residual");
  const ShiftedOperator L(omega, a1);
  const ShiftedOperator A(q, a2);
  const Jacobian3D jphi = jacobian(phi);

  const VectorField3D l_phi = L.apply(phi, jphi);
  const VectorField3D a_phi = A.apply(phi, jphi);
  const VectorField3D commutator = A.apply(l_phi) - L.apply(a_phi);

  const Jacobian3D& jw = L.jacobian_of_coefficient();
  const Jacobian3D& jq = A.jacobian_of_coefficient();
  VectorField3D b = lie_from(q, jq, omega, jw);
  if (!a2.is_zero()) b += shift_from(a2, jw, omega.grid());
  if (!a1.is_zero()) b -= shift_from(a1, jq, omega.grid());

  return commutator - lie_from(b, jacobian(b), phi, jphi);
}

SpecializationResidual specialization_check(const VectorField3D& omega, const VectorField3D& q,
                                            const ShiftVector& a1, const ShiftVector& a2) {
  require_same_grid(omega, q, "specialization_check");
  const Jacobian3D jw = jacobian(omega);
  const Jacobian3D jq = jacobian(q);
  SpecializationResidual r;
  r.r1 = norms(lie_from(q, jq, omega, jw)).linf;
  r.r2 = norms(shift_from(a1, jq, omega.grid()) - shift_from(a2, jw, omega.grid())).linf;
  return r;
}

AbcFlow abc_flow(double A, double B, double C, const Grid3D& grid) {
  if (!std::isfinite(A) || !std::isfinite(B) || !std::isfinite(C)) {
    throw InvalidArgument("ABC amplitudes must be finite");
  }
  if (grid.lx != kTwoPi || grid.ly != kTwoPi || grid.lz != kTwoPi) {
    throw InvalidArgument("ABC flow requires the 2pi-periodic cube");
  }
  VectorField3D u(
      ScalarField3D::sample(grid, [&](double, double y, double z) {
        return A * std::sin(z) + C * std::cos(y);
      }),
      ScalarField3D::sample(grid, [&](double x, double, double z) {
        return B * std::sin(x) + A * std::cos(z);
      }),
      ScalarField3D::sample(grid, [&](double x, double y, double) {
        return C * std::sin(y) + B * std::cos(x);
      }));
  VectorField3D omega = curl(u);
  return {std::move(u), std::move(omega)};
}

VectorField3D embed_planar(const Grid3D& grid, const std::function<double(double, double)>& g) {
  VectorField3D v(grid);
  v[2] = ScalarField3D::sample(grid, [&](double x, double y, double) { return g(x, y); });
  return v;
}

AlphaLimitResult alpha_limit_study(const VectorField3D& q_base, const VectorField3D& omega,
                                   const ShiftVector& a1, const ShiftVector& a2,
                                   const std::vector<double>& epsilons) {
  if (epsilons.size() < 3) throw InvalidArgument("alpha_limit_study needs at least three eps");
  for (std::size_t n = 0; n < epsilons.size(); ++n) {
    if (!(epsilons[n] > 0.0)) throw InvalidArgument("eps values must be positive");
    if (n > 0 && !(epsilons[n] < epsilons[n - 1])) {
      throw InvalidArgument("eps values must be strictly decreasing");
    }
  }
  const VectorField3D zero(omega.grid());
  const VectorField3D base = compatibility_residual_3v(zero, omega, q_base, {}, {});

  AlphaLimitResult result;
  bool any_zero = false;
  result.all_zero = true;
  for (double eps : epsilons) {
    const VectorField3D r = compatibility_residual_3v(zero, omega, q_base, eps * a1, eps * a2);
    const double d = norms(r - base).linf;
    result.rows.push_back({eps, d});
    any_zero = any_zero || d == 0.0;
    result.all_zero = result.all_zero && d == 0.0;
  }

  if (any_zero) {
    result.order = std::numeric_limits<double>::quiet_NaN();
    return result;
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(result.rows.size());
  for (const auto& row : result.rows) {
    const double x = std::log(row.eps);
    const double y = std::log(row.diff_linf);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  result.order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return result;
}

void write_alpha_limit_csv(std::ostream& out, const AlphaLimitResult& result) {
  out << "eps,diff_linf\n" << std::setprecision(17);
  for (const auto& row : result.rows) out << row.eps << ',' << row.diff_linf << '\n';
}

}  // namespace eulerlax
