#pragma once

#include <vector>

#include "eulerlax/field2d.hpp"
#include "eulerlax/report.hpp"

namespace eulerlax {

// Inputs of one Darboux verification: a steady pair (omega, psi), a fixed
// lambda = 0 solution f, the solution p to transform, and the potential
// shift F.
struct DarbouxCase {
  ScalarField2D omega;
  ScalarField2D psi;
  ScalarField2D f;
  ScalarField2D p;
  ScalarField2D bigF;
};

struct GaugeResult {
  ScalarField2D p_tilde;  // zero outside the mask
  Mask2D mask;
};

// p~ = (p_x f - p f_x) / (omega_x f), evaluated where |omega_x| and |f| both
// exceed eps_rel times their maxima. Throws DegenerateMask when fewer than a
// quarter of the points survive and InvalidArgument unless eps_rel is in (0, 0.1).
GaugeResult gauge_transform(const ScalarField2D& p, const ScalarField2D& f,
                            const ScalarField2D& omega, double eps_rel);
// The y-form (p_y f - p f_y) / (omega_y f); equal to the x-form when
// {omega, p} = {omega, f} = 0.
GaugeResult gauge_transform_y(const ScalarField2D& p, const ScalarField2D& f,
                              const ScalarField2D& omega, double eps_rel);

struct PotentialPair {
  ScalarField2D omega_tilde;  // omega + laplacian(F)
  ScalarField2D psi_tilde;    // psi + F
};
PotentialPair transform_potentials(const ScalarField2D& omega, const ScalarField2D& psi,
                                   const ScalarField2D& bigF);

struct ConstraintReport {
  double r_main1 = 0.0;  // ||{omega, lap F}||
  double r_main2 = 0.0;  // ||{omega + lap F, F}||
  double r_alt1 = 0.0;   // ||{omega, F}||
  double r_alt2 = 0.0;   // ||{lap F, F}||
  double tolerance = 1e-9;
  bool main_ok = false;  // r_main1 and r_main2 below tolerance
  bool set1_ok = false;  // r_main1 and r_alt1
  bool set2_ok = false;  // r_main1 and r_alt2

  // {omega + lap F, F} - ((omega_y + lapF_y) / omega_y) {omega, F} on the
  // mask |omega_y| > eps_rel max|omega_y|.
  double identity1_discrepancy = 0.0;
  double identity1_mask_fraction = 0.0;
  // {omega + lap F, F} - ((omega_y + lapF_y) / lapF_y) {lap F, F} on the
  // mask |lapF_y| > eps_rel max|lapF_y|; zero mask fraction when lap F_y = 0.
  double identity2_discrepancy = 0.0;
  double identity2_mask_fraction = 0.0;

  // Either alternative set implies the main constraint.
  bool implication_holds(double alt_tol = 1e-9, double main_tol = 1e-7) const;
};

// Residual norms are full-grid L-infinity norms.
ConstraintReport check_constraints(const ScalarField2D& omega, const ScalarField2D& bigF,
                                   double eps_rel, double tolerance = 1e-9);

struct ABDiscrepancy {
  double a_minus_b = 0.0;
  double a_minus_closed = 0.0;
  double b_minus_closed = 0.0;
  double mask_fraction = 0.0;
  double max() const noexcept;
};

// Evaluates the mixed-derivative quantity A, the xx-form B and their common
// closed form (1/omega_x)[f^2 omega_x p_xx - f (omega_x f)_x p_x +
// (f_x (omega_x f)_x - f_xx omega_x f) p] on the mask |omega_x|, |omega_y| >
// eps_rel max. A = B requires {omega, p} = {omega, f} = 0; B equals the
// closed form unconditionally.
ABDiscrepancy proof_identity_AB(const ScalarField2D& omega, const ScalarField2D& f,
                                const ScalarField2D& p, double eps_rel);

struct IdentityCheck {
  double discrepancy = 0.0;
  double mask_fraction = 0.0;
};

// Product-rule simplification of the left side of the coefficient equation
// for (f p_x - p f_x):
//   (1/(omega_x f)) (P/omega_x)_x - (1/(omega_x^2 f^2)) (f P)_x
//     = -(omega_x f)_x P / (omega_x^3 f^2),   P = {omega, psi}.
// Holds for arbitrary fields.
IdentityCheck b4_simplification_check(const ScalarField2D& omega, const ScalarField2D& psi,
                                      const ScalarField2D& f, double eps_rel);

struct DarbouxTolerances {
  double kernel = 1e-8;      // {omega, f}, {omega, p}, {psi, f}, {psi, p}
  double constraint = 1e-9;  // constraint brackets
  double transformed = 1e-6; // transformed linear system residuals
  double ab = 1e-6;          // A = B discrepancy
};

// Verifies that p~ solves the lambda = 0 system at (omega~, psi~):
//   ch1: {omega~, p~} = 0
//   ch2: p~_t = (p~_x / omega~_x) {omega~, psi~}
// For a steady case p~_t = 0. Derivatives of p~ come from the quotient rule
// on smooth inputs, never from differentiating masked data. Throws
// ConstraintViolated when the main constraint residuals exceed ten times
// their tolerance.
ResidualReport darboux_verify(const DarbouxCase& c, double eps_rel,
                              const DarbouxTolerances& tol = {});

// Time-dependent variant over equally spaced frames (at least five);
// p~_t comes from fourth-order differences in time, one-sided at the ends.
ResidualReport darboux_verify_series(const std::vector<DarbouxCase>& frames, double dt,
                                     double eps_rel, const DarbouxTolerances& tol = {});

// Fourth-order time derivative of frame n from equally spaced samples.
ScalarField2D time_derivative_4th(const std::vector<ScalarField2D>& samples, std::size_t n,
                                  double dt);

}  // namespace eulerlax
