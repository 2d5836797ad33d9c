#include "eulerlax/darboux.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eulerlax/errors.hpp"
#include "eulerlax/norms.hpp"
#include "eulerlax/spectral2d.hpp"

namespace eulerlax {
namespace {

// A field with the spectral derivatives the Darboux formulas use.
struct Derivs {
  const ScalarField2D& v;
  ScalarField2D x, y, xx, xy, yy;

  explicit Derivs(const ScalarField2D& field) : v(field) {
    const SpectralCoeffs2D c = to_spectral(field);
    const SpectralCoeffs2D cx = ddx(c);
    const SpectralCoeffs2D cy = ddy(c);
    x = to_physical(cx);
    y = to_physical(cy);
    xx = to_physical(ddx(cx));
    xy = to_physical(ddy(cx));
    yy = to_physical(ddy(cy));
  }
};

void check_eps(double eps_rel) {
  if (!(eps_rel > 0.0 && eps_rel < 0.1)) {
    throw InvalidArgument("eps_rel must lie in (0, 0.1), got " + std::to_string(eps_rel));
  }
}

void require_mask_coverage(const Mask2D& mask) {
  if (mask.kept_fraction() < 0.25) throw DegenerateMask(mask.kept_fraction());
}

// p~ and its first derivatives by the quotient rule on N / D with
// N = p_x f - p f_x and D = omega_x f.
struct GaugeFields {
  ScalarField2D value, x, y;
  Mask2D mask;
};

GaugeFields gauge_with_derivatives(const Derivs& p, const Derivs& f, const Derivs& w,
                                   double eps_rel) {
  Mask2D mask = Mask2D::above(w.x, eps_rel) && Mask2D::above(f.v, eps_rel);
  require_mask_coverage(mask);
  const Grid2D& g = p.v.grid();
  GaugeFields out{ScalarField2D(g), ScalarField2D(g), ScalarField2D(g), mask};
  for (std::size_t n = 0; n < g.size(); ++n) {
    if (!mask.kept(n)) continue;
    const double N = p.x[n] * f.v[n] - p.v[n] * f.x[n];
    const double Nx = p.xx[n] * f.v[n] - p.v[n] * f.xx[n];
    const double Ny = (p.xy[n] * f.v[n] - p.v[n] * f.xy[n]) + (p.x[n] * f.y[n] - p.y[n] * f.x[n]);
    const double D = w.x[n] * f.v[n];
    const double Dx = w.xx[n] * f.v[n] + w.x[n] * f.x[n];
    const double Dy = w.xy[n] * f.v[n] + w.x[n] * f.y[n];
    out.value[n] = N / D;
    out.x[n] = (Nx * D - N * Dx) / (D * D);
    out.y[n] = (Ny * D - N * Dy) / (D * D);
  }
  return out;
}

ResidualEntry entry(std::string name, const Norms& n, double tol, double mask_fraction = 1.0) {
  ResidualEntry e;
  e.name = std::move(name);
  e.linf = n.linf;
  e.l2 = n.l2;
  e.tolerance = tol;
  e.mask_fraction = mask_fraction;
  return e;
}

void add_constraints(ResidualReport& report, const ConstraintReport& cr) {
  auto scalar = [&](const char* name, double v, double tol, bool info = false) {
    ResidualEntry e;
    e.name = name;
    e.linf = v;
    e.l2 = v;
    e.tolerance = tol;
    e.informational = info;
    report.add(e);
  };
  scalar("constraint.main1", cr.r_main1, cr.tolerance);
  scalar("constraint.main2", cr.r_main2, cr.tolerance);
  // Alternative sets are sufficient, not necessary.
  scalar("constraint.alt1", cr.r_alt1, cr.tolerance, true);
  scalar("constraint.alt2", cr.r_alt2, cr.tolerance, true);
}

void check_main_constraints(const ConstraintReport& cr) {
  const double limit = 10.0 * cr.tolerance;
  if (cr.r_main1 > limit || cr.r_main2 > limit) {
    throw ConstraintViolated("potential shift violates {omega, lap F} = {omega + lap F, F} = 0: "
                             "residuals " + std::to_string(cr.r_main1) + ", " +
                             std::to_string(cr.r_main2));
  }
}

void record_grid(ResidualReport& report, const Grid2D& g) {
  report.grid_counts = {g.nx, g.ny};
  report.grid_lengths = {g.lx, g.ly};
}

}  // namespace

GaugeResult gauge_transform(const ScalarField2D& p, const ScalarField2D& f,
                            const ScalarField2D& omega, double eps_rel) {
  check_eps(eps_rel);
  require_same_grid(p, f, "gauge_transform");
  require_same_grid(p, omega, "gauge_transform");
  const Gradient2D gp = gradient(p);
  const Gradient2D gf = gradient(f);
  const Gradient2D gw = gradient(omega);
  Mask2D mask = Mask2D::above(gw.x, eps_rel) && Mask2D::above(f, eps_rel);
  require_mask_coverage(mask);
  ScalarField2D pt(p.grid());
  for (std::size_t n = 0; n < pt.size(); ++n) {
    if (!mask.kept(n)) continue;
    pt[n] = (gp.x[n] * f[n] - p[n] * gf.x[n]) / (gw.x[n] * f[n]);
  }
  return {std::move(pt), std::move(mask)};
}

GaugeResult gauge_transform_y(const ScalarField2D& p, const ScalarField2D& f,
                              const ScalarField2D& omega, double eps_rel) {
  check_eps(eps_rel);
  require_same_grid(p, f, "gauge_transform_y");
  require_same_grid(p, omega, "gauge_transform_y");
  const Gradient2D gp = gradient(p);
  const Gradient2D gf = gradient(f);
  const Gradient2D gw = gradient(omega);
  Mask2D mask = Mask2D::above(gw.y, eps_rel) && Mask2D::above(f, eps_rel);
  require_mask_coverage(mask);
  ScalarField2D pt(p.grid());
  for (std::size_t n = 0; n < pt.size(); ++n) {
    if (!mask.kept(n)) continue;
    pt[n] = (gp.y[n] * f[n] - p[n] * gf.y[n]) / (gw.y[n] * f[n]);
  }
  return {std::move(pt), std::move(mask)};
}

PotentialPair transform_potentials(const ScalarField2D& omega, const ScalarField2D& psi,
                                   const ScalarField2D& bigF) {
  require_same_grid(omega, psi, "transform_potentials");
  require_same_grid(omega, bigF, "transform_potentials");
  return {omega + laplacian(bigF), psi + bigF};
}

bool ConstraintReport::implication_holds(double alt_tol, double main_tol) const {
  const bool alt = (r_main1 < alt_tol && r_alt1 < alt_tol) || (r_main1 < alt_tol && r_alt2 < alt_tol);
  return !alt || r_main2 < main_tol;
}

ConstraintReport check_constraints(const ScalarField2D& omega, const ScalarField2D& bigF,
                                   double eps_rel, double tolerance) {
  check_eps(eps_rel);
  require_same_grid(omega, bigF, "check_constraints");
  const ScalarField2D lapF = laplacian(bigF);
  const ScalarField2D shifted = omega + lapF;

  const ScalarField2D main2 = poisson_bracket(shifted, bigF);
  const ScalarField2D alt1 = poisson_bracket(omega, bigF);
  const ScalarField2D alt2 = poisson_bracket(lapF, bigF);

  ConstraintReport r;
  r.tolerance = tolerance;
  r.r_main1 = norms(poisson_bracket(omega, lapF)).linf;
  r.r_main2 = norms(main2).linf;
  r.r_alt1 = norms(alt1).linf;
  r.r_alt2 = norms(alt2).linf;
  r.main_ok = r.r_main1 < tolerance && r.r_main2 < tolerance;
  r.set1_ok = r.r_main1 < tolerance && r.r_alt1 < tolerance;
  r.set2_ok = r.r_main1 < tolerance && r.r_alt2 < tolerance;

  const ScalarField2D wy = ddy(omega);
  const ScalarField2D fy = ddy(lapF);

  const Mask2D m1 = Mask2D::above(wy, eps_rel);
  r.identity1_mask_fraction = m1.kept_fraction();
  if (m1.kept_count() > 0) {
    ScalarField2D diff(omega.grid());
    for (std::size_t n = 0; n < diff.size(); ++n) {
      if (!m1.kept(n)) continue;
      diff[n] = main2[n] - (wy[n] + fy[n]) / wy[n] * alt1[n];
    }
    r.identity1_discrepancy = norms(diff, m1).linf;
  }

  if (fy.max_abs() > 0.0) {
    const Mask2D m2 = Mask2D::above(fy, eps_rel);
    r.identity2_mask_fraction = m2.kept_fraction();
    if (m2.kept_count() > 0) {
      ScalarField2D diff(omega.grid());
      for (std::size_t n = 0; n < diff.size(); ++n) {
        if (!m2.kept(n)) continue;
        diff[n] = main2[n] - (wy[n] + fy[n]) / fy[n] * alt2[n];
      }
      r.identity2_discrepancy = norms(diff, m2).linf;
    }
  }
  return r;
}

double ABDiscrepancy::max() const noexcept {
  return std::max({a_minus_b, a_minus_closed, b_minus_closed});
}

ABDiscrepancy proof_identity_AB(const ScalarField2D& omega, const ScalarField2D& f,
                                const ScalarField2D& p, double eps_rel) {
  check_eps(eps_rel);
  require_same_grid(omega, f, "proof_identity_AB");
  require_same_grid(omega, p, "proof_identity_AB");
  const Derivs w(omega);
  const Derivs df(f);
  const Derivs dp(p);
  const ScalarField2D wxf = w.x * f;
  const ScalarField2D wxf_x = ddx(wxf);

  const Mask2D mask = Mask2D::above(w.x, eps_rel) && Mask2D::above(w.y, eps_rel);
  ABDiscrepancy out;
  out.mask_fraction = mask.kept_fraction();
  if (mask.kept_count() == 0) return out;

  const Grid2D& g = omega.grid();
  ScalarField2D ab(g), ac(g), bc(g);
  for (std::size_t n = 0; n < g.size(); ++n) {
    if (!mask.kept(n)) continue;
    const double fv = f[n];
    const double pv = p[n];
    const double N = dp.x[n] * fv - pv * df.x[n];
    const double mixed = (dp.xy[n] * fv - pv * df.xy[n]) + (dp.x[n] * df.y[n] - dp.y[n] * df.x[n]);
    const double A = (mixed * w.x[n] * fv - N * (w.xy[n] * fv + w.x[n] * df.y[n])) / w.y[n];
    const double B = ((dp.xx[n] * fv - pv * df.xx[n]) * w.x[n] * fv -
                      N * (w.xx[n] * fv + w.x[n] * df.x[n])) / w.x[n];
    const double C = (fv * fv * w.x[n] * dp.xx[n] - fv * wxf_x[n] * dp.x[n] +
                      (df.x[n] * wxf_x[n] - df.xx[n] * wxf[n]) * pv) / w.x[n];
    ab[n] = A - B;
    ac[n] = A - C;
    bc[n] = B - C;
  }
  out.a_minus_b = norms(ab, mask).linf;
  out.a_minus_closed = norms(ac, mask).linf;
  out.b_minus_closed = norms(bc, mask).linf;
  return out;
}

IdentityCheck b4_simplification_check(const ScalarField2D& omega, const ScalarField2D& psi,
                                      const ScalarField2D& f, double eps_rel) {
  check_eps(eps_rel);
  require_same_grid(omega, psi, "b4_simplification_check");
  require_same_grid(omega, f, "b4_simplification_check");
  const Derivs w(omega);
  const ScalarField2D P = poisson_bracket(omega, psi);
  const ScalarField2D Px = ddx(P);
  const ScalarField2D fP_x = ddx(f * P);
  const ScalarField2D wxf_x = ddx(w.x * f);

  const Mask2D mask = Mask2D::above(w.x, eps_rel) && Mask2D::above(f, eps_rel);
  IdentityCheck out;
  out.mask_fraction = mask.kept_fraction();
  if (mask.kept_count() == 0) return out;

  ScalarField2D diff(omega.grid());
  for (std::size_t n = 0; n < diff.size(); ++n) {
    if (!mask.kept(n)) continue;
    const double wx = w.x[n];
    const double fv = f[n];
    const double quotient_x = (Px[n] * wx - P[n] * w.xx[n]) / (wx * wx);
    const double lhs = quotient_x / (wx * fv) - fP_x[n] / (wx * wx * fv * fv);
    const double rhs = -wxf_x[n] * P[n] / (wx * wx * wx * fv * fv);
    // Compare relative to the size of the pieces that cancel on the left.
    const double size = std::abs(quotient_x / (wx * fv)) + std::abs(rhs) + 1.0;
    diff[n] = (lhs - rhs) / size;
  }
  out.discrepancy = norms(diff, mask).linf;
  return out;
}

ResidualReport darboux_verify(const DarbouxCase& c, double eps_rel, const DarbouxTolerances& tol) {
  check_eps(eps_rel);
  const Grid2D& g = c.omega.grid();
  require_same_grid(c.omega, c.psi, "darboux_verify");
  require_same_grid(c.omega, c.f, "darboux_verify");
  require_same_grid(c.omega, c.p, "darboux_verify");
  require_same_grid(c.omega, c.bigF, "darboux_verify");

  ResidualReport report;
  report.suite = "darboux";
  record_grid(report, g);
  report.metrics["eps_rel"] = eps_rel;

  report.add(entry("d1_f", norms(poisson_bracket(c.omega, c.f)), tol.kernel));
  report.add(entry("d1_p", norms(poisson_bracket(c.omega, c.p)), tol.kernel));
  report.add(entry("d2_f", norms(poisson_bracket(c.psi, c.f)), tol.kernel));
  report.add(entry("d2_p", norms(poisson_bracket(c.psi, c.p)), tol.kernel));

  const ConstraintReport cr = check_constraints(c.omega, c.bigF, eps_rel, tol.constraint);
  check_main_constraints(cr);
  add_constraints(report, cr);

  const PotentialPair tilde = transform_potentials(c.omega, c.psi, c.bigF);
  const Derivs w(c.omega);
  const Derivs df(c.f);
  const Derivs dp(c.p);
  const GaugeFields pt = gauge_with_derivatives(dp, df, w, eps_rel);
  const Gradient2D wt = gradient(tilde.omega_tilde);
  const Mask2D mask = pt.mask && Mask2D::above(wt.x, eps_rel);
  require_mask_coverage(mask);
  const ScalarField2D transformed_bracket = poisson_bracket(tilde.omega_tilde, tilde.psi_tilde);

  ScalarField2D ch1(g), ch2(g);
  for (std::size_t n = 0; n < g.size(); ++n) {
    if (!mask.kept(n)) continue;
    ch1[n] = wt.x[n] * pt.y[n] - wt.y[n] * pt.x[n];
    // Steady: p~_t = 0.
    ch2[n] = 0.0 - pt.x[n] / wt.x[n] * transformed_bracket[n];
  }
  const double fraction = mask.kept_fraction();
  report.metrics["mask_fraction"] = fraction;
  report.add(entry("ch1", norms(ch1, mask), tol.transformed, fraction));
  report.add(entry("ch2", norms(ch2, mask), tol.transformed, fraction));

  const ABDiscrepancy ab = proof_identity_AB(c.omega, c.f, c.p, eps_rel);
  ResidualEntry abe;
  abe.name = "AB";
  abe.linf = ab.max();
  abe.l2 = ab.max();
  abe.tolerance = tol.ab;
  abe.mask_fraction = ab.mask_fraction;
  report.add(abe);

  // Whether (omega~, psi~) is itself a steady Euler pair is reported only.
  ResidualEntry eul = entry("euler_tilde", norms(transformed_bracket), 0.0);
  eul.informational = true;
  report.add(eul);

  if (mask.low_coverage()) {
    report.warnings.push_back("mask keeps only " + std::to_string(fraction) + " of the grid");
  }
  return report;
}

ScalarField2D time_derivative_4th(const std::vector<ScalarField2D>& s, std::size_t n, double dt) {
  const std::size_t count = s.size();
  if (count < 5) throw InvalidArgument("fourth-order time differences need at least five frames");
  if (n >= count) throw InvalidArgument("frame index out of range");
  const double inv = 1.0 / (12.0 * dt);
  ScalarField2D out(s[0].grid());
  auto combine = [&](std::size_t base, const double (&w)[5], double sign) {
    for (std::size_t p = 0; p < out.size(); ++p) {
      double acc = 0.0;
      for (std::size_t q = 0; q < 5; ++q) {
        const std::size_t idx = sign > 0 ? base + q : base - q;
        acc += w[q] * s[idx][p];
      }
      out[p] = sign * acc * inv;
    }
  };
  static constexpr double kForward0[5] = {-25.0, 48.0, -36.0, 16.0, -3.0};
  static constexpr double kForward1[5] = {-3.0, -10.0, 18.0, -6.0, 1.0};
  if (n == 0) {
    combine(0, kForward0, 1.0);
  } else if (n == 1) {
    combine(0, kForward1, 1.0);
  } else if (n == count - 1) {
    combine(count - 1, kForward0, -1.0);
  } else if (n == count - 2) {
    combine(count - 1, kForward1, -1.0);
  } else {
    for (std::size_t p = 0; p < out.size(); ++p) {
      out[p] = (s[n - 2][p] - 8.0 * s[n - 1][p] + 8.0 * s[n + 1][p] - s[n + 2][p]) * inv;
    }
  }
  return out;
}

ResidualReport darboux_verify_series(const std::vector<DarbouxCase>& frames, double dt,
                                     double eps_rel, const DarbouxTolerances& tol) {
  check_eps(eps_rel);
  if (frames.size() < 5) throw InvalidArgument("darboux_verify_series needs at least five frames");
  if (!(dt > 0.0)) throw InvalidArgument("dt must be positive");
  const Grid2D& g = frames.front().omega.grid();

  ResidualReport report;
  report.suite = "darboux-series";
  record_grid(report, g);
  report.metrics["eps_rel"] = eps_rel;
  report.metrics["frames"] = static_cast<double>(frames.size());

  std::vector<ScalarField2D> fs, ps, pts;
  std::vector<GaugeFields> gauges;
  std::vector<Gradient2D> wts;
  std::vector<ScalarField2D> brackets;
  Mask2D mask(g);
  double d1 = 0.0;
  double main1 = 0.0, main2 = 0.0, alt1 = 0.0, alt2 = 0.0;
  for (const DarbouxCase& c : frames) {
    require_same_grid(c.omega, c.f, "darboux_verify_series");
    require_same_grid(c.omega, c.p, "darboux_verify_series");
    d1 = std::max({d1, norms(poisson_bracket(c.omega, c.f)).linf,
                   norms(poisson_bracket(c.omega, c.p)).linf});
    const ConstraintReport cr = check_constraints(c.omega, c.bigF, eps_rel, tol.constraint);
    check_main_constraints(cr);
    main1 = std::max(main1, cr.r_main1);
    main2 = std::max(main2, cr.r_main2);
    alt1 = std::max(alt1, cr.r_alt1);
    alt2 = std::max(alt2, cr.r_alt2);

    const PotentialPair tilde = transform_potentials(c.omega, c.psi, c.bigF);
    gauges.push_back(gauge_with_derivatives(Derivs(c.p), Derivs(c.f), Derivs(c.omega), eps_rel));
    wts.push_back(gradient(tilde.omega_tilde));
    brackets.push_back(poisson_bracket(tilde.omega_tilde, tilde.psi_tilde));
    mask = mask && gauges.back().mask && Mask2D::above(wts.back().x, eps_rel);
    fs.push_back(c.f);
    ps.push_back(c.p);
    pts.push_back(gauges.back().value);
  }
  require_mask_coverage(mask);

  // Second Lax equation for f and p with time derivatives from the frames.
  double d2 = 0.0;
  double ch1 = 0.0, ch1_l2 = 0.0, ch2 = 0.0, ch2_l2 = 0.0;
  for (std::size_t k = 0; k < frames.size(); ++k) {
    const ScalarField2D rf = time_derivative_4th(fs, k, dt) + poisson_bracket(frames[k].psi, fs[k]);
    const ScalarField2D rp = time_derivative_4th(ps, k, dt) + poisson_bracket(frames[k].psi, ps[k]);
    d2 = std::max({d2, norms(rf).linf, norms(rp).linf});

    const ScalarField2D pt_t = time_derivative_4th(pts, k, dt);
    ScalarField2D r1(g), r2(g);
    for (std::size_t n = 0; n < g.size(); ++n) {
      if (!mask.kept(n)) continue;
      r1[n] = wts[k].x[n] * gauges[k].y[n] - wts[k].y[n] * gauges[k].x[n];
      r2[n] = pt_t[n] - gauges[k].x[n] / wts[k].x[n] * brackets[k][n];
    }
    const Norms n1 = norms(r1, mask);
    const Norms n2 = norms(r2, mask);
    ch1 = std::max(ch1, n1.linf);
    ch1_l2 = std::max(ch1_l2, n1.l2);
    ch2 = std::max(ch2, n2.linf);
    ch2_l2 = std::max(ch2_l2, n2.l2);
  }

  const double fraction = mask.kept_fraction();
  report.metrics["mask_fraction"] = fraction;
  report.add(entry("d1", Norms{d1, d1}, tol.kernel));
  report.add(entry("d2", Norms{d2, d2}, tol.kernel));
  ConstraintReport worst;
  worst.tolerance = tol.constraint;
  worst.r_main1 = main1;
  worst.r_main2 = main2;
  worst.r_alt1 = alt1;
  worst.r_alt2 = alt2;
  add_constraints(report, worst);
  report.add(entry("ch1", Norms{ch1, ch1_l2}, tol.transformed, fraction));
  report.add(entry("ch2", Norms{ch2, ch2_l2}, tol.transformed, fraction));
  if (mask.low_coverage()) {
    report.warnings.push_back("mask keeps only " + std::to_string(fraction) + " of the grid");
  }
  return report;
}

}  // namespace eulerlax
