// Acceptance run: one line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "eulerlax/darboux.hpp"
#include "eulerlax/euler2d.hpp"
#include "eulerlax/kernel_functions.hpp"
#include "eulerlax/lax3d.hpp"
#include "eulerlax_tools/suites.hpp"

using namespace eulerlax;
using namespace eulerlax::tools;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Worst residual over report entries whose name starts with `prefix`.
double worst(const ResidualReport& r, const std::string& prefix) {
  double m = 0.0;
  for (const auto& e : r.residuals) {
    if (e.name.rfind(prefix, 0) == 0) m = std::max(m, e.linf);
  }
  return m;
}

ExperimentConfig config(const std::string& suite) {
  ExperimentConfig c;
  c.suite = suite;
  return c;
}

Outcome c1() {
  ExperimentConfig c = config("jacobi");
  c.n = 64;
  c.kmax = 10;
  c.count = 20;
  c.tol = 1e-8;
  const ResidualReport r = run_suite(c);
  const double w = worst(r, "jacobi.");
  return {r.verdict() && w < 1e-8, "jacobi max " + fmt("%.2e", w) + " < 1e-08 over 20 seeds"};
}

Outcome c2() {
  ExperimentConfig c = config("compat2d");
  c.count = 20;
  c.tol = 1e-8;
  const ResidualReport r = run_suite(c);
  const double w = std::max(worst(r, "compat.random."), worst(r, "compat.euler."));
  return {r.verdict() && w < 1e-8, "compatibility max " + fmt("%.2e", w) + " < 1e-08 (random and euler_rhs)"};
}

Outcome c3() {
  ExperimentConfig c = config("transport");
  c.n = 64;
  c.tend = 0.5;
  c.dt = 5e-3;
  c.tol = 1e-5;
  const ResidualReport r = run_suite(c);
  const double k = worst(r, "transport.kernel");
  const double d = worst(r, "transport.phi_vs_flow");
  return {r.verdict() && k < 1e-5 && d < 1e-5,
          "|phi-omega| " + fmt("%.2e", d) + ", |{omega,phi}| " + fmt("%.2e", k) + " < 1e-05"};
}

Outcome c4() {
  const Grid2D g = Grid2D::square(128);
  const FlowState2D s = SteadyStateSpec::eigenstate(1, 1, 1.0).build(g);
  const DarbouxCase dc{s.omega, s.psi, build_kernel_solution(s.omega, KernelFunction::TwoPlusCos),
                       s.omega * s.omega, 0.25 * s.omega};
  const ResidualReport r = darboux_verify(dc, 1e-3);
  double cons = 0.0;
  for (const char* n : {"constraint.main1", "constraint.main2"}) cons = std::max(cons, r.find(n)->linf);
  const ResidualEntry& ch1 = *r.find("ch1");
  const ResidualEntry& ch2 = *r.find("ch2");
  const double mask = std::min(ch1.mask_fraction, ch2.mask_fraction);

  const GaugeResult id = gauge_transform(s.omega * s.omega, s.omega, s.omega, 1e-3);
  const double closed = norms(id.p_tilde - s.omega, id.mask).linf;

  const bool ok = cons < 1e-9 && ch1.linf < 1e-6 && ch2.linf < 1e-6 && mask >= 0.9 && closed < 1e-8;
  return {ok, "constraints " + fmt("%.1e", cons) + ", ch1 " + fmt("%.1e", ch1.linf) + ", ch2 " +
                  fmt("%.1e", ch2.linf) + ", mask " + fmt("%.3f", mask) + ", closed form " +
                  fmt("%.1e", closed)};
}

Outcome c5() {
  const Grid2D g = Grid2D::square(128);
  const FlowState2D s = SteadyStateSpec::eigenstate(1, 1, 1.0).build(g);
  using K = KernelFunction;
  const std::pair<K, K> pairs[] = {{K::Square, K::TwoPlusCos}, {K::Cube, K::TwoPlusCos},
                                   {K::Sin, K::ExpQuarter},    {K::Identity, K::ExpQuarter},
                                   {K::Cos, K::TwoPlusCos}};
  double ab = 0.0, xy = 0.0;
  for (auto [h, gf] : pairs) {
    const auto p = build_kernel_solution(s.omega, h);
    const auto f = build_kernel_solution(s.omega, gf);
    ab = std::max(ab, proof_identity_AB(s.omega, f, p, 1e-3).max());
    const GaugeResult gx = gauge_transform(p, f, s.omega, 1e-3);
    const GaugeResult gy = gauge_transform_y(p, f, s.omega, 1e-3);
    xy = std::max(xy, norms(gx.p_tilde - gy.p_tilde, gx.mask && gy.mask).linf);
  }
  bool implication = true;
  for (double c : {0.1, 0.25, -0.3}) {
    const ConstraintReport cr = check_constraints(s.omega, c * s.omega, 1e-3);
    implication = implication && cr.implication_holds(1e-9, 1e-7);
  }
  return {ab < 1e-6 && xy < 1e-8 && implication,
          "A-B " + fmt("%.1e", ab) + " < 1e-06, x/y " + fmt("%.1e", xy) + " < 1e-08, implication " +
              (implication ? "holds" : "violated")};
}

Outcome c6() {
  ExperimentConfig c = config("lax3d");
  c.n = 64;
  c.kmax = 8;
  c.count = 20;
  c.tol = 1e-7;
  const ResidualReport r = run_suite(c);
  const double sh = worst(r, "commutator.shifted.");
  const double un = worst(r, "commutator.unshifted.");
  return {sh < 1e-7 && un < 1e-7,
          "shifted " + fmt("%.2e", sh) + ", unshifted " + fmt("%.2e", un) + " < 1e-07 over 20 seeds"};
}

Outcome c7() {
  const Grid3D g = Grid3D::cube(64);
  const AbcFlow abc = abc_flow(1.0, 1.0, 1.0, g);
  const double steady =
      norms(compatibility_residual_3v(VectorField3D(g), abc.omega, abc.omega, {}, {})).linf;
  const Grid3D flat(64, 64, 8);
  const auto w = embed_planar(flat, [](double x, double y) { return std::sin(x) * std::cos(2.0 * y) + std::cos(3.0 * x); });
  const auto phi = embed_planar(flat, [](double x, double y) { return std::exp(std::sin(x + y)); });
  const double red = norms(lax3d_L(w, phi)).linf;
  return {steady < 1e-10 && red < 1e-12,
          "ABC " + fmt("%.1e", steady) + " < 1e-10, planar L " + fmt("%.1e", red) + " < 1e-12"};
}

Outcome c8() {
  ExperimentConfig c = config("limit");
  c.n = 32;
  c.eps = {1e-1, 1e-2, 1e-3};
  const ResidualReport r = run_suite(c);
  const double order = r.metrics.at("order");
  return {std::abs(order - 1.0) <= 0.01, "order " + fmt("%.6f", order) + " within 1.00 +- 0.01"};
}

Outcome c9() {
  const ExperimentConfig c = config("converge");
  const auto j = convergence_study("jacobi", {32, 48, 64}, c);
  const auto d = convergence_study("darboux", {32, 48, 64}, c);
  const double dj = j.front().residual / j.back().residual;
  const double dd = d.front().residual / d.back().residual;
  return {dj > 1e3 && dd > 1e3,
          "decay 32->64: jacobi " + fmt("%.2e", dj) + ", darboux " + fmt("%.2e", dd) + " > 1e+03"};
}

Outcome c10() {
  ExperimentConfig c = config("euler2d");
  c.n = 64;
  c.dt = 1e-2;
  c.tend = 1.0;
  c.tol = 1e-6;
  c.snap_every = 1000;
  c.out = "acceptance_euler2d";
  const ResidualReport r = run_suite(c);
  const double e = r.find("drift.energy")->linf;
  const double z = r.find("drift.enstrophy")->linf;
  const double m = r.find("drift.mean_vorticity")->linf;
  return {e < 1e-6 && z < 1e-6 && m < 1e-13,
          "100 steps: energy " + fmt("%.1e", e) + ", enstrophy " + fmt("%.1e", z) + " < 1e-06, mean " +
              fmt("%.1e", m) + " < 1e-13"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::function<Outcome()> run;
    double budget_s;  // 0: no runtime bound
  };
  const std::vector<Criterion> criteria{
      {1, c1, 5.0},  {2, c2, 5.0}, {3, c3, 30.0}, {4, c4, 10.0}, {5, c5, 10.0},
      {6, c6, 60.0}, {7, c7, 0.0}, {8, c8, 0.0},  {9, c9, 0.0},  {10, c10, 0.0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.budget_s == 0.0 || secs < c.budget_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("criterion %2d: %s  %s  [%.2f s%s]\n", c.id, pass ? "PASS" : "FAIL", o.detail.c_str(), secs,
                c.budget_s > 0.0 ? (in_time ? fmt(" < %.0f s", c.budget_s).c_str() : " OVER BUDGET") : "");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
