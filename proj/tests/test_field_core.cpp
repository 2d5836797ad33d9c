#include <gtest/gtest.h>

#include <cmath>

#include "eulerlax/errors.hpp"
#include "eulerlax/field2d.hpp"
#include "eulerlax/norms.hpp"
#include "eulerlax/random_field.hpp"
#include "eulerlax/spectral2d.hpp"
#include "support/oracle.hpp"

using namespace eulerlax;

namespace {

const Grid2D g64 = Grid2D::square(64);

ScalarField2D sample(const Grid2D& g, double (*fn)(double, double)) {
  return ScalarField2D::sample(g, fn);
}

double max_err(const ScalarField2D& a, const ScalarField2D& b) { return norms(a - b).linf; }

}  // namespace

TEST(Grid, RejectsOddOrSmallCounts) {
  EXPECT_THROW(Grid2D(7, 8), InvalidArgument);
  EXPECT_THROW(Grid2D(8, 9), InvalidArgument);
  EXPECT_THROW(Grid2D(6, 6), InvalidArgument);
  EXPECT_THROW(Grid2D(8, 8, -1.0, 1.0), InvalidArgument);
  EXPECT_NO_THROW(Grid2D(8, 10, 1.0, 2.0));
  EXPECT_THROW(Grid3D(8, 8, 7), InvalidArgument);
}

TEST(Grid, PointsAndIndexing) {
  const Grid2D g(16, 8, 2.0, 4.0);
  EXPECT_DOUBLE_EQ(g.x(4), 0.5);
  EXPECT_DOUBLE_EQ(g.y(2), 1.0);
  EXPECT_EQ(g.index(3, 2), 2u * 16u + 3u);
  EXPECT_EQ(g.size(), 128u);
}

TEST(ScalarField2D, RejectsWrongLength) {
  EXPECT_THROW(ScalarField2D(g64, std::vector<double>(10)), InvalidArgument);
}

TEST(ScalarField2D, ArithmeticRequiresSameGrid) {
  ScalarField2D a(g64, 1.0);
  const ScalarField2D b(Grid2D::square(32), 1.0);
  EXPECT_THROW(a += b, GridMismatch);
  EXPECT_THROW(poisson_bracket(a, b), GridMismatch);
}

TEST(Derivatives, SinX) {
  const auto f = sample(g64, [](double x, double) { return std::sin(x); });
  const auto expect = sample(g64, [](double x, double) { return std::cos(x); });
  EXPECT_LT(max_err(ddx(f), expect), 1e-12);
  EXPECT_LT(ddy(f).max_abs(), 1e-12);
}

TEST(Derivatives, ConstantHasZeroDerivative) {
  const ScalarField2D f(g64, 3.0);
  EXPECT_LT(ddx(f).max_abs(), 1e-14);
  EXPECT_LT(ddy(f).max_abs(), 1e-14);
  EXPECT_LT(laplacian(f).max_abs(), 1e-14);
}

TEST(Derivatives, HighestOddModeIsResolved) {
  const auto f = sample(g64, [](double x, double) { return std::sin(31.0 * x); });
  const auto expect = sample(g64, [](double x, double) { return 31.0 * std::cos(31.0 * x); });
  EXPECT_LT(max_err(ddx(f), expect), 1e-10);
}

TEST(Derivatives, NonSquarePeriods) {
  const Grid2D g(32, 16, 2.0, 3.0);
  const double kx = kTwoPi / 2.0, ky = 2.0 * kTwoPi / 3.0;
  const auto f = ScalarField2D::sample(g, [&](double x, double y) { return std::sin(kx * x) * std::cos(ky * y); });
  const auto fy = ScalarField2D::sample(g, [&](double x, double y) { return -ky * std::sin(kx * x) * std::sin(ky * y); });
  EXPECT_LT(max_err(ddy(f), fy), 1e-12);
  EXPECT_LT(max_err(laplacian(f), -(kx * kx + ky * ky) * f), 1e-11);
}

TEST(Derivatives, MatchModeSumOracle) {
  const auto modes = random_modes_2d(11, 10);
  const auto f = synthesize(modes, g64);
  EXPECT_LT(max_err(f, oracle::mode_sum(modes, g64)), 1e-13);
  EXPECT_LT(max_err(ddx(f), oracle::mode_sum(modes, g64, 1, 0)), 1e-11);
  EXPECT_LT(max_err(ddy(f), oracle::mode_sum(modes, g64, 0, 1)), 1e-11);
  const auto lap = oracle::mode_sum(modes, g64, 2, 0) + oracle::mode_sum(modes, g64, 0, 2);
  EXPECT_LT(max_err(laplacian(f), lap), 1e-10);
}

TEST(Laplacian, Eigenfunctions) {
  const auto f = sample(g64, [](double x, double y) { return std::sin(x) * std::sin(y); });
  EXPECT_LT(max_err(laplacian(f), -2.0 * f), 1e-12);
  const auto c3 = sample(g64, [](double x, double) { return std::cos(3.0 * x); });
  EXPECT_LT(max_err(laplacian(c3), -9.0 * c3), 1e-11);
}

TEST(SolvePoisson, InvertsEigenstate) {
  const auto rhs = sample(g64, [](double x, double y) { return -2.0 * std::sin(x) * std::sin(y); });
  const auto expect = sample(g64, [](double x, double y) { return std::sin(x) * std::sin(y); });
  EXPECT_LT(max_err(solve_poisson(rhs), expect), 1e-13);
}

TEST(SolvePoisson, ZeroAndNonZeroMean) {
  EXPECT_EQ(solve_poisson(ScalarField2D(g64)).max_abs(), 0.0);
  EXPECT_THROW(solve_poisson(ScalarField2D(g64, 1.0)), NonZeroMean);
}

TEST(SolvePoisson, InvertsLaplacianOnZeroMeanFields) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto f = random_bandlimited(seed, 21, g64);
    EXPECT_LT(max_err(solve_poisson(laplacian(f)), f), 1e-11) << "seed " << seed;
  }
}

TEST(SolvePoisson, ResultHasZeroMean) {
  const auto psi = solve_poisson(random_bandlimited(3, 8, g64));
  EXPECT_LT(std::abs(psi.mean()), 1e-15);
}

TEST(Spectral, RoundTripReproducesCoefficients) {
  SpectralCoeffs2D c(g64);
  c.set(3, -5, {0.25, -0.5});
  // The kx = 0 column stores both signs of l; a real field needs the conjugate.
  c.set(0, 7, {1.0, 2.0});
  c.set(0, -7, {1.0, -2.0});
  c.set(10, 10, {-0.75, 0.0});
  const SpectralCoeffs2D back = to_spectral(to_physical(c));
  double scale = 0.0, err = 0.0;
  for (std::size_t n = 0; n < c.data().size(); ++n) {
    scale = std::max(scale, std::abs(c.data()[n]));
    err = std::max(err, std::abs(back.data()[n] - c.data()[n]));
  }
  EXPECT_LT(err / scale, 1e-12);
}

TEST(Spectral, ConjugateSymmetryAndKnownAmplitude) {
  // cos(2x + 3y) = (e^{i theta} + e^{-i theta}) / 2
  const auto f = sample(g64, [](double x, double y) { return std::cos(2.0 * x + 3.0 * y); });
  const SpectralCoeffs2D c = to_spectral(f);
  EXPECT_NEAR(c.at(2, 3).real(), 0.5, 1e-14);
  EXPECT_NEAR(c.at(-2, -3).real(), 0.5, 1e-14);
  EXPECT_NEAR(std::abs(c.at(2, -3)), 0.0, 1e-14);
  EXPECT_EQ(c.at(100, 0), std::complex<double>(0.0, 0.0));
  const auto s = to_spectral(sample(g64, [](double x, double) { return std::sin(5.0 * x); }));
  EXPECT_NEAR(s.at(5, 0).imag(), -0.5, 1e-14);
  EXPECT_NEAR(s.at(-5, 0).imag(), 0.5, 1e-14);
}

TEST(Spectral, DealiasKeepsTwoThirds) {
  const auto f = random_bandlimited(5, 21, g64);
  const auto kept = to_physical(dealias(to_spectral(f)));
  EXPECT_LT(max_err(kept, f), 1e-13);
  const auto high = sample(g64, [](double x, double) { return std::cos(22.0 * x); });
  EXPECT_LT(to_physical(dealias(to_spectral(high))).max_abs(), 1e-13);
}

TEST(Norms, ZeroSineAndMasks) {
  const Norms z = norms(ScalarField2D(g64));
  EXPECT_EQ(z.linf, 0.0);
  EXPECT_EQ(z.l2, 0.0);

  const auto f = sample(g64, [](double x, double) { return std::sin(x); });
  const Norms n = norms(f);
  EXPECT_NEAR(n.linf, 1.0, 1e-12);
  EXPECT_NEAR(n.l2, 1.0 / std::sqrt(2.0), 1e-12);

  const Norms full = norms(f, Mask2D(g64));
  EXPECT_EQ(full.linf, n.linf);
  EXPECT_EQ(full.l2, n.l2);

  EXPECT_THROW(norms(f, Mask2D(g64, std::vector<bool>(g64.size(), false), 0.0)), InvalidArgument);
  EXPECT_THROW(norms(f, Mask2D(Grid2D::square(32))), GridMismatch);
}

TEST(Norms, MaskedNormsIgnoreExcludedPoints) {
  ScalarField2D f(g64, 1.0);
  f(0, 0) = 1e6;
  std::vector<bool> kept(g64.size(), true);
  kept[g64.index(0, 0)] = false;
  const Norms n = norms(f, Mask2D(g64, kept, 0.0));
  EXPECT_EQ(n.linf, 1.0);
  EXPECT_EQ(n.l2, 1.0);
}

TEST(Mask2D, AboveThresholdAndCoverage) {
  const auto f = sample(g64, [](double x, double) { return std::sin(x); });
  const Mask2D m = Mask2D::above(f, 1e-3);
  // sin x vanishes at x = 0 and x = pi, two of 64 columns.
  EXPECT_NEAR(m.kept_fraction(), 62.0 / 64.0, 1e-15);
  EXPECT_FALSE(m.low_coverage());
  const Mask2D half = Mask2D::above(f, 0.8);
  EXPECT_TRUE(half.low_coverage());
  const Mask2D both = m && Mask2D::above(sample(g64, [](double, double y) { return std::sin(y); }), 1e-3);
  EXPECT_NEAR(both.kept_fraction(), (62.0 / 64.0) * (62.0 / 64.0), 1e-15);
}

TEST(RandomBandlimited, DeterministicAndBandLimited) {
  const auto a = random_bandlimited(42, 10, g64);
  const auto b = random_bandlimited(42, 10, g64);
  for (std::size_t n = 0; n < a.size(); ++n) ASSERT_EQ(a[n], b[n]);
  EXPECT_NE(a[7], random_bandlimited(43, 10, g64)[7]);
  for (const Mode2D& m : random_modes_2d(42, 10)) {
    ASSERT_LE(std::max(std::abs(m.k), std::abs(m.l)), 10);
  }
  // Exactly zero in the construction; the forward FFT adds rounding noise.
  EXPECT_LT(to_spectral(a).energy_above(10), 1e-28);
  EXPECT_LT(std::abs(a.mean()), 1e-15);
  EXPECT_NEAR(norms(a).l2, 1.0, 1e-12);
}

TEST(RandomBandlimited, ZeroKmaxAndLimits) {
  EXPECT_EQ(random_bandlimited(1, 0, g64).max_abs(), 0.0);
  EXPECT_NO_THROW(random_bandlimited(1, 21, g64));
  EXPECT_THROW(random_bandlimited(1, 22, g64), InvalidArgument);
  EXPECT_THROW(random_bandlimited(1, -1, g64), InvalidArgument);
}

TEST(RandomBandlimited, SameContinuousFieldOnEveryGrid) {
  const auto coarse = random_bandlimited(9, 4, Grid2D::square(32));
  const auto fine = random_bandlimited(9, 4, Grid2D::square(64));
  double err = 0.0;
  for (int j = 0; j < 32; ++j) {
    for (int i = 0; i < 32; ++i) err = std::max(err, std::abs(coarse(i, j) - fine(2 * i, 2 * j)));
  }
  EXPECT_LT(err, 1e-13);
}

// ---------------------------------------------------------------------------
// Poisson bracket.

TEST(PoissonBracket, SelfBracketVanishes) {
  const auto f = random_bandlimited(1, 16, g64);
  EXPECT_LT(poisson_bracket(f, f).max_abs(), 1e-11);
}

TEST(PoissonBracket, SinXSinY) {
  const auto a = sample(g64, [](double x, double) { return std::sin(x); });
  const auto b = sample(g64, [](double, double y) { return std::sin(y); });
  const auto expect = sample(g64, [](double x, double y) { return std::cos(x) * std::cos(y); });
  EXPECT_LT(max_err(poisson_bracket(a, b), expect), 1e-11);
  // Convention {a,b} = a_x b_y - a_y b_x fixes the sign.
  EXPECT_LT(max_err(poisson_bracket(b, a), -1.0 * expect), 1e-11);
}

TEST(PoissonBracket, DependentFieldsOfEigenstate) {
  const auto om = sample(g64, [](double x, double y) { return -2.0 * std::sin(x) * std::sin(y); });
  EXPECT_LT(poisson_bracket(om, om * om).max_abs(), 1e-9);
}

TEST(PoissonBracket, MatchesModeSumOracle) {
  const auto ma = random_modes_2d(3, 10), mb = random_modes_2d(4, 10);
  const auto expect = oracle::mode_sum(ma, g64, 1, 0) * oracle::mode_sum(mb, g64, 0, 1) -
                      oracle::mode_sum(ma, g64, 0, 1) * oracle::mode_sum(mb, g64, 1, 0);
  EXPECT_LT(max_err(poisson_bracket(synthesize(ma, g64), synthesize(mb, g64)), expect), 1e-11);
}

class BracketProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(BracketProperties, Antisymmetry) {
  const std::uint64_t s = GetParam();
  const auto a = random_bandlimited(3 * s, 16, g64);
  const auto b = random_bandlimited(3 * s + 1, 16, g64);
  EXPECT_LT((poisson_bracket(a, b) + poisson_bracket(b, a)).max_abs(), 1e-11);
}

TEST_P(BracketProperties, Bilinearity) {
  const std::uint64_t s = GetParam();
  const auto a = random_bandlimited(3 * s, 10, g64);
  const auto b = random_bandlimited(3 * s + 1, 10, g64);
  const auto c = random_bandlimited(3 * s + 2, 10, g64);
  const double alpha = 0.7, beta = -1.3;
  const auto lhs = poisson_bracket(a, alpha * b + beta * c);
  const auto rhs = alpha * poisson_bracket(a, b) + beta * poisson_bracket(a, c);
  EXPECT_LT(max_err(lhs, rhs), 1e-11);
}

TEST_P(BracketProperties, Leibniz) {
  const std::uint64_t s = GetParam();
  const auto a = random_bandlimited(3 * s, 10, g64);
  const auto b = random_bandlimited(3 * s + 1, 10, g64);
  const auto c = random_bandlimited(3 * s + 2, 10, g64);
  const auto lhs = poisson_bracket(a, b * c);
  const auto rhs = b * poisson_bracket(a, c) + c * poisson_bracket(a, b);
  EXPECT_LT(max_err(lhs, rhs), 1e-9);
}

TEST_P(BracketProperties, Jacobi) {
  const std::uint64_t s = GetParam();
  const auto a = random_bandlimited(3 * s, 10, g64);
  const auto b = random_bandlimited(3 * s + 1, 10, g64);
  const auto c = random_bandlimited(3 * s + 2, 10, g64);
  EXPECT_LT(jacobi_residual(a, b, c).max_abs(), 1e-8);
}

TEST_P(BracketProperties, DependentFields) {
  ScalarField2D om = random_bandlimited(GetParam(), 3, g64);
  om *= 1.0 / om.max_abs();
  const auto h = om.map([](double s) { return std::sin(s); });
  const auto g = om.map([](double s) { return std::exp(0.25 * s) + s * s * s; });
  EXPECT_LT(poisson_bracket(h, g).max_abs(), 1e-8);
}

TEST_P(BracketProperties, ReflectionFlipsSign) {
  const std::uint64_t s = GetParam();
  const auto a = random_bandlimited(3 * s, 16, g64);
  const auto b = random_bandlimited(3 * s + 1, 16, g64);
  const auto lhs = poisson_bracket(transpose(a), transpose(b));
  const auto rhs = -transpose(poisson_bracket(a, b));
  // The FFT does not treat the two axes identically, so equality holds to rounding.
  EXPECT_LT(max_err(lhs, rhs), 1e-12 * std::max(1.0, rhs.max_abs()));
}

INSTANTIATE_TEST_SUITE_P(Seeds, BracketProperties, ::testing::Range<std::uint64_t>(1, 11));

TEST(Transpose, RequiresSquareGrid) {
  EXPECT_THROW(transpose(ScalarField2D(Grid2D(16, 8))), InvalidArgument);
  ScalarField2D f(Grid2D::square(8));
  f(1, 2) = 5.0;
  EXPECT_EQ(transpose(f)(2, 1), 5.0);
}
