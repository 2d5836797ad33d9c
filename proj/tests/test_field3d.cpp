#include <gtest/gtest.h>

#include <cmath>

#include "eulerlax/errors.hpp"
#include "eulerlax/field3d.hpp"
#include "eulerlax/random_field.hpp"
#include "support/oracle.hpp"

using namespace eulerlax;

namespace {
const Grid3D g16 = Grid3D::cube(16);
}

TEST(Field3D, LayoutIsZOutermost) {
  const Grid3D g(8, 10, 12);
  EXPECT_EQ(g.index(1, 2, 3), (3u * 10u + 2u) * 8u + 1u);
  const auto f = ScalarField3D::sample(g, [](double x, double y, double z) { return x + 10 * y + 100 * z; });
  EXPECT_DOUBLE_EQ(f(1, 2, 3), g.x(1) + 10 * g.y(2) + 100 * g.z(3));
}

TEST(Field3D, DerivativesOfTrigProducts) {
  const auto f = ScalarField3D::sample(g16, [](double x, double y, double z) {
    return std::sin(x) * std::cos(2.0 * y) * std::sin(3.0 * z);
  });
  const auto fx = ScalarField3D::sample(g16, [](double x, double y, double z) {
    return std::cos(x) * std::cos(2.0 * y) * std::sin(3.0 * z);
  });
  const auto fy = ScalarField3D::sample(g16, [](double x, double y, double z) {
    return -2.0 * std::sin(x) * std::sin(2.0 * y) * std::sin(3.0 * z);
  });
  const auto fz = ScalarField3D::sample(g16, [](double x, double y, double z) {
    return 3.0 * std::sin(x) * std::cos(2.0 * y) * std::cos(3.0 * z);
  });
  EXPECT_LT(oracle::max_abs_diff(ddx(f), fx), 1e-13);
  EXPECT_LT(oracle::max_abs_diff(ddy(f), fy), 1e-13);
  EXPECT_LT(oracle::max_abs_diff(ddz(f), fz), 1e-13);
  EXPECT_THROW(derivative(f, 3), InvalidArgument);
}

TEST(Field3D, RandomFieldMatchesSeparableModeSum) {
  const auto modes = random_modes_3d(5, 4);
  const auto f = random_bandlimited(5, 4, g16);
  EXPECT_LT(oracle::max_abs_diff(f, oracle::mode_sum(modes, g16)), 1e-13);
  EXPECT_THROW(random_bandlimited(5, 6, g16), InvalidArgument);
}

TEST(Field3D, GradientAgreesWithAxisDerivatives) {
  const auto f = random_bandlimited(2, 4, g16);
  const auto grad = gradient(f);
  for (int d = 0; d < 3; ++d) {
    EXPECT_LT(oracle::max_abs_diff(grad[static_cast<std::size_t>(d)], derivative(f, d)), 1e-13);
  }
}

TEST(Field3D, CurlOfGradientAndDivergenceOfCurlVanish) {
  const auto f = random_bandlimited(3, 5, g16);
  const auto grad = gradient(f);
  const VectorField3D gv(grad[0], grad[1], grad[2]);
  EXPECT_LT(curl(gv).max_abs(), 1e-12);
  const auto v = random_bandlimited_vector(4, 5, g16);
  EXPECT_LT(divergence(curl(v)).max_abs(), 1e-12);
}

TEST(Field3D, JacobianAndDirectionalDerivative) {
  const auto v = random_bandlimited_vector(8, 4, g16);
  const auto a = random_bandlimited_vector(9, 4, g16);
  const Jacobian3D j = jacobian(v);
  for (int i = 0; i < 3; ++i) {
    for (int d = 0; d < 3; ++d) {
      EXPECT_LT(oracle::max_abs_diff(j[i][d], derivative(v[i], d)), 1e-13);
    }
  }
  const VectorField3D dd = directional(a, v);
  for (int i = 0; i < 3; ++i) {
    ScalarField3D expect(g16);
    for (std::size_t n = 0; n < expect.size(); ++n) {
      expect[n] = a[0][n] * j[i][0][n] + a[1][n] * j[i][1][n] + a[2][n] * j[i][2][n];
    }
    EXPECT_LT(oracle::max_abs_diff(dd[i], expect), 1e-13);
  }
}

TEST(Field3D, VectorNormsAndGridChecks) {
  VectorField3D v = VectorField3D::constant(g16, {1.0, -2.0, 0.5});
  const Norms n = norms(v);
  EXPECT_DOUBLE_EQ(n.linf, 2.0);
  EXPECT_NEAR(n.l2, std::sqrt((1.0 + 4.0 + 0.25) / 3.0), 1e-15);
  const VectorField3D w(Grid3D::cube(8));
  EXPECT_THROW(v += w, GridMismatch);
  EXPECT_THROW(VectorField3D(ScalarField3D(g16), ScalarField3D(g16), ScalarField3D(Grid3D::cube(8))),
               GridMismatch);
}
