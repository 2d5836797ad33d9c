#include "eulerlax/spectral2d.hpp"

#include <array>
#include <cmath>
#include <cstdlib>

#include "eulerlax/errors.hpp"
#include "fft.hpp"

namespace eulerlax {
namespace {

std::array<int, 2> fft_dims(const Grid2D& g) { return {g.ny, g.nx}; }

using Cplx = std::complex<double>;
constexpr Cplx kI{0.0, 1.0};

template <typename Fn>
SpectralCoeffs2D scale_modes(const SpectralCoeffs2D& c, Fn&& factor) {
  SpectralCoeffs2D out(c.grid());
  const int nxh = c.half_nx();
  for (int j = 0; j < c.grid().ny; ++j) {
    const int l = c.wavenumber_y(j);
    for (int i = 0; i < nxh; ++i) out.raw(i, j) = c.raw(i, j) * factor(i, j, i, l);
  }
  return out;
}

}  // namespace

SpectralCoeffs2D::SpectralCoeffs2D(const Grid2D& grid)
    : grid_(grid), data_(static_cast<std::size_t>(grid.ny) * (grid.nx / 2 + 1)) {}

std::complex<double> SpectralCoeffs2D::at(int k, int l) const {
  const int nx = grid_.nx;
  const int ny = grid_.ny;
  if (std::abs(k) > nx / 2 || std::abs(l) > ny / 2) return {};
  if (k < 0) return std::conj(at(-k, -l));
  const int j = (l % ny + ny) % ny;
  return raw(k, j);
}

void SpectralCoeffs2D::set(int k, int l, std::complex<double> value) {
  const int nx = grid_.nx;
  const int ny = grid_.ny;
  if (std::abs(k) > nx / 2 || std::abs(l) > ny / 2) {
    throw InvalidArgument("wavenumber outside the resolvable band");
  }
  if (k < 0) {
    set(-k, -l, std::conj(value));
    return;
  }
  const int j = (l % ny + ny) % ny;
  raw(k, j) = value;
}

double SpectralCoeffs2D::energy_above(int kmax) const {
  const int nxh = half_nx();
  double e = 0.0;
  for (int j = 0; j < grid_.ny; ++j) {
    const int l = wavenumber_y(j);
    for (int i = 0; i < nxh; ++i) {
      if (std::max(i, std::abs(l)) <= kmax) continue;
      // Interior kx columns stand for themselves and their conjugates.
      const double weight = (i == 0 || 2 * i == grid_.nx) ? 1.0 : 2.0;
      e += weight * std::norm(raw(i, j));
    }
  }
  return e;
}

SpectralCoeffs2D to_spectral(const ScalarField2D& f) {
  SpectralCoeffs2D c(f.grid());
  const auto dims = fft_dims(f.grid());
  detail::forward_r2c(dims, f.values(), c.data());
  return c;
}

ScalarField2D to_physical(const SpectralCoeffs2D& c) {
  std::vector<double> values;
  const auto dims = fft_dims(c.grid());
  detail::backward_c2r(dims, c.data(), values);
  return ScalarField2D(c.grid(), std::move(values));
}

SpectralCoeffs2D ddx(const SpectralCoeffs2D& c) {
  const double kx0 = kTwoPi / c.grid().lx;
  const int nx = c.grid().nx;
  return scale_modes(c, [&](int i, int, int k, int) {
    return 2 * i == nx ? Cplx{} : kI * (kx0 * k);
  });
}

SpectralCoeffs2D ddy(const SpectralCoeffs2D& c) {
  const double ky0 = kTwoPi / c.grid().ly;
  const int ny = c.grid().ny;
  return scale_modes(c, [&](int, int j, int, int l) {
    return 2 * j == ny ? Cplx{} : kI * (ky0 * l);
  });
}

SpectralCoeffs2D laplacian(const SpectralCoeffs2D& c) {
  const double kx0 = kTwoPi / c.grid().lx;
  const double ky0 = kTwoPi / c.grid().ly;
  return scale_modes(c, [&](int, int, int k, int l) {
    const double kx = kx0 * k;
    const double ky = ky0 * l;
    return Cplx{-(kx * kx + ky * ky), 0.0};
  });
}

SpectralCoeffs2D dealias(const SpectralCoeffs2D& c) {
  const int nx = c.grid().nx;
  const int ny = c.grid().ny;
  return scale_modes(c, [&](int, int, int k, int l) {
    return (3 * std::abs(k) > nx || 3 * std::abs(l) > ny) ? Cplx{} : Cplx{1.0, 0.0};
  });
}

ScalarField2D ddx(const ScalarField2D& f) { return to_physical(ddx(to_spectral(f))); }
ScalarField2D ddy(const ScalarField2D& f) { return to_physical(ddy(to_spectral(f))); }
ScalarField2D laplacian(const ScalarField2D& f) { return to_physical(laplacian(to_spectral(f))); }

Gradient2D gradient(const ScalarField2D& f) {
  const SpectralCoeffs2D c = to_spectral(f);
  return {to_physical(ddx(c)), to_physical(ddy(c))};
}

ScalarField2D solve_poisson(const ScalarField2D& rhs) {
  const double mean = rhs.mean();
  const double scale = rhs.max_abs();
  if (std::abs(mean) > 1e-10 * scale) throw NonZeroMean(mean, scale);

  const double kx0 = kTwoPi / rhs.grid().lx;
  const double ky0 = kTwoPi / rhs.grid().ly;
  const SpectralCoeffs2D c = to_spectral(rhs);
  SpectralCoeffs2D psi = scale_modes(c, [&](int, int, int k, int l) {
    if (k == 0 && l == 0) return Cplx{};
    const double kx = kx0 * k;
    const double ky = ky0 * l;
    return Cplx{-1.0 / (kx * kx + ky * ky), 0.0};
  });
  return to_physical(psi);
}

ScalarField2D poisson_bracket(const ScalarField2D& a, const ScalarField2D& b) {
  require_same_grid(a, b, "poisson_bracket");
  const Gradient2D ga = gradient(a);
  const Gradient2D gb = gradient(b);
  ScalarField2D out(a.grid());
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] = ga.x[n] * gb.y[n] - ga.y[n] * gb.x[n];
  }
  return out;
}

ScalarField2D jacobi_residual(const ScalarField2D& a, const ScalarField2D& b,
                              const ScalarField2D& c) {
  return poisson_bracket(a, poisson_bracket(b, c)) + poisson_bracket(b, poisson_bracket(c, a)) +
         poisson_bracket(c, poisson_bracket(a, b));
}

}  // namespace eulerlax
