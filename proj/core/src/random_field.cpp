#include "eulerlax/random_field.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <string>

#include "eulerlax/errors.hpp"
#include "eulerlax/spectral2d.hpp"

namespace eulerlax {
namespace {

// Uniform in [-1, 1) from the top 53 bits; std distributions are not
// reproducible across standard library implementations.
double uniform_pm1(std::mt19937_64& rng) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

template <typename Mode>
void normalize_rms(std::vector<Mode>& modes) {
  double power = 0.0;
  for (const Mode& m : modes) power += 0.5 * (m.a * m.a + m.b * m.b);
  if (power <= 0.0) return;
  const double s = 1.0 / std::sqrt(power);
  for (Mode& m : modes) {
    m.a *= s;
    m.b *= s;
  }
}

void check_kmax(int kmax, int limit_n) {
  if (kmax < 0 || 3 * kmax > limit_n) {
    throw InvalidArgument("kmax = " + std::to_string(kmax) + " exceeds n/3 for n = " +
                          std::to_string(limit_n));
  }
}

}  // namespace

std::vector<Mode2D> random_modes_2d(std::uint64_t seed, int kmax) {
  if (kmax < 0) throw InvalidArgument("kmax must be non-negative");
  std::mt19937_64 rng(seed);
  std::vector<Mode2D> modes;
  for (int k = 0; k <= kmax; ++k) {
    for (int l = -kmax; l <= kmax; ++l) {
      if (k == 0 && l <= 0) continue;
      const double decay = 1.0 / (1.0 + k * k + l * l);
      const double a = uniform_pm1(rng) * decay;
      const double b = uniform_pm1(rng) * decay;
      modes.push_back({k, l, a, b});
    }
  }
  normalize_rms(modes);
  return modes;
}

std::vector<Mode3D> random_modes_3d(std::uint64_t seed, int kmax) {
  if (kmax < 0) throw InvalidArgument("kmax must be non-negative");
  std::mt19937_64 rng(seed);
  std::vector<Mode3D> modes;
  for (int k = 0; k <= kmax; ++k) {
    for (int l = -kmax; l <= kmax; ++l) {
      for (int m = -kmax; m <= kmax; ++m) {
        if (k == 0 && (l < 0 || (l == 0 && m <= 0))) continue;
        const double decay = 1.0 / (1.0 + k * k + l * l + m * m);
        const double a = uniform_pm1(rng) * decay;
        const double b = uniform_pm1(rng) * decay;
        modes.push_back({k, l, m, a, b});
      }
    }
  }
  normalize_rms(modes);
  return modes;
}

ScalarField2D synthesize(const std::vector<Mode2D>& modes, const Grid2D& grid) {
  SpectralCoeffs2D c(grid);
  for (const Mode2D& md : modes) {
    if (2 * md.k >= grid.nx || 2 * std::abs(md.l) >= grid.ny || md.k < 0) {
      throw InvalidArgument("mode outside the grid band");
    }
    // a cos + b sin = Re[(a - i b) e^{i theta}].
    const std::complex<double> amp(0.5 * md.a, -0.5 * md.b);
    c.set(md.k, md.l, c.at(md.k, md.l) + amp);
    if (md.k == 0) c.set(0, -md.l, c.at(0, -md.l) + std::conj(amp));
  }
  return to_physical(c);
}

ScalarField3D synthesize(const std::vector<Mode3D>& modes, const Grid3D& grid) {
  SpectralCoeffs3D c(grid);
  for (const Mode3D& md : modes) {
    if (md.k < 0 || 2 * md.k >= grid.nx || 2 * std::abs(md.l) >= grid.ny ||
        2 * std::abs(md.m) >= grid.nz) {
      throw InvalidArgument("mode outside the grid band");
    }
    const std::complex<double> amp(0.5 * md.a, -0.5 * md.b);
    c.set(md.k, md.l, md.m, c.at(md.k, md.l, md.m) + amp);
    if (md.k == 0) c.set(0, -md.l, -md.m, c.at(0, -md.l, -md.m) + std::conj(amp));
  }
  return to_physical(c);
}

ScalarField2D random_bandlimited(std::uint64_t seed, int kmax, const Grid2D& grid) {
  check_kmax(kmax, std::min(grid.nx, grid.ny));
  return synthesize(random_modes_2d(seed, kmax), grid);
}

ScalarField3D random_bandlimited(std::uint64_t seed, int kmax, const Grid3D& grid) {
  check_kmax(kmax, std::min({grid.nx, grid.ny, grid.nz}));
  return synthesize(random_modes_3d(seed, kmax), grid);
}

VectorField3D random_bandlimited_vector(std::uint64_t seed, int kmax, const Grid3D& grid) {
  return VectorField3D(random_bandlimited(3 * seed, kmax, grid),
                       random_bandlimited(3 * seed + 1, kmax, grid),
                       random_bandlimited(3 * seed + 2, kmax, grid));
}

}  // namespace eulerlax
