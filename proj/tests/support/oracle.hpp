#pragma once

// Reference evaluations that avoid the library's FFT path: direct trig sums
// of mode lists and periodic fourth-order finite differences.

#include <cmath>
#include <complex>
#include <vector>

#include "eulerlax/field2d.hpp"
#include "eulerlax/field3d.hpp"
#include "eulerlax/random_field.hpp"

namespace oracle {

using eulerlax::Grid2D;
using eulerlax::Grid3D;
using eulerlax::Mode2D;
using eulerlax::Mode3D;
using eulerlax::ScalarField2D;
using eulerlax::ScalarField3D;

inline std::complex<double> ipow(double k, int p) {
  std::complex<double> out(1.0, 0.0);
  for (int n = 0; n < p; ++n) out *= std::complex<double>(0.0, k);
  return out;
}

// d^px/dx^px d^py/dy^py of sum a cos(theta) + b sin(theta), by direct summation.
inline ScalarField2D mode_sum(const std::vector<Mode2D>& modes, const Grid2D& g, int px = 0,
                              int py = 0) {
  ScalarField2D out(g);
  for (const Mode2D& m : modes) {
    const double kx = m.k * eulerlax::kTwoPi / g.lx;
    const double ly = m.l * eulerlax::kTwoPi / g.ly;
    const std::complex<double> amp = std::complex<double>(m.a, -m.b) * ipow(kx, px) * ipow(ly, py);
    for (int j = 0; j < g.ny; ++j) {
      for (int i = 0; i < g.nx; ++i) {
        const double th = kx * g.x(i) + ly * g.y(j);
        out(i, j) += (amp * std::complex<double>(std::cos(th), std::sin(th))).real();
      }
    }
  }
  return out;
}

// Modes of the zero-mean solution of laplacian(psi) = sum(modes).
inline std::vector<Mode2D> inverse_laplacian(std::vector<Mode2D> modes, const Grid2D& g) {
  for (Mode2D& m : modes) {
    const double kx = m.k * eulerlax::kTwoPi / g.lx;
    const double ly = m.l * eulerlax::kTwoPi / g.ly;
    const double s = -1.0 / (kx * kx + ly * ly);
    m.a *= s;
    m.b *= s;
  }
  return modes;
}

// Separable evaluation of a 3D mode sum (values only).
inline ScalarField3D mode_sum(const std::vector<Mode3D>& modes, const Grid3D& g) {
  ScalarField3D out(g);
  std::vector<std::complex<double>> ex(g.nx), ey(g.ny);
  for (const Mode3D& m : modes) {
    const double kx = m.k * eulerlax::kTwoPi / g.lx;
    const double ky = m.l * eulerlax::kTwoPi / g.ly;
    const double kz = m.m * eulerlax::kTwoPi / g.lz;
    for (int i = 0; i < g.nx; ++i) ex[i] = std::polar(1.0, kx * g.x(i));
    for (int j = 0; j < g.ny; ++j) ey[j] = std::polar(1.0, ky * g.y(j));
    const std::complex<double> amp(m.a, -m.b);
    for (int k = 0; k < g.nz; ++k) {
      const std::complex<double> cz = amp * std::polar(1.0, kz * g.z(k));
      for (int j = 0; j < g.ny; ++j) {
        const std::complex<double> cyz = cz * ey[j];
        double* row = &out(0, j, k);
        for (int i = 0; i < g.nx; ++i) row[i] += (cyz * ex[i]).real();
      }
    }
  }
  return out;
}

inline int wrap(int i, int n) { return ((i % n) + n) % n; }

// Periodic fourth-order central first derivative.
inline ScalarField2D fd_x(const ScalarField2D& f) {
  const Grid2D& g = f.grid();
  ScalarField2D out(g);
  const double h = g.dx();
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      out(i, j) = (f(wrap(i - 2, g.nx), j) - 8.0 * f(wrap(i - 1, g.nx), j) +
                   8.0 * f(wrap(i + 1, g.nx), j) - f(wrap(i + 2, g.nx), j)) /
                  (12.0 * h);
    }
  }
  return out;
}

inline ScalarField2D fd_y(const ScalarField2D& f) {
  const Grid2D& g = f.grid();
  ScalarField2D out(g);
  const double h = g.dy();
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      out(i, j) = (f(i, wrap(j - 2, g.ny)) - 8.0 * f(i, wrap(j - 1, g.ny)) +
                   8.0 * f(i, wrap(j + 1, g.ny)) - f(i, wrap(j + 2, g.ny))) /
                  (12.0 * h);
    }
  }
  return out;
}

inline ScalarField3D fd(const ScalarField3D& f, int axis) {
  const Grid3D& g = f.grid();
  ScalarField3D out(g);
  const int n[3] = {g.nx, g.ny, g.nz};
  const double h = axis == 0 ? g.dx() : axis == 1 ? g.dy() : g.dz();
  for (int k = 0; k < g.nz; ++k) {
    for (int j = 0; j < g.ny; ++j) {
      for (int i = 0; i < g.nx; ++i) {
        auto at = [&](int s) {
          int idx[3] = {i, j, k};
          idx[axis] = wrap(idx[axis] + s, n[axis]);
          return f(idx[0], idx[1], idx[2]);
        };
        out(i, j, k) = (at(-2) - 8.0 * at(-1) + 8.0 * at(1) - at(2)) / (12.0 * h);
      }
    }
  }
  return out;
}

inline double max_abs_diff(const ScalarField2D& a, const ScalarField2D& b) {
  double m = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) m = std::max(m, std::abs(a[n] - b[n]));
  return m;
}

inline double max_abs_diff(const ScalarField3D& a, const ScalarField3D& b) {
  double m = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) m = std::max(m, std::abs(a[n] - b[n]));
  return m;
}

}  // namespace oracle
