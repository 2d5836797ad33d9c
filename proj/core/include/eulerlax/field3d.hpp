#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "eulerlax/grid.hpp"
#include "eulerlax/norms.hpp"

namespace eulerlax {

class ScalarField3D {
 public:
  ScalarField3D() = default;
  explicit ScalarField3D(const Grid3D& grid, double value = 0.0);
  ScalarField3D(const Grid3D& grid, std::vector<double> values);

  static ScalarField3D sample(const Grid3D& grid,
                              const std::function<double(double, double, double)>& fn);

  const Grid3D& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }

  double& operator()(int i, int j, int k) { return values_[grid_.index(i, j, k)]; }
  double operator()(int i, int j, int k) const { return values_[grid_.index(i, j, k)]; }
  double& operator[](std::size_t n) { return values_[n]; }
  double operator[](std::size_t n) const { return values_[n]; }

  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }

  double max_abs() const noexcept;
  bool all_finite() const noexcept;

  ScalarField3D& operator+=(const ScalarField3D& rhs);
  ScalarField3D& operator-=(const ScalarField3D& rhs);
  ScalarField3D& operator*=(double s) noexcept;

 private:
  Grid3D grid_;
  std::vector<double> values_;
};

ScalarField3D operator+(ScalarField3D a, const ScalarField3D& b);
ScalarField3D operator-(ScalarField3D a, const ScalarField3D& b);
ScalarField3D operator*(double s, ScalarField3D a);

// Three components on one grid.
struct VectorField3D {
  std::array<ScalarField3D, 3> c;

  VectorField3D() = default;
  explicit VectorField3D(const Grid3D& grid);
  VectorField3D(ScalarField3D x, ScalarField3D y, ScalarField3D z);

  // Spatially constant vector.
  static VectorField3D constant(const Grid3D& grid, std::array<double, 3> value);

  const Grid3D& grid() const noexcept { return c[0].grid(); }
  ScalarField3D& operator[](int d) { return c[static_cast<std::size_t>(d)]; }
  const ScalarField3D& operator[](int d) const { return c[static_cast<std::size_t>(d)]; }

  double max_abs() const noexcept;

  VectorField3D& operator+=(const VectorField3D& rhs);
  VectorField3D& operator-=(const VectorField3D& rhs);
  VectorField3D& operator*=(double s) noexcept;
};

VectorField3D operator+(VectorField3D a, const VectorField3D& b);
VectorField3D operator-(VectorField3D a, const VectorField3D& b);
VectorField3D operator*(double s, VectorField3D a);
VectorField3D operator-(VectorField3D a);

void require_same_grid(const VectorField3D& a, const VectorField3D& b, const char* where);

struct ComplexVectorField3D {
  VectorField3D re;
  VectorField3D im;

  ComplexVectorField3D() = default;
  explicit ComplexVectorField3D(VectorField3D real_part);
  ComplexVectorField3D(VectorField3D real_part, VectorField3D imag_part);

  const Grid3D& grid() const noexcept { return re.grid(); }
};

// Half-spectrum amplitudes, kx in [0, nx/2], ky and kz signed.
class SpectralCoeffs3D {
 public:
  SpectralCoeffs3D() = default;
  explicit SpectralCoeffs3D(const Grid3D& grid);

  const Grid3D& grid() const noexcept { return grid_; }
  int half_nx() const noexcept { return grid_.nx / 2 + 1; }
  int wavenumber_y(int j) const noexcept { return j <= grid_.ny / 2 ? j : j - grid_.ny; }
  int wavenumber_z(int k) const noexcept { return k <= grid_.nz / 2 ? k : k - grid_.nz; }

  std::complex<double> at(int kx, int ky, int kz) const;
  void set(int kx, int ky, int kz, std::complex<double> value);

  std::complex<double>& raw(int i, int j, int k) { return data_[offset(i, j, k)]; }
  std::complex<double> raw(int i, int j, int k) const { return data_[offset(i, j, k)]; }
  std::vector<std::complex<double>>& data() noexcept { return data_; }
  const std::vector<std::complex<double>>& data() const noexcept { return data_; }

 private:
  std::size_t offset(int i, int j, int k) const noexcept {
    return (static_cast<std::size_t>(k) * grid_.ny + j) * half_nx() + i;
  }
  Grid3D grid_;
  std::vector<std::complex<double>> data_;
};

SpectralCoeffs3D to_spectral(const ScalarField3D& f);
ScalarField3D to_physical(const SpectralCoeffs3D& c);

// Derivative along axis 0 (x), 1 (y) or 2 (z); Nyquist mode dropped.
SpectralCoeffs3D derivative(const SpectralCoeffs3D& c, int axis);
ScalarField3D derivative(const ScalarField3D& f, int axis);
inline ScalarField3D ddx(const ScalarField3D& f) { return derivative(f, 0); }
inline ScalarField3D ddy(const ScalarField3D& f) { return derivative(f, 1); }
inline ScalarField3D ddz(const ScalarField3D& f) { return derivative(f, 2); }

// grad[d] = d f / d x_d.
std::array<ScalarField3D, 3> gradient(const ScalarField3D& f);

// jacobian[i][d] = d v_i / d x_d.
using Jacobian3D = std::array<std::array<ScalarField3D, 3>, 3>;
Jacobian3D jacobian(const VectorField3D& v);

// (a . grad) b evaluated from a precomputed Jacobian of b.
VectorField3D directional(const VectorField3D& a, const Jacobian3D& grad_b);
VectorField3D directional(const VectorField3D& a, const VectorField3D& b);

VectorField3D curl(const VectorField3D& v);
ScalarField3D divergence(const VectorField3D& v);

Norms norms(const ScalarField3D& f);
// Max over components of |v_i| and RMS over all component samples.
Norms norms(const VectorField3D& v);
Norms norms(const ComplexVectorField3D& v);

}  // namespace eulerlax
