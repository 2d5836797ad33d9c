#pragma once

#include <complex>
#include <vector>

#include "eulerlax/field2d.hpp"

namespace eulerlax {

// Fourier amplitudes of a real field. Storage is the half spectrum with
// kx in [0, nx/2] and ky in (-ny/2, ny/2]; amplitudes are normalized so that
// f(x, y) = sum_{k,l} c(k,l) exp(i (k 2pi x / lx + l 2pi y / ly)).
class SpectralCoeffs2D {
 public:
  SpectralCoeffs2D() = default;
  explicit SpectralCoeffs2D(const Grid2D& grid);

  const Grid2D& grid() const noexcept { return grid_; }
  int half_nx() const noexcept { return grid_.nx / 2 + 1; }

  // Amplitude for any integer wavenumber pair; negative k resolved by
  // conjugate symmetry. Out-of-band wavenumbers return zero.
  std::complex<double> at(int k, int l) const;
  void set(int k, int l, std::complex<double> value);

  // Row index j of the half spectrum <-> signed wavenumber l.
  int wavenumber_y(int j) const noexcept { return j <= grid_.ny / 2 ? j : j - grid_.ny; }

  std::complex<double>& raw(int i, int j) { return data_[static_cast<std::size_t>(j) * half_nx() + i]; }
  std::complex<double> raw(int i, int j) const { return data_[static_cast<std::size_t>(j) * half_nx() + i]; }
  std::vector<std::complex<double>>& data() noexcept { return data_; }
  const std::vector<std::complex<double>>& data() const noexcept { return data_; }

  // Energy sum_{k,l} |c(k,l)|^2 over the modes with max(|k|,|l|) > kmax.
  double energy_above(int kmax) const;

 private:
  Grid2D grid_;
  std::vector<std::complex<double>> data_;
};

SpectralCoeffs2D to_spectral(const ScalarField2D& f);
ScalarField2D to_physical(const SpectralCoeffs2D& c);

// Spectral-space operators. First derivatives drop the Nyquist mode.
SpectralCoeffs2D ddx(const SpectralCoeffs2D& c);
SpectralCoeffs2D ddy(const SpectralCoeffs2D& c);
SpectralCoeffs2D laplacian(const SpectralCoeffs2D& c);
// Zeroes every mode with 3|k| > nx or 3|l| > ny.
SpectralCoeffs2D dealias(const SpectralCoeffs2D& c);

ScalarField2D ddx(const ScalarField2D& f);
ScalarField2D ddy(const ScalarField2D& f);
ScalarField2D laplacian(const ScalarField2D& f);

// Both first derivatives from one forward transform.
struct Gradient2D {
  ScalarField2D x;
  ScalarField2D y;
};
Gradient2D gradient(const ScalarField2D& f);

// Zero-mean solution of laplacian(psi) = rhs. Throws NonZeroMean if
// |mean(rhs)| > 1e-10 * max|rhs|.
ScalarField2D solve_poisson(const ScalarField2D& rhs);

// {a, b} = a_x b_y - a_y b_x with full-spectrum pointwise products.
ScalarField2D poisson_bracket(const ScalarField2D& a, const ScalarField2D& b);

// {a,{b,c}} + {b,{c,a}} + {c,{a,b}}.
ScalarField2D jacobi_residual(const ScalarField2D& a, const ScalarField2D& b,
                              const ScalarField2D& c);

}  // namespace eulerlax
