#include "eulerlax/field3d.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "eulerlax/errors.hpp"
#include "fft.hpp"

namespace eulerlax {
namespace {

std::array<int, 3> fft_dims(const Grid3D& g) { return {g.nz, g.ny, g.nx}; }

void require_same_grid(const ScalarField3D& a, const ScalarField3D& b, const char* where) {
  if (!(a.grid() == b.grid())) throw GridMismatch(where);
}

}  // namespace

ScalarField3D::ScalarField3D(const Grid3D& grid, double value)
    : grid_(grid), values_(grid.size(), value) {}

ScalarField3D::ScalarField3D(const Grid3D& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw InvalidArgument("sample count " + std::to_string(values_.size()) +
                          " does not match grid size " + std::to_string(grid_.size()));
  }
}

ScalarField3D ScalarField3D::sample(const Grid3D& grid,
                                    const std::function<double(double, double, double)>& fn) {
  ScalarField3D f(grid);
  for (int k = 0; k < grid.nz; ++k) {
    for (int j = 0; j < grid.ny; ++j) {
      for (int i = 0; i < grid.nx; ++i) f(i, j, k) = fn(grid.x(i), grid.y(j), grid.z(k));
    }
  }
  return f;
}

double ScalarField3D::max_abs() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

bool ScalarField3D::all_finite() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

ScalarField3D& ScalarField3D::operator+=(const ScalarField3D& rhs) {
  require_same_grid(*this, rhs, "ScalarField3D::operator+");
  for (std::size_t n = 0; n < values_.size(); ++n) values_[n] += rhs.values_[n];
  return *this;
}

ScalarField3D& ScalarField3D::operator-=(const ScalarField3D& rhs) {
  require_same_grid(*this, rhs, "ScalarField3D::operator-");
  for (std::size_t n = 0; n < values_.size(); ++n) values_[n] -= rhs.values_[n];
  return *this;
}

ScalarField3D& ScalarField3D::operator*=(double s) noexcept {
  for (double& v : values_) v *= s;
  return *this;
}

ScalarField3D operator+(ScalarField3D a, const ScalarField3D& b) { return a += b; }
ScalarField3D operator-(ScalarField3D a, const ScalarField3D& b) { return a -= b; }
ScalarField3D operator*(double s, ScalarField3D a) { return a *= s; }

VectorField3D::VectorField3D(const Grid3D& grid)
    : c{ScalarField3D(grid), ScalarField3D(grid), ScalarField3D(grid)} {}

VectorField3D::VectorField3D(ScalarField3D x, ScalarField3D y, ScalarField3D z)
    : c{std::move(x), std::move(y), std::move(z)} {
  if (!(c[0].grid() == c[1].grid()) || !(c[0].grid() == c[2].grid())) {
    throw GridMismatch("VectorField3D components");
  }
}

VectorField3D VectorField3D::constant(const Grid3D& grid, std::array<double, 3> value) {
  return VectorField3D(ScalarField3D(grid, value[0]), ScalarField3D(grid, value[1]),
                       ScalarField3D(grid, value[2]));
}

double VectorField3D::max_abs() const noexcept {
  return std::max({c[0].max_abs(), c[1].max_abs(), c[2].max_abs()});
}

VectorField3D& VectorField3D::operator+=(const VectorField3D& rhs) {
  for (int d = 0; d < 3; ++d) (*this)[d] += rhs[d];
  return *this;
}

VectorField3D& VectorField3D::operator-=(const VectorField3D& rhs) {
  for (int d = 0; d < 3; ++d) (*this)[d] -= rhs[d];
  return *this;
}

VectorField3D& VectorField3D::operator*=(double s) noexcept {
  for (auto& comp : c) comp *= s;
  return *this;
}

VectorField3D operator+(VectorField3D a, const VectorField3D& b) { return a += b; }
VectorField3D operator-(VectorField3D a, const VectorField3D& b) { return a -= b; }
VectorField3D operator*(double s, VectorField3D a) { return a *= s; }
VectorField3D operator-(VectorField3D a) { return a *= -1.0; }

void require_same_grid(const VectorField3D& a, const VectorField3D& b, const char* where) {
  if (!(a.grid() == b.grid())) throw GridMismatch(where);
}

ComplexVectorField3D::ComplexVectorField3D(VectorField3D real_part)
    : re(std::move(real_part)), im(re.grid()) {}

ComplexVectorField3D::ComplexVectorField3D(VectorField3D real_part, VectorField3D imag_part)
    : re(std::move(real_part)), im(std::move(imag_part)) {
  require_same_grid(re, im, "ComplexVectorField3D");
}

SpectralCoeffs3D::SpectralCoeffs3D(const Grid3D& grid)
    : grid_(grid),
      data_(static_cast<std::size_t>(grid.nz) * grid.ny * (grid.nx / 2 + 1)) {}

std::complex<double> SpectralCoeffs3D::at(int kx, int ky, int kz) const {
  if (std::abs(kx) > grid_.nx / 2 || std::abs(ky) > grid_.ny / 2 ||
      std::abs(kz) > grid_.nz / 2) {
    return {};
  }
  if (kx < 0) return std::conj(at(-kx, -ky, -kz));
  const int j = (ky % grid_.ny + grid_.ny) % grid_.ny;
  const int k = (kz % grid_.nz + grid_.nz) % grid_.nz;
  return raw(kx, j, k);
}

void SpectralCoeffs3D::set(int kx, int ky, int kz, std::complex<double> value) {
  if (std::abs(kx) > grid_.nx / 2 || std::abs(ky) > grid_.ny / 2 ||
      std::abs(kz) > grid_.nz / 2) {
    throw InvalidArgument("wavenumber outside the resolvable band");
  }
  if (kx < 0) {
    set(-kx, -ky, -kz, std::conj(value));
    return;
  }
  const int j = (ky % grid_.ny + grid_.ny) % grid_.ny;
  const int k = (kz % grid_.nz + grid_.nz) % grid_.nz;
  raw(kx, j, k) = value;
}

SpectralCoeffs3D to_spectral(const ScalarField3D& f) {
  SpectralCoeffs3D c(f.grid());
  const auto dims = fft_dims(f.grid());
  detail::forward_r2c(dims, f.values(), c.data());
  return c;
}

ScalarField3D to_physical(const SpectralCoeffs3D& c) {
  std::vector<double> values;
  const auto dims = fft_dims(c.grid());
  detail::backward_c2r(dims, c.data(), values);
  return ScalarField3D(c.grid(), std::move(values));
}

SpectralCoeffs3D derivative(const SpectralCoeffs3D& c, int axis) {
  if (axis < 0 || axis > 2) throw InvalidArgument("axis must be 0, 1 or 2");
  const Grid3D& g = c.grid();
  const double lengths[3] = {g.lx, g.ly, g.lz};
  const int counts[3] = {g.nx, g.ny, g.nz};
  const double k0 = kTwoPi / lengths[axis];
  SpectralCoeffs3D out(g);
  const int nxh = c.half_nx();
  for (int k = 0; k < g.nz; ++k) {
    for (int j = 0; j < g.ny; ++j) {
      for (int i = 0; i < nxh; ++i) {
        const int index[3] = {i, j, k};
        const int wave[3] = {i, c.wavenumber_y(j), c.wavenumber_z(k)};
        if (2 * index[axis] == counts[axis]) continue;
        out.raw(i, j, k) = c.raw(i, j, k) * std::complex<double>(0.0, k0 * wave[axis]);
      }
    }
  }
  return out;
}

ScalarField3D derivative(const ScalarField3D& f, int axis) {
  return to_physical(derivative(to_spectral(f), axis));
}

std::array<ScalarField3D, 3> gradient(const ScalarField3D& f) {
  const SpectralCoeffs3D c = to_spectral(f);
  return {to_physical(derivative(c, 0)), to_physical(derivative(c, 1)),
          to_physical(derivative(c, 2))};
}

Jacobian3D jacobian(const VectorField3D& v) {
  return {gradient(v[0]), gradient(v[1]), gradient(v[2])};
}

VectorField3D directional(const VectorField3D& a, const Jacobian3D& grad_b) {
  VectorField3D out(a.grid());
  const std::size_t n = a.grid().size();
  for (int i = 0; i < 3; ++i) {
    const auto& row = grad_b[static_cast<std::size_t>(i)];
    if (!(row[0].grid() == a.grid())) throw GridMismatch("directional");
    ScalarField3D& dst = out[i];
    for (std::size_t p = 0; p < n; ++p) {
      dst[p] = a[0][p] * row[0][p] + a[1][p] * row[1][p] + a[2][p] * row[2][p];
    }
  }
  return out;
}

VectorField3D directional(const VectorField3D& a, const VectorField3D& b) {
  require_same_grid(a, b, "directional");
  return directional(a, jacobian(b));
}

VectorField3D curl(const VectorField3D& v) {
  const Jacobian3D J = jacobian(v);
  return VectorField3D(J[2][1] - J[1][2], J[0][2] - J[2][0], J[1][0] - J[0][1]);
}

ScalarField3D divergence(const VectorField3D& v) {
  return derivative(v[0], 0) + derivative(v[1], 1) + derivative(v[2], 2);
}

Norms norms(const ScalarField3D& f) {
  Norms out;
  double sumsq = 0.0;
  for (std::size_t n = 0; n < f.size(); ++n) {
    out.linf = std::max(out.linf, std::abs(f[n]));
    sumsq += f[n] * f[n];
  }
  out.l2 = f.size() ? std::sqrt(sumsq / static_cast<double>(f.size())) : 0.0;
  return out;
}

Norms norms(const VectorField3D& v) {
  Norms out;
  double sumsq = 0.0;
  std::size_t count = 0;
  for (const auto& comp : v.c) {
    for (std::size_t n = 0; n < comp.size(); ++n) {
      out.linf = std::max(out.linf, std::abs(comp[n]));
      sumsq += comp[n] * comp[n];
    }
    count += comp.size();
  }
  out.l2 = count ? std::sqrt(sumsq / static_cast<double>(count)) : 0.0;
  return out;
}

Norms norms(const ComplexVectorField3D& v) {
  Norms out;
  double sumsq = 0.0;
  std::size_t count = 0;
  for (int d = 0; d < 3; ++d) {
    const ScalarField3D& re = v.re[d];
    const ScalarField3D& im = v.im[d];
    for (std::size_t n = 0; n < re.size(); ++n) {
      const double m2 = re[n] * re[n] + im[n] * im[n];
      out.linf = std::max(out.linf, std::sqrt(m2));
      sumsq += m2;
    }
    count += re.size();
  }
  out.l2 = count ? std::sqrt(sumsq / static_cast<double>(count)) : 0.0;
  return out;
}

}  // namespace eulerlax
