#include "eulerlax/field2d.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "eulerlax/errors.hpp"
#include "eulerlax/norms.hpp"

namespace eulerlax {
namespace {

void check_count(int n, const char* axis) {
  if (n < 8 || n % 2 != 0) {
    throw InvalidArgument(std::string("grid size ") + axis + " = " + std::to_string(n) +
                          " must be even and >= 8");
  }
}

void check_period(double l, const char* axis) {
  if (!(l > 0.0) || !std::isfinite(l)) {
    throw InvalidArgument(std::string("grid period ") + axis + " must be positive");
  }
}

}  // namespace

Grid2D::Grid2D(int nx_, int ny_, double lx_, double ly_) : nx(nx_), ny(ny_), lx(lx_), ly(ly_) {
  validate();
}

void Grid2D::validate() const {
  check_count(nx, "nx");
  check_count(ny, "ny");
  check_period(lx, "lx");
  check_period(ly, "ly");
}

Grid3D::Grid3D(int nx_, int ny_, int nz_, double lx_, double ly_, double lz_)
    : nx(nx_), ny(ny_), nz(nz_), lx(lx_), ly(ly_), lz(lz_) {
  validate();
}

void Grid3D::validate() const {
  check_count(nx, "nx");
  check_count(ny, "ny");
  check_count(nz, "nz");
  check_period(lx, "lx");
  check_period(ly, "ly");
  check_period(lz, "lz");
}

ScalarField2D::ScalarField2D(const Grid2D& grid, double value)
    : grid_(grid), values_(grid.size(), value) {}

ScalarField2D::ScalarField2D(const Grid2D& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw InvalidArgument("sample count " + std::to_string(values_.size()) +
                          " does not match grid size " + std::to_string(grid_.size()));
  }
}

ScalarField2D ScalarField2D::sample(const Grid2D& grid,
                                    const std::function<double(double, double)>& fn) {
  ScalarField2D f(grid);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) f(i, j) = fn(grid.x(i), grid.y(j));
  }
  return f;
}

double ScalarField2D::max_abs() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double ScalarField2D::mean() const noexcept {
  if (values_.empty()) return 0.0;
  return std::accumulate(values_.begin(), values_.end(), 0.0) /
         static_cast<double>(values_.size());
}

bool ScalarField2D::all_finite() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

ScalarField2D ScalarField2D::map(const std::function<double(double)>& fn) const {
  ScalarField2D out(grid_);
  std::transform(values_.begin(), values_.end(), out.values_.begin(), fn);
  return out;
}

ScalarField2D& ScalarField2D::operator+=(const ScalarField2D& rhs) {
  require_same_grid(*this, rhs, "operator+");
  for (std::size_t n = 0; n < values_.size(); ++n) values_[n] += rhs.values_[n];
  return *this;
}

ScalarField2D& ScalarField2D::operator-=(const ScalarField2D& rhs) {
  require_same_grid(*this, rhs, "operator-");
  for (std::size_t n = 0; n < values_.size(); ++n) values_[n] -= rhs.values_[n];
  return *this;
}

ScalarField2D& ScalarField2D::operator*=(const ScalarField2D& rhs) {
  require_same_grid(*this, rhs, "operator*");
  for (std::size_t n = 0; n < values_.size(); ++n) values_[n] *= rhs.values_[n];
  return *this;
}

ScalarField2D& ScalarField2D::operator*=(double s) noexcept {
  for (double& v : values_) v *= s;
  return *this;
}

ScalarField2D& ScalarField2D::operator+=(double s) noexcept {
  for (double& v : values_) v += s;
  return *this;
}

ScalarField2D operator+(ScalarField2D a, const ScalarField2D& b) { return a += b; }
ScalarField2D operator-(ScalarField2D a, const ScalarField2D& b) { return a -= b; }
ScalarField2D operator*(ScalarField2D a, const ScalarField2D& b) { return a *= b; }
ScalarField2D operator*(double s, ScalarField2D a) { return a *= s; }
ScalarField2D operator*(ScalarField2D a, double s) { return a *= s; }
ScalarField2D operator+(ScalarField2D a, double s) { return a += s; }
ScalarField2D operator-(ScalarField2D a) { return a *= -1.0; }

ScalarField2D divide_on(const ScalarField2D& a, const ScalarField2D& b, const Mask2D& mask) {
  require_same_grid(a, b, "divide_on");
  if (!(mask.grid() == a.grid())) throw GridMismatch("divide_on (mask)");
  ScalarField2D out(a.grid());
  for (std::size_t n = 0; n < a.size(); ++n) {
    out[n] = mask.kept(n) ? a[n] / b[n] : 0.0;
  }
  return out;
}

ScalarField2D transpose(const ScalarField2D& f) {
  const Grid2D& g = f.grid();
  if (g.nx != g.ny || g.lx != g.ly) throw InvalidArgument("transpose requires a square grid");
  ScalarField2D out(g);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) out(i, j) = f(j, i);
  }
  return out;
}

void require_same_grid(const ScalarField2D& a, const ScalarField2D& b, const char* where) {
  if (!(a.grid() == b.grid())) throw GridMismatch(where);
}

ComplexField2D::ComplexField2D(ScalarField2D real_part)
    : re(std::move(real_part)), im(re.grid()) {}

ComplexField2D::ComplexField2D(ScalarField2D real_part, ScalarField2D imag_part)
    : re(std::move(real_part)), im(std::move(imag_part)) {
  require_same_grid(re, im, "ComplexField2D");
}

Mask2D::Mask2D(const Grid2D& grid) : grid_(grid), kept_(grid.size(), true) {}

Mask2D::Mask2D(const Grid2D& grid, std::vector<bool> kept, double threshold)
    : grid_(grid), kept_(std::move(kept)), threshold_(threshold) {
  if (kept_.size() != grid_.size()) throw InvalidArgument("mask size does not match grid");
}

Mask2D Mask2D::above(const ScalarField2D& f, double eps_rel) {
  const double threshold = eps_rel * f.max_abs();
  std::vector<bool> kept(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) kept[n] = std::abs(f[n]) > threshold;
  return Mask2D(f.grid(), std::move(kept), threshold);
}

std::size_t Mask2D::kept_count() const noexcept {
  return static_cast<std::size_t>(std::count(kept_.begin(), kept_.end(), true));
}

double Mask2D::kept_fraction() const noexcept {
  if (kept_.empty()) return 0.0;
  return static_cast<double>(kept_count()) / static_cast<double>(kept_.size());
}

Mask2D Mask2D::operator&&(const Mask2D& other) const {
  if (!(grid_ == other.grid_)) throw GridMismatch("Mask2D intersection");
  std::vector<bool> kept(kept_.size());
  for (std::size_t n = 0; n < kept.size(); ++n) kept[n] = kept_[n] && other.kept_[n];
  return Mask2D(grid_, std::move(kept), std::max(threshold_, other.threshold_));
}

ScalarField2D apply_mask(ScalarField2D f, const Mask2D& mask) {
  if (!(mask.grid() == f.grid())) throw GridMismatch("apply_mask");
  for (std::size_t n = 0; n < f.size(); ++n) {
    if (!mask.kept(n)) f[n] = 0.0;
  }
  return f;
}

Norms norms(const ScalarField2D& f, const std::optional<Mask2D>& mask) {
  if (mask && !(mask->grid() == f.grid())) throw GridMismatch("norms");
  Norms out;
  double sumsq = 0.0;
  std::size_t count = 0;
  for (std::size_t n = 0; n < f.size(); ++n) {
    if (mask && !mask->kept(n)) continue;
    const double v = f[n];
    out.linf = std::max(out.linf, std::abs(v));
    sumsq += v * v;
    ++count;
  }
  if (count == 0) throw InvalidArgument("norms over an empty mask");
  out.l2 = std::sqrt(sumsq / static_cast<double>(count));
  return out;
}

Norms norms(const ComplexField2D& f, const std::optional<Mask2D>& mask) {
  if (mask && !(mask->grid() == f.grid())) throw GridMismatch("norms");
  Norms out;
  double sumsq = 0.0;
  std::size_t count = 0;
  for (std::size_t n = 0; n < f.re.size(); ++n) {
    if (mask && !mask->kept(n)) continue;
    const double m2 = f.re[n] * f.re[n] + f.im[n] * f.im[n];
    out.linf = std::max(out.linf, std::sqrt(m2));
    sumsq += m2;
    ++count;
  }
  if (count == 0) throw InvalidArgument("norms over an empty mask");
  out.l2 = std::sqrt(sumsq / static_cast<double>(count));
  return out;
}

}  // namespace eulerlax
