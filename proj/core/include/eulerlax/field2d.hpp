#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "eulerlax/grid.hpp"

namespace eulerlax {

// Real samples of a periodic scalar field on a Grid2D.
class ScalarField2D {
 public:
  ScalarField2D() = default;
  explicit ScalarField2D(const Grid2D& grid, double value = 0.0);
  ScalarField2D(const Grid2D& grid, std::vector<double> values);

  // Samples fn(x, y) at every grid point.
  static ScalarField2D sample(const Grid2D& grid,
                              const std::function<double(double, double)>& fn);

  const Grid2D& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }

  double& operator()(int i, int j) { return values_[grid_.index(i, j)]; }
  double operator()(int i, int j) const { return values_[grid_.index(i, j)]; }
  double& operator[](std::size_t n) { return values_[n]; }
  double operator[](std::size_t n) const { return values_[n]; }

  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }

  double max_abs() const noexcept;
  double mean() const noexcept;
  bool all_finite() const noexcept;

  // Pointwise map.
  ScalarField2D map(const std::function<double(double)>& fn) const;

  ScalarField2D& operator+=(const ScalarField2D& rhs);
  ScalarField2D& operator-=(const ScalarField2D& rhs);
  ScalarField2D& operator*=(const ScalarField2D& rhs);
  ScalarField2D& operator*=(double s) noexcept;
  ScalarField2D& operator+=(double s) noexcept;

 private:
  Grid2D grid_;
  std::vector<double> values_;
};

ScalarField2D operator+(ScalarField2D a, const ScalarField2D& b);
ScalarField2D operator-(ScalarField2D a, const ScalarField2D& b);
ScalarField2D operator*(ScalarField2D a, const ScalarField2D& b);
ScalarField2D operator*(double s, ScalarField2D a);
ScalarField2D operator*(ScalarField2D a, double s);
ScalarField2D operator+(ScalarField2D a, double s);
ScalarField2D operator-(ScalarField2D a);

// Pointwise quotient a / b. Points where `kept` is false are set to zero.
class Mask2D;
ScalarField2D divide_on(const ScalarField2D& a, const ScalarField2D& b,
                        const Mask2D& mask);

// Field with samples permuted by (x, y) -> (y, x). Requires a square grid.
ScalarField2D transpose(const ScalarField2D& f);

void require_same_grid(const ScalarField2D& a, const ScalarField2D& b,
                       const char* where);

// Pair of real fields for complex-valued samples. Operators in this library
// are real-linear, so they act on re and im independently.
struct ComplexField2D {
  ScalarField2D re;
  ScalarField2D im;

  ComplexField2D() = default;
  explicit ComplexField2D(ScalarField2D real_part);
  ComplexField2D(ScalarField2D real_part, ScalarField2D imag_part);

  const Grid2D& grid() const noexcept { return re.grid(); }
};

// Boolean selection of grid points where singular formulas are evaluated.
class Mask2D {
 public:
  Mask2D() = default;
  // All points kept.
  explicit Mask2D(const Grid2D& grid);
  Mask2D(const Grid2D& grid, std::vector<bool> kept, double threshold);

  // Keeps points where |f| > eps_rel * max|f|.
  static Mask2D above(const ScalarField2D& f, double eps_rel);

  const Grid2D& grid() const noexcept { return grid_; }
  bool kept(std::size_t n) const { return kept_[n]; }
  double threshold() const noexcept { return threshold_; }
  std::size_t kept_count() const noexcept;
  double kept_fraction() const noexcept;
  // Coverage below one half is flagged in reports.
  bool low_coverage() const noexcept { return kept_fraction() < 0.5; }

  Mask2D operator&&(const Mask2D& other) const;

 private:
  Grid2D grid_;
  std::vector<bool> kept_;
  double threshold_ = 0.0;
};

// Sets excluded samples to zero.
ScalarField2D apply_mask(ScalarField2D f, const Mask2D& mask);

}  // namespace eulerlax
