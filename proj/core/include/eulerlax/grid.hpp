#pragma once

#include <cstddef>
#include <numbers>

namespace eulerlax {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Uniform periodic grid on [0,lx) x [0,ly). Samples are row-major with y
// outer and x inner: index = j * nx + i.
struct Grid2D {
  int nx = 64;
  int ny = 64;
  double lx = kTwoPi;
  double ly = kTwoPi;

  Grid2D() = default;
  Grid2D(int nx_, int ny_, double lx_ = kTwoPi, double ly_ = kTwoPi);

  static Grid2D square(int n) { return Grid2D(n, n); }

  std::size_t size() const noexcept { return static_cast<std::size_t>(nx) * ny; }
  double dx() const noexcept { return lx / nx; }
  double dy() const noexcept { return ly / ny; }
  double x(int i) const noexcept { return i * dx(); }
  double y(int j) const noexcept { return j * dy(); }
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(j) * nx + i;
  }

  // Throws InvalidArgument unless nx, ny >= 8, both even, and periods > 0.
  void validate() const;

  friend bool operator==(const Grid2D&, const Grid2D&) = default;
};

// Same conventions as Grid2D with z outermost: index = (k * ny + j) * nx + i.
struct Grid3D {
  int nx = 32;
  int ny = 32;
  int nz = 32;
  double lx = kTwoPi;
  double ly = kTwoPi;
  double lz = kTwoPi;

  Grid3D() = default;
  Grid3D(int nx_, int ny_, int nz_, double lx_ = kTwoPi, double ly_ = kTwoPi,
         double lz_ = kTwoPi);

  static Grid3D cube(int n) { return Grid3D(n, n, n); }

  std::size_t size() const noexcept {
    return static_cast<std::size_t>(nx) * ny * nz;
  }
  double dx() const noexcept { return lx / nx; }
  double dy() const noexcept { return ly / ny; }
  double dz() const noexcept { return lz / nz; }
  double x(int i) const noexcept { return i * dx(); }
  double y(int j) const noexcept { return j * dy(); }
  double z(int k) const noexcept { return k * dz(); }
  std::size_t index(int i, int j, int k) const noexcept {
    return (static_cast<std::size_t>(k) * ny + j) * nx + i;
  }

  void validate() const;

  friend bool operator==(const Grid3D&, const Grid3D&) = default;
};

}  // namespace eulerlax
