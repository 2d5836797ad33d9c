#pragma once

#include <cstdint>
#include <vector>

#include "eulerlax/field2d.hpp"
#include "eulerlax/field3d.hpp"

namespace eulerlax {

// One real Fourier mode a cos(theta) + b sin(theta) with
// theta = k (2pi x / lx) + l (2pi y / ly).
struct Mode2D {
  int k = 0;
  int l = 0;
  double a = 0.0;
  double b = 0.0;
};

struct Mode3D {
  int k = 0;
  int l = 0;
  int m = 0;
  double a = 0.0;
  double b = 0.0;
};

// Deterministic random mode set with max(|k|,|l|) <= kmax and no mean mode.
// Amplitudes decay like 1/(1 + |k|^2) and are normalized to unit RMS, so
// the continuous field is independent of the grid it is later sampled on.
std::vector<Mode2D> random_modes_2d(std::uint64_t seed, int kmax);
std::vector<Mode3D> random_modes_3d(std::uint64_t seed, int kmax);

// Samples a mode set on a grid via an inverse transform.
ScalarField2D synthesize(const std::vector<Mode2D>& modes, const Grid2D& grid);
ScalarField3D synthesize(const std::vector<Mode3D>& modes, const Grid3D& grid);

// Real zero-mean band-limited field. Throws InvalidArgument unless
// 0 <= kmax <= min(nx, ny) / 3.
ScalarField2D random_bandlimited(std::uint64_t seed, int kmax, const Grid2D& grid);
ScalarField3D random_bandlimited(std::uint64_t seed, int kmax, const Grid3D& grid);
// Three independent components drawn from consecutive sub-seeds.
VectorField3D random_bandlimited_vector(std::uint64_t seed, int kmax, const Grid3D& grid);

}  // namespace eulerlax
