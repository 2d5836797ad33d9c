#pragma once

#include "eulerlax/darboux.hpp"
#include "eulerlax/field2d.hpp"

namespace eulerlax::tools {

// Entire, non-band-limited test fields. Their Fourier coefficients decay
// faster than any power, so residuals built from them shrink spectrally
// with grid size.
struct FieldTriple {
  ScalarField2D a;
  ScalarField2D b;
  ScalarField2D c;
};
FieldTriple analytic_triple(const Grid2D& grid);

// Eigenstate (k = l = 1) with f = 2 + cos(omega), p = omega^2, F = 0.25 omega.
// The amplitude is large enough that f is under-resolved at n = 32.
DarbouxCase analytic_darboux_case(const Grid2D& grid);

}  // namespace eulerlax::tools
