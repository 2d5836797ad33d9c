#pragma once

#include <optional>

#include "eulerlax/field2d.hpp"

namespace eulerlax {

struct Norms {
  double linf = 0.0;
  double l2 = 0.0;  // root mean square over the counted samples
};

// Max-abs and RMS over kept samples. Throws InvalidArgument for an empty mask
// and GridMismatch if the mask lives on another grid.
Norms norms(const ScalarField2D& f, const std::optional<Mask2D>& mask = std::nullopt);

// Modulus-based norms of a complex field.
Norms norms(const ComplexField2D& f, const std::optional<Mask2D>& mask = std::nullopt);

}  // namespace eulerlax
