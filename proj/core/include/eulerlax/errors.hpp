#pragma once

#include <stdexcept>
#include <string>

namespace eulerlax {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Two operands live on different grids.
class GridMismatch : public Error {
 public:
  explicit GridMismatch(const std::string& where)
      : Error("grid mismatch in " + where) {}
};

// Poisson right-hand side violates the solvability condition on the torus.
class NonZeroMean : public Error {
 public:
  NonZeroMean(double mean, double scale)
      : Error("Poisson right-hand side has nonzero mean " + std::to_string(mean) +
              " (max |rhs| = " + std::to_string(scale) + ")"),
        mean_(mean) {}
  double mean() const noexcept { return mean_; }

 private:
  double mean_;
};

// Too few points survive the singular-denominator mask.
class DegenerateMask : public Error {
 public:
  explicit DegenerateMask(double kept_fraction)
      : Error("degenerate mask: kept fraction " + std::to_string(kept_fraction)),
        kept_fraction_(kept_fraction) {}
  double kept_fraction() const noexcept { return kept_fraction_; }

 private:
  double kept_fraction_;
};

class ConstraintViolated : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace eulerlax
