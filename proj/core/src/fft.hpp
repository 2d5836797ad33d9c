#pragma once

#include <complex>
#include <span>
#include <vector>

namespace eulerlax::detail {

// Real-to-complex transforms over row-major real arrays whose last dimension
// is the fastest. Forward output is scaled by 1/N so coefficients are
// Fourier amplitudes; backward is unscaled. Plans are cached per shape and
// shared across threads.
void forward_r2c(std::span<const int> dims, std::span<const double> in,
                 std::vector<std::complex<double>>& out);
void backward_c2r(std::span<const int> dims, std::span<const std::complex<double>> in,
                  std::vector<double>& out);

}  // namespace eulerlax::detail
