#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstring>
#include <map>
#include <mutex>
#include <utility>

namespace eulerlax::detail {
namespace {

struct FftwBuffer {
  explicit FftwBuffer(std::size_t bytes) : ptr(fftw_malloc(bytes)) {}
  ~FftwBuffer() { fftw_free(ptr); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  void* ptr;
};

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plans] : plans_) {
      fftw_destroy_plan(plans.forward);
      fftw_destroy_plan(plans.backward);
    }
  }

  // The FFTW planner is not thread-safe; execution of an existing plan on
  // fresh arrays is.
  PlanPair get(const std::vector<int>& dims) {
    std::lock_guard lock(mutex_);
    if (auto it = plans_.find(dims); it != plans_.end()) return it->second;

    const std::size_t nreal = real_size(dims);
    const std::size_t ncomplex = complex_size(dims);
    FftwBuffer real_buf(nreal * sizeof(double));
    FftwBuffer cplx_buf(ncomplex * sizeof(fftw_complex));
    auto* r = static_cast<double*>(real_buf.ptr);
    auto* c = static_cast<fftw_complex*>(cplx_buf.ptr);
    const int rank = static_cast<int>(dims.size());

    PlanPair plans;
    plans.forward = fftw_plan_dft_r2c(rank, dims.data(), r, c, FFTW_ESTIMATE);
    plans.backward = fftw_plan_dft_c2r(rank, dims.data(), c, r, FFTW_ESTIMATE);
    plans_.emplace(dims, plans);
    return plans;
  }

  static std::size_t real_size(const std::vector<int>& dims) {
    std::size_t n = 1;
    for (int d : dims) n *= static_cast<std::size_t>(d);
    return n;
  }
  static std::size_t complex_size(const std::vector<int>& dims) {
    std::size_t n = 1;
    for (std::size_t i = 0; i + 1 < dims.size(); ++i) n *= static_cast<std::size_t>(dims[i]);
    return n * static_cast<std::size_t>(dims.back() / 2 + 1);
  }

 private:
  std::mutex mutex_;
  std::map<std::vector<int>, PlanPair> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

}  // namespace

void forward_r2c(std::span<const int> dims_in, std::span<const double> in,
                 std::vector<std::complex<double>>& out) {
  const std::vector<int> dims(dims_in.begin(), dims_in.end());
  const PlanPair plans = cache().get(dims);
  const std::size_t nreal = PlanCache::real_size(dims);
  const std::size_t ncomplex = PlanCache::complex_size(dims);

  FftwBuffer real_buf(nreal * sizeof(double));
  FftwBuffer cplx_buf(ncomplex * sizeof(fftw_complex));
  auto* r = static_cast<double*>(real_buf.ptr);
  auto* c = static_cast<fftw_complex*>(cplx_buf.ptr);
  std::copy(in.begin(), in.end(), r);
  fftw_execute_dft_r2c(plans.forward, r, c);

  out.resize(ncomplex);
  const double scale = 1.0 / static_cast<double>(nreal);
  for (std::size_t n = 0; n < ncomplex; ++n) {
    out[n] = std::complex<double>(c[n][0] * scale, c[n][1] * scale);
  }
}

void backward_c2r(std::span<const int> dims_in, std::span<const std::complex<double>> in,
                  std::vector<double>& out) {
  const std::vector<int> dims(dims_in.begin(), dims_in.end());
  const PlanPair plans = cache().get(dims);
  const std::size_t nreal = PlanCache::real_size(dims);
  const std::size_t ncomplex = PlanCache::complex_size(dims);

  FftwBuffer real_buf(nreal * sizeof(double));
  FftwBuffer cplx_buf(ncomplex * sizeof(fftw_complex));
  auto* r = static_cast<double*>(real_buf.ptr);
  auto* c = static_cast<fftw_complex*>(cplx_buf.ptr);
  // c2r overwrites its input, so it always runs on a private copy.
  std::memcpy(c, in.data(), ncomplex * sizeof(fftw_complex));
  fftw_execute_dft_c2r(plans.backward, c, r);

  out.assign(r, r + nreal);
}

}  // namespace eulerlax::detail
