#include "fft.hpp"

#include <mutex>

namespace mfunc::detail {

namespace {
// FFTW planning is not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

ComplexFft2d::ComplexFft2d(int n, Sign sign)
    : n_(n), buf_(fftw_buffer<fftw_complex>(std::size_t(n) * n)) {
  std::lock_guard lock(planner_mutex());
  plan_ = fftw_plan_dft_2d(n, n, buf_.get(), buf_.get(), static_cast<int>(sign), FFTW_ESTIMATE);
}

ComplexFft2d::~ComplexFft2d() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan_);
}

RealFft2d::RealFft2d(int n)
    : n_(n),
      real_(fftw_buffer<double>(std::size_t(n) * n)),
      spec_(fftw_buffer<fftw_complex>(std::size_t(n) * (n / 2 + 1))) {
  std::lock_guard lock(planner_mutex());
  fwd_ = fftw_plan_dft_r2c_2d(n, n, real_.get(), spec_.get(), FFTW_ESTIMATE);
  bwd_ = fftw_plan_dft_c2r_2d(n, n, spec_.get(), real_.get(), FFTW_ESTIMATE);
}

RealFft2d::~RealFft2d() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(fwd_);
  fftw_destroy_plan(bwd_);
}

}  // namespace mfunc::detail
