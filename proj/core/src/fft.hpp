#pragma once

// Thin RAII layer over FFTW3 (double precision). Private to the core library.

#include <fftw3.h>

#include <complex>
#include <cstddef>
#include <memory>

namespace mfunc::detail {

struct FftwFree {
  void operator()(void* p) const noexcept { fftw_free(p); }
};

template <class T>
using FftwBuffer = std::unique_ptr<T[], FftwFree>;

template <class T>
FftwBuffer<T> fftw_buffer(std::size_t count) {
  return FftwBuffer<T>(static_cast<T*>(fftw_malloc(sizeof(T) * count)));
}

/// In-place 2D complex DFT of an n×n row-major array.
class ComplexFft2d {
 public:
  enum class Sign { Forward = FFTW_FORWARD, Backward = FFTW_BACKWARD };

  ComplexFft2d(int n, Sign sign);
  ~ComplexFft2d();
  ComplexFft2d(const ComplexFft2d&) = delete;
  ComplexFft2d& operator=(const ComplexFft2d&) = delete;

  std::complex<double>* data() noexcept { return reinterpret_cast<std::complex<double>*>(buf_.get()); }
  int size() const noexcept { return n_; }
  void execute() noexcept { fftw_execute(plan_); }

 private:
  int n_;
  FftwBuffer<fftw_complex> buf_;
  fftw_plan plan_;
};

/// Real n×n input to half-spectrum and back, for linear convolution.
class RealFft2d {
 public:
  explicit RealFft2d(int n);
  ~RealFft2d();
  RealFft2d(const RealFft2d&) = delete;
  RealFft2d& operator=(const RealFft2d&) = delete;

  double* real() noexcept { return real_.get(); }
  std::complex<double>* spectrum() noexcept {
    return reinterpret_cast<std::complex<double>*>(spec_.get());
  }
  std::size_t spectrum_size() const noexcept { return std::size_t(n_) * (n_ / 2 + 1); }
  void forward() noexcept { fftw_execute(fwd_); }
  void backward() noexcept { fftw_execute(bwd_); }

 private:
  int n_;
  FftwBuffer<double> real_;
  FftwBuffer<fftw_complex> spec_;
  fftw_plan fwd_, bwd_;
};

}  // namespace mfunc::detail
