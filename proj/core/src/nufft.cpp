#include "nufft.hpp"

#include <cmath>
#include <numbers>

#include "fft.hpp"
#include "mfunc/error.hpp"

namespace mfunc::detail {

namespace {
constexpr int kOversample = 2;
constexpr int kSpread = 14;  // half-width of the spreading stencil in fine-grid cells
}  // namespace

std::vector<std::complex<double>> nufft2d_type1(std::span<const double> x, std::span<const double> y,
                                                std::span<const std::complex<double>> c, int modes) {
  using std::numbers::pi;
  require(x.size() == y.size() && x.size() == c.size(), ErrorKind::Domain, "nufft: size mismatch");
  require(modes >= 2 && modes % 2 == 0, ErrorKind::Domain, "nufft: modes must be even");

  const int mr = kOversample * modes;
  const double hr = 2.0 * pi / mr;
  const double tau = pi * kSpread / (double(modes) * modes * kOversample * (kOversample - 0.5));
  const double inv4tau = 1.0 / (4.0 * tau);

  ComplexFft2d fft(mr, ComplexFft2d::Sign::Backward);
  std::complex<double>* grid = fft.data();
  std::fill_n(grid, std::size_t(mr) * mr, std::complex<double>{0.0, 0.0});

  std::vector<double> wx(2 * kSpread), wy(2 * kSpread);
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double xj = x[j] - 2.0 * pi * std::floor(x[j] / (2.0 * pi));
    const double yj = y[j] - 2.0 * pi * std::floor(y[j] / (2.0 * pi));
    const int mx = static_cast<int>(std::floor(xj / hr)), my = static_cast<int>(std::floor(yj / hr));
    for (int t = 0; t < 2 * kSpread; ++t) {
      const double dx = xj - (mx + t - kSpread + 1) * hr, dy = yj - (my + t - kSpread + 1) * hr;
      wx[t] = std::exp(-dx * dx * inv4tau);
      wy[t] = std::exp(-dy * dy * inv4tau);
    }
    for (int ty = 0; ty < 2 * kSpread; ++ty) {
      int iy = (my + ty - kSpread + 1) % mr;
      if (iy < 0) iy += mr;
      const std::complex<double> cy = c[j] * wy[ty];
      std::complex<double>* row = grid + std::size_t(iy) * mr;
      for (int tx = 0; tx < 2 * kSpread; ++tx) {
        int ix = (mx + tx - kSpread + 1) % mr;
        if (ix < 0) ix += mr;
        row[ix] += cy * wx[tx];
      }
    }
  }
  fft.execute();  // Σ_m f(ξ_m) e^{+i k ξ_m}

  std::vector<double> deconv(modes);
  for (int k = 0; k < modes; ++k) {
    const double kk = k - modes / 2;
    deconv[k] = std::sqrt(pi / tau) * std::exp(kk * kk * tau) / mr;
  }
  std::vector<std::complex<double>> out(std::size_t(modes) * modes);
  for (int l = 0; l < modes; ++l) {
    const int il = ((l - modes / 2) % mr + mr) % mr;
    for (int k = 0; k < modes; ++k) {
      const int ik = ((k - modes / 2) % mr + mr) % mr;
      out[std::size_t(l) * modes + k] = grid[std::size_t(il) * mr + ik] * (deconv[k] * deconv[l]);
    }
  }
  return out;
}

}  // namespace mfunc::detail
