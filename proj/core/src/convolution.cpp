#include "mfunc/convolution.hpp"

#include <algorithm>
#include <cstdio>

#include "fft.hpp"
#include "mfunc/error.hpp"

namespace mfunc {

namespace {

constexpr double kWrapTolerance = 1e-6;

[[noreturn]] void lost_mass(const char* what, double lost) {
  char msg[128];
  std::snprintf(msg, sizeof msg, "%s: support leaves the grid, lost mass %.3g", what, lost);
  throw Error(ErrorKind::Coverage, msg);
}

void finish_binned(GridDensity& out, const std::vector<double>& weight, double total, double lost,
                   const char* what) {
  if (lost / total > kWrapTolerance) lost_mass(what, lost / total);
  const double scale = 1.0 / (total * out.spec.cell_measure());
  for (std::size_t c = 0; c < weight.size(); ++c) out.values[c] = weight[c] * scale;
}

}  // namespace

GridDensity convolve(const GridDensity& a, const GridDensity& b) {
  a.spec.validate();
  const int n = a.spec.resolution;
  require(b.spec.resolution == n &&
              std::abs(a.spec.half_width - b.spec.half_width) <= 1e-12 * a.spec.half_width,
          ErrorKind::Geometry, "convolve: grids differ in spacing or resolution");

  const int m = 2 * n;
  detail::RealFft2d fa(m), fb(m);
  std::fill_n(fa.real(), std::size_t(m) * m, 0.0);
  std::fill_n(fb.real(), std::size_t(m) * m, 0.0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      fa.real()[std::size_t(j) * m + i] = a.at(i, j);
      fb.real()[std::size_t(j) * m + i] = b.at(i, j);
    }
  fa.forward();
  fb.forward();
  for (std::size_t k = 0; k < fa.spectrum_size(); ++k) fa.spectrum()[k] *= fb.spectrum()[k];
  fa.backward();

  // Linear index i + j ↦ output index i + j − n/2; FFTW leaves a factor m².
  const double cm = a.spec.cell_measure();
  const double scale = cm / (double(m) * double(m));
  GridSpec spec = a.spec;
  spec.center = a.spec.center + b.spec.center;
  GridDensity out(spec);
  double kept = 0.0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const double v = std::max(0.0, fa.real()[std::size_t(j + n / 2) * m + (i + n / 2)] * scale);
      out.at(i, j) = v;
      kept += v;
    }
  const double expected = a.mass() * b.mass();
  const double lost = expected - kept * cm;
  if (lost > kWrapTolerance * std::max(expected, 1e-300)) lost_mass("convolve", lost);
  out.method = "convolution";
  return out;
}

GridDensity bin_curve(const CurveMeasure& curve, const GridSpec& grid) {
  grid.validate();
  const int n = grid.resolution;
  const double h = grid.spacing();
  std::vector<double> weight(grid.size(), 0.0);
  double lost = 0.0;
  for (const auto& w : curve.points) {
    const auto iu = GridSpec::cell_index(w.real(), grid.center.real(), h, n);
    const auto iv = GridSpec::cell_index(w.imag(), grid.center.imag(), h, n);
    if (iu >= 0 && iu < n && iv >= 0 && iv < n)
      weight[std::size_t(iv) * n + iu] += 1.0;
    else
      lost += 1.0;
  }
  GridDensity out(grid);
  finish_binned(out, weight, double(curve.size()), lost, "bin_curve");
  out.method = "curve-binning";
  return out;
}

GridDensity bin_curve_pair(const CurveMeasure& a, const CurveMeasure& b, const GridSpec& grid) {
  grid.validate();
  const int n = grid.resolution;
  const double h = grid.spacing();
  std::vector<double> weight(grid.size(), 0.0);
  double lost = 0.0;
  for (const auto& wa : a.points)
    for (const auto& wb : b.points) {
      const Complex w = wa + wb;
      const auto iu = GridSpec::cell_index(w.real(), grid.center.real(), h, n);
      const auto iv = GridSpec::cell_index(w.imag(), grid.center.imag(), h, n);
      if (iu >= 0 && iu < n && iv >= 0 && iv < n)
        weight[std::size_t(iv) * n + iu] += 1.0;
      else
        lost += 1.0;
    }
  GridDensity out(grid);
  finish_binned(out, weight, double(a.size()) * double(b.size()), lost, "bin_curve_pair");
  out.method = "curve-binning";
  return out;
}

}  // namespace mfunc
