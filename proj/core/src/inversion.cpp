#include "mfunc/inversion.hpp"

#include <cmath>
#include <cstdio>

#include "fft.hpp"
#include "mfunc/error.hpp"

namespace mfunc {

GridDensity invert_char_function(const CharFunctionGrid& c, const GridSpec& w_grid,
                                 const InversionOptions& opts) {
  w_grid.validate();
  c.spec.validate();
  const int n = w_grid.resolution, nz = c.spec.resolution;
  const int k = nz / n;
  const double dz = c.spec.spacing();
  require(nz % n == 0 && k >= 1 && std::abs(dz * w_grid.half_width - kPi) < 1e-9 * kPi,
          ErrorKind::Geometry, "invert_char_function: z-grid is not dual to the w-grid");
  require(c.values.size() == c.spec.size(), ErrorKind::Geometry, "invert_char_function: value count mismatch");

  // Edge band of the z-grid.
  const int band = std::max(1, nz / 32);
  double edge = 0.0;
  for (int l = 0; l < nz; ++l)
    for (int kk = 0; kk < nz; ++kk)
      if (std::max(std::abs(kk - nz / 2), std::abs(l - nz / 2)) >= nz / 2 - band)
        edge = std::max(edge, std::abs(c.at(kk, l)));
  if (!(edge < opts.tail_tolerance)) {
    char msg[200];
    std::snprintf(msg, sizeof msg,
                  "invert_char_function: |char function| reaches %.3g on the edge of the z-grid "
                  "(limit %.3g); enlarge the z-grid or the prime set",
                  edge, opts.tail_tolerance);
    throw Error(ErrorKind::Coverage, msg);
  }

  // D(w0 + j h') = (Δz²/2π) (−1)^{ja+jb} Σ_k C_k e^{−i⟨z_k, w0⟩} e^{−2πi k·j/N_z}
  const Complex w0 = w_grid.center - Complex{w_grid.half_width, w_grid.half_width};
  detail::ComplexFft2d fft(nz, detail::ComplexFft2d::Sign::Forward);
  Complex* buf = fft.data();
  for (int l = 0; l < nz; ++l)
    for (int kk = 0; kk < nz; ++kk) {
      const double g = pairing(c.spec.node(kk, l), w0);
      buf[std::size_t(l) * nz + kk] = c.at(kk, l) * Complex{std::cos(g), -std::sin(g)};
    }
  fft.execute();
  const double pref = dz * dz / kTwoPi;
  auto fine = [&](int ja, int jb) {
    ja = ((ja % nz) + nz) % nz;
    jb = ((jb % nz) + nz) % nz;
    const double sign = ((ja + jb) & 1) ? -1.0 : 1.0;
    return sign * pref * buf[std::size_t(jb) * nz + ja].real();
  };

  GridDensity out(w_grid);
  double negative = 0.0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      double v;
      if (k == 1) {
        v = fine(i, j);
      } else {
        // Trapezoid average over the k+1 fine nodes spanning the coarse cell in each axis.
        double s = 0.0;
        for (int b = -k / 2; b <= k / 2; ++b) {
          const double wb = (std::abs(b) == k / 2) ? 0.5 : 1.0;
          for (int a = -k / 2; a <= k / 2; ++a) {
            const double wa = (std::abs(a) == k / 2) ? 0.5 : 1.0;
            s += wa * wb * fine(k * i + a, k * j + b);
          }
        }
        v = s / (double(k) * k);
      }
      if (v < 0.0) {
        negative -= v;
        v = 0.0;
      }
      out.at(i, j) = v;
    }
  negative *= w_grid.cell_measure();
  out.method = "fourier-inversion";
  out.diagnostics["negative_mass"] = negative;
  out.diagnostics["edge_max"] = edge;
  out.diagnostics["oversample"] = k;
  if (negative > opts.negative_mass_limit) {
    char msg[160];
    std::snprintf(msg, sizeof msg, "invert_char_function: negative mass %.3g exceeds %.3g", negative,
                  opts.negative_mass_limit);
    throw Error(ErrorKind::Precision, msg);
  }
  out.diagnostics["mass"] = out.mass();
  return out;
}

}  // namespace mfunc
