#include "mfunc/mdensity.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "mfunc/convolution.hpp"
#include "mfunc/curve.hpp"
#include "mfunc/error.hpp"
#include "mfunc/euler.hpp"

namespace mfunc {

std::string_view to_string(DensityMethod method) noexcept {
  return method == DensityMethod::FourierInversion ? "fourier-inversion" : "curve-convolution";
}

DensityMethod parse_density_method(std::string_view name) {
  if (name == "fourier-inversion" || name == "fourier") return DensityMethod::FourierInversion;
  if (name == "curve-convolution" || name == "curve") return DensityMethod::CurveConvolution;
  throw Error(ErrorKind::Config, "unknown density method '" + std::string(name) + "'");
}

GridSpec default_density_grid(const PrimeList& primes, double sigma, int resolution) {
  require(!primes.empty(), ErrorKind::Domain, "default_density_grid needs a nonempty prime set");
  GridSpec g;
  g.center = {0.0, 0.0};
  g.half_width = 1.2 * support_radius(primes, sigma);
  g.resolution = resolution;
  g.validate();
  return g;
}

int decay_oversample(std::size_t n_primes, const GridSpec& grid, double decay_target, int cap) {
  const double wanted = std::pow(decay_target, -2.0 / double(n_primes)) - 1.0;
  const double base = 0.5 * grid.resolution * kPi / grid.half_width;
  int k = 1;
  while (k < cap && base * k < wanted) k *= 2;
  return k;
}

namespace {

GridDensity fourier_route(const PrimeList& primes, double sigma, const GridSpec& grid, const DensityOptions& opts) {
  require(primes.size() >= 3, ErrorKind::Method,
          "fourier-inversion needs |P| >= 3 (decay exponent |P|/2 must exceed 1); use curve-convolution");
  const int k = decay_oversample(primes.size(), grid, opts.decay_target, opts.max_oversample);
  const auto cgrid = char_function_grid(primes, sigma, dual_char_grid(grid, k), opts.quadrature);
  auto d = invert_char_function(cgrid, grid, opts.inversion);
  d.diagnostics["z_half_width"] = cgrid.spec.half_width;
  d.diagnostics["decay_exponent_fit"] = cgrid.decay.fitted_exponent;
  return d;
}

// Samples per curve so that neighbouring points are ≤ h/4 apart: |w′| ≤ 2πr/(1−r).
std::size_t curve_samples(std::int64_t p, double sigma, double h) {
  const double r = std::pow(double(p), -sigma);
  const double speed = kTwoPi * r / (1.0 - r);
  const auto n = static_cast<std::size_t>(std::ceil(4.0 * speed / h));
  return std::max<std::size_t>(256, n);
}

GridDensity curve_route(const PrimeList& primes, double sigma, const GridSpec& grid) {
  require(!primes.empty(), ErrorKind::Domain, "curve-convolution needs a nonempty prime set");
  const double h = grid.spacing();
  GridSpec zero = grid;
  zero.center = {0.0, 0.0};
  std::unique_ptr<GridDensity> acc;
  for (std::size_t i = 0; i < primes.size(); i += 2) {
    const GridSpec& g = acc ? zero : grid;
    const auto a = prime_curve_measure(primes[i], sigma, curve_samples(primes[i], sigma, h));
    GridDensity piece = (i + 1 < primes.size())
                            ? bin_curve_pair(a, prime_curve_measure(primes[i + 1], sigma,
                                                                    curve_samples(primes[i + 1], sigma, h)),
                                             g)
                            : bin_curve(a, g);
    if (acc)
      acc = std::make_unique<GridDensity>(convolve(*acc, piece));
    else
      acc = std::make_unique<GridDensity>(std::move(piece));
  }
  acc->method = "curve-convolution";
  acc->diagnostics["mass"] = acc->mass();
  return std::move(*acc);
}

}  // namespace

GridDensity m_sigma_P(const PrimeList& primes, double sigma, const GridSpec& grid, DensityMethod method,
                      const DensityOptions& opts) {
  require(sigma > 0.5, ErrorKind::Domain, "m_sigma_P needs sigma > 1/2");
  grid.validate();
  return method == DensityMethod::FourierInversion ? fourier_route(primes, sigma, grid, opts)
                                                   : curve_route(primes, sigma, grid);
}

GridDensity m_sigma_P(const PrimeList& primes, double sigma, DensityMethod method) {
  require(sigma > 0.5, ErrorKind::Domain, "m_sigma_P needs sigma > 1/2");
  return m_sigma_P(primes, sigma, default_density_grid(primes, sigma), method);
}

}  // namespace mfunc
