#include "mfunc/char_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mfunc/error.hpp"
#include "mfunc/euler.hpp"
#include "mfunc/parallel.hpp"
#include "nufft.hpp"

namespace mfunc {

QuadratureResult curve_char_factor(const CurveMap& curve, Complex z, const QuadratureOptions& opts) {
  auto phase = [&](double theta) {
    const double g = pairing(z, curve(theta));
    return Complex{std::cos(g), std::sin(g)};
  };
  std::size_t m = std::max<std::size_t>(opts.initial_nodes, 1);
  Complex sum{0.0, 0.0};
  for (std::size_t k = 0; k < m; ++k) sum += phase(double(k) / double(m));
  Complex estimate = sum / double(m);
  while (2 * m <= opts.max_nodes) {
    for (std::size_t k = 0; k < m; ++k) sum += phase((double(k) + 0.5) / double(m));
    m *= 2;
    const Complex next = sum / double(m);
    if (std::abs(next - estimate) < opts.tolerance) return {next, m};
    estimate = next;
  }
  throw Error(ErrorKind::Precision, "trapezoid quadrature did not converge within " +
                                        std::to_string(opts.max_nodes) + " nodes at |z| = " +
                                        std::to_string(std::abs(z)));
}

Complex one_prime_char_factor(std::int64_t p, double sigma, Complex z, const QuadratureOptions& opts) {
  require(sigma > 0.0, ErrorKind::Domain, "one_prime_char_factor needs sigma > 0");
  if (z == Complex{0.0, 0.0}) return {1.0, 0.0};
  return curve_char_factor(prime_curve_map(p, sigma), z, opts).value;
}

Complex char_function_P(const PrimeList& primes, double sigma, Complex z, const QuadratureOptions& opts) {
  require(sigma > 0.5, ErrorKind::Domain, "char_function_P needs sigma > 1/2");
  Complex prod{1.0, 0.0};
  for (auto p : primes) prod *= one_prime_char_factor(p, sigma, z, opts);
  return prod;
}

void CharGridSpec::validate() const {
  require(resolution >= 2 && (resolution & (resolution - 1)) == 0, ErrorKind::Geometry,
          "z-grid resolution must be a power of two");
  require(half_width > 0.0 && std::isfinite(half_width), ErrorKind::Geometry,
          "z-grid half_width must be positive");
}

double CharFunctionGrid::max_modulus() const noexcept {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  return m;
}

double log_log_slope(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size() && x.size() >= 2, ErrorKind::Domain, "log_log_slope needs >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = double(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void update_decay_info(CharFunctionGrid& grid, double tail_tolerance) {
  const int n = grid.spec.resolution;
  const double zmax = grid.spec.half_width;
  const int band = std::max(1, n / 32);
  DecayInfo info;
  info.tail_tolerance = tail_tolerance;

  constexpr int kBins = 24;
  const double r_lo = std::max(1.0, zmax / 64.0);
  std::vector<double> envelope(kBins, 0.0);
  for (int l = 0; l < n; ++l)
    for (int k = 0; k < n; ++k) {
      const double m = std::abs(grid.at(k, l));
      const double r = std::abs(grid.spec.node(k, l));
      const int off = std::max(std::abs(k - n / 2), std::abs(l - n / 2));
      if (off >= n / 2 - band) info.edge_max = std::max(info.edge_max, m);
      if (m > tail_tolerance) info.max_radius_above_tolerance = std::max(info.max_radius_above_tolerance, r);
      if (r >= r_lo && r < zmax && zmax > r_lo) {
        const int bin = std::min(kBins - 1, int(kBins * std::log(r / r_lo) / std::log(zmax / r_lo)));
        envelope[bin] = std::max(envelope[bin], m);
      }
    }
  std::vector<double> xs, ys;
  for (int b = 0; b < kBins; ++b) {
    if (envelope[b] <= 1e-300) continue;
    xs.push_back(1.0 + r_lo * std::pow(zmax / r_lo, (b + 0.5) / kBins));
    ys.push_back(envelope[b]);
  }
  info.fitted_exponent = xs.size() >= 2 ? log_log_slope(xs, ys) : 0.0;
  grid.decay = info;
}

CharGridSpec dual_char_grid(const GridSpec& w_grid, int oversample) {
  w_grid.validate();
  require(oversample >= 1 && (oversample & (oversample - 1)) == 0, ErrorKind::Geometry,
          "oversample must be a power of two");
  CharGridSpec s;
  s.resolution = w_grid.resolution * oversample;
  s.half_width = 0.5 * s.resolution * (kPi / w_grid.half_width);
  return s;
}

namespace {

// Trapezoid node count that resolves ψ_z along the curve for every |z| up to the grid corner.
std::size_t nodes_for_grid(const CurveMap& curve, const CharGridSpec& spec, const QuadratureOptions& opts) {
  constexpr int kDirections = 16;
  const double r = spec.half_width * std::sqrt(2.0);
  std::vector<std::size_t> need(kDirections, 0);
  parallel_blocks(kDirections, [&](std::size_t d) {
    const double phi = kTwoPi * (double(d) + 0.5) / kDirections;
    need[d] = curve_char_factor(curve, std::polar(r, phi), opts).nodes;
  });
  return *std::max_element(need.begin(), need.end());
}

}  // namespace

CharFunctionGrid curve_product_grid(std::span<const CurveMap> curves, const CharGridSpec& spec,
                                    const QuadratureOptions& opts) {
  spec.validate();
  CharFunctionGrid out(spec);
  const double dz = spec.spacing();
  for (const auto& curve : curves) {
    const std::size_t m = nodes_for_grid(curve, spec, opts);
    std::vector<double> x(m), y(m);
    std::vector<Complex> c(m, Complex{1.0 / double(m), 0.0});
    for (std::size_t k = 0; k < m; ++k) {
      const Complex w = curve(double(k) / double(m));
      x[k] = dz * w.real();
      y[k] = dz * w.imag();
    }
    const auto f = detail::nufft2d_type1(x, y, c, spec.resolution);
    for (std::size_t i = 0; i < f.size(); ++i) out.values[i] *= f[i];
  }
  update_decay_info(out);
  out.source = "curve-product";
  return out;
}

CharFunctionGrid char_function_grid(const PrimeList& primes, double sigma, const CharGridSpec& spec,
                                    const QuadratureOptions& opts) {
  require(sigma > 0.5, ErrorKind::Domain, "char_function_grid needs sigma > 1/2");
  std::vector<CurveMap> curves;
  for (auto p : primes) curves.push_back(prime_curve_map(p, sigma));
  auto out = curve_product_grid(curves, spec, opts);
  out.source = "euler-product";
  return out;
}

CharFunctionGrid tabulate_char_function(const std::function<Complex(Complex)>& f, const CharGridSpec& spec) {
  spec.validate();
  CharFunctionGrid out(spec);
  const int n = spec.resolution;
  for (int l = 0; l < n; ++l)
    for (int k = 0; k < n; ++k) out.at(k, l) = f(spec.node(k, l));
  update_decay_info(out);
  out.source = "tabulated";
  return out;
}

JwDecayReport jw_decay_report(const PrimeList& primes, double sigma, std::span<const double> radii,
                              int directions) {
  require(sigma > 0.0, ErrorKind::Domain, "jw_decay_report needs sigma > 0");
  require(directions >= 1, ErrorKind::Domain, "jw_decay_report needs directions >= 1");
  require(!radii.empty() && radii.front() > 0.0, ErrorKind::Domain, "radii must be positive");
  for (std::size_t i = 1; i < radii.size(); ++i)
    require(radii[i] > radii[i - 1], ErrorKind::Domain, "radii must be increasing");

  JwDecayReport rep;
  rep.sigma = sigma;
  rep.radii.assign(radii.begin(), radii.end());
  rep.directions = directions;
  const std::size_t np = primes.size(), nr = radii.size();

  // factors[(i * nr + r) * directions + d]
  std::vector<Complex> factors(np * nr * std::size_t(directions));
  parallel_blocks(np * nr, [&](std::size_t job) {
    const std::size_t i = job / nr, r = job % nr;
    const auto curve = prime_curve_map(primes[i], sigma);
    for (int d = 0; d < directions; ++d) {
      const Complex z = std::polar(radii[r], kTwoPi * (d + 0.5) / directions);
      factors[job * directions + d] = curve_char_factor(curve, z).value;
    }
  });

  for (std::size_t i = 0; i < np; ++i) {
    const double scale = std::pow(double(primes[i]), -sigma / 2.0);
    std::vector<double> octave_max;
    int current_octave = std::numeric_limits<int>::min();
    for (std::size_t r = 0; r < nr; ++r) {
      double m = 0.0;
      for (int d = 0; d < directions; ++d) m = std::max(m, std::abs(factors[(i * nr + r) * directions + d]));
      const double ratio = m * scale * std::sqrt(radii[r]);
      rep.rows.push_back({primes[i], radii[r], m, ratio});
      rep.max_ratio = std::max(rep.max_ratio, ratio);
      const int octave = int(std::floor(std::log2(radii[r] / radii.front()) + 1e-9));
      if (octave != current_octave) {
        octave_max.push_back(ratio);
        current_octave = octave;
      } else {
        octave_max.back() = std::max(octave_max.back(), ratio);
      }
    }
    for (std::size_t k = 1; k < octave_max.size(); ++k)
      rep.max_octave_change = std::max(rep.max_octave_change, std::abs(octave_max[k] / octave_max[k - 1] - 1.0));
  }

  rep.product_envelope.assign(nr, 0.0);
  for (std::size_t r = 0; r < nr; ++r)
    for (int d = 0; d < directions; ++d) {
      Complex prod{1.0, 0.0};
      for (std::size_t i = 0; i < np; ++i) prod *= factors[(i * nr + r) * directions + d];
      rep.product_envelope[r] = std::max(rep.product_envelope[r], std::abs(prod));
    }
  bool positive = std::all_of(rep.product_envelope.begin(), rep.product_envelope.end(),
                              [](double v) { return v > 0.0; });
  std::vector<double> shifted(rep.radii.size());
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] = 1.0 + rep.radii[i];
  rep.fitted_exponent = (nr >= 2 && positive) ? log_log_slope(shifted, rep.product_envelope) : 0.0;
  return rep;
}

}  // namespace mfunc
