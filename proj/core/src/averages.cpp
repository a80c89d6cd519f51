#include "mfunc/averages.hpp"

#include <cmath>

#include "mfunc/characters.hpp"
#include "mfunc/error.hpp"
#include "mfunc/lattice.hpp"
#include "mfunc/parallel.hpp"
#include "mfunc/rng.hpp"

namespace mfunc {

EmpiricalDistribution EmpiricalDistribution::from_line(std::span<const Complex> values,
                                                       std::span<const std::uint8_t> flagged) {
  require(flagged.empty() || flagged.size() == values.size(), ErrorKind::Domain,
          "flag vector does not match the samples");
  EmpiricalDistribution d;
  d.samples.reserve(values.size());
  d.weights.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!flagged.empty() && flagged[k]) {
      ++d.excluded;
      continue;
    }
    d.samples.push_back(values[k]);
    d.weights.push_back((k == 0 || k + 1 == values.size()) ? 0.5 : 1.0);
  }
  return d;
}

EmpiricalDistribution EmpiricalDistribution::from_line(const LogZetaLine& line) {
  return from_line(line.values, line.flagged);
}

double EmpiricalDistribution::total_weight() const noexcept {
  if (weights.empty()) return double(samples.size());
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

void EmpiricalDistribution::validate() const {
  require(!samples.empty(), ErrorKind::Domain, "empirical distribution has no samples");
  require(weights.empty() || weights.size() == samples.size(), ErrorKind::Domain,
          "weights do not match the samples");
  for (double w : weights) require(w >= 0.0, ErrorKind::Domain, "negative sample weight");
  require(total_weight() > 0.0, ErrorKind::Domain, "sample weights sum to zero");
}

double empirical_W(const EmpiricalDistribution& dist, const RectangleRegion& region) {
  dist.validate();
  region.validate();
  double inside = 0.0;
  for (std::size_t k = 0; k < dist.samples.size(); ++k)
    if (region.contains(dist.samples[k])) inside += dist.weights.empty() ? 1.0 : dist.weights[k];
  return inside / dist.total_weight();
}

EmpiricalDistribution sample_log_zeta(double sigma, double T, double step, const LineOptions& options) {
  require(T > 0.0 && step > 0.0, ErrorKind::Domain, "sample_log_zeta needs T > 0 and step > 0");
  return EmpiricalDistribution::from_line(log_zeta_line(sigma, -T, T, step, options));
}

namespace {

constexpr std::size_t kTauBlock = 1 << 16;
constexpr std::size_t kResync = 256;

// −Log(1 − r u) for |u| = 1.
inline Complex neg_log_unit(double r, Complex u) noexcept {
  const double c = u.real(), s = u.imag();
  return {-0.5 * std::log1p(r * r - 2.0 * r * c), -std::atan2(-r * s, 1.0 - r * c)};
}

}  // namespace

std::vector<Complex> chi_tau_average(const PrimeList& primes, double sigma, std::span<const TestFunction> phis,
                                     double T, double step) {
  require(sigma > 0.5, ErrorKind::Domain, "chi_tau_average needs sigma > 1/2");
  require(T > 0.0 && step > 0.0, ErrorKind::Domain, "chi_tau_average needs T > 0 and step > 0");
  const std::size_t np = primes.size(), nf = phis.size();
  const auto intervals = static_cast<std::size_t>(std::llround(2.0 * T / step));
  require(intervals >= 1, ErrorKind::Domain, "chi_tau_average: step exceeds 2T");
  const std::size_t count = intervals + 1;
  const double h = 2.0 * T / double(intervals);

  std::vector<double> r(np), logp(np);
  std::vector<Complex> rot(np);
  for (std::size_t i = 0; i < np; ++i) {
    logp[i] = std::log(double(primes[i]));
    r[i] = std::exp(-sigma * logp[i]);
    rot[i] = std::polar(1.0, -h * logp[i]);
  }

  const std::size_t n_blocks = (count + kTauBlock - 1) / kTauBlock;
  std::vector<Complex> partial(n_blocks * nf, Complex{0.0, 0.0});
  parallel_blocks(n_blocks, [&](std::size_t b) {
    const std::size_t lo = b * kTauBlock, hi = std::min(count, lo + kTauBlock);
    std::vector<Complex> u(np);
    Complex* acc = &partial[b * nf];
    for (std::size_t k = lo; k < hi; ++k) {
      const double tau = -T + double(k) * h;
      if ((k - lo) % kResync == 0)
        for (std::size_t i = 0; i < np; ++i) u[i] = std::polar(1.0, -tau * logp[i]);
      Complex L{0.0, 0.0};
      for (std::size_t i = 0; i < np; ++i) {
        L += neg_log_unit(r[i], u[i]);
        u[i] *= rot[i];
      }
      const double w = (k == 0 || k + 1 == count) ? 0.5 : 1.0;
      for (std::size_t f = 0; f < nf; ++f) acc[f] += w * phis[f](L);
    }
  });

  std::vector<Complex> out(nf, Complex{0.0, 0.0});
  for (std::size_t b = 0; b < n_blocks; ++b)
    for (std::size_t f = 0; f < nf; ++f) out[f] += partial[b * nf + f];
  for (std::size_t f = 0; f < nf; ++f) out[f] /= double(intervals);
  return out;
}

Complex chi_tau_average(const PrimeList& primes, double sigma, const TestFunction& phi, double T, double step) {
  return chi_tau_average(primes, sigma, std::span<const TestFunction>(&phi, 1), T, step)[0];
}

ModulusAverage modulus_average(std::int64_t q, const PrimeList& primes, double sigma, const TestFunction& phi) {
  require(sigma > 0.5, ErrorKind::Domain, "modulus_average needs sigma > 1/2");
  require(q != 2, ErrorKind::Domain, "modulus_average: q = 2 is degenerate (no primitive characters)");
  const auto table = build_character_table(q);
  ModulusAverage out;
  out.q = q;
  out.characters = std::size_t(table.primitive_count());
  if (primes.contains(q)) out.warning = "modulus q = " + std::to_string(q) + " lies in P; its factor is dropped";
  const std::int64_t m = q - 1;
  std::vector<double> r;
  std::vector<std::int64_t> dl;
  for (auto p : primes) {
    if (p % q == 0) continue;
    r.push_back(std::pow(double(p), -sigma));
    dl.push_back(table.dlog[std::size_t(p % q)]);
  }
  Complex sum{0.0, 0.0};
  for (std::int64_t j = 1; j < m; ++j) {
    Complex L{0.0, 0.0};
    for (std::size_t i = 0; i < r.size(); ++i)
      L += neg_log_unit(r[i], std::polar(1.0, kTwoPi * double(j * dl[i] % m) / double(m)));
    sum += phi(L);
  }
  out.value = sum / double(table.primitive_count());
  return out;
}

Complex ihara_outer_average(std::int64_t m, const PrimeList& primes, double sigma, const TestFunction& phi) {
  require(m >= 3, ErrorKind::Domain, "ihara_outer_average needs m >= 3");
  const auto moduli = primes_up_to(m);
  Complex sum{0.0, 0.0};
  std::size_t count = 0;
  for (auto q : moduli) {
    if (q < 3) continue;
    sum += modulus_average(q, primes, sigma, phi).value;
    ++count;
  }
  return sum / double(count);
}

TorusIntegral torus_integral(std::span<const CurveMap> curves, const TestFunction& phi,
                             const TorusIntegralOptions& opts) {
  require(!curves.empty(), ErrorKind::Domain, "torus_integral needs at least one curve");
  require(opts.points >= 1, ErrorKind::Domain, "torus_integral needs points >= 1");
  const std::size_t dim = curves.size(), n = opts.points;
  TorusIntegral out;
  out.points = n;
  const bool lattice_rule = dim <= opts.max_lattice_dimension;
  out.method = lattice_rule ? "korobov-lattice" : "monte-carlo";
  const KorobovLattice lattice = lattice_rule ? korobov_lattice(n, dim) : KorobovLattice{};
  const CounterRng rng(opts.seed);

  constexpr std::size_t kBlock = 1 << 14;
  const std::size_t n_blocks = (n + kBlock - 1) / kBlock;
  std::vector<Complex> partial(n_blocks, Complex{0.0, 0.0});
  parallel_blocks(n_blocks, [&](std::size_t b) {
    const std::size_t lo = b * kBlock, hi = std::min(n, lo + kBlock);
    Complex acc{0.0, 0.0};
    for (std::size_t k = lo; k < hi; ++k) {
      Complex w{0.0, 0.0};
      for (std::size_t i = 0; i < dim; ++i)
        w += curves[i](lattice_rule ? lattice.coordinate(k, i) : rng.uniform(k * dim + i));
      acc += phi(w);
    }
    partial[b] = acc;
  });
  Complex sum{0.0, 0.0};
  for (const auto& v : partial) sum += v;
  out.value = sum / double(n);
  return out;
}

TorusIntegral torus_integral(const PrimeList& primes, double sigma, const TestFunction& phi,
                             const TorusIntegralOptions& opts) {
  require(sigma > 0.0, ErrorKind::Domain, "torus_integral needs sigma > 0");
  std::vector<CurveMap> curves;
  for (auto p : primes) curves.push_back(prime_curve_map(p, sigma));
  return torus_integral(curves, phi, opts);
}

}  // namespace mfunc
