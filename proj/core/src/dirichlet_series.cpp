#include "mfunc/dirichlet_series.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "mfunc/error.hpp"
#include "mfunc/euler.hpp"

namespace mfunc {

std::vector<Complex> lambda_prime_power(Complex z, int kmax) {
  const Complex a = Complex{0.0, 1.0} * z / 2.0;
  std::vector<Complex> b(std::size_t(kmax) + 1);
  b[0] = 1.0;
  for (int k = 1; k <= kmax; ++k) b[k] = b[k - 1] * (a + double(k - 1)) / double(k);
  return b;
}

namespace {

int max_exponent(std::int64_t N) {
  int k = 0;
  for (std::int64_t v = 1; v <= N / 2; v *= 2) ++k;
  return k;
}

std::vector<std::int32_t> smallest_prime_factor(std::int64_t N) {
  std::vector<std::int32_t> spf(std::size_t(N) + 1, 0);
  for (std::int64_t i = 2; i <= N; ++i) {
    if (spf[i] != 0) continue;
    for (std::int64_t j = i; j <= N; j += i)
      if (spf[j] == 0) spf[j] = std::int32_t(i);
  }
  return spf;
}

// Multiplicative table from per-exponent values (same for every prime).
template <class T>
std::vector<T> multiplicative_table(std::int64_t N, const std::vector<T>& by_exponent,
                                    const std::vector<std::int32_t>& spf) {
  std::vector<T> f(std::size_t(N) + 1);
  if (N >= 1) f[1] = T(1);
  for (std::int64_t n = 2; n <= N; ++n) {
    const std::int64_t p = spf[n];
    std::int64_t m = n;
    int k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    f[n] = by_exponent[k] * f[m];
  }
  return f;
}

// Σ_k B1_k B2_k x^k with B_k = (c)_k/k! ≥ |λ_z(p^k)|, c = |z|/2.
double local_majorant(double c1, double c2, double x) {
  double s = 1.0, b1 = 1.0, b2 = 1.0, xk = 1.0;
  for (int k = 1; k < 2000; ++k) {
    b1 *= (c1 + k - 1) / k;
    b2 *= (c2 + k - 1) / k;
    xk *= x;
    const double t = b1 * b2 * xk;
    s += t;
    if (t < 1e-18 * s && k > 2) break;
  }
  return s;
}

// Rankin: Σ_{n>N} |a(n)| n^{−2σ} ≤ N^{−δ} ∏_p Σ_k B1_k B2_k p^{−k(2σ−δ)}, minimised over δ.
double tail_bound(double sigma, double c1, double c2, std::int64_t N, const std::optional<PrimeList>& smooth) {
  if (c1 == 0.0 || c2 == 0.0) return 0.0;
  constexpr std::int64_t kExplicit = 10000;
  static const PrimeList explicit_primes = primes_up_to(kExplicit);
  const PrimeList& primes = smooth ? *smooth : explicit_primes;
  double best = std::numeric_limits<double>::infinity();
  const double span = smooth ? 2.0 * sigma : 2.0 * sigma - 1.0;
  for (int step = 1; step < 40; ++step) {
    const double delta = span * step / 40.0;
    const double s = 2.0 * sigma - delta;
    double log_prod = -delta * std::log(double(N));
    for (auto p : primes) log_prod += std::log(local_majorant(c1, c2, std::pow(double(p), -s)));
    if (!smooth) {
      // p > Y: log F_p ≤ p^{−s} Σ_{k≥1} B1_k B2_k Y^{−s(k−1)}
      const double xy = std::pow(double(kExplicit), -s);
      const double k_y = (local_majorant(c1, c2, xy) - 1.0) / xy;
      log_prod += k_y * prime_tail_bound(s, double(kExplicit));
    }
    best = std::min(best, log_prod);
  }
  return std::exp(best);
}

void attach_warning(SeriesResult& r, const SeriesOptions& opts) {
  if (r.tail_bound > opts.tail_tolerance) {
    char msg[160];
    std::snprintf(msg, sizeof msg, "tail bound %.3g exceeds tolerance %.3g; increase N", r.tail_bound,
                  opts.tail_tolerance);
    r.warning = msg;
  }
}

}  // namespace

LambdaTable lambda_coefficients(Complex z, std::int64_t N) {
  require(N >= 1, ErrorKind::Domain, "lambda_coefficients needs N >= 1");
  LambdaTable t;
  t.z = z;
  t.N = N;
  t.coeffs = multiplicative_table(N, lambda_prime_power(z, max_exponent(N)), smallest_prime_factor(N));
  return t;
}

SeriesResult generalized_mtilde(Complex s, Complex z1, Complex z2, std::int64_t N, const SeriesOptions& opts) {
  require(s.real() > 0.5, ErrorKind::Domain, "generalized_mtilde needs Re s > 1/2");
  require(N >= 1, ErrorKind::Domain, "generalized_mtilde needs N >= 1");
  const int kmax = max_exponent(N);
  const auto b1 = lambda_prime_power(z1, kmax), b2 = lambda_prime_power(z2, kmax);
  std::vector<Complex> both(b1.size());
  for (std::size_t k = 0; k < both.size(); ++k) both[k] = b1[k] * b2[k];
  const auto f = multiplicative_table(N, both, smallest_prime_factor(N));
  SeriesResult r;
  for (std::int64_t n = N; n >= 1; --n) r.value += f[n] * std::exp(-2.0 * s * std::log(double(n)));
  r.terms = std::size_t(N);
  r.tail_bound = tail_bound(s.real(), std::abs(z1) / 2.0, std::abs(z2) / 2.0, N, std::nullopt);
  attach_warning(r, opts);
  return r;
}

SeriesResult mtilde_dirichlet(double sigma, Complex z, std::int64_t N, const std::optional<PrimeList>& smooth,
                              const SeriesOptions& opts) {
  require(sigma > 0.5, ErrorKind::Domain, "mtilde_dirichlet needs sigma > 1/2");
  require(N >= 1, ErrorKind::Domain, "mtilde_dirichlet needs N >= 1");
  if (!smooth) return generalized_mtilde(Complex{sigma, 0.0}, z, std::conj(z), N, opts);

  const int kmax = max_exponent(N);
  const auto b1 = lambda_prime_power(z, kmax), b2 = lambda_prime_power(std::conj(z), kmax);
  const auto& P = smooth->primes;
  SeriesResult r;
  // Depth-first over exponent vectors of P-smooth n ≤ N.
  std::function<void(std::size_t, std::int64_t, Complex)> walk = [&](std::size_t i, std::int64_t n, Complex coef) {
    if (i == P.size()) {
      r.value += coef * std::pow(double(n), -2.0 * sigma);
      ++r.terms;
      return;
    }
    std::int64_t m = n;
    for (int k = 0;; ++k) {
      walk(i + 1, m, coef * b1[k] * b2[k]);
      if (m > N / P[i]) break;
      m *= P[i];
    }
  };
  walk(0, 1, Complex{1.0, 0.0});
  r.tail_bound = tail_bound(sigma, std::abs(z) / 2.0, std::abs(z) / 2.0, N, smooth);
  attach_warning(r, opts);
  return r;
}

}  // namespace mfunc
