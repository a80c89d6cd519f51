#include "mfunc/euler.hpp"

#include <cmath>
#include <string>

#include "mfunc/error.hpp"

namespace mfunc {

Complex neg_log_one_minus(double r, double phi) noexcept {
  const double c = std::cos(phi), s = std::sin(phi);
  // |1 − x|² = 1 − 2r cos φ + r²
  const double re = -0.5 * std::log1p(r * r - 2.0 * r * c);
  const double im = -std::atan2(-r * s, 1.0 - r * c);
  return {re, im};
}

Complex local_log_term(std::int64_t p, double sigma, double theta) {
  require(sigma > 0.0, ErrorKind::Domain, "local_log_term needs sigma > 0");
  require(p >= 2, ErrorKind::Domain, "local_log_term needs a prime p >= 2");
  const double r = std::pow(static_cast<double>(p), -sigma);
  return neg_log_one_minus(r, kTwoPi * theta);
}

Complex euler_log_partial(Complex s, const PrimeList& primes) {
  require(s.real() > 0.0, ErrorKind::Domain, "euler_log_partial needs Re s > 0");
  Complex sum{0.0, 0.0};
  for (auto p : primes) {
    const double lp = std::log(static_cast<double>(p));
    const double r = std::exp(-s.real() * lp);
    // p^{−s} = r e^{−it log p}
    sum += neg_log_one_minus(r, -s.imag() * lp);
  }
  return sum;
}

double local_log_radius(std::int64_t p, double sigma) {
  require(sigma > 0.0, ErrorKind::Domain, "local_log_radius needs sigma > 0");
  return -std::log1p(-std::pow(static_cast<double>(p), -sigma));
}

double support_radius(const PrimeList& primes, double sigma) {
  double r = 0.0;
  for (auto p : primes) r += local_log_radius(p, sigma);
  return r;
}

double prime_tail_bound(double sigma, double x) {
  require(sigma > 1.0, ErrorKind::Domain, "prime_tail_bound needs sigma > 1");
  require(x >= 17.0, ErrorKind::Domain, "prime_tail_bound needs x >= 17");
  // Σ_{p>x} p^{−σ} ≤ σ ∫_x^∞ π(y) y^{−σ−1} dy ≤ 1.26 σ x^{1−σ} / ((σ−1) log x)
  return 1.26 * sigma * std::pow(x, 1.0 - sigma) / ((sigma - 1.0) * std::log(x));
}

}  // namespace mfunc
