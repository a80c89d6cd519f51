#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into libmfunc.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
inline constexpr double kPi = std::numbers::pi;

/// Primes ≤ n by trial division against the primes found so far.
inline std::vector<std::int64_t> trial_division_primes(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t m = 2; m <= n; ++m) {
    bool prime = true;
    for (auto p : out) {
      if (p * p > m) break;
      if (m % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(m);
  }
  return out;
}

/// ζ(s) through Borwein's accelerated alternating series for η(s) (Re s > 0, s ≠ 1).
inline Complex borwein_zeta(Complex s, int n = 80) {
  std::vector<long double> d(n + 1);
  // d_k ∝ Σ_{i≤k} (n+i−1)! 4^i / ((n−i)!(2i)!); only ratios to d_n matter
  long double term = 1.0L, sum = term;
  d[0] = sum;
  for (int k = 1; k <= n; ++k) {
    term *= 4.0L * (n + k - 1) * (n - k + 1) / ((2.0L * k - 1) * (2.0L * k));
    sum += term;
    d[k] = sum;
  }
  std::complex<long double> eta = 0;
  const std::complex<long double> sl(s.real(), s.imag());
  for (int k = 0; k < n; ++k) {
    const long double sign = (k % 2) ? -1.0L : 1.0L;
    eta += sign * (d[k] - d[n]) * std::exp(-sl * std::log(static_cast<long double>(k + 1)));
  }
  eta /= -d[n];
  const auto factor = 1.0L - std::exp((1.0L - sl) * std::log(2.0L));
  const auto z = eta / factor;
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

/// Riemann–Siegel θ(t) from its asymptotic expansion (good to ~1e−10 for t ≥ 10).
inline double riemann_siegel_theta(double t) {
  return t / 2 * std::log(t / (2 * kPi)) - t / 2 - kPi / 8 + 1 / (48 * t) + 7 / (5760 * t * t * t) +
         31 / (80640 * std::pow(t, 5));
}

/// Hardy's Z(t) = e^{iθ(t)} ζ(1/2 + it), real for real t.
inline double hardy_z(double t) {
  return (std::polar(1.0, riemann_siegel_theta(t)) * borwein_zeta({0.5, t})).real();
}

/// Root of Hardy's Z in [a, b] by bisection.
inline double zero_ordinate(double a, double b) {
  double fa = hardy_z(a);
  for (int it = 0; it < 60; ++it) {
    const double m = 0.5 * (a + b), fm = hardy_z(m);
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

/// Σ_{n ≤ N} n^{−σ} summed from the small end up.
inline double direct_series(double sigma, int N) {
  long double s = 0;
  for (int n = N; n >= 1; --n) s += std::pow(static_cast<long double>(n), -static_cast<long double>(sigma));
  return static_cast<double>(s);
}

/// ∫₀¹ f(θ) dθ by adaptive Gauss–Kronrod on real and imaginary parts separately.
inline Complex adaptive_integral(const std::function<Complex(double)>& f, double tol = 1e-12) {
  using boost::math::quadrature::gauss_kronrod;
  const double re = gauss_kronrod<double, 61>::integrate([&](double x) { return f(x).real(); }, 0.0, 1.0, 12, tol);
  const double im = gauss_kronrod<double, 61>::integrate([&](double x) { return f(x).imag(); }, 0.0, 1.0, 12, tol);
  return {re, im};
}

/// −log(1 − r e^{2πiθ}) from the principal complex logarithm.
inline Complex neg_log_factor(double r, double theta) {
  return -std::log(Complex(1.0, 0.0) - r * std::exp(Complex(0.0, 2 * kPi * theta)));
}

/// Coefficients c_0..c_K of (1 − x)^{−a} = exp(−a log(1 − x)) by power-series exponentiation.
inline std::vector<Complex> binomial_series(Complex a, int K) {
  std::vector<Complex> g(K + 1, 0.0);  // g = −a log(1−x) = a Σ x^k/k
  for (int k = 1; k <= K; ++k) g[k] = a / double(k);
  std::vector<Complex> e(K + 1, 0.0);  // e = exp(g): k e_k = Σ_{j=1}^{k} j g_j e_{k−j}
  e[0] = 1.0;
  for (int k = 1; k <= K; ++k) {
    Complex acc = 0;
    for (int j = 1; j <= k; ++j) acc += double(j) * g[j] * e[k - j];
    e[k] = acc / double(k);
  }
  return e;
}

/// Legendre symbol (a/q) by Euler's criterion.
inline int legendre(std::int64_t a, std::int64_t q) {
  std::int64_t result = 1, base = ((a % q) + q) % q, e = (q - 1) / 2;
  if (base == 0) return 0;
  while (e > 0) {
    if (e & 1) result = result * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

/// Sato–Tate measure (2/π) sin²θ dθ of {θ ∈ [0, π] : |2cos θ| > t}. The set is
/// [0, θ₀) ∪ (π − θ₀, π] with θ₀ = arccos(t/2); composite Simpson on [0, θ₀], doubled.
inline double sato_tate_mass(double t, int n = 20000) {
  if (t <= 0) return 1.0;
  if (t >= 2) return 0.0;
  const double th0 = std::acos(t / 2), h = th0 / n;
  auto f = [](double th) { return 2 / kPi * std::sin(th) * std::sin(th); };
  double s = f(0) + f(th0);
  for (int k = 1; k < n; ++k) s += (k % 2 ? 4 : 2) * f(k * h);
  return 2 * s * h / 3;
}

/// Coefficients of ∏_k (1 − roots[k] x) in ascending order.
inline std::vector<Complex> expand_product(const std::vector<Complex>& roots) {
  std::vector<Complex> c{1.0};
  for (auto r : roots) {
    std::vector<Complex> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] -= r * c[i];
    }
    c.swap(next);
  }
  return c;
}

inline Complex eval_poly(const std::vector<Complex>& c, Complex x) {
  Complex acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace oracle
