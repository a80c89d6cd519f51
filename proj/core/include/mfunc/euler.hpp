#pragma once

#include <cstdint>

#include "mfunc/primes.hpp"
#include "mfunc/types.hpp"

namespace mfunc {

/// −Log(1 − p^{−σ} e^{2πiθ}), principal branch. The summand of the torus map
/// S_N; 1-periodic in θ. Throws ErrorKind::Domain for σ ≤ 0.
Complex local_log_term(std::int64_t p, double sigma, double theta);

/// −Log(1 − r e^{iφ}) for 0 ≤ r < 1, accurate for small r.
Complex neg_log_one_minus(double r, double phi) noexcept;

/// f_N(s) = −Σ_{p∈P} Log(1 − p^{−s}), principal branch per term. Requires Re s > 0.
Complex euler_log_partial(Complex s, const PrimeList& primes);

/// max_θ |local_log_term(p,σ,θ)| = −log(1 − p^{−σ}).
double local_log_radius(std::int64_t p, double sigma);

/// Σ_{p∈P} −log(1 − p^{−σ}): every value of the finite Euler log lies in this disc.
double support_radius(const PrimeList& primes, double sigma);

/// Upper bound for Σ_{p>x} p^{−σ} (σ > 1, x ≥ 17), from π(y) < 1.26 y / log y.
double prime_tail_bound(double sigma, double x);

}  // namespace mfunc
