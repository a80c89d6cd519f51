#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mfunc {

/// Ordered set of primes. `limit` is the largest L such that every prime ≤ L is
/// present, so `primes_up_to(L)` yields a list whose limit is exactly L.
struct PrimeList {
  std::int64_t limit = 0;
  std::vector<std::int64_t> primes;

  std::size_t size() const noexcept { return primes.size(); }
  bool empty() const noexcept { return primes.empty(); }
  std::int64_t operator[](std::size_t i) const { return primes[i]; }
  auto begin() const noexcept { return primes.begin(); }
  auto end() const noexcept { return primes.end(); }
  bool contains(std::int64_t p) const;
};

/// Sieve of Eratosthenes. Throws ErrorKind::Domain for limit < 2.
PrimeList primes_up_to(std::int64_t limit);

/// The first `count` primes.
PrimeList first_primes(std::size_t count);

/// Validates an explicit prime set (sorted, deduplicated on return).
PrimeList make_prime_list(std::vector<std::int64_t> primes);

bool is_prime(std::int64_t n) noexcept;

/// Prime factorisation as (prime, exponent) pairs, by trial division.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

}  // namespace mfunc
