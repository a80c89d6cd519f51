#include "mfunc/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mfunc/error.hpp"

namespace mfunc {

bool PrimeList::contains(std::int64_t p) const {
  return std::binary_search(primes.begin(), primes.end(), p);
}

PrimeList primes_up_to(std::int64_t limit) {
  require(limit >= 2, ErrorKind::Domain, "primes_up_to needs limit >= 2, got " + std::to_string(limit));
  std::vector<std::uint8_t> composite(static_cast<std::size_t>(limit) + 1, 0);
  PrimeList out;
  out.limit = limit;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.primes.push_back(i);
    for (std::int64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return out;
}

PrimeList first_primes(std::size_t count) {
  require(count >= 1, ErrorKind::Domain, "first_primes needs count >= 1");
  // p_n < n (ln n + ln ln n) for n ≥ 6
  const double n = static_cast<double>(std::max<std::size_t>(count, 6));
  auto list = primes_up_to(static_cast<std::int64_t>(n * (std::log(n) + std::log(std::log(n)))) + 10);
  list.primes.resize(count);
  list.limit = list.primes.back();
  return list;
}

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeList make_prime_list(std::vector<std::int64_t> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (auto p : primes)
    require(is_prime(p), ErrorKind::Domain, std::to_string(p) + " is not prime");
  PrimeList out;
  out.primes = std::move(primes);
  // limit: largest L with every prime ≤ L present
  std::int64_t expected = 2;
  out.limit = 1;
  for (auto p : out.primes) {
    if (p != expected) break;
    out.limit = p;
    expected = p + 1;
    while (!is_prime(expected)) ++expected;
  }
  if (out.limit >= 2) {
    // extend to just below the next missing prime
    out.limit = expected - 1;
  }
  return out;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    int k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    if (k) out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace mfunc
