#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mfunc {

/// Rank-1 Korobov lattice {k·(1, a, a², …)/n mod 1 : k < n} on the unit torus.
struct KorobovLattice {
  std::size_t n = 0;
  std::vector<std::uint64_t> generator;  // (1, a, a², …) mod n

  std::size_t dimension() const noexcept { return generator.size(); }
  /// Coordinate j of point k, in [0, 1).
  double coordinate(std::size_t k, std::size_t j) const noexcept {
    return double((static_cast<unsigned __int128>(k) * generator[j]) % n) / double(n);
  }
};

/// Worst-case error P₂ of the lattice rule for the Korobov space with α = 2
/// (smaller is better).
double lattice_p2(const KorobovLattice& lattice);

/// Searches multipliers a coprime to n and keeps the one with least P₂.
/// `max_candidates` bounds the search (evenly spread over [2, n/2]).
KorobovLattice korobov_lattice(std::size_t n, std::size_t dimension, std::size_t max_candidates = 64);

}  // namespace mfunc
