#include "mfunc/lattice.hpp"

#include <cmath>
#include <numeric>

#include "mfunc/error.hpp"
#include "mfunc/parallel.hpp"

namespace mfunc {

double lattice_p2(const KorobovLattice& lattice) {
  // P₂ = −1 + (1/n) Σ_k ∏_j (1 + 2π² B₂({x_kj})), B₂(x) = x² − x + 1/6
  const double c = 2.0 * M_PI * M_PI;
  double sum = 0.0;
  for (std::size_t k = 0; k < lattice.n; ++k) {
    double prod = 1.0;
    for (std::size_t j = 0; j < lattice.dimension(); ++j) {
      const double x = lattice.coordinate(k, j);
      prod *= 1.0 + c * (x * x - x + 1.0 / 6.0);
    }
    sum += prod;
  }
  return sum / double(lattice.n) - 1.0;
}

KorobovLattice korobov_lattice(std::size_t n, std::size_t dimension, std::size_t max_candidates) {
  require(n >= 2 && dimension >= 1, ErrorKind::Domain, "korobov_lattice needs n >= 2 and dimension >= 1");
  auto make = [&](std::uint64_t a) {
    KorobovLattice l;
    l.n = n;
    l.generator.resize(dimension);
    std::uint64_t g = 1;
    for (std::size_t j = 0; j < dimension; ++j) {
      l.generator[j] = g;
      g = std::uint64_t(static_cast<unsigned __int128>(g) * a % n);
    }
    return l;
  };
  if (dimension == 1 || n < 4) return make(1);

  std::vector<std::uint64_t> candidates;
  const std::size_t hi = n / 2;
  const std::size_t stride = std::max<std::size_t>(1, (hi - 1) / max_candidates);
  for (std::size_t start = 2; start <= hi && candidates.size() < max_candidates; start += stride) {
    std::size_t a = start;
    while (a < start + stride && a <= hi && std::gcd(a, n) != 1) ++a;
    if (a <= hi && std::gcd(a, n) == 1) candidates.push_back(a);
  }
  require(!candidates.empty(), ErrorKind::Domain, "korobov_lattice: no multiplier coprime to n");

  std::vector<double> score(candidates.size());
  parallel_blocks(candidates.size(), [&](std::size_t i) { score[i] = lattice_p2(make(candidates[i])); });
  std::size_t best = 0;
  for (std::size_t i = 1; i < score.size(); ++i)
    if (score[i] < score[best]) best = i;
  return make(candidates[best]);
}

}  // namespace mfunc
