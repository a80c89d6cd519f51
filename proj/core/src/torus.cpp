#include "mfunc/torus.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <vector>

#include "mfunc/error.hpp"
#include "mfunc/parallel.hpp"
#include "mfunc/rng.hpp"

namespace mfunc {

namespace {
constexpr std::uint32_t kLost = std::numeric_limits<std::uint32_t>::max();
constexpr std::size_t kBlocksPerChunk = 64;
}  // namespace

GridDensity torus_histogram(std::span<const CurveMap> curves, std::size_t n_samples,
                            std::uint64_t seed, const GridSpec& grid) {
  grid.validate();
  require(!curves.empty(), ErrorKind::Domain, "torus_histogram needs at least one curve");
  require(n_samples > 0, ErrorKind::Domain, "torus_histogram needs n_samples > 0");

  const CounterRng rng(seed);
  const std::size_t dim = curves.size();
  const int n = grid.resolution;
  const double h = grid.spacing();
  std::vector<std::uint64_t> counts(grid.size(), 0);
  std::uint64_t lost = 0;

  const std::size_t n_blocks = (n_samples + kTorusBlock - 1) / kTorusBlock;
  std::vector<std::uint32_t> cells;
  for (std::size_t chunk = 0; chunk < n_blocks; chunk += kBlocksPerChunk) {
    const std::size_t chunk_blocks = std::min(kBlocksPerChunk, n_blocks - chunk);
    const std::size_t first = chunk * kTorusBlock;
    const std::size_t last = std::min(n_samples, (chunk + chunk_blocks) * kTorusBlock);
    cells.assign(last - first, kLost);
    parallel_blocks(chunk_blocks, [&](std::size_t b) {
      const std::size_t lo = first + b * kTorusBlock, hi = std::min(last, lo + kTorusBlock);
      for (std::size_t k = lo; k < hi; ++k) {
        Complex w{0.0, 0.0};
        for (std::size_t i = 0; i < dim; ++i) w += curves[i](rng.uniform(k * dim + i));
        const auto iu = GridSpec::cell_index(w.real(), grid.center.real(), h, n);
        const auto iv = GridSpec::cell_index(w.imag(), grid.center.imag(), h, n);
        if (iu >= 0 && iu < n && iv >= 0 && iv < n) cells[k - first] = std::uint32_t(iv * n + iu);
      }
    });
    for (auto c : cells) {
      if (c == kLost)
        ++lost;
      else
        ++counts[c];
    }
  }

  if (lost > 0) {
    char msg[160];
    std::snprintf(msg, sizeof msg, "torus_histogram: grid does not contain the support, lost mass %.6g (%llu samples)",
                  double(lost) / double(n_samples), static_cast<unsigned long long>(lost));
    throw Error(ErrorKind::Coverage, msg);
  }

  GridDensity out(grid);
  const double scale = 1.0 / (double(n_samples) * grid.cell_measure());
  for (std::size_t c = 0; c < counts.size(); ++c) out.values[c] = double(counts[c]) * scale;
  out.method = "torus-monte-carlo";
  out.seed = seed;
  out.diagnostics["samples"] = double(n_samples);
  return out;
}

GridDensity torus_histogram(const PrimeList& primes, double sigma, std::size_t n_samples,
                            std::uint64_t seed, const GridSpec& grid) {
  require(primes.size() >= 2, ErrorKind::Domain, "torus_histogram needs |P| >= 2");
  require(sigma > 0.5, ErrorKind::Domain, "torus_histogram needs sigma > 1/2");
  std::vector<CurveMap> curves;
  curves.reserve(primes.size());
  for (auto p : primes) curves.push_back(prime_curve_map(p, sigma));
  return torus_histogram(std::span<const CurveMap>(curves), n_samples, seed, grid);
}

}  // namespace mfunc
