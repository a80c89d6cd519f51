#include "mfunc/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mfunc/error.hpp"
#include "mfunc/rng.hpp"

namespace mfunc {

std::int64_t GridSpec::cell_index(double x, double c, double h, int n) noexcept {
  return static_cast<std::int64_t>(std::floor((x - c) / h + 0.5)) + n / 2;
}

void GridSpec::validate() const {
  require(resolution >= 64 && (resolution & (resolution - 1)) == 0, ErrorKind::Geometry,
          "grid resolution must be a power of two >= 64, got " + std::to_string(resolution));
  require(half_width > 0.0 && std::isfinite(half_width), ErrorKind::Geometry,
          "grid half_width must be positive");
}

bool same_geometry(const GridSpec& a, const GridSpec& b, double rel_tol) noexcept {
  const double scale = std::max(a.half_width, b.half_width);
  return a.resolution == b.resolution && std::abs(a.half_width - b.half_width) <= rel_tol * scale &&
         std::abs(a.center - b.center) <= rel_tol * scale;
}

void RectangleRegion::validate() const {
  require(u_min < u_max && v_min < v_max, ErrorKind::Domain,
          "rectangle needs u_min < u_max and v_min < v_max");
}

RectangleRegion RectangleRegion::whole_plane() noexcept {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return {-inf, inf, -inf, inf};
}

double GridDensity::mass() const noexcept {
  double total = 0.0;
  for (double v : values) total += v;
  return total * spec.cell_measure();
}

double GridDensity::max_value() const noexcept {
  double m = 0.0;
  for (double v : values) m = std::max(m, v);
  return m;
}

double GridDensity::conjugation_asymmetry() const {
  const int n = spec.resolution;
  // node j at offset (j − n/2) h mirrors to n − j; j = 0 has no partner.
  double worst = 0.0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(at(i, j) - at(i, n - j)));
  return worst;
}

namespace {

// Overlap lengths of each cell [x_k − h/2, x_k + h/2] with [lo, hi).
std::vector<double> axis_overlap(double origin, double h, int n, double lo, double hi) {
  std::vector<double> out(n, 0.0);
  for (int k = 0; k < n; ++k) {
    const double x = origin + (k - n / 2) * h;
    const double a = std::max(lo, x - 0.5 * h), b = std::min(hi, x + 0.5 * h);
    out[k] = b > a ? b - a : 0.0;
  }
  return out;
}

}  // namespace

double integrate_rectangle(const GridDensity& density, const RectangleRegion& region) {
  region.validate();
  const auto& s = density.spec;
  const int n = s.resolution;
  const double h = s.spacing();
  const auto wu = axis_overlap(s.center.real(), h, n, region.u_min, region.u_max);
  const auto wv = axis_overlap(s.center.imag(), h, n, region.v_min, region.v_max);
  double total = 0.0;
  for (int j = 0; j < n; ++j) {
    if (wv[j] == 0.0) continue;
    double row = 0.0;
    const double* vals = &density.values[std::size_t(j) * n];
    for (int i = 0; i < n; ++i) row += vals[i] * wu[i];
    total += row * wv[j];
  }
  total /= kTwoPi;
  return std::clamp(total, 0.0, std::max(0.0, density.mass()));
}

double sup_difference(const GridDensity& a, const GridDensity& b) {
  require(same_geometry(a.spec, b.spec), ErrorKind::Geometry, "sup_difference needs identical grids");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.values.size(); ++k)
    worst = std::max(worst, std::abs(a.values[k] - b.values[k]));
  return worst;
}

std::vector<RectangleRegion> random_rectangle_panel(std::size_t count, const RectangleRegion& box,
                                                    std::uint64_t seed) {
  box.validate();
  require(std::isfinite(box.u_min) && std::isfinite(box.u_max) && std::isfinite(box.v_min) &&
              std::isfinite(box.v_max),
          ErrorKind::Domain, "rectangle panel box must be finite");
  const CounterRng rng(seed);
  std::vector<RectangleRegion> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    auto draw = [&](int slot, double lo, double hi) {
      return lo + (hi - lo) * rng.uniform(4 * k + slot);
    };
    double u1 = draw(0, box.u_min, box.u_max), u2 = draw(1, box.u_min, box.u_max);
    double v1 = draw(2, box.v_min, box.v_max), v2 = draw(3, box.v_min, box.v_max);
    if (u1 > u2) std::swap(u1, u2);
    if (v1 > v2) std::swap(v1, v2);
    out.push_back({u1, u2, v1, v2});
  }
  return out;
}

GridDensity point_mass(const GridSpec& spec, Complex w) {
  spec.validate();
  GridDensity d(spec);
  const double h = spec.spacing();
  const auto i = GridSpec::cell_index(w.real(), spec.center.real(), h, spec.resolution);
  const auto j = GridSpec::cell_index(w.imag(), spec.center.imag(), h, spec.resolution);
  require(i >= 0 && j >= 0 && i < spec.resolution && j < spec.resolution, ErrorKind::Coverage,
          "point mass outside the grid");
  d.at(static_cast<int>(i), static_cast<int>(j)) = 1.0 / spec.cell_measure();
  d.method = "point-mass";
  return d;
}

}  // namespace mfunc
