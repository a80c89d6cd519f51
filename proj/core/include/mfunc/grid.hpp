#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mfunc/types.hpp"

namespace mfunc {

/// Square node grid on the w-plane. Node (i, j) sits at
/// center + ((i − N/2) h, (j − N/2) h) with h = 2·half_width/N; its cell is the
/// h×h square around it. Node N/2 is the center, so sums of node offsets stay
/// on the grid (needed by convolution).
struct GridSpec {
  Complex center{0.0, 0.0};
  double half_width = 1.0;
  int resolution = 512;

  double spacing() const noexcept { return 2.0 * half_width / resolution; }
  double cell_measure() const noexcept { return spacing() * spacing() / kTwoPi; }  // |dw| of one cell
  double node_u(int i) const noexcept { return center.real() + (i - resolution / 2) * spacing(); }
  double node_v(int j) const noexcept { return center.imag() + (j - resolution / 2) * spacing(); }
  Complex node(int i, int j) const noexcept { return {node_u(i), node_v(j)}; }
  /// Index of the cell containing coordinate x along an axis with origin c; may be out of range.
  static std::int64_t cell_index(double x, double c, double h, int n) noexcept;
  std::size_t size() const noexcept { return std::size_t(resolution) * std::size_t(resolution); }
  void validate() const;
};

bool same_geometry(const GridSpec& a, const GridSpec& b, double rel_tol = 1e-12) noexcept;

/// Axis-parallel rectangle [u_min, u_max) × [v_min, v_max); infinite edges allowed.
struct RectangleRegion {
  double u_min, u_max, v_min, v_max;

  void validate() const;
  bool contains(Complex w) const noexcept {
    return w.real() >= u_min && w.real() < u_max && w.imag() >= v_min && w.imag() < v_max;
  }
  static RectangleRegion whole_plane() noexcept;
};

/// Nonnegative density on a GridSpec, integrated against |dw| = (2π)^{−1} du dv.
/// values[j * N + i] is the value at node (i, j) (row j = v index).
struct GridDensity {
  GridSpec spec;
  std::vector<double> values;
  std::string method;
  std::optional<std::uint64_t> seed;
  std::map<std::string, double> diagnostics;

  GridDensity() = default;
  explicit GridDensity(const GridSpec& s) : spec(s), values(s.size(), 0.0) {}

  double& at(int i, int j) { return values[std::size_t(j) * spec.resolution + i]; }
  double at(int i, int j) const { return values[std::size_t(j) * spec.resolution + i]; }

  /// Σ values · h²/(2π).
  double mass() const noexcept;
  /// max |D(u, v) − D(u, −v)| over node pairs mirrored through Im w = Im center.
  double conjugation_asymmetry() const;
  double max_value() const noexcept;
};

/// ∫_R D |dw| with fractional coverage of boundary cells; clipped to [0, mass].
double integrate_rectangle(const GridDensity& density, const RectangleRegion& region);

/// max |A − B| over nodes; grids must share geometry.
double sup_difference(const GridDensity& a, const GridDensity& b);

/// Deterministic panel of random rectangles inside `box` (corners drawn uniformly, then sorted).
std::vector<RectangleRegion> random_rectangle_panel(std::size_t count, const RectangleRegion& box,
                                                    std::uint64_t seed);

/// Unit point mass at w on the node grid (the node whose cell contains w).
GridDensity point_mass(const GridSpec& spec, Complex w);

}  // namespace mfunc
