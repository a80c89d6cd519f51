#pragma once

#include "mfunc/curve.hpp"
#include "mfunc/grid.hpp"

namespace mfunc {

/// (A∗B)(w) = ∫ A(w′) B(w − w′) |dw′| on the node grid. Inputs must share
/// spacing and resolution; the output is centred at c_A + c_B. Computed by a
/// zero-padded FFT, so nothing wraps around; mass that lands outside the
/// output grid above 1e−6 raises ErrorKind::Coverage. FFT round-off negatives
/// are clipped.
GridDensity convolve(const GridDensity& a, const GridDensity& b);

/// A single-prime curve measure binned onto the grid (mass 1).
GridDensity bin_curve(const CurveMeasure& curve, const GridSpec& grid);

/// The two-prime measure: all sums curve_a(θ₁) + curve_b(θ₂) over the product
/// θ-grid, binned onto the grid (mass 1).
GridDensity bin_curve_pair(const CurveMeasure& a, const CurveMeasure& b, const GridSpec& grid);

}  // namespace mfunc
