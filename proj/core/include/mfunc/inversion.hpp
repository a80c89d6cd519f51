#pragma once

#include "mfunc/char_function.hpp"
#include "mfunc/grid.hpp"

namespace mfunc {

struct InversionOptions {
  double tail_tolerance = 1e-6;      // bound on max |𝓜̃| over the outer band of the z-grid
  double negative_mass_limit = 1e-3;
};

/// 𝓜(w) = ∫ 𝓜̃(z) exp(−i⟨z, w⟩) |dz| on the nodes of `w_grid`. The z-grid must
/// be dual to it (dual_char_grid with any power-of-two oversampling); with
/// oversampling the fine result is averaged back onto the w cells. Negative
/// values are clipped and their mass recorded as diagnostics["negative_mass"].
/// Errors: ErrorKind::Geometry for a non-dual z-grid, ErrorKind::Coverage when
/// the tail bound fails, ErrorKind::Precision when the negative mass exceeds the limit.
GridDensity invert_char_function(const CharFunctionGrid& c, const GridSpec& w_grid,
                                 const InversionOptions& opts = {});

}  // namespace mfunc
