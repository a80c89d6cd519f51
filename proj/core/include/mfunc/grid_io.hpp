#pragma once

#include <filesystem>
#include <string>

#include "mfunc/char_function.hpp"
#include "mfunc/grid.hpp"

namespace mfunc {

/// Shortest round-trip decimal form used in every CSV ("%.17g").
std::string format_real(double x);

/// `<base>.csv` with header `u,v,density` (row-major, v outer) plus the
/// `<base>.json` sidecar: center, half_width, resolution, mass, method, seed.
void save_density(const GridDensity& density, const std::filesystem::path& base);
GridDensity load_density(const std::filesystem::path& base);

/// `<base>.csv` with header `a,b,re,im` plus a `<base>.json` sidecar holding
/// the z-grid geometry and decay metadata.
void save_char_function(const CharFunctionGrid& grid, const std::filesystem::path& base);
CharFunctionGrid load_char_function(const std::filesystem::path& base);

}  // namespace mfunc
