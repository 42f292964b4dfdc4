#pragma once

#include <string>

#include "vdw/coloring.hpp"

namespace vdw {

inline constexpr Color kPaletteSize = 16;

/// Strip of cells, one per integer, row-major with `cols` cells per row.
/// Output is byte-stable for fixed inputs. Throws std::invalid_argument when
/// r exceeds the palette.
std::string render_svg(const WindowColoring& c, Int cols, Int cell = 12);
/// Binary PPM (P6).
std::string render_ppm(const WindowColoring& c, Int cols, Int cell = 4);

/// Palette entry for color k (1-based) as "#rrggbb".
std::string palette_hex(Color k);

} // namespace vdw
