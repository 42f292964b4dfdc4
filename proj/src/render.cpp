#include "vdw/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace vdw {

namespace {

constexpr std::array<std::array<unsigned char, 3>, kPaletteSize> kPalette{{
    {230, 25, 75},  {60, 180, 75},  {0, 130, 200},  {255, 225, 25},
    {245, 130, 48}, {145, 30, 180}, {70, 240, 240}, {240, 50, 230},
    {210, 245, 60}, {250, 190, 212}, {0, 128, 128}, {220, 190, 255},
    {170, 110, 40}, {128, 0, 0},    {128, 128, 0},  {0, 0, 128},
}};

void check(const WindowColoring& c, Int cols, Int cell)
{
    if (c.r() > kPaletteSize)
        throw std::invalid_argument("render: r = " + std::to_string(c.r()) + " exceeds the palette limit of " +
                                    std::to_string(kPaletteSize) + " colors");
    if (cols < 1 || cell < 1) throw std::invalid_argument("render: cols and cell size must be >= 1");
}

} // namespace

std::string palette_hex(Color k)
{
    if (k < 1 || k > kPaletteSize) throw std::invalid_argument("palette_hex: color out of range");
    const auto& p = kPalette[static_cast<std::size_t>(k - 1)];
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", p[0], p[1], p[2]);
    return buf;
}

std::string render_svg(const WindowColoring& c, Int cols, Int cell)
{
    check(c, cols, cell);
    const Int rows = (c.n_max() + cols - 1) / cols;
    const Int width = std::min(cols, c.n_max()) * cell;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << rows * cell << "\">\n";
    for (Int n = 1; n <= c.n_max(); ++n) {
        const Int i = n - 1;
        os << "<rect x=\"" << (i % cols) * cell << "\" y=\"" << (i / cols) * cell << "\" width=\"" << cell
           << "\" height=\"" << cell << "\" fill=\"" << palette_hex(c(n)) << "\"><title>" << n << "</title></rect>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_ppm(const WindowColoring& c, Int cols, Int cell)
{
    check(c, cols, cell);
    const Int rows = (c.n_max() + cols - 1) / cols;
    const Int width = std::min(cols, c.n_max()) * cell;
    const Int height = rows * cell;
    std::string out = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    const std::size_t header = out.size();
    out.resize(header + static_cast<std::size_t>(width * height * 3), '\xff');   // unused cells stay white
    for (Int n = 1; n <= c.n_max(); ++n) {
        const Int i = n - 1;
        const auto& p = kPalette[static_cast<std::size_t>(c(n) - 1)];
        for (Int dy = 0; dy < cell; ++dy) {
            for (Int dx = 0; dx < cell; ++dx) {
                const Int px = (i % cols) * cell + dx;
                const Int py = (i / cols) * cell + dy;
                const auto off = header + static_cast<std::size_t>((py * width + px) * 3);
                out[off] = static_cast<char>(p[0]);
                out[off + 1] = static_cast<char>(p[1]);
                out[off + 2] = static_cast<char>(p[2]);
            }
        }
    }
    return out;
}

} // namespace vdw
