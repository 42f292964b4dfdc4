#include "vdw/coloring.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "vdw/error.hpp"

namespace vdw {

WindowColoring::WindowColoring(Int n_max, Color r, std::vector<Color> colors, nlohmann::json provenance)
    : n_max_(n_max), r_(r), colors_(std::move(colors)), provenance_(std::move(provenance))
{
    if (n_max_ < 1) throw std::invalid_argument("WindowColoring: window must be nonempty");
    if (r_ < 1) throw std::invalid_argument("WindowColoring: need at least one color");
    if (static_cast<Int>(colors_.size()) != n_max_)
        throw std::invalid_argument("WindowColoring: expected " + std::to_string(n_max_) + " colors, got " +
                                    std::to_string(colors_.size()));
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        if (colors_[i] < 1 || colors_[i] > r_)
            throw std::invalid_argument("WindowColoring: color of " + std::to_string(i + 1) + " is " +
                                        std::to_string(colors_[i]) + ", outside [1," + std::to_string(r_) + "]");
    }
}

Color WindowColoring::at(Int n) const
{
    if (!in_window(n)) throw std::out_of_range("WindowColoring: " + std::to_string(n) + " outside window");
    return (*this)(n);
}

WindowColoring WindowColoring::with_provenance(nlohmann::json p) const
{
    WindowColoring out = *this;
    out.provenance_ = std::move(p);
    return out;
}

bool same_partition(const WindowColoring& a, const WindowColoring& b)
{
    if (a.n_max() != b.n_max()) return false;
    std::unordered_map<Color, Color> fwd, back;
    for (Int n = 1; n <= a.n_max(); ++n) {
        auto [f, fnew] = fwd.emplace(a(n), b(n));
        auto [g, gnew] = back.emplace(b(n), a(n));
        if (f->second != b(n) || g->second != a(n)) return false;
    }
    return true;
}

Color used_colors(const WindowColoring& c)
{
    std::vector<char> seen(static_cast<std::size_t>(c.r()) + 1, 0);
    Color count = 0;
    for (Color x : c.colors()) {
        if (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = 1;
            ++count;
        }
    }
    return count;
}

} // namespace vdw
