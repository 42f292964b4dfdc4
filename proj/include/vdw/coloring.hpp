#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "json.hpp"
#include "vdw/diffset.hpp"

namespace vdw {

using Color = std::int32_t;

/// An assignment of one of r colors (1-based) to every integer in [1, n_max].
///
/// Immutable after construction. `provenance` records the constructor and its
/// parameters for reporting; it never influences any computation.
class WindowColoring {
public:
    WindowColoring(Int n_max, Color r, std::vector<Color> colors, nlohmann::json provenance = {});

    Int n_max() const noexcept { return n_max_; }
    Color r() const noexcept { return r_; }

    /// Color of n; n must lie in [1, n_max].
    Color operator()(Int n) const noexcept { return colors_[static_cast<std::size_t>(n - 1)]; }
    /// Bounds-checked variant of operator().
    Color at(Int n) const;

    bool in_window(Int n) const noexcept { return n >= 1 && n <= n_max_; }
    std::span<const Color> colors() const noexcept { return colors_; }
    const nlohmann::json& provenance() const noexcept { return provenance_; }

    WindowColoring with_provenance(nlohmann::json p) const;

    friend bool operator==(const WindowColoring& a, const WindowColoring& b)
    {
        return a.n_max_ == b.n_max_ && a.r_ == b.r_ && a.colors_ == b.colors_;
    }

private:
    Int n_max_;
    Color r_;
    std::vector<Color> colors_;
    nlohmann::json provenance_;
};

/// True when both colorings induce the same partition of their (common) window.
bool same_partition(const WindowColoring& a, const WindowColoring& b);

/// Number of distinct colors actually used.
Color used_colors(const WindowColoring& c);

} // namespace vdw
