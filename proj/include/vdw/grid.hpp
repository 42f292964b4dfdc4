#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vdw/coloring.hpp"
#include "vdw/diffset.hpp"
#include "vdw/witness.hpp"

namespace vdw {

struct GridSearchResult {
    std::optional<GridWitness> witness;
    /// Block length used at each recursion level of the successful branch.
    std::vector<Int> block_lengths;
    /// Why the search failed (empty contraction, window too small, ...).
    std::string diagnostic;
};

/// Monochromatic grid search by block recursion.
///
/// Level 0 looks for the smallest block length N such that every aligned
/// block of N integers holds a monochromatic upward path of dims[0] vertices
/// in G_D. Blocks are then recolored by their color tuple, D is contracted to
/// { d / N : N | d }, and the remaining dimensions are searched among block
/// indices. Candidate N are tried in increasing order until one recursion
/// succeeds. The searcher keeps its scratch buffers between runs.
class GridSearcher {
public:
    GridSearcher(const DiffSetSpec& s, Int n_max, std::vector<Int> dims);

    GridSearchResult run(const WindowColoring& c);
    /// colors[x - 1] is the color of x; values need only be comparable.
    GridSearchResult run(std::span<const Color> colors);

    Int n_max() const noexcept { return n_max_; }
    const std::vector<Int>& dims() const noexcept { return dims_; }

private:
    struct Level {
        std::vector<std::uint64_t> colors;   // 1-based, index 0 unused
        std::vector<char> steps;             // steps[d]: d allowed at this level
        std::vector<Int> step_list;
        std::vector<Int> from;               // path-length DP scratch
    };

    bool search(std::size_t level, Int m, GridWitness& out, std::vector<Int>& blocks, std::string& diag);
    bool path_in_range(Level& lv, Int lo, Int hi, Int len, std::vector<Int>* path);

    Int n_max_;
    std::vector<Int> dims_;
    std::vector<Level> levels_;
};

GridSearchResult find_mono_grid(const DiffSetSpec& s, const WindowColoring& c, const std::vector<Int>& dims);

/// True when some monochromatic grid of the given dims with positive steps in D
/// has its top corner (all coordinates maximal) at x and lies in [1, x].
/// colors[y] (1-based) must be set for y <= x.
bool grid_with_top_corner(std::span<const Color> colors, const std::vector<char>& steps,
                          const std::vector<Int>& step_list, Int x, const std::vector<Int>& dims,
                          GridWitness* witness = nullptr);

/// Brute-force search over every grid with positive per-axis steps; the
/// independent check used for GridForced counterexamples. Small windows only.
std::optional<GridWitness> find_mono_grid_exhaustive(const DiffSetSpec& s, const WindowColoring& c,
                                                     const std::vector<Int>& dims);

} // namespace vdw
