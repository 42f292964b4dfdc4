#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vdw/coloring.hpp"
#include "vdw/diffset.hpp"
#include "vdw/graph.hpp"

namespace vdw {

// ---- elementary colorings ---------------------------------------------------

WindowColoring constant_coloring(Int n_max);
/// n -> (n mod q) + 1.
WindowColoring mod_coloring(Int n_max, Int q);
/// Odd integers get color 1, even integers color 2.
WindowColoring parity_coloring(Int n_max);
/// Uniform r-coloring drawn from mt19937_64 seeded with `seed`.
WindowColoring random_coloring(Int n_max, Color r, std::uint64_t seed);

// ---- digit coloring ---------------------------------------------------------

struct DigitColoringParams {
    Int m = 5;
    /// Permit m < 5, outside the range where the AP bound is guaranteed.
    bool allow_small_base = false;
};

/// Number of even positions 2i (i >= 1) of n in base m holding the digit 2, mod 3, plus 1.
Color digit_color(Int n, Int m);

/// Three-coloring under which monochromatic progressions with difference in
/// OddPowerDiffs(m) have at most m^2 + m + 1 terms.
WindowColoring base_m_digit_coloring(const DigitColoringParams& params, Int n_max);

// ---- product constructions --------------------------------------------------

/// Common refinement: colors (a, b) -> (a - 1) * r2 + b.
WindowColoring product_coloring(const WindowColoring& c1, const WindowColoring& c2);

/// Product of c with the residue coloring mod n.
WindowColoring mod_refinement(const WindowColoring& c, Int n);

/// Coloring of block indices 1..floor(n_max / block); block t+1 is colored by the
/// tuple (c(t*block + 1), ..., c(t*block + block)).
///
/// Tuples are numbered lexicographically (r^block colors) when that count fits in
/// a Color; otherwise they are numbered by rank among the tuples that occur and
/// the provenance records "indexing": "compact".
WindowColoring block_coloring(const WindowColoring& c, Int block);

// ---- interval blocking ------------------------------------------------------

struct IntervalPlan {
    std::vector<Int> lengths;   // l_1, ..., l_J
    std::vector<Int> anchors;   // x_1, ..., x_J (1-based indices into S)
    std::vector<Int> starts;    // first integer of each interval
    Int k = 1;

    std::size_t interval_count() const noexcept { return lengths.size(); }
    /// 1-based interval containing x.
    std::size_t interval_of(Int x) const;
};

struct IntervalBlocking {
    WindowColoring coloring;
    IntervalPlan plan;
};

/// (2k+2)-coloring of [1, n_max] in which every monochromatic S-sequence stays
/// inside one interval of the returned plan.
///
/// s_prefix must hold every member of S below n_max followed by at least k more.
/// Throws InsufficientPrefix when an anchor cannot be certified from the prefix.
IntervalBlocking interval_blocking_coloring(std::span<const Int> s_prefix, Int k, Int n_max);

/// Re-checks both plan invariants against the prefix.
bool plan_satisfies_invariants(const IntervalPlan& plan, std::span<const Int> s_prefix);

// ---- tail recoloring --------------------------------------------------------

struct TailRecoloring {
    WindowColoring coloring;
    Int max_length = 0;        // longest monochromatic S-sequence before recoloring
    std::vector<Int> tails;    // integers whose color moved to r + alpha
    bool warning = false;      // no sequence of length >= 2: output equals input up to r
};

/// Shifts by +r the color of every integer that ends a longest monochromatic
/// S-sequence. Sequences are those contained in [1, region] (default: the
/// whole window); integers above region keep their color.
TailRecoloring tail_recoloring(const WindowColoring& c, const DiffSetSpec& s, std::optional<Int> region = {});

// ---- path recoloring --------------------------------------------------------

/// beta(x): number of edges in the longest upward monochromatic path starting
/// at x. Index 0 is unused.
std::vector<Int> upward_path_lengths(const OrderedGraph& g, const WindowColoring& c);

struct PathRecoloring {
    WindowColoring coloring;   // gamma = alpha + r * beta
    std::vector<Int> beta;
    Int k = 0;                 // max beta
};

PathRecoloring path_recoloring(const OrderedGraph& g, const WindowColoring& c);

} // namespace vdw
