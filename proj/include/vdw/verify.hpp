#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "vdw/coloring.hpp"
#include "vdw/diffset.hpp"

namespace vdw {

enum class PropertyKind { Ladder, Accessible, ChromIntersective, GridForced };

/// "Every r-coloring of [1, n_max] contains the structure".
///
///  - Ladder: a monochromatic k-term AP with difference in spec.
///  - Accessible: a monochromatic S-sequence of k terms.
///  - ChromIntersective: some color class with a difference in spec.
///  - GridForced: a monochromatic grid of the given dims with positive steps in spec.
struct WindowProperty {
    PropertyKind kind = PropertyKind::Ladder;
    DiffSetSpec spec = DiffSetSpec::all_naturals();
    Color r = 2;
    Int k = 3;
    std::vector<Int> dims;
    Int n_max = 1;

    static WindowProperty ladder(DiffSetSpec s, Color r, Int k, Int n_max);
    static WindowProperty accessible(DiffSetSpec s, Color r, Int k, Int n_max);
    static WindowProperty chrom_intersective(DiffSetSpec s, Color r, Int n_max);
    static WindowProperty grid_forced(DiffSetSpec s, Color r, std::vector<Int> dims, Int n_max);

    WindowProperty with_window(Int n) const;
    void validate() const;
};

enum class Outcome { Holds, Fails, Unknown };

struct Verdict {
    Outcome outcome = Outcome::Unknown;
    bool holds = false;
    std::optional<WindowColoring> counterexample;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
    /// For Fails: the search module finds no structure in the counterexample.
    bool recheck_passed = false;
    std::string note;
};

struct CheckOptions {
    bool symmetry_breaking = true;
    /// Node ceiling; reaching it yields Outcome::Unknown.
    std::uint64_t node_budget = 2'000'000'000;
    /// Refuse (BudgetExceeded) when log2 of the unpruned leaf count exceeds this.
    double max_log2_leaves = 60.0;
    unsigned threads = 1;
};

/// Exhaustive backtracking over all r-colorings of [1, n_max], integers
/// colored in increasing order, with incremental detection of structures
/// ending at the newest integer.
Verdict check_window_property(const WindowProperty& p, const CheckOptions& opts = {});

/// log2 of the number of leaves the search would visit without pruning.
double log2_leaf_estimate(Int n_max, Color r, bool symmetry_breaking);

/// True when the search module finds no structure of `p` in `c`.
bool recheck_counterexample(const WindowProperty& p, const WindowColoring& c);

nlohmann::json to_json(const WindowProperty& p);
WindowProperty property_from_json(const nlohmann::json& j);
const char* to_string(Outcome o);
const char* to_string(PropertyKind k);

// ---- order decomposition ----------------------------------------------------

struct OrderMap {
    std::vector<Int> set;           // A, sorted
    std::vector<Int> orders;        // orders[i] = order of set[i] in A
    Int k_max = 0;
    std::vector<Int> top;           // B = { x : order = k_max }
    std::vector<Int> rest;          // A \ B
    Int top_internal_max = 0;       // max order computed inside B
    Int rest_internal_max = 0;      // max order computed inside A \ B

    Int order(Int x) const;
    /// B-orders <= 1 and (A \ B)-orders <= k_max - 1.
    bool postconditions_hold() const;
};

/// Longest S-sequence inside A starting at each x in A, plus the split
/// into maximal-order elements and the rest.
OrderMap order_in_set(std::span<const Int> a, const DiffSetSpec& s);

/// Orders only (no decomposition).
std::vector<Int> s_orders(std::span<const Int> a, const DiffSetSpec& s);

// ---- grid window certification ----------------------------------------------

struct GridCertificate {
    bool certified = false;
    /// Per level: smallest block count forcing the level's path.
    std::vector<Int> level_windows;
    std::vector<Color> level_colors;
    Int window = 0;   // product of level_windows
    std::string note;
};

/// Window B for which the block recursion of find_mono_grid must succeed on
/// every r-coloring of [1, B]: each level's threshold is found exhaustively
/// (Accessible property) with the colors and contracted differences of that level.
GridCertificate certify_grid_window(const DiffSetSpec& s, Color r, const std::vector<Int>& dims, Int level_cap,
                                    const CheckOptions& opts = {});

} // namespace vdw
