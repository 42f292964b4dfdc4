#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vdw/coloring.hpp"
#include "vdw/diffset.hpp"
#include "vdw/graph.hpp"
#include "vdw/witness.hpp"

namespace vdw {

/// Lexicographically first (by d, then a) monochromatic k-term AP with d in s
/// lying inside the window.
std::optional<APWitness> find_mono_ap(const WindowColoring& c, const DiffSetSpec& s, Int k);

struct APLength {
    Int length = 0;
    std::optional<APWitness> witness;
};

/// Largest k <= cap for which find_mono_ap succeeds; the witness is
/// find_mono_ap(c, s, k).
APLength max_mono_ap_length(const WindowColoring& c, const DiffSetSpec& s, Int cap);

/// Longest monochromatic S-sequence via longest-path DP on the window DAG.
/// Ties: smallest first element, then smallest successor at each step.
SSeqWitness longest_mono_s_sequence(const WindowColoring& c, const DiffSetSpec& s);

/// First (smallest d, then smallest a) d >= 1 with p(d) != 0 such that
/// a, a + p(d), ..., a + k p(d) are in the window and share a color.
/// `coeffs` must describe a nonzero polynomial with p(0) = 0.
std::optional<PolyWitness> find_poly_progression(const WindowColoring& c, const std::vector<Int>& coeffs, Int k);

/// Integers n in [1, n_max - min(s)] whose every in-window S-successor n + d
/// has another color. Window-relative: larger steps are not inspected.
std::vector<Int> find_dead_ends(const WindowColoring& c, const DiffSetSpec& s);

/// Upward monochromatic path of k vertices, from the same beta table as
/// path_recoloring. Starts at the smallest vertex with beta >= k - 1 and
/// takes the smallest admissible successor each step.
std::optional<PathWitness> find_upward_mono_path(const OrderedGraph& g, const WindowColoring& c, Int k);

struct ContractedSpec {
    DiffSetSpec spec;
    std::optional<std::string> warning;
};

/// { d / n : d in s, n | d, d <= bound } as an Explicit spec.
/// `bound` may be omitted for finite specs. An empty result carries a warning
/// when `expect_nonempty` is set.
ContractedSpec contract_diffset(const DiffSetSpec& s, Int n, std::optional<Int> bound = {}, bool expect_nonempty = false);

} // namespace vdw
