#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vdw/coloring.hpp"
#include "vdw/diffset.hpp"

namespace vdw {

struct SFreeOptions {
    Int exact_limit = 200;                  // larger windows go straight to greedy
    std::uint64_t node_budget = 50'000'000;
};

/// Largest A in [1, n_max] with (A - A) disjoint from s.
/// Density proxy: the independence number of the distance graph window.
struct SFreeResult {
    std::vector<Int> set;
    bool exact = false;       // false: maximal set from first-fit, a lower bound only
    std::string notice;
    std::uint64_t nodes = 0;
};

SFreeResult max_s_free_subset(const DiffSetSpec& s, Int n_max, const SFreeOptions& opts = {});

struct ChromaticOptions {
    Int exact_limit = 64;
    std::uint64_t node_budget = 50'000'000;
};

struct ChromaticResult {
    Color value = 0;          // exact chromatic number, or an upper bound when !exact
    WindowColoring coloring{1, 1, {1}};  // proper coloring with `value` colors
    bool exact = false;
    std::string notice;
    std::uint64_t nodes = 0;
};

ChromaticResult distance_graph_chromatic_window(const DiffSetSpec& s, Int n_max, const ChromaticOptions& opts = {});

} // namespace vdw
