#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vdw/diffset.hpp"
#include "vdw/verify.hpp"

namespace vdw {

/// Knobs shared by the named experiment presets; unset fields take the
/// preset's own default.
struct PresetParams {
    std::optional<Int> m;
    std::optional<Int> n;
    std::optional<Int> k;
    std::optional<Color> r;
    std::optional<int> trials;
    std::optional<int> count;
    std::optional<DiffSetSpec> spec;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::uint64_t node_budget = 2'000'000'000;
    /// Ceiling on colorings enumerated by grid-2x2.
    std::uint64_t enumeration_cap = std::uint64_t{1} << 32;
};

/// {"preset", "passed", ...details}. Heuristic presets always report passed
/// and carry a "label" saying so.
nlohmann::json run_preset(const std::string& name, const PresetParams& p);

const std::vector<std::string>& preset_names();

struct GridSweep {
    std::uint64_t colorings = 0;
    std::uint64_t failures = 0;           // find_mono_grid returned nothing
    std::uint64_t invalid_witnesses = 0;  // returned witness rejected by validate_witness
    std::optional<std::uint64_t> first_failure;   // bit i = color of i+1 minus 1
};

/// Runs find_mono_grid on every 2-coloring of [1, window] with integer 1
/// colored 1 (the swapped half is the same up to renaming, and the grid
/// property ignores color names). Work is split across threads in fixed
/// chunks; the result does not depend on the thread count.
GridSweep sweep_two_colorings(const DiffSetSpec& s, Int window, const std::vector<Int>& dims, unsigned threads);

} // namespace vdw
