#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vdw/coloring.hpp"
#include "vdw/diffset.hpp"

namespace vdw {

/// Adversarial search for r-colorings with short monochromatic S-chains.
/// Heuristic evidence about ord(S) only; nothing here decides it.
struct WalkOrderConfig {
    DiffSetSpec spec = DiffSetSpec::all_naturals();
    Color r = 2;
    Int n_max = 1000;
    int trials = 10;
    std::uint64_t seed = 0;
    int iterations = 500;   // local-search moves per trial
    std::vector<std::pair<std::string, WindowColoring>> candidates;
};

struct WalkOrderReport {
    static constexpr const char* label = "heuristic: adversarial search evidence, not a computation of ord(S)";

    WindowColoring best{1, 1, {1}};
    Int best_chain = 0;
    std::string best_source;
    std::vector<Int> trial_chains;                          // final max chain per random trial
    std::vector<std::pair<std::string, Int>> candidate_chains;

    nlohmann::json to_json() const;
    /// max_chain,count histogram over the random trials.
    std::string distribution_csv() const;
};

WalkOrderReport walk_order_experiment(const WalkOrderConfig& cfg);

/// Longest monochromatic S-chain length (vertices) and how many chains start there.
std::pair<Int, Int> chain_score(std::span<const Color> colors, const std::vector<Int>& steps);

} // namespace vdw
