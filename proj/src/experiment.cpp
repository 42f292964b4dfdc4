#include "vdw/experiment.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "vdw/colorings.hpp"
#include "vdw/serialize.hpp"

namespace vdw {

std::pair<Int, Int> chain_score(std::span<const Color> colors, const std::vector<Int>& steps)
{
    const auto n = static_cast<Int>(colors.size());
    std::vector<Int> from(colors.size() + 1, 1);
    Int best = 0;
    Int count = 0;
    for (Int x = n; x >= 1; --x) {
        Int len = 1;
        const Color cx = colors[static_cast<std::size_t>(x - 1)];
        for (Int d : steps) {
            if (x + d > n) break;
            if (colors[static_cast<std::size_t>(x + d - 1)] == cx) len = std::max(len, from[static_cast<std::size_t>(x + d)] + 1);
        }
        from[static_cast<std::size_t>(x)] = len;
        if (len > best) {
            best = len;
            count = 1;
        } else if (len == best) {
            ++count;
        }
    }
    return {best, count};
}

namespace {

// one longest chain, smallest start
std::vector<Int> a_longest_chain(std::span<const Color> colors, const std::vector<Int>& steps)
{
    const auto n = static_cast<Int>(colors.size());
    std::vector<Int> from(colors.size() + 2, 1);
    for (Int x = n; x >= 1; --x) {
        for (Int d : steps) {
            if (x + d > n) break;
            if (colors[static_cast<std::size_t>(x + d - 1)] == colors[static_cast<std::size_t>(x - 1)])
                from[static_cast<std::size_t>(x)] = std::max(from[static_cast<std::size_t>(x)], from[static_cast<std::size_t>(x + d)] + 1);
        }
    }
    Int x = 1;
    for (Int y = 1; y <= n; ++y) {
        if (from[static_cast<std::size_t>(y)] > from[static_cast<std::size_t>(x)]) x = y;
    }
    std::vector<Int> chain{x};
    while (from[static_cast<std::size_t>(x)] > 1) {
        for (Int d : steps) {
            const Int y = x + d;
            if (y <= n && colors[static_cast<std::size_t>(y - 1)] == colors[static_cast<std::size_t>(x - 1)] &&
                from[static_cast<std::size_t>(y)] == from[static_cast<std::size_t>(x)] - 1) {
                x = y;
                break;
            }
        }
        chain.push_back(x);
    }
    return chain;
}

} // namespace

WalkOrderReport walk_order_experiment(const WalkOrderConfig& cfg)
{
    if (cfg.trials < 1) throw std::invalid_argument("walk_order_experiment: trials must be >= 1");
    if (cfg.r < 1 || cfg.n_max < 1) throw std::invalid_argument("walk_order_experiment: need r >= 1 and n_max >= 1");
    const auto steps = cfg.spec.members(cfg.n_max - 1);
    WalkOrderReport rep;
    bool have = false;
    auto offer = [&](const std::vector<Color>& colors, Int score, const std::string& source) {
        if (!have || score < rep.best_chain) {
            rep.best = WindowColoring(cfg.n_max, cfg.r, colors,
                                      nlohmann::json{{"constructor", "walk_order_experiment"}, {"source", source}});
            rep.best_chain = score;
            rep.best_source = source;
            have = true;
        }
    };

    for (const auto& [name, c] : cfg.candidates) {
        if (c.n_max() != cfg.n_max) throw std::invalid_argument("walk_order_experiment: candidate '" + name + "' has another window");
        const Int score = chain_score(c.colors(), steps).first;
        rep.candidate_chains.emplace_back(name, score);
        offer(std::vector<Color>(c.colors().begin(), c.colors().end()), score, "candidate:" + name);
    }

    for (int t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(t));
        auto start = random_coloring(cfg.n_max, cfg.r, rng());
        std::vector<Color> colors(start.colors().begin(), start.colors().end());
        auto score = chain_score(colors, steps);
        for (int it = 0; it < cfg.iterations && score.first > 1 && cfg.r > 1; ++it) {
            const auto chain = a_longest_chain(colors, steps);
            const Int x = chain[static_cast<std::size_t>(rng() % chain.size())];
            auto& slot = colors[static_cast<std::size_t>(x - 1)];
            const Color old = slot;
            const Color c = static_cast<Color>(rng() % static_cast<std::uint64_t>(cfg.r - 1)) + 1;
            slot = c >= old ? c + 1 : c;
            const auto next = chain_score(colors, steps);
            // sideways moves allowed so plateaus can be crossed
            if (next <= score) score = next;
            else slot = old;
        }
        rep.trial_chains.push_back(score.first);
        offer(colors, score.first, "trial:" + std::to_string(t));
    }
    return rep;
}

nlohmann::json WalkOrderReport::to_json() const
{
    nlohmann::json cands = nlohmann::json::array();
    for (const auto& [name, score] : candidate_chains) cands.push_back({{"name", name}, {"max_chain", score}});
    return {{"label", label},
            {"best", {{"max_chain", best_chain}, {"source", best_source}, {"coloring", coloring_to_json(best)}}},
            {"trial_max_chains", trial_chains},
            {"candidates", cands}};
}

std::string WalkOrderReport::distribution_csv() const
{
    std::map<Int, int> hist;
    for (Int v : trial_chains) ++hist[v];
    std::ostringstream os;
    os << "max_chain,count\n";
    for (const auto& [v, n] : hist) os << v << ',' << n << '\n';
    return os.str();
}

} // namespace vdw
