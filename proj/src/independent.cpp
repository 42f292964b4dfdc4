#include "vdw/independent.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace vdw {

namespace {

class Bits {
public:
    explicit Bits(std::size_t n = 0) : n_(n), w_((n + 63) / 64, 0) {}

    void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { w_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1u; }
    bool any() const
    {
        return std::any_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x != 0; });
    }
    std::size_t first() const
    {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            if (w_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(w_[k]));
        }
        return n_;
    }
    Bits& operator&=(const Bits& o)
    {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

private:
    std::size_t n_;
    std::vector<std::uint64_t> w_;
};

struct BudgetHit {};

/// Vertex i stands for the integer i + 1.
std::vector<Bits> distance_adjacency(const std::vector<Int>& steps, Int n, bool complement)
{
    const auto un = static_cast<std::size_t>(n);
    std::vector<char> in(un, 0);
    for (Int d : steps) in[static_cast<std::size_t>(d)] = 1;
    std::vector<Bits> adj(un, Bits(un));
    for (std::size_t i = 0; i < un; ++i) {
        for (std::size_t j = 0; j < un; ++j) {
            if (i == j) continue;
            const bool edge = in[i > j ? i - j : j - i] != 0;
            if (edge != complement) adj[i].set(j);
        }
    }
    return adj;
}

// max clique in the complement graph (MCQ: greedy coloring bounds)
class CliqueSearch {
public:
    CliqueSearch(const std::vector<Bits>& adj_h, const std::vector<Bits>& adj_g, std::uint64_t budget)
        : h_(adj_h), g_(adj_g), budget_(budget)
    {
    }

    void run(std::size_t n, std::vector<std::size_t> incumbent)
    {
        best_ = std::move(incumbent);
        Bits all(n);
        for (std::size_t i = 0; i < n; ++i) all.set(i);
        expand(all);
    }

    const std::vector<std::size_t>& best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void expand(Bits p)
    {
        if (++nodes_ > budget_) throw BudgetHit{};
        std::vector<std::size_t> order;
        std::vector<std::size_t> bound;
        Bits uncolored = p;
        for (std::size_t k = 1; uncolored.any(); ++k) {
            // a color class here is independent in H, i.e. a clique in G
            Bits q = uncolored;
            while (q.any()) {
                const std::size_t v = q.first();
                q.reset(v);
                q &= g_[v];
                uncolored.reset(v);
                order.push_back(v);
                bound.push_back(k);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (cur_.size() + bound[i] <= best_.size()) return;
            const std::size_t v = order[i];
            cur_.push_back(v);
            Bits np = p & h_[v];
            if (np.any()) {
                expand(np);
            } else if (cur_.size() > best_.size()) {
                best_ = cur_;
            }
            cur_.pop_back();
            p.reset(v);
        }
    }

    const std::vector<Bits>& h_;
    const std::vector<Bits>& g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::size_t> cur_;
    std::vector<std::size_t> best_;
};

std::vector<Int> first_fit_free(const std::vector<Int>& steps, Int n)
{
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (Int d : steps) in[static_cast<std::size_t>(d)] = 1;
    std::vector<Int> chosen;
    for (Int x = 1; x <= n; ++x) {
        bool ok = true;
        for (Int y : chosen) {
            if (in[static_cast<std::size_t>(x - y)]) {
                ok = false;
                break;
            }
        }
        if (ok) chosen.push_back(x);
    }
    return chosen;
}

} // namespace

SFreeResult max_s_free_subset(const DiffSetSpec& s, Int n_max, const SFreeOptions& opts)
{
    if (n_max < 1) throw std::invalid_argument("max_s_free_subset: n_max must be >= 1");
    const auto steps = s.members(n_max - 1);
    SFreeResult res;
    auto greedy = first_fit_free(steps, n_max);
    if (n_max > opts.exact_limit) {
        res.set = std::move(greedy);
        res.notice = "window " + std::to_string(n_max) + " exceeds exact limit " + std::to_string(opts.exact_limit) +
                     "; greedy first-fit result is a lower bound";
        return res;
    }
    const auto h = distance_adjacency(steps, n_max, true);
    const auto g = distance_adjacency(steps, n_max, false);
    std::vector<std::size_t> incumbent;
    for (Int x : greedy) incumbent.push_back(static_cast<std::size_t>(x - 1));
    CliqueSearch cs(h, g, opts.node_budget);
    try {
        cs.run(static_cast<std::size_t>(n_max), incumbent);
        res.exact = true;
    } catch (const BudgetHit&) {
        res.notice = "node budget of " + std::to_string(opts.node_budget) +
                     " exhausted in exact mode; downgraded to best set found, a lower bound";
    }
    res.nodes = cs.nodes();
    for (std::size_t v : cs.best()) res.set.push_back(static_cast<Int>(v) + 1);
    std::sort(res.set.begin(), res.set.end());
    return res;
}

namespace {

class Dsatur {
public:
    Dsatur(const std::vector<std::vector<std::size_t>>& nbrs, std::uint64_t budget)
        : nbrs_(nbrs), n_(nbrs.size()), budget_(budget), color_(n_, 0),
          cnt_(n_, std::vector<int>(n_ + 2, 0)), sat_(n_, 0)
    {
    }

    /// Plain DSATUR: a proper coloring, an upper bound.
    std::vector<Color> greedy()
    {
        for (std::size_t step = 0; step < n_; ++step) {
            const std::size_t v = pick();
            Color c = 1;
            while (cnt_[v][static_cast<std::size_t>(c)] > 0) ++c;
            assign(v, c);
        }
        std::vector<Color> out = color_;
        for (std::size_t v = 0; v < n_; ++v) unassign(v);
        return out;
    }

    /// Searches for colorings with fewer than `best` colors; stops early at `lower`.
    void exact(std::vector<Color> start, Color lower)
    {
        best_colors_ = std::move(start);
        best_ = *std::max_element(best_colors_.begin(), best_colors_.end());
        lower_ = lower;
        if (best_ > lower_) dfs(0, 0);
    }

    Color best() const { return best_; }
    const std::vector<Color>& best_colors() const { return best_colors_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    std::size_t pick() const
    {
        std::size_t best = n_;
        for (std::size_t v = 0; v < n_; ++v) {
            if (color_[v] != 0) continue;
            if (best == n_ || sat_[v] > sat_[best] || (sat_[v] == sat_[best] && nbrs_[v].size() > nbrs_[best].size())) best = v;
        }
        return best;
    }

    void assign(std::size_t v, Color c)
    {
        color_[v] = c;
        for (std::size_t u : nbrs_[v]) {
            if (cnt_[u][static_cast<std::size_t>(c)]++ == 0) ++sat_[u];
        }
    }

    void unassign(std::size_t v)
    {
        const Color c = color_[v];
        color_[v] = 0;
        for (std::size_t u : nbrs_[v]) {
            if (--cnt_[u][static_cast<std::size_t>(c)] == 0) --sat_[u];
        }
    }

    void dfs(std::size_t colored, Color used)
    {
        if (++nodes_ > budget_) throw BudgetHit{};
        if (colored == n_) {
            best_ = used;
            best_colors_ = color_;
            return;
        }
        const std::size_t v = pick();
        const Color limit = std::min<Color>(used + 1, best_ - 1);
        for (Color c = 1; c <= limit && best_ > lower_; ++c) {
            if (cnt_[v][static_cast<std::size_t>(c)] > 0) continue;
            assign(v, c);
            dfs(colored + 1, std::max(used, c));
            unassign(v);
        }
    }

    const std::vector<std::vector<std::size_t>>& nbrs_;
    std::size_t n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<Color> color_;
    std::vector<std::vector<int>> cnt_;
    std::vector<int> sat_;
    Color best_ = 0;
    Color lower_ = 1;
    std::vector<Color> best_colors_;
};

// greedy clique, grown from every start vertex
Color clique_lower_bound(const std::vector<std::vector<std::size_t>>& nbrs)
{
    const std::size_t n = nbrs.size();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u : nbrs[v]) adj[v][u] = 1;
    }
    std::size_t best = n > 0 ? 1 : 0;
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> clique{s};
        for (std::size_t u : nbrs[s]) {
            if (std::all_of(clique.begin(), clique.end(), [&](std::size_t w) { return adj[u][w] != 0; })) clique.push_back(u);
        }
        best = std::max(best, clique.size());
    }
    return static_cast<Color>(best);
}

} // namespace

ChromaticResult distance_graph_chromatic_window(const DiffSetSpec& s, Int n_max, const ChromaticOptions& opts)
{
    if (n_max < 1) throw std::invalid_argument("distance_graph_chromatic_window: n_max must be >= 1");
    const auto steps = s.members(n_max - 1);
    const auto un = static_cast<std::size_t>(n_max);
    std::vector<std::vector<std::size_t>> nbrs(un);
    for (std::size_t v = 0; v < un; ++v) {
        for (Int d : steps) {
            if (v >= static_cast<std::size_t>(d)) nbrs[v].push_back(v - static_cast<std::size_t>(d));
            if (v + static_cast<std::size_t>(d) < un) nbrs[v].push_back(v + static_cast<std::size_t>(d));
        }
    }

    Dsatur ds(nbrs, opts.node_budget);
    auto colors = ds.greedy();
    ChromaticResult res;
    if (n_max > opts.exact_limit) {
        res.notice = "window " + std::to_string(n_max) + " exceeds exact limit " + std::to_string(opts.exact_limit) +
                     "; DSATUR value is an upper bound";
    } else {
        try {
            ds.exact(colors, clique_lower_bound(nbrs));
            res.exact = true;
        } catch (const BudgetHit&) {
            res.notice = "node budget of " + std::to_string(opts.node_budget) +
                         " exhausted in exact mode; downgraded to best coloring found, an upper bound";
        }
        colors = ds.best_colors();
        res.nodes = ds.nodes();
    }
    res.value = *std::max_element(colors.begin(), colors.end());
    res.coloring = WindowColoring(n_max, res.value, std::move(colors),
                                  nlohmann::json{{"constructor", "distance_graph_chromatic_window"},
                                                 {"spec", s.describe()},
                                                 {"exact", res.exact}});
    return res;
}

} // namespace vdw
