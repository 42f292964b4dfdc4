#include "vdw/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "vdw/error.hpp"
#include "vdw/grid.hpp"
#include "vdw/search.hpp"
#include "vdw/serialize.hpp"

namespace vdw {

using nlohmann::json;

WindowProperty WindowProperty::ladder(DiffSetSpec s, Color r, Int k, Int n_max)
{
    return WindowProperty{PropertyKind::Ladder, std::move(s), r, k, {}, n_max};
}

WindowProperty WindowProperty::accessible(DiffSetSpec s, Color r, Int k, Int n_max)
{
    return WindowProperty{PropertyKind::Accessible, std::move(s), r, k, {}, n_max};
}

WindowProperty WindowProperty::chrom_intersective(DiffSetSpec s, Color r, Int n_max)
{
    return WindowProperty{PropertyKind::ChromIntersective, std::move(s), r, 2, {}, n_max};
}

WindowProperty WindowProperty::grid_forced(DiffSetSpec s, Color r, std::vector<Int> dims, Int n_max)
{
    return WindowProperty{PropertyKind::GridForced, std::move(s), r, 0, std::move(dims), n_max};
}

WindowProperty WindowProperty::with_window(Int n) const
{
    WindowProperty p = *this;
    p.n_max = n;
    return p;
}

void WindowProperty::validate() const
{
    if (n_max < 1) throw std::invalid_argument("property: n_max must be >= 1");
    if (r < 1) throw std::invalid_argument("property: r must be >= 1");
    if ((kind == PropertyKind::Ladder || kind == PropertyKind::Accessible) && k < 1)
        throw std::invalid_argument("property: k must be >= 1");
    if (kind == PropertyKind::GridForced) {
        if (dims.empty()) throw std::invalid_argument("property: GridForced needs dims");
        for (Int d : dims) {
            if (d < 2) throw std::invalid_argument("property: grid side lengths must be >= 2");
        }
    }
}

const char* to_string(Outcome o)
{
    switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Fails: return "fails";
    case Outcome::Unknown: return "unknown";
    }
    return "unknown";
}

const char* to_string(PropertyKind k)
{
    switch (k) {
    case PropertyKind::Ladder: return "Ladder";
    case PropertyKind::Accessible: return "Accessible";
    case PropertyKind::ChromIntersective: return "ChromIntersective";
    case PropertyKind::GridForced: return "GridForced";
    }
    return "?";
}

json to_json(const WindowProperty& p)
{
    json j{{"kind", to_string(p.kind)}, {"spec", to_json(p.spec)}, {"r", p.r}, {"n_max", p.n_max}};
    if (p.kind == PropertyKind::Ladder || p.kind == PropertyKind::Accessible) j["k"] = p.k;
    if (p.kind == PropertyKind::GridForced) j["dims"] = p.dims;
    return j;
}

WindowProperty property_from_json(const json& j)
{
    try {
        const auto kind = j.at("kind").get<std::string>();
        WindowProperty p;
        p.spec = spec_from_json(j.at("spec"));
        p.r = j.at("r").get<Color>();
        p.n_max = j.at("n_max").get<Int>();
        if (kind == "Ladder" || kind == "Accessible") {
            p.kind = kind == "Ladder" ? PropertyKind::Ladder : PropertyKind::Accessible;
            p.k = j.at("k").get<Int>();
        } else if (kind == "ChromIntersective") {
            p.kind = PropertyKind::ChromIntersective;
            p.k = 2;
        } else if (kind == "GridForced") {
            p.kind = PropertyKind::GridForced;
            p.dims = j.at("dims").get<std::vector<Int>>();
        } else {
            throw ParseError("property: unknown kind '" + kind + "'");
        }
        p.validate();
        return p;
    } catch (const json::exception& e) {
        throw ParseError(std::string("property: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

double log2_leaf_estimate(Int n_max, Color r, bool symmetry_breaking)
{
    if (!symmetry_breaking) return static_cast<double>(n_max) * std::log2(static_cast<double>(r));
    // restricted growth strings of length n_max using at most r symbols
    const Int cols = std::min<Int>(r, n_max);
    std::vector<long double> ways(static_cast<std::size_t>(cols) + 1, 0.0L);
    ways[1] = 1.0L;
    for (Int i = 2; i <= n_max; ++i) {
        for (Int j = std::min(cols, i); j >= 1; --j)
            ways[static_cast<std::size_t>(j)] = ways[static_cast<std::size_t>(j)] * static_cast<long double>(j) + ways[static_cast<std::size_t>(j - 1)];
    }
    long double total = 0;
    for (auto w : ways) total += w;
    return static_cast<double>(std::log2(total));
}

namespace {

struct Detector {
    PropertyKind kind;
    Int k;
    std::vector<Int> dims;
    std::vector<char> table;
    std::vector<Int> list;
    std::vector<Int> chain;   // Accessible: longest chain ending at x

    Detector(const WindowProperty& p)
        : kind(p.kind), k(p.kind == PropertyKind::ChromIntersective ? 2 : p.k), dims(p.dims),
          table(static_cast<std::size_t>(p.n_max), 0), list(p.spec.members(p.n_max - 1)),
          chain(static_cast<std::size_t>(p.n_max) + 1, 0)
    {
        for (Int d : list) table[static_cast<std::size_t>(d)] = 1;
    }

    // colors[y - 1] is set for y <= x
    bool completes(std::span<const Color> colors, Int x)
    {
        const Color cx = colors[static_cast<std::size_t>(x - 1)];
        switch (kind) {
        case PropertyKind::Ladder:
            for (Int d : list) {
                if ((k - 1) * d > x - 1) break;
                Int i = 1;
                while (i < k && colors[static_cast<std::size_t>(x - 1 - i * d)] == cx) ++i;
                if (i == k) return true;
            }
            return false;
        case PropertyKind::Accessible:
        case PropertyKind::ChromIntersective: {
            Int len = 1;
            for (Int d : list) {
                if (d >= x) break;
                if (colors[static_cast<std::size_t>(x - 1 - d)] == cx) len = std::max(len, chain[static_cast<std::size_t>(x - d)] + 1);
            }
            chain[static_cast<std::size_t>(x)] = len;
            return len >= k;
        }
        case PropertyKind::GridForced:
            return grid_with_top_corner(colors, table, list, x, dims);
        }
        return false;
    }
};

enum class Leaf { Exhausted, Found, Budget };

struct Shared {
    std::atomic<std::uint64_t> nodes{0};
    std::uint64_t budget;
};

class Backtracker {
public:
    Backtracker(const WindowProperty& p, bool symmetry, Shared& shared)
        : det_(p), n_(p.n_max), r_(p.r), symmetry_(symmetry), shared_(shared),
          colors_(static_cast<std::size_t>(p.n_max), 0)
    {
    }

    /// Replays a structure-free prefix; returns false if the prefix already contains the structure.
    bool load(std::span<const Color> prefix)
    {
        max_used_ = 0;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            colors_[i] = prefix[i];
            max_used_ = std::max(max_used_, prefix[i]);
            if (det_.completes(colors_, static_cast<Int>(i) + 1)) return false;
        }
        depth_ = static_cast<Int>(prefix.size());
        return true;
    }

    Leaf run() { return dfs(depth_ + 1, max_used_); }

    /// Collects structure-free prefixes of length `depth` in lexicographic order.
    void prefixes(Int x, Color max_used, Int depth, std::vector<std::vector<Color>>& out)
    {
        if (x > depth) {
            out.emplace_back(colors_.begin(), colors_.begin() + depth);
            return;
        }
        const Color limit = symmetry_ ? std::min<Color>(r_, max_used + 1) : r_;
        for (Color c = 1; c <= limit; ++c) {
            shared_.nodes.fetch_add(1, std::memory_order_relaxed);
            colors_[static_cast<std::size_t>(x - 1)] = c;
            if (det_.completes(colors_, x)) continue;
            prefixes(x + 1, std::max(max_used, c), depth, out);
        }
    }

    const std::vector<Color>& colors() const { return colors_; }

private:
    Leaf dfs(Int x, Color max_used)
    {
        if (x > n_) return Leaf::Found;
        const Color limit = symmetry_ ? std::min<Color>(r_, max_used + 1) : r_;
        for (Color c = 1; c <= limit; ++c) {
            if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) >= shared_.budget) return Leaf::Budget;
            colors_[static_cast<std::size_t>(x - 1)] = c;
            if (det_.completes(colors_, x)) continue;
            Leaf res = dfs(x + 1, std::max(max_used, c));
            if (res != Leaf::Exhausted) return res;
        }
        return Leaf::Exhausted;
    }

    Detector det_;
    Int n_;
    Color r_;
    bool symmetry_;
    Shared& shared_;
    std::vector<Color> colors_;
    Color max_used_ = 0;
    Int depth_ = 0;
};

WindowColoring as_counterexample(const WindowProperty& p, std::vector<Color> colors)
{
    return WindowColoring(p.n_max, p.r, std::move(colors),
                          json{{"constructor", "counterexample"}, {"property", to_json(p)}});
}

Verdict finish(Verdict v, std::chrono::steady_clock::time_point t0)
{
    v.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0);
    v.holds = v.outcome == Outcome::Holds;
    return v;
}

} // namespace

bool recheck_counterexample(const WindowProperty& p, const WindowColoring& c)
{
    switch (p.kind) {
    case PropertyKind::Ladder: return !find_mono_ap(c, p.spec, p.k).has_value();
    case PropertyKind::Accessible: return longest_mono_s_sequence(c, p.spec).length() < p.k;
    case PropertyKind::ChromIntersective: return longest_mono_s_sequence(c, p.spec).length() < 2;
    case PropertyKind::GridForced: return !find_mono_grid_exhaustive(p.spec, c, p.dims).has_value();
    }
    return false;
}

Verdict check_window_property(const WindowProperty& p, const CheckOptions& opts)
{
    p.validate();
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;

    const bool trivial_point = (p.kind == PropertyKind::Ladder || p.kind == PropertyKind::Accessible) && p.k == 1;
    if (trivial_point) {
        // a single integer is the structure; Ladder additionally needs some difference to exist
        if (p.kind == PropertyKind::Accessible || p.spec.first_member()) {
            v.outcome = Outcome::Holds;
            v.note = "k = 1: every nonempty window contains a singleton";
            return finish(v, t0);
        }
        v.outcome = Outcome::Fails;
        v.note = "k = 1 but the spec has no members";
    } else if (p.spec.members(p.n_max - 1).empty()) {
        v.outcome = Outcome::Fails;
        v.note = "spec has no members below n_max; no structure can occur";
    }
    if (v.outcome == Outcome::Fails) {
        v.counterexample = as_counterexample(p, std::vector<Color>(static_cast<std::size_t>(p.n_max), 1));
        v.recheck_passed = recheck_counterexample(p, *v.counterexample);
        return finish(v, t0);
    }

    const double est = log2_leaf_estimate(p.n_max, p.r, opts.symmetry_breaking);
    if (est > opts.max_log2_leaves)
        throw BudgetExceeded("state space of about 2^" + std::to_string(static_cast<int>(est)) +
                             " leaves exceeds the ceiling 2^" + std::to_string(static_cast<int>(opts.max_log2_leaves)));

    Shared shared;
    shared.budget = opts.node_budget;
    const unsigned threads = std::max(1u, opts.threads);

    // split into prefixes so workers can take subtrees; one empty prefix when sequential
    std::vector<std::vector<Color>> prefixes;
    if (threads == 1) {
        prefixes.emplace_back();
    } else {
        Backtracker gen(p, opts.symmetry_breaking, shared);
        Int depth = 0;
        while (depth < p.n_max && prefixes.size() < 8 * static_cast<std::size_t>(threads)) {
            ++depth;
            prefixes.clear();
            gen.prefixes(1, 0, depth, prefixes);
            if (prefixes.empty()) break;
        }
    }

    std::vector<Leaf> results(prefixes.size(), Leaf::Exhausted);
    std::vector<std::vector<Color>> found(prefixes.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_fail{prefixes.size()};
    std::atomic<bool> budget_hit{false};

    auto worker = [&] {
        Backtracker bt(p, opts.symmetry_breaking, shared);
        for (std::size_t i = next.fetch_add(1); i < prefixes.size(); i = next.fetch_add(1)) {
            if (i > first_fail.load() || budget_hit.load()) continue;
            if (!bt.load(prefixes[i])) continue;
            Leaf res = bt.run();
            results[i] = res;
            if (res == Leaf::Found) {
                found[i] = bt.colors();
                std::size_t cur = first_fail.load();
                while (i < cur && !first_fail.compare_exchange_weak(cur, i)) {
                }
            } else if (res == Leaf::Budget) {
                budget_hit = true;
            }
        }
    };
    if (threads == 1 || prefixes.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    v.nodes_explored = shared.nodes.load();
    // a fail from an earlier prefix is decisive even if a later subtree ran out of budget
    std::size_t fail_at = prefixes.size();
    bool unknown_before = false;
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        if (results[i] == Leaf::Found) {
            fail_at = i;
            break;
        }
        if (results[i] == Leaf::Budget) unknown_before = true;
    }
    if (fail_at < prefixes.size() && !unknown_before) {
        v.outcome = Outcome::Fails;
        v.counterexample = as_counterexample(p, found[fail_at]);
        v.recheck_passed = recheck_counterexample(p, *v.counterexample);
    } else if (fail_at < prefixes.size()) {
        // still a valid counterexample, just not the lexicographically first
        v.outcome = Outcome::Fails;
        v.counterexample = as_counterexample(p, found[fail_at]);
        v.recheck_passed = recheck_counterexample(p, *v.counterexample);
        v.note = "node budget reached in an earlier subtree; counterexample may not be the first";
    } else if (budget_hit || std::any_of(results.begin(), results.end(), [](Leaf l) { return l == Leaf::Budget; })) {
        v.outcome = Outcome::Unknown;
        v.note = "node budget of " + std::to_string(opts.node_budget) + " reached";
    } else {
        v.outcome = Outcome::Holds;
    }
    return finish(v, t0);
}

// ---- order decomposition ----------------------------------------------------

std::vector<Int> s_orders(std::span<const Int> a, const DiffSetSpec& s)
{
    std::vector<Int> orders(a.size(), 1);
    if (a.empty()) return orders;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 1 || (i > 0 && a[i] <= a[i - 1])) throw std::invalid_argument("order_in_set: A must be positive and strictly increasing");
    }
    const Int lo = a.front();
    const Int hi = a.back();
    std::vector<std::int64_t> index(static_cast<std::size_t>(hi - lo) + 1, -1);
    for (std::size_t i = 0; i < a.size(); ++i) index[static_cast<std::size_t>(a[i] - lo)] = static_cast<std::int64_t>(i);
    const auto steps = s.members(hi - lo);
    for (std::size_t i = a.size(); i-- > 0;) {
        Int best = 1;
        for (Int d : steps) {
            const Int y = a[i] + d;
            if (y > hi) break;
            const auto j = index[static_cast<std::size_t>(y - lo)];
            if (j >= 0) best = std::max(best, orders[static_cast<std::size_t>(j)] + 1);
        }
        orders[i] = best;
    }
    return orders;
}

Int OrderMap::order(Int x) const
{
    auto it = std::lower_bound(set.begin(), set.end(), x);
    if (it == set.end() || *it != x) return 0;
    return orders[static_cast<std::size_t>(it - set.begin())];
}

bool OrderMap::postconditions_hold() const
{
    if (set.empty()) return true;
    return top_internal_max <= 1 && (rest.empty() || rest_internal_max <= k_max - 1);
}

OrderMap order_in_set(std::span<const Int> a, const DiffSetSpec& s)
{
    OrderMap m;
    m.set.assign(a.begin(), a.end());
    m.orders = s_orders(a, s);
    if (m.set.empty()) return m;
    m.k_max = *std::max_element(m.orders.begin(), m.orders.end());
    for (std::size_t i = 0; i < m.set.size(); ++i) (m.orders[i] == m.k_max ? m.top : m.rest).push_back(m.set[i]);
    auto max_of = [](const std::vector<Int>& v) { return v.empty() ? Int{0} : *std::max_element(v.begin(), v.end()); };
    m.top_internal_max = max_of(s_orders(m.top, s));
    m.rest_internal_max = max_of(s_orders(m.rest, s));
    if (!m.postconditions_hold())
        throw std::logic_error("order_in_set: decomposition postcondition violated (B-order " +
                               std::to_string(m.top_internal_max) + ", rest-order " + std::to_string(m.rest_internal_max) + ")");
    return m;
}

// ---- grid certification -----------------------------------------------------

GridCertificate certify_grid_window(const DiffSetSpec& s, Color r, const std::vector<Int>& dims, Int level_cap,
                                    const CheckOptions& opts)
{
    GridCertificate cert;
    if (dims.empty()) throw std::invalid_argument("certify_grid_window: dims must be nonempty");
    DiffSetSpec level_spec = s;
    Color level_r = r;
    Int window = 1;
    for (std::size_t level = 0; level < dims.size(); ++level) {
        Int found = 0;
        for (Int n = dims[level]; n <= level_cap && found == 0; ++n) {
            Verdict v = check_window_property(WindowProperty::accessible(level_spec, level_r, dims[level], n), opts);
            if (v.outcome == Outcome::Unknown) {
                cert.note = "level " + std::to_string(level) + ": budget reached at window " + std::to_string(n);
                return cert;
            }
            if (v.outcome == Outcome::Holds) found = n;
        }
        if (found == 0) {
            cert.note = "level " + std::to_string(level) + ": no window up to " + std::to_string(level_cap) + " forces the path";
            return cert;
        }
        cert.level_windows.push_back(found);
        cert.level_colors.push_back(level_r);
        if (window > std::numeric_limits<Int>::max() / found) {
            cert.note = "certified window overflows";
            return cert;
        }
        window *= found;
        if (level + 1 < dims.size()) {
            // tuples of `found` colors; more than level_cap + 1 colors never matter in a window of level_cap
            Int next_r = 1;
            for (Int i = 0; i < found && next_r <= level_cap; ++i) next_r *= level_r;
            level_r = static_cast<Color>(std::min<Int>(next_r, level_cap + 1));
            level_spec = contract_diffset(level_spec, found, found * level_cap).spec;
        }
    }
    cert.window = window;
    cert.certified = true;
    return cert;
}

} // namespace vdw
