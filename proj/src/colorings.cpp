#include "vdw/colorings.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "vdw/error.hpp"

namespace vdw {

using nlohmann::json;

WindowColoring constant_coloring(Int n_max)
{
    return WindowColoring(n_max, 1, std::vector<Color>(static_cast<std::size_t>(n_max), 1),
                          json{{"constructor", "constant"}, {"n", n_max}});
}

WindowColoring mod_coloring(Int n_max, Int q)
{
    if (q < 1) throw std::invalid_argument("mod_coloring: modulus must be >= 1");
    std::vector<Color> colors(static_cast<std::size_t>(n_max));
    for (Int n = 1; n <= n_max; ++n) colors[static_cast<std::size_t>(n - 1)] = static_cast<Color>(n % q + 1);
    return WindowColoring(n_max, static_cast<Color>(q), std::move(colors), json{{"constructor", "mod"}, {"n", n_max}, {"q", q}});
}

WindowColoring parity_coloring(Int n_max)
{
    std::vector<Color> colors(static_cast<std::size_t>(n_max));
    for (Int n = 1; n <= n_max; ++n) colors[static_cast<std::size_t>(n - 1)] = n % 2 == 1 ? 1 : 2;
    return WindowColoring(n_max, 2, std::move(colors), json{{"constructor", "parity"}, {"n", n_max}});
}

WindowColoring random_coloring(Int n_max, Color r, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Color> colors(static_cast<std::size_t>(n_max));
    for (auto& x : colors) x = static_cast<Color>(rng() % static_cast<std::uint64_t>(r)) + 1;
    return WindowColoring(n_max, r, std::move(colors),
                          json{{"constructor", "random"}, {"n", n_max}, {"r", r}, {"seed", seed}});
}

Color digit_color(Int n, Int m)
{
    int count = 0;
    for (Int pos = 0; n > 0; ++pos, n /= m) {
        if (pos >= 2 && pos % 2 == 0 && n % m == 2) ++count;
    }
    return static_cast<Color>(count % 3 + 1);
}

WindowColoring base_m_digit_coloring(const DigitColoringParams& params, Int n_max)
{
    if (params.m < 2) throw HypothesisViolation("digit coloring: base must be >= 2");
    if (params.m < 5 && !params.allow_small_base)
        throw HypothesisViolation("digit coloring: base m = " + std::to_string(params.m) +
                                  " < 5; pass allow_small_base to experiment anyway");
    std::vector<Color> colors(static_cast<std::size_t>(n_max));
    for (Int n = 1; n <= n_max; ++n) colors[static_cast<std::size_t>(n - 1)] = digit_color(n, params.m);
    return WindowColoring(n_max, 3, std::move(colors),
                          json{{"constructor", "digit"}, {"m", params.m}, {"n", n_max}, {"override", params.allow_small_base}});
}

WindowColoring product_coloring(const WindowColoring& c1, const WindowColoring& c2)
{
    if (c1.n_max() != c2.n_max())
        throw WindowMismatch("product_coloring: windows differ (" + std::to_string(c1.n_max()) + " vs " +
                             std::to_string(c2.n_max()) + ")");
    const Int r = static_cast<Int>(c1.r()) * c2.r();
    if (r > std::numeric_limits<Color>::max()) throw std::overflow_error("product_coloring: too many colors");
    std::vector<Color> colors(static_cast<std::size_t>(c1.n_max()));
    for (Int n = 1; n <= c1.n_max(); ++n)
        colors[static_cast<std::size_t>(n - 1)] = (c1(n) - 1) * c2.r() + c2(n);
    return WindowColoring(c1.n_max(), static_cast<Color>(r), std::move(colors),
                          json{{"constructor", "product"}, {"left", c1.provenance()}, {"right", c2.provenance()}});
}

WindowColoring mod_refinement(const WindowColoring& c, Int n)
{
    if (n < 1) throw std::invalid_argument("mod_refinement: modulus must be >= 1");
    auto out = product_coloring(c, mod_coloring(c.n_max(), n));
    return out.with_provenance(json{{"constructor", "modref"}, {"base", c.provenance()}, {"mod", n}});
}

WindowColoring block_coloring(const WindowColoring& c, Int block)
{
    if (block < 1) throw std::invalid_argument("block_coloring: block length must be >= 1");
    const Int blocks = c.n_max() / block;
    if (blocks < 1) throw WindowMismatch("block_coloring: block length exceeds window");

    // r^block, saturating
    Int lex_colors = 1;
    bool lex = true;
    for (Int i = 0; i < block && lex; ++i) {
        if (lex_colors > std::numeric_limits<Color>::max() / c.r()) lex = false;
        else lex_colors *= c.r();
    }

    std::vector<Color> colors(static_cast<std::size_t>(blocks));
    Color r_out = 0;
    if (lex) {
        for (Int t = 0; t < blocks; ++t) {
            Int idx = 0;
            for (Int i = 1; i <= block; ++i) idx = idx * c.r() + (c(t * block + i) - 1);
            colors[static_cast<std::size_t>(t)] = static_cast<Color>(idx + 1);
        }
        r_out = static_cast<Color>(lex_colors);
    } else {
        std::map<std::vector<Color>, Color> rank;
        auto tuple_of = [&](Int t) {
            auto first = c.colors().begin() + t * block;
            return std::vector<Color>(first, first + block);
        };
        for (Int t = 0; t < blocks; ++t) rank.emplace(tuple_of(t), 0);
        Color next = 0;
        for (auto& [tuple, id] : rank) id = ++next;
        for (Int t = 0; t < blocks; ++t) colors[static_cast<std::size_t>(t)] = rank.at(tuple_of(t));
        r_out = next;
    }
    return WindowColoring(blocks, r_out, std::move(colors),
                          json{{"constructor", "block"}, {"block", block}, {"base", c.provenance()},
                               {"indexing", lex ? "lexicographic" : "compact"}});
}

// ---- interval blocking ------------------------------------------------------

std::size_t IntervalPlan::interval_of(Int x) const
{
    auto it = std::upper_bound(starts.begin(), starts.end(), x);
    if (it == starts.begin()) throw std::out_of_range("IntervalPlan: integer below first interval");
    return static_cast<std::size_t>(it - starts.begin());
}

IntervalBlocking interval_blocking_coloring(std::span<const Int> s, Int k, Int n_max)
{
    if (k < 1) throw std::invalid_argument("interval_blocking_coloring: k must be >= 1");
    if (n_max < 1) throw std::invalid_argument("interval_blocking_coloring: window must be nonempty");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || (i > 0 && s[i] <= s[i - 1]))
            throw std::invalid_argument("interval_blocking_coloring: prefix must be positive and strictly increasing");
    }
    const auto m = static_cast<Int>(s.size());
    auto at = [&](Int i) { return s[static_cast<std::size_t>(i - 1)]; };   // s_i, 1-based

    // gaps g_i = s_{i+k} - s_i for i in [1, m-k]; suffix minima certify anchors
    const Int last_checkable = m - k;
    std::vector<Int> suffix_min(static_cast<std::size_t>(std::max<Int>(last_checkable, 0)) + 2,
                                std::numeric_limits<Int>::max());
    for (Int i = last_checkable; i >= 1; --i)
        suffix_min[static_cast<std::size_t>(i)] = std::min(suffix_min[static_cast<std::size_t>(i + 1)], at(i + k) - at(i));

    // differences that occur inside the window are < n_max; each must be covered
    const auto relevant = static_cast<Int>(std::lower_bound(s.begin(), s.end(), n_max) - s.begin());

    IntervalPlan plan;
    plan.k = k;
    Int covered = 0;   // l_1 + ... + l_{j-1}
    for (int j = 1; covered < n_max; ++j) {
        if (relevant > last_checkable)
            throw InsufficientPrefix(j, "interval " + std::to_string(j) + ": prefix must contain " + std::to_string(k) +
                                            " member(s) beyond the last one below n_max");
        Int x = 0;
        for (Int cand = 1; cand <= last_checkable; ++cand) {
            if (suffix_min[static_cast<std::size_t>(cand)] > covered) {
                x = cand;
                break;
            }
        }
        if (x == 0)
            throw InsufficientPrefix(j, "interval " + std::to_string(j) + ": no anchor x with s_{i+k} - s_i > " +
                                            std::to_string(covered) + " for all i >= x in the prefix");
        const Int len = at(x) + 1;
        plan.anchors.push_back(x);
        plan.lengths.push_back(len);
        plan.starts.push_back(covered + 1);
        covered += len;
    }

    // phase 2: alternate base colors A/B; k+1 sub-colors per base
    std::vector<Color> colors(static_cast<std::size_t>(n_max));
    std::vector<std::size_t> interval(static_cast<std::size_t>(n_max) + 1);
    std::vector<Int> sub(static_cast<std::size_t>(n_max) + 1);
    std::vector<char> taken(static_cast<std::size_t>(k) + 1);
    for (Int x = 1; x <= n_max; ++x) {
        const std::size_t j = plan.interval_of(x);
        interval[static_cast<std::size_t>(x)] = j;
        std::fill(taken.begin(), taken.end(), 0);
        Int conflicts = 0;
        for (Int i = 1; i <= m && at(i) < x; ++i) {
            const Int y = x - at(i);
            const std::size_t jy = interval[static_cast<std::size_t>(y)];
            if (jy < j && (j - jy) % 2 == 0) {
                taken[static_cast<std::size_t>(sub[static_cast<std::size_t>(y)])] = 1;
                ++conflicts;
            }
        }
        if (conflicts > k)
            throw std::logic_error("interval_blocking_coloring: " + std::to_string(conflicts) + " conflicts at " +
                                   std::to_string(x) + " exceed k");
        Int pick = 0;
        while (taken[static_cast<std::size_t>(pick)]) ++pick;
        sub[static_cast<std::size_t>(x)] = pick;
        const Int base = static_cast<Int>((j - 1) % 2);
        colors[static_cast<std::size_t>(x - 1)] = static_cast<Color>(base * (k + 1) + pick + 1);
    }

    json prov{{"constructor", "interval"},
              {"k", k},
              {"n", n_max},
              {"plan", {{"lengths", plan.lengths}, {"anchors", plan.anchors}, {"starts", plan.starts}}}};
    return IntervalBlocking{WindowColoring(n_max, static_cast<Color>(2 * k + 2), std::move(colors), std::move(prov)),
                            std::move(plan)};
}

bool plan_satisfies_invariants(const IntervalPlan& plan, std::span<const Int> s)
{
    const auto m = static_cast<Int>(s.size());
    Int covered = 0;
    for (std::size_t j = 0; j < plan.lengths.size(); ++j) {
        const Int x = plan.anchors[j];
        if (x < 1 || x > m) return false;
        if (plan.lengths[j] <= s[static_cast<std::size_t>(x - 1)]) return false;
        for (Int i = x; i + plan.k <= m; ++i) {
            if (s[static_cast<std::size_t>(i + plan.k - 1)] - s[static_cast<std::size_t>(i - 1)] <= covered) return false;
        }
        if (plan.starts[j] != covered + 1) return false;
        covered += plan.lengths[j];
    }
    return true;
}

// ---- tail recoloring --------------------------------------------------------

TailRecoloring tail_recoloring(const WindowColoring& c, const DiffSetSpec& s, std::optional<Int> region)
{
    const Int top = std::clamp<Int>(region.value_or(c.n_max()), 1, c.n_max());
    const auto steps = s.members(top - 1);

    // ending[x]: longest monochromatic S-sequence inside [1, top] ending at x
    std::vector<Int> ending(static_cast<std::size_t>(top) + 1, 1);
    Int best = top >= 1 ? 1 : 0;
    for (Int x = 1; x <= top; ++x) {
        Int e = 1;
        for (Int d : steps) {
            if (d >= x) break;
            if (c(x - d) == c(x)) e = std::max(e, ending[static_cast<std::size_t>(x - d)] + 1);
        }
        ending[static_cast<std::size_t>(x)] = e;
        best = std::max(best, e);
    }

    const Color r = c.r();
    if (static_cast<Int>(r) * 2 > std::numeric_limits<Color>::max()) throw std::overflow_error("tail_recoloring: too many colors");
    std::vector<Color> colors(c.colors().begin(), c.colors().end());
    TailRecoloring out{WindowColoring(c.n_max(), static_cast<Color>(2 * r), colors), best, {}, best < 2};
    if (best >= 2) {
        for (Int x = 1; x <= top; ++x) {
            if (ending[static_cast<std::size_t>(x)] == best) {
                out.tails.push_back(x);
                colors[static_cast<std::size_t>(x - 1)] += r;
            }
        }
    }
    out.coloring = WindowColoring(c.n_max(), static_cast<Color>(2 * r), std::move(colors),
                                  json{{"constructor", "tail"}, {"spec", s.describe()}, {"region", top},
                                       {"max_length", best}, {"base", c.provenance()}});
    return out;
}

// ---- path recoloring --------------------------------------------------------

std::vector<Int> upward_path_lengths(const OrderedGraph& g, const WindowColoring& c)
{
    if (g.vertex_count() != c.n_max())
        throw WindowMismatch("graph has " + std::to_string(g.vertex_count()) + " vertices but coloring covers " +
                             std::to_string(c.n_max()));
    std::vector<Int> beta(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (Int x = g.vertex_count(); x >= 1; --x) {
        Int b = 0;
        const Color cx = c(x);
        g.for_each_upper_neighbor(x, [&](Int y) {
            if (c(y) == cx) b = std::max(b, beta[static_cast<std::size_t>(y)] + 1);
        });
        beta[static_cast<std::size_t>(x)] = b;
    }
    return beta;
}

PathRecoloring path_recoloring(const OrderedGraph& g, const WindowColoring& c)
{
    auto beta = upward_path_lengths(g, c);
    const Int k = *std::max_element(beta.begin() + 1, beta.end());
    const Int r_out = static_cast<Int>(c.r()) * (k + 1);
    if (r_out > std::numeric_limits<Color>::max()) throw std::overflow_error("path_recoloring: too many colors");
    std::vector<Color> colors(static_cast<std::size_t>(c.n_max()));
    for (Int x = 1; x <= c.n_max(); ++x)
        colors[static_cast<std::size_t>(x - 1)] = static_cast<Color>(c(x) + c.r() * beta[static_cast<std::size_t>(x)]);
    json prov{{"constructor", "path"}, {"k", k}, {"base", c.provenance()}};
    if (g.descriptor()) prov["graph"] = g.descriptor()->describe();
    return PathRecoloring{WindowColoring(c.n_max(), static_cast<Color>(r_out), std::move(colors), std::move(prov)),
                          std::move(beta), k};
}

} // namespace vdw
