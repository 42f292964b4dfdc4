#include "vdw/grid.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace vdw {

GridSearcher::GridSearcher(const DiffSetSpec& s, Int n_max, std::vector<Int> dims)
    : n_max_(n_max), dims_(std::move(dims)), levels_(dims_.size())
{
    if (dims_.empty()) throw std::invalid_argument("find_mono_grid: dims must be nonempty");
    for (Int d : dims_) {
        if (d < 2) throw std::invalid_argument("find_mono_grid: every side length must be >= 2");
    }
    if (n_max_ < 1) throw std::invalid_argument("find_mono_grid: window must be nonempty");
    auto& top = levels_[0];
    top.steps.assign(static_cast<std::size_t>(n_max_), 0);
    top.step_list = s.members(n_max_ - 1);
    for (Int d : top.step_list) top.steps[static_cast<std::size_t>(d)] = 1;
    top.colors.assign(static_cast<std::size_t>(n_max_) + 1, 0);
}

GridSearchResult GridSearcher::run(const WindowColoring& c)
{
    if (c.n_max() != n_max_) throw std::invalid_argument("GridSearcher: coloring window differs from searcher window");
    return run(c.colors());
}

GridSearchResult GridSearcher::run(std::span<const Color> colors)
{
    if (static_cast<Int>(colors.size()) != n_max_) throw std::invalid_argument("GridSearcher: wrong number of colors");
    auto& top = levels_[0];
    for (Int x = 1; x <= n_max_; ++x) top.colors[static_cast<std::size_t>(x)] = static_cast<std::uint64_t>(colors[static_cast<std::size_t>(x - 1)]);
    GridSearchResult res;
    GridWitness w;
    if (search(0, n_max_, w, res.block_lengths, res.diagnostic)) {
        w.color = colors[static_cast<std::size_t>(w.points.front() - 1)];
        res.witness = std::move(w);
        res.diagnostic.clear();
    } else {
        res.block_lengths.clear();
    }
    return res;
}

bool GridSearcher::path_in_range(Level& lv, Int lo, Int hi, Int len, std::vector<Int>* path)
{
    if (hi - lo + 1 < len) return false;
    if (lv.from.size() < static_cast<std::size_t>(hi) + 1) lv.from.resize(static_cast<std::size_t>(hi) + 1);
    auto& from = lv.from;
    const auto& col = lv.colors;
    bool found = false;
    for (Int x = hi; x >= lo; --x) {
        Int best = 1;
        for (Int d : lv.step_list) {
            if (x + d > hi) break;
            if (col[static_cast<std::size_t>(x + d)] == col[static_cast<std::size_t>(x)])
                best = std::max(best, from[static_cast<std::size_t>(x + d)] + 1);
        }
        from[static_cast<std::size_t>(x)] = std::min(best, len);
        if (best >= len) {
            found = true;
            if (!path) return true;
        }
    }
    if (!found) return false;
    Int x = lo;
    while (from[static_cast<std::size_t>(x)] < len) ++x;
    path->assign(1, x);
    for (Int need = len - 1; need >= 1; --need) {
        for (Int d : lv.step_list) {
            const Int y = x + d;
            if (col[static_cast<std::size_t>(y)] == col[static_cast<std::size_t>(x)] && from[static_cast<std::size_t>(y)] >= need) {
                x = y;
                break;
            }
        }
        path->push_back(x);
    }
    return true;
}

bool GridSearcher::search(std::size_t level, Int m, GridWitness& out, std::vector<Int>& blocks, std::string& diag)
{
    Level& lv = levels_[level];
    const Int len = dims_[level];
    const std::string where = "level " + std::to_string(level) + ": ";

    if (level + 1 == dims_.size()) {
        std::vector<Int> path;
        if (!path_in_range(lv, 1, m, len, &path)) {
            diag += where + "no monochromatic path of " + std::to_string(len) + " vertices among " + std::to_string(m) + " integers; ";
            return false;
        }
        out.dims = {len};
        out.points = path;
        out.axis_steps.assign(1, {});
        for (std::size_t i = 1; i < path.size(); ++i) out.axis_steps[0].push_back(path[i] - path[i - 1]);
        blocks.clear();
        return true;
    }

    Level& nx = levels_[level + 1];
    std::uint64_t max_color = 0;
    for (Int x = 1; x <= m; ++x) max_color = std::max(max_color, lv.colors[static_cast<std::size_t>(x)]);
    const std::uint64_t radix = max_color + 1;

    bool any_certified = false;
    for (Int n = 1; n <= m; ++n) {
        const Int nb = m / n;
        bool certified = true;
        for (Int b = 0; b < nb && certified; ++b) certified = path_in_range(lv, b * n + 1, b * n + n, len, nullptr);
        if (!certified) continue;
        any_certified = true;

        // contracted differences among block indices
        nx.steps.assign(static_cast<std::size_t>(nb), 0);
        nx.step_list.clear();
        for (Int d = 1; d < nb; ++d) {
            if (lv.steps[static_cast<std::size_t>(d * n)]) {
                nx.steps[static_cast<std::size_t>(d)] = 1;
                nx.step_list.push_back(d);
            }
        }
        if (nx.step_list.empty()) {
            diag += where + "block length " + std::to_string(n) + " contracts D to nothing below " + std::to_string(nb) + "; ";
            continue;
        }

        // tuple colors: lexicographic when radix^n fits, else by first appearance
        nx.colors.assign(static_cast<std::size_t>(nb) + 1, 0);
        bool lex = true;
        {
            std::uint64_t p = 1;
            for (Int i = 0; i < n && lex; ++i) {
                if (p > std::numeric_limits<std::uint64_t>::max() / 2 / radix) lex = false;
                else p *= radix;
            }
        }
        if (lex) {
            for (Int b = 0; b < nb; ++b) {
                std::uint64_t id = 0;
                for (Int i = 1; i <= n; ++i) id = id * radix + lv.colors[static_cast<std::size_t>(b * n + i)];
                nx.colors[static_cast<std::size_t>(b + 1)] = id;
            }
        } else {
            std::map<std::vector<std::uint64_t>, std::uint64_t> ids;
            for (Int b = 0; b < nb; ++b) {
                auto first = lv.colors.begin() + b * n + 1;
                auto [it, fresh] = ids.emplace(std::vector<std::uint64_t>(first, first + n), ids.size() + 1);
                nx.colors[static_cast<std::size_t>(b + 1)] = it->second;
            }
        }

        GridWitness inner;
        std::vector<Int> inner_blocks;
        if (!search(level + 1, nb, inner, inner_blocks, diag)) continue;

        // every block of the inner grid carries the same tuple, hence the same path offsets
        const Int b1 = inner.points.front();
        std::vector<Int> path;
        path_in_range(lv, (b1 - 1) * n + 1, b1 * n, len, &path);
        const std::size_t inner_size = inner.points.size();
        out.dims.assign(1, len);
        out.dims.insert(out.dims.end(), inner.dims.begin(), inner.dims.end());
        out.points.resize(inner_size * static_cast<std::size_t>(len));
        for (std::size_t f = 0; f < inner_size; ++f) {
            const Int shift = (inner.points[f] - b1) * n;
            for (std::size_t i = 0; i < path.size(); ++i) out.points[f * path.size() + i] = path[i] + shift;
        }
        out.axis_steps.assign(1, {});
        for (std::size_t i = 1; i < path.size(); ++i) out.axis_steps[0].push_back(path[i] - path[i - 1]);
        for (auto& axis : inner.axis_steps) {
            for (Int& s : axis) s *= n;
            out.axis_steps.push_back(std::move(axis));
        }
        blocks.assign(1, n);
        blocks.insert(blocks.end(), inner_blocks.begin(), inner_blocks.end());
        return true;
    }
    if (!any_certified)
        diag += where + "no block length certifies a path of " + std::to_string(len) + " vertices in every block; ";
    return false;
}

GridSearchResult find_mono_grid(const DiffSetSpec& s, const WindowColoring& c, const std::vector<Int>& dims)
{
    GridSearcher searcher(s, c.n_max(), dims);
    return searcher.run(c);
}

namespace {

struct CornerSearch {
    std::span<const Color> colors;
    const std::vector<char>& steps;
    const std::vector<Int>& step_list;
    const std::vector<Int>& dims;
    Int top;
    std::vector<std::vector<Int>> chosen;   // chosen[a][t]: step from coordinate t to t+1
    Int used = 0;

    Color color_of(Int y) const { return colors[static_cast<std::size_t>(y - 1)]; }

    bool full_check(GridWitness* w) const
    {
        std::size_t total = 1;
        for (Int d : dims) total *= static_cast<std::size_t>(d);
        std::vector<Int> points(total);
        const Color want = color_of(top);
        for (std::size_t f = 0; f < total; ++f) {
            Int v = top;
            std::size_t rest = f;
            for (std::size_t a = 0; a < dims.size(); ++a) {
                const auto coord = static_cast<Int>(rest % static_cast<std::size_t>(dims[a]));
                rest /= static_cast<std::size_t>(dims[a]);
                for (Int t = coord; t < dims[a] - 1; ++t) v -= chosen[a][static_cast<std::size_t>(t)];
            }
            if (v < 1 || color_of(v) != want) return false;
            points[f] = v;
        }
        std::vector<Int> sorted = points;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
        if (w) *w = GridWitness{dims, std::move(points), want, chosen};
        return true;
    }

    // assigns axis a, slot t (counting down from the top corner)
    bool assign(std::size_t a, Int t, Int line_pos, GridWitness* w)
    {
        if (a == dims.size()) return full_check(w);
        if (t < 0) return assign(a + 1, dims[a + 1 < dims.size() ? a + 1 : a] - 2, top, w);
        for (Int d : step_list) {
            if (used + d > top - 1) break;
            const Int y = line_pos - d;
            if (color_of(y) != color_of(top)) continue;
            chosen[a][static_cast<std::size_t>(t)] = d;
            used += d;
            const bool ok = assign(a, t - 1, y, w);
            used -= d;
            if (ok) return true;
        }
        return false;
    }
};

} // namespace

bool grid_with_top_corner(std::span<const Color> colors, const std::vector<char>& steps, const std::vector<Int>& step_list,
                          Int x, const std::vector<Int>& dims, GridWitness* witness)
{
    CornerSearch cs{colors, steps, step_list, dims, x, {}, 0};
    cs.chosen.resize(dims.size());
    for (std::size_t a = 0; a < dims.size(); ++a) cs.chosen[a].assign(static_cast<std::size_t>(dims[a] - 1), 0);
    return cs.assign(0, dims[0] - 2, x, witness);
}

std::optional<GridWitness> find_mono_grid_exhaustive(const DiffSetSpec& s, const WindowColoring& c, const std::vector<Int>& dims)
{
    if (dims.empty()) throw std::invalid_argument("find_mono_grid_exhaustive: dims must be nonempty");
    for (Int d : dims) {
        if (d < 2) throw std::invalid_argument("find_mono_grid_exhaustive: every side length must be >= 2");
    }
    const auto list = s.members(c.n_max() - 1);
    std::vector<char> table(static_cast<std::size_t>(c.n_max()), 0);
    for (Int d : list) table[static_cast<std::size_t>(d)] = 1;
    GridWitness w;
    for (Int x = 1; x <= c.n_max(); ++x) {
        if (grid_with_top_corner(c.colors(), table, list, x, dims, &w)) return w;
    }
    return std::nullopt;
}

} // namespace vdw
