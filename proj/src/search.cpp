#include "vdw/search.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "vdw/colorings.hpp"

namespace vdw {

std::optional<APWitness> find_mono_ap(const WindowColoring& c, const DiffSetSpec& s, Int k)
{
    if (k < 1) throw std::invalid_argument("find_mono_ap: k must be >= 1");
    const Int n = c.n_max();
    if (k == 1) {
        auto d = s.first_member();
        if (!d) return std::nullopt;
        return APWitness{1, *d, 1, c(1)};
    }
    if (n < k) return std::nullopt;
    std::vector<Int> run(static_cast<std::size_t>(n) + 1);
    for (Int d : s.members((n - 1) / (k - 1))) {
        for (Int x = 1; x <= n; ++x) {
            Int& r = run[static_cast<std::size_t>(x)];
            r = (x > d && c(x) == c(x - d)) ? run[static_cast<std::size_t>(x - d)] + 1 : 1;
            if (r >= k) return APWitness{x - (k - 1) * d, d, k, c(x)};
        }
    }
    return std::nullopt;
}

APLength max_mono_ap_length(const WindowColoring& c, const DiffSetSpec& s, Int cap)
{
    if (cap < 1) throw std::invalid_argument("max_mono_ap_length: cap must be >= 1");
    const Int n = c.n_max();
    if (!s.first_member()) return {};
    Int best = 1;
    std::vector<Int> run(static_cast<std::size_t>(n) + 1);
    for (Int d : s.members(n - 1)) {
        if (best >= cap) break;
        if ((n - 1) / d + 1 <= best) break;   // no AP with this or any larger d can be longer
        for (Int x = 1; x <= n; ++x) {
            Int& r = run[static_cast<std::size_t>(x)];
            r = (x > d && c(x) == c(x - d)) ? run[static_cast<std::size_t>(x - d)] + 1 : 1;
            if (r > best) best = std::min(r, cap);
        }
    }
    return APLength{best, find_mono_ap(c, s, best)};
}

SSeqWitness longest_mono_s_sequence(const WindowColoring& c, const DiffSetSpec& s)
{
    const Int n = c.n_max();
    const auto steps = s.members(n - 1);
    // from[x]: longest sequence starting at x
    std::vector<Int> from(static_cast<std::size_t>(n) + 1, 1);
    for (Int x = n; x >= 1; --x) {
        Int best = 1;
        for (Int d : steps) {
            if (x + d > n) break;
            if (c(x + d) == c(x)) best = std::max(best, from[static_cast<std::size_t>(x + d)] + 1);
        }
        from[static_cast<std::size_t>(x)] = best;
    }
    Int start = 1;
    for (Int x = 2; x <= n; ++x) {
        if (from[static_cast<std::size_t>(x)] > from[static_cast<std::size_t>(start)]) start = x;
    }
    SSeqWitness w{{start}, c(start)};
    for (Int x = start; from[static_cast<std::size_t>(x)] > 1;) {
        for (Int d : steps) {
            if (c(x + d) == c(x) && from[static_cast<std::size_t>(x + d)] == from[static_cast<std::size_t>(x)] - 1) {
                x += d;
                break;
            }
        }
        w.elements.push_back(x);
    }
    return w;
}

std::optional<PolyWitness> find_poly_progression(const WindowColoring& c, const std::vector<Int>& coeffs, Int k)
{
    if (k < 1) throw std::invalid_argument("find_poly_progression: k must be >= 1");
    auto spec = DiffSetSpec::polynomial_image(coeffs);   // rejects p(0) != 0
    const auto& p = std::get<spec::PolynomialImage>(spec.variant()).coeffs;
    if (p.size() < 2) throw std::invalid_argument("find_poly_progression: polynomial must be nonzero");
    const Int n = c.n_max();
    const Int reach = (n - 1) / k;   // |p(d)| may not exceed this
    const Int stop = poly_escape_point(p, reach);
    for (Int d = 1; d < stop; ++d) {
        auto step = poly_eval(p, d);
        if (!step || *step == 0) continue;
        const Int mag = *step < 0 ? -*step : *step;
        if (mag > reach) continue;
        const Int lo = *step > 0 ? 1 : 1 + k * mag;
        const Int hi = *step > 0 ? n - k * mag : n;
        for (Int a = lo; a <= hi; ++a) {
            const Color col = c(a);
            bool ok = true;
            for (Int i = 1; i <= k && ok; ++i) ok = c(a + i * *step) == col;
            if (ok) return PolyWitness{a, d, *step, k, col};
        }
    }
    return std::nullopt;
}

std::vector<Int> find_dead_ends(const WindowColoring& c, const DiffSetSpec& s)
{
    const Int n = c.n_max();
    const auto steps = s.members(n - 1);
    std::vector<Int> out;
    if (steps.empty()) return out;
    for (Int x = 1; x <= n - steps.front(); ++x) {
        bool dead = true;
        for (Int d : steps) {
            if (x + d > n) break;
            if (c(x + d) == c(x)) {
                dead = false;
                break;
            }
        }
        if (dead) out.push_back(x);
    }
    return out;
}

std::optional<PathWitness> find_upward_mono_path(const OrderedGraph& g, const WindowColoring& c, Int k)
{
    if (k < 1) throw std::invalid_argument("find_upward_mono_path: k must be >= 1");
    const auto beta = upward_path_lengths(g, c);
    for (Int x = 1; x <= g.vertex_count(); ++x) {
        if (beta[static_cast<std::size_t>(x)] < k - 1) continue;
        PathWitness w{{x}, c(x)};
        Int cur = x;
        for (Int need = k - 2; need >= 0; --need) {
            Int next = 0;
            g.for_each_upper_neighbor(cur, [&](Int y) {
                if (next == 0 && c(y) == w.color && beta[static_cast<std::size_t>(y)] >= need) next = y;
            });
            cur = next;
            w.vertices.push_back(cur);
        }
        return w;
    }
    return std::nullopt;
}

ContractedSpec contract_diffset(const DiffSetSpec& s, Int n, std::optional<Int> bound, bool expect_nonempty)
{
    if (n < 1) throw std::invalid_argument("contract_diffset: factor must be >= 1");
    if (!bound) {
        if (!s.is_finite()) throw std::invalid_argument("contract_diffset: bound required for infinite spec " + s.describe());
        auto all = s.members(std::numeric_limits<Int>::max() / 4);
        bound = all.empty() ? 0 : all.back();
    }
    std::vector<Int> values;
    for (Int d : s.members(*bound)) {
        if (d % n == 0) values.push_back(d / n);
    }
    ContractedSpec out{DiffSetSpec::of_values(std::move(values)), std::nullopt};
    if (expect_nonempty && std::get<spec::Explicit>(out.spec.variant()).values.empty())
        out.warning = "contracting " + s.describe() + " by " + std::to_string(n) + " up to " + std::to_string(*bound) +
                      " leaves no differences";
    return out;
}

} // namespace vdw
