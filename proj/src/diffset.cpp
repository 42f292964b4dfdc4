#include "vdw/diffset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "vdw/error.hpp"

namespace vdw {

namespace {

using i128 = __int128;

constexpr i128 kSaturate = static_cast<i128>(1) << 100;

i128 sat_mul(i128 a, i128 b)
{
    if (a == 0 || b == 0) return 0;
    const bool neg = (a < 0) != (b < 0);
    const i128 ua = a < 0 ? -a : a;
    const i128 ub = b < 0 ? -b : b;
    if (ua > kSaturate / ub) return neg ? -kSaturate : kSaturate;
    return neg ? -(ua * ub) : ua * ub;
}

i128 sat_add(i128 a, i128 b)
{
    i128 s = a + b;
    if (s > kSaturate) return kSaturate;
    if (s < -kSaturate) return -kSaturate;
    return s;
}

i128 sat_pow(i128 base, int e)
{
    i128 r = 1;
    for (int i = 0; i < e; ++i) r = sat_mul(r, base);
    return r;
}

int degree(const std::vector<Int>& c)
{
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] != 0) return i;
    }
    return -1;
}

i128 poly_eval_wide(const std::vector<Int>& c, Int x)
{
    i128 acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = sat_add(sat_mul(acc, x), *it);
    return acc;
}

/// Integer k-th root: largest r with r^k <= n.
Int iroot(Int n, int k)
{
    if (n <= 0) return 0;
    if (k == 1) return n;
    auto r = static_cast<Int>(std::pow(static_cast<long double>(n), 1.0L / k));
    while (r > 0 && sat_pow(r, k) > n) --r;
    while (sat_pow(r + 1, k) <= n) ++r;
    return r;
}

std::vector<i128> odd_powers_up_to(Int m, i128 limit)
{
    std::vector<i128> out;
    for (i128 p = m; p <= limit; p = sat_mul(p, static_cast<i128>(m) * m)) {
        out.push_back(p);
        if (p >= kSaturate) break;
    }
    return out;
}

std::vector<Int> odd_power_diff_members(Int m, Int bound)
{
    // m^a - m^b >= (3/4) m^a for odd a > b, so powers above 2*bound cannot contribute.
    auto powers = odd_powers_up_to(m, static_cast<i128>(bound) * 2 + 1);
    std::vector<Int> out;
    for (std::size_t j = 0; j < powers.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            i128 d = powers[j] - powers[i];
            if (d >= 1 && d <= bound) out.push_back(static_cast<Int>(d));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Int> normalized(std::vector<Int> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

std::optional<Int> poly_eval(const std::vector<Int>& coeffs, Int x)
{
    i128 v = poly_eval_wide(coeffs, x);
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min()) return std::nullopt;
    return static_cast<Int>(v);
}

Int poly_escape_point(const std::vector<Int>& coeffs, Int bound)
{
    const int n = degree(coeffs);
    if (n < 1) throw InvalidSpec("poly_escape_point: polynomial is constant");
    i128 tail = 0;
    for (int i = 0; i < n; ++i) tail = sat_add(tail, coeffs[static_cast<std::size_t>(i)] < 0 ? -static_cast<i128>(coeffs[static_cast<std::size_t>(i)]) : coeffs[static_cast<std::size_t>(i)]);
    // For x > tail: |p(x)| >= x^(n-1) (x - tail), which is increasing in x.
    const i128 cap = std::numeric_limits<Int>::max() / 2;
    if (n == 1) return static_cast<Int>(std::min<i128>(tail + bound + 1, cap));
    Int x = static_cast<Int>(std::min<i128>(tail, cap)) + 1;
    while (sat_mul(sat_pow(x, n - 1), x - tail) <= bound) ++x;
    return x;
}

DiffSetSpec::DiffSetSpec(Variant v) : v_(std::move(v))
{
    std::visit(overloaded{
                   [](spec::Explicit& e) {
                       for (std::size_t i = 0; i < e.values.size(); ++i) {
                           if (e.values[i] < 1) throw InvalidSpec("Explicit: members must be positive");
                           if (i > 0 && e.values[i] <= e.values[i - 1])
                               throw InvalidSpec("Explicit: members must be strictly increasing");
                       }
                   },
                   [](spec::KthPowers& p) {
                       if (p.k < 1) throw InvalidSpec("KthPowers: k must be >= 1");
                   },
                   [](spec::PolynomialImage& p) {
                       if (!p.coeffs.empty() && p.coeffs[0] != 0)
                           throw InvalidSpec("PolynomialImage: constant term must be zero");
                       while (!p.coeffs.empty() && p.coeffs.back() == 0) p.coeffs.pop_back();
                   },
                   [](spec::OddPowerDiffs& o) {
                       if (o.m < 2) throw InvalidSpec("OddPowerDiffs: base m must be >= 2");
                   },
                   [](spec::DifferenceOf& d) { d.generators = normalized(std::move(d.generators)); },
                   [](spec::ResidueClass& c) {
                       if (c.n < 1 || c.a < 0 || c.a >= c.n)
                           throw InvalidSpec("ResidueClass: need 0 <= a < n");
                   },
                   [](spec::AllNaturals&) {},
               },
               v_);
}

DiffSetSpec DiffSetSpec::of_values(std::vector<Int> values) { return DiffSetSpec(spec::Explicit{std::move(values)}); }
DiffSetSpec DiffSetSpec::kth_powers(int k) { return DiffSetSpec(spec::KthPowers{k}); }
DiffSetSpec DiffSetSpec::polynomial_image(std::vector<Int> coeffs) { return DiffSetSpec(spec::PolynomialImage{std::move(coeffs)}); }
DiffSetSpec DiffSetSpec::odd_power_diffs(Int m) { return DiffSetSpec(spec::OddPowerDiffs{m}); }
DiffSetSpec DiffSetSpec::difference_of(std::vector<Int> g) { return DiffSetSpec(spec::DifferenceOf{std::move(g)}); }
DiffSetSpec DiffSetSpec::residue_class(Int a, Int n) { return DiffSetSpec(spec::ResidueClass{a, n}); }
DiffSetSpec DiffSetSpec::all_naturals() { return DiffSetSpec(spec::AllNaturals{}); }

bool DiffSetSpec::contains(Int d) const
{
    if (d < 1) return false;
    return std::visit(
        overloaded{
            [d](const spec::Explicit& e) { return std::binary_search(e.values.begin(), e.values.end(), d); },
            [d](const spec::KthPowers& p) { return sat_pow(iroot(d, p.k), p.k) == d; },
            [d](const spec::PolynomialImage& p) {
                const int n = degree(p.coeffs);
                if (n < 1) return false;
                if (n == 1) return d % p.coeffs[1] == 0 && d / p.coeffs[1] >= 1;
                const Int stop = poly_escape_point(p.coeffs, d);
                for (Int x = 1; x < stop; ++x) {
                    if (poly_eval_wide(p.coeffs, x) == d) return true;
                }
                return false;
            },
            [d](const spec::OddPowerDiffs& o) {
                auto m = odd_power_diff_members(o.m, d);
                return !m.empty() && m.back() == d;
            },
            [d](const spec::DifferenceOf& g) {
                for (Int a : g.generators) {
                    if (std::binary_search(g.generators.begin(), g.generators.end(), a + d)) return true;
                }
                return false;
            },
            [d](const spec::ResidueClass& c) { return d % c.n == c.a; },
            [](const spec::AllNaturals&) { return true; },
        },
        v_);
}

std::vector<Int> DiffSetSpec::members(Int bound) const
{
    if (bound < 1) return {};
    return std::visit(
        overloaded{
            [bound](const spec::Explicit& e) {
                return std::vector<Int>(e.values.begin(), std::upper_bound(e.values.begin(), e.values.end(), bound));
            },
            [bound](const spec::KthPowers& p) {
                std::vector<Int> out;
                const Int top = iroot(bound, p.k);
                out.reserve(static_cast<std::size_t>(top));
                for (Int n = 1; n <= top; ++n) out.push_back(static_cast<Int>(sat_pow(n, p.k)));
                return out;
            },
            [bound](const spec::PolynomialImage& p) {
                std::vector<Int> out;
                const int n = degree(p.coeffs);
                if (n < 1) return out;
                if (n == 1) {
                    if (p.coeffs[1] > 0) {
                        for (Int v = p.coeffs[1]; v <= bound; v += p.coeffs[1]) out.push_back(v);
                    }
                    return out;
                }
                const Int stop = poly_escape_point(p.coeffs, bound);
                for (Int x = 1; x < stop; ++x) {
                    i128 v = poly_eval_wide(p.coeffs, x);
                    if (v >= 1 && v <= bound) out.push_back(static_cast<Int>(v));
                }
                return normalized(std::move(out));
            },
            [bound](const spec::OddPowerDiffs& o) { return odd_power_diff_members(o.m, bound); },
            [bound](const spec::DifferenceOf& g) {
                std::vector<Int> out;
                const auto& a = g.generators;
                for (std::size_t j = 0; j < a.size(); ++j) {
                    for (std::size_t i = 0; i < j; ++i) {
                        Int d = a[j] - a[i];
                        if (d <= bound) out.push_back(d);
                    }
                }
                return normalized(std::move(out));
            },
            [bound](const spec::ResidueClass& c) {
                std::vector<Int> out;
                for (Int v = c.a == 0 ? c.n : c.a; v <= bound; v += c.n) out.push_back(v);
                return out;
            },
            [bound](const spec::AllNaturals&) {
                std::vector<Int> out(static_cast<std::size_t>(bound));
                for (Int i = 0; i < bound; ++i) out[static_cast<std::size_t>(i)] = i + 1;
                return out;
            },
        },
        v_);
}

std::optional<Int> DiffSetSpec::first_member() const
{
    if (const auto* e = std::get_if<spec::Explicit>(&v_)) {
        if (e->values.empty()) return std::nullopt;
        return e->values.front();
    }
    if (is_finite()) {
        auto m = members(std::numeric_limits<Int>::max() / 4);
        if (m.empty()) return std::nullopt;
        return m.front();
    }
    if (const auto* p = std::get_if<spec::PolynomialImage>(&v_)) {
        const int n = degree(p->coeffs);
        if (n < 1) return std::nullopt;
        i128 tail = 0;
        for (int i = 0; i < n; ++i) tail += p->coeffs[static_cast<std::size_t>(i)] < 0 ? -static_cast<i128>(p->coeffs[static_cast<std::size_t>(i)]) : p->coeffs[static_cast<std::size_t>(i)];
        // beyond x = tail the sign of p is the sign of its leading coefficient
        std::optional<Int> best;
        for (Int x = 1; x <= static_cast<Int>(tail) + 1; ++x) {
            i128 v = poly_eval_wide(p->coeffs, x);
            if (v >= 1 && v <= std::numeric_limits<Int>::max() && (!best || v < *best)) best = static_cast<Int>(v);
        }
        if (!best) return std::nullopt;
        return members(*best).front();
    }
    for (Int bound = 64;; bound *= 4) {
        auto m = members(bound);
        if (!m.empty()) return m.front();
        if (bound > (Int{1} << 58)) return std::nullopt;
    }
}

bool DiffSetSpec::is_finite() const noexcept
{
    return std::holds_alternative<spec::Explicit>(v_) || std::holds_alternative<spec::DifferenceOf>(v_);
}

std::string DiffSetSpec::describe() const
{
    std::ostringstream os;
    auto list = [&os](const std::vector<Int>& v) {
        os << '[';
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << ']';
    };
    std::visit(overloaded{
                   [&](const spec::Explicit& e) { os << "Explicit("; list(e.values); os << ')'; },
                   [&](const spec::KthPowers& p) { os << "KthPowers(" << p.k << ')'; },
                   [&](const spec::PolynomialImage& p) { os << "PolynomialImage("; list(p.coeffs); os << ')'; },
                   [&](const spec::OddPowerDiffs& o) { os << "OddPowerDiffs(" << o.m << ')'; },
                   [&](const spec::DifferenceOf& g) { os << "DifferenceOf("; list(g.generators); os << ')'; },
                   [&](const spec::ResidueClass& c) { os << "ResidueClass(" << c.a << ',' << c.n << ')'; },
                   [&](const spec::AllNaturals&) { os << "AllNaturals"; },
               },
               v_);
    return os.str();
}

bool operator==(const DiffSetSpec& a, const DiffSetSpec& b) { return a.describe() == b.describe(); }

std::vector<Int> diffset_members(const DiffSetSpec& s, Int bound) { return s.members(bound); }
bool diffset_contains(const DiffSetSpec& s, Int d) { return s.contains(d); }

MembershipTable::MembershipTable(const DiffSetSpec& s, Int bound)
    : bound_(std::max<Int>(bound, 0)), bits_(static_cast<std::size_t>(bound_) + 1, 0), members_(s.members(bound_))
{
    for (Int d : members_) bits_[static_cast<std::size_t>(d)] = 1;
}

} // namespace vdw
