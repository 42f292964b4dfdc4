#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "vdw/colorings.hpp"
#include "vdw/error.hpp"
#include "vdw/graph.hpp"
#include "vdw/search.hpp"

using namespace vdw;

namespace {

// independent digit coloring: count even positions >= 2 holding a 2
Color digit_oracle(Int n, Int m)
{
    const auto d = oracle::digits(n, m);
    int count = 0;
    for (std::size_t j = 2; j < d.size(); j += 2) count += d[j] == 2;
    return static_cast<Color>(count % 3 + 1);
}

WindowColoring from(std::vector<Color> v, Color r)
{
    const auto n = static_cast<Int>(v.size());
    return WindowColoring(n, r, std::move(v));
}

} // namespace

TEST_CASE("digit coloring")
{
    CHECK(digit_color(2, 5) == 1);
    CHECK(digit_color(50, 5) == 2);
    CHECK(digit_color(1300, 5) == 3);
    for (Int m : {5, 6, 7, 10}) {
        const auto c = base_m_digit_coloring({m, false}, 20'000);
        CHECK(c.r() == 3);
        for (Int n = 1; n <= 20'000; ++n) REQUIRE(c(n) == digit_oracle(n, m));
    }
    CHECK_THROWS_AS(base_m_digit_coloring({4, false}, 10), HypothesisViolation);
    CHECK_NOTHROW(base_m_digit_coloring({3, true}, 10));
}

TEST_CASE("product coloring is the common refinement")
{
    const auto a = random_coloring(1000, 3, 1);
    const auto b = random_coloring(1000, 4, 2);
    const auto p = product_coloring(a, b);
    CHECK(p.r() == 12);
    for (Int x = 1; x <= 1000; ++x) {
        for (Int y = x + 1; y <= 1000; ++y) REQUIRE((p(x) == p(y)) == (a(x) == a(y) && b(x) == b(y)));
    }
    CHECK(same_partition(product_coloring(constant_coloring(30), mod_coloring(30, 4)), mod_coloring(30, 4)));
    CHECK(same_partition(product_coloring(parity_coloring(30), parity_coloring(30)), parity_coloring(30)));
    CHECK(same_partition(product_coloring(parity_coloring(12), mod_coloring(12, 3)), mod_coloring(12, 6)));
    CHECK_THROWS_AS(product_coloring(parity_coloring(4), parity_coloring(5)), WindowMismatch);
}

TEST_CASE("mod refinement")
{
    const auto c = random_coloring(300, 2, 9);
    CHECK(same_partition(mod_refinement(c, 1), c));
    CHECK(same_partition(mod_refinement(constant_coloring(20), 2), parity_coloring(20)));
    CHECK(same_partition(mod_refinement(mod_coloring(16, 2), 4), mod_coloring(16, 4)));
    const auto r = mod_refinement(c, 7);
    for (Int x = 1; x <= 300; ++x) {
        for (Int y = x + 1; y <= 300; ++y) {
            if (r(x) == r(y)) REQUIRE(((y - x) % 7 == 0 && c(x) == c(y)));
        }
    }
    // refinement never lengthens monochromatic APs
    for (Int q : {2, 3, 5}) {
        CHECK(max_mono_ap_length(r, DiffSetSpec::all_naturals(), 300).length <=
              max_mono_ap_length(c, DiffSetSpec::all_naturals(), 300).length);
        CHECK(max_mono_ap_length(mod_refinement(c, q), DiffSetSpec::kth_powers(2), 300).length <=
              max_mono_ap_length(c, DiffSetSpec::kth_powers(2), 300).length);
    }
}

TEST_CASE("block coloring")
{
    const auto c = random_coloring(60, 3, 4);
    CHECK(same_partition(block_coloring(c, 1), c));
    CHECK(same_partition(block_coloring(parity_coloring(20), 2), constant_coloring(10)));
    const auto b = block_coloring(mod_coloring(12, 3), 2);
    CHECK(b.n_max() == 6);
    CHECK(used_colors(b) == 3);
    for (Int i = 1; i + 3 <= 6; ++i) CHECK(b(i) == b(i + 3));
    const auto b5 = block_coloring(c, 5);
    for (Int i = 1; i <= 12; ++i) {
        for (Int j = 1; j <= 12; ++j) {
            bool same = true;
            for (Int t = 1; t <= 5; ++t) same = same && c((i - 1) * 5 + t) == c((j - 1) * 5 + t);
            REQUIRE((b5(i) == b5(j)) == same);
        }
    }
    // 3^40 does not fit a color index: compact ranks still separate tuples
    const auto wide = block_coloring(random_coloring(400, 3, 1), 40);
    CHECK(wide.n_max() == 10);
    CHECK(used_colors(wide) == 10);
}

TEST_CASE("interval blocking on powers of two")
{
    std::vector<Int> s;
    for (Int i = 1; i <= 20; ++i) s.push_back(Int{1} << i);
    const auto ib = interval_blocking_coloring(s, 1, 10'000);
    CHECK(ib.coloring.r() == 4);
    REQUIRE(ib.plan.lengths.size() >= 5);
    CHECK(ib.plan.anchors.front() == 1);
    CHECK(std::vector<Int>(ib.plan.lengths.begin(), ib.plan.lengths.begin() + 5) == std::vector<Int>{3, 5, 17, 33, 65});
    CHECK(plan_satisfies_invariants(ib.plan, s));
    for (Int x = 1; x <= 10'000; ++x) {
        for (Int d : s) {
            if (x + d > 10'000) break;
            if (ib.coloring(x) == ib.coloring(x + d)) REQUIRE(ib.plan.interval_of(x) == ib.plan.interval_of(x + d));
        }
    }
    // consecutive intervals alternate base colors
    for (std::size_t j = 0; j + 1 < ib.plan.starts.size(); ++j) {
        const Color a = ib.coloring(ib.plan.starts[j]);
        const Color b = ib.coloring(ib.plan.starts[j + 1]);
        CHECK((a - 1) / 2 != (b - 1) / 2);
    }
}

TEST_CASE("interval blocking needs growing gaps")
{
    std::vector<Int> s;
    for (Int i = 1; i <= 100; ++i) s.push_back(i);
    CHECK_THROWS_AS(interval_blocking_coloring(s, 1, 50), InsufficientPrefix);
    std::vector<Int> short_prefix{2, 4, 8};
    CHECK_THROWS_AS(interval_blocking_coloring(short_prefix, 1, 10'000), InsufficientPrefix);
}

TEST_CASE("tail recoloring examples")
{
    const auto tr = tail_recoloring(parity_coloring(10), DiffSetSpec::of_values({2}));
    CHECK(tr.tails == std::vector<Int>{9, 10});
    CHECK(tr.coloring.r() == 4);
    CHECK(tr.coloring(9) == 3);
    CHECK(tr.coloring(10) == 4);
    for (Int x = 1; x <= 8; ++x) CHECK(tr.coloring(x) == parity_coloring(10)(x));

    const auto one = tail_recoloring(constant_coloring(4), DiffSetSpec::of_values({1}));
    CHECK(one.tails == std::vector<Int>{4});
    CHECK(one.max_length == 4);

    const auto none = tail_recoloring(random_coloring(5, 2, 3), DiffSetSpec::of_values({9}));
    CHECK(none.warning);
    CHECK(none.tails.empty());
    CHECK(same_partition(none.coloring, random_coloring(5, 2, 3)));
}

TEST_CASE("tail recoloring decreases the maximum on the whole window")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto c = random_coloring(200, 2, seed);
        for (const auto& s : {DiffSetSpec::kth_powers(2), DiffSetSpec::of_values({1, 2}), DiffSetSpec::of_values({3, 5})}) {
            const Int before = longest_mono_s_sequence(c, s).length();
            const auto tr = tail_recoloring(c, s);
            CHECK(tr.max_length == before);
            if (before >= 2) CHECK(longest_mono_s_sequence(tr.coloring, s).length() < before);
            for (Int x = 1; x <= 200; ++x) {
                const bool tail = std::binary_search(tr.tails.begin(), tr.tails.end(), x);
                CHECK(tr.coloring(x) == c(x) + (tail ? 2 : 0));
            }
        }
    }
}

TEST_CASE("path recoloring examples")
{
    const auto edgeless = OrderedGraph::from_edges(5, {});
    const auto c = random_coloring(5, 3, 2);
    const auto pr = path_recoloring(edgeless, c);
    CHECK(pr.k == 0);
    CHECK(pr.coloring == WindowColoring(5, 3, std::vector<Color>(c.colors().begin(), c.colors().end())));

    const auto path = OrderedGraph::from_edges(3, {{1, 2}, {2, 3}});
    const auto p3 = path_recoloring(path, constant_coloring(3));
    CHECK(std::vector<Int>(p3.beta.begin() + 1, p3.beta.end()) == std::vector<Int>{2, 1, 0});
    CHECK(std::vector<Color>(p3.coloring.colors().begin(), p3.coloring.colors().end()) == std::vector<Color>{3, 2, 1});

    const auto d1 = OrderedGraph::distance_graph(DiffSetSpec::of_values({1}), 6);
    const auto pp = path_recoloring(d1, parity_coloring(6));
    CHECK(pp.k == 0);
    CHECK(same_partition(pp.coloring, parity_coloring(6)));
    CHECK_THROWS_AS(path_recoloring(d1, parity_coloring(7)), WindowMismatch);
}

TEST_CASE("path recoloring invariant")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto c = random_coloring(300, 2 + static_cast<Color>(seed % 2), seed);
        const auto g = OrderedGraph::distance_graph(DiffSetSpec::of_values({1, 2, 4}), 300);
        const auto pr = path_recoloring(g, c);
        CHECK(pr.coloring.r() == c.r() * (pr.k + 1));
        for (Int x = 1; x <= 300; ++x) {
            g.for_each_upper_neighbor(x, [&](Int y) {
                if (c(x) != c(y)) return;
                CHECK(pr.beta[static_cast<std::size_t>(x)] >= pr.beta[static_cast<std::size_t>(y)] + 1);
                CHECK(pr.coloring(x) != pr.coloring(y));
            });
        }
    }
}

TEST_CASE("simple colorings")
{
    CHECK(from({1, 2, 1, 2}, 2) == parity_coloring(4));
    CHECK(mod_coloring(5, 3) == from({2, 3, 1, 2, 3}, 3));
    CHECK(random_coloring(100, 3, 5) == random_coloring(100, 3, 5));
    CHECK_FALSE(random_coloring(100, 3, 5) == random_coloring(100, 3, 6));
}
