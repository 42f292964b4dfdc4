#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace vdw {

using Int = std::int64_t;

namespace spec {

/// A finite, strictly increasing list of positive integers.
struct Explicit {
    std::vector<Int> values;
};

/// { n^k : n >= 1 }.
struct KthPowers {
    int k = 1;
};

/// p(N) intersected with N, for p with integer coefficients and p(0) = 0.
/// coeffs[i] multiplies x^i.
struct PolynomialImage {
    std::vector<Int> coeffs;
};

/// S - S intersected with N where S = { m^(2k-1) : k >= 1 }.
struct OddPowerDiffs {
    Int m = 2;
};

/// A - A intersected with N for a finite generator set A.
struct DifferenceOf {
    std::vector<Int> generators;
};

/// { d >= 1 : d = a (mod n) }.
struct ResidueClass {
    Int a = 0;
    Int n = 1;
};

struct AllNaturals {};

} // namespace spec

/// Symbolic set of allowed differences with lazy membership and enumeration.
///
/// Every variant is validated on construction, so a DiffSetSpec that exists
/// is well formed. Members are positive integers; N starts at 1.
class DiffSetSpec {
public:
    using Variant = std::variant<spec::Explicit, spec::KthPowers, spec::PolynomialImage,
                                 spec::OddPowerDiffs, spec::DifferenceOf, spec::ResidueClass,
                                 spec::AllNaturals>;

    explicit DiffSetSpec(Variant v);

    static DiffSetSpec of_values(std::vector<Int> values);
    static DiffSetSpec kth_powers(int k);
    static DiffSetSpec polynomial_image(std::vector<Int> coeffs);
    static DiffSetSpec odd_power_diffs(Int m);
    static DiffSetSpec difference_of(std::vector<Int> generators);
    static DiffSetSpec residue_class(Int a, Int n);
    static DiffSetSpec all_naturals();

    const Variant& variant() const noexcept { return v_; }

    bool contains(Int d) const;

    /// Members in [1, bound], strictly increasing.
    std::vector<Int> members(Int bound) const;

    /// Least member, if any. Searches up to 2^62 for structured variants.
    std::optional<Int> first_member() const;

    bool is_finite() const noexcept;

    /// Short human-readable label, e.g. "KthPowers(2)".
    std::string describe() const;

    friend bool operator==(const DiffSetSpec& a, const DiffSetSpec& b);

private:
    Variant v_;
};

std::vector<Int> diffset_members(const DiffSetSpec& s, Int bound);
bool diffset_contains(const DiffSetSpec& s, Int d);

/// Evaluates p(x); nullopt when the value leaves the 64-bit range.
std::optional<Int> poly_eval(const std::vector<Int>& coeffs, Int x);

/// Smallest X >= 1 such that |p(x)| > bound for every x >= X.
/// Requires p nonconstant.
Int poly_escape_point(const std::vector<Int>& coeffs, Int bound);

/// Dense membership table of a spec over [1, bound].
class MembershipTable {
public:
    MembershipTable() = default;
    MembershipTable(const DiffSetSpec& s, Int bound);

    Int bound() const noexcept { return bound_; }
    bool contains(Int d) const noexcept { return d >= 1 && d <= bound_ && bits_[static_cast<std::size_t>(d)]; }
    const std::vector<Int>& members() const noexcept { return members_; }

private:
    Int bound_ = 0;
    std::vector<char> bits_;
    std::vector<Int> members_;
};

} // namespace vdw
