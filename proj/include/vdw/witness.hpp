#pragma once

#include <span>
#include <vector>

#include "vdw/coloring.hpp"
#include "vdw/diffset.hpp"
#include "vdw/graph.hpp"

namespace vdw {

/// Monochromatic progression a, a+d, ..., a+(k-1)d.
struct APWitness {
    Int a = 1;
    Int d = 1;
    Int k = 1;
    Color color = 1;

    friend bool operator==(const APWitness&, const APWitness&) = default;
};

/// Monochromatic x_1 < ... < x_k with every gap in the spec.
struct SSeqWitness {
    std::vector<Int> elements;
    Color color = 1;

    Int length() const noexcept { return static_cast<Int>(elements.size()); }
    friend bool operator==(const SSeqWitness&, const SSeqWitness&) = default;
};

/// Strictly increasing monochromatic path in an ordered graph.
struct PathWitness {
    std::vector<Int> vertices;
    Color color = 1;

    friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

/// Monochromatic a, a + p(d), ..., a + k p(d); `step` caches p(d).
struct PolyWitness {
    Int a = 1;
    Int d = 1;
    Int step = 1;
    Int k = 1;
    Color color = 1;

    Int term(Int i) const noexcept { return a + i * step; }
    friend bool operator==(const PolyWitness&, const PolyWitness&) = default;
};

/// Monochromatic copy of the grid P_{dims[0]} x ... x P_{dims[n-1]}.
///
/// Points are stored flat with axis 0 varying fastest. Moving one step along
/// axis `a` from a point whose coordinate on that axis is t adds
/// axis_steps[a][t], so parallel edges share a step value.
struct GridWitness {
    std::vector<Int> dims;
    std::vector<Int> points;
    Color color = 1;
    std::vector<std::vector<Int>> axis_steps;

    std::size_t flat_index(std::span<const Int> coords) const;
    Int point(std::span<const Int> coords) const { return points[flat_index(coords)]; }
    std::vector<Int> coords_of(std::size_t flat) const;

    friend bool operator==(const GridWitness&, const GridWitness&) = default;
};

bool validate_witness(const APWitness& w, const WindowColoring& c, const DiffSetSpec& s);
bool validate_witness(const SSeqWitness& w, const WindowColoring& c, const DiffSetSpec& s);
/// Checks the path against the distance graph of `s`.
bool validate_witness(const PathWitness& w, const WindowColoring& c, const DiffSetSpec& s);
bool validate_witness(const PathWitness& w, const WindowColoring& c, const OrderedGraph& g);
/// `s` must be a PolynomialImage; the cached step is re-evaluated from d.
bool validate_witness(const PolyWitness& w, const WindowColoring& c, const DiffSetSpec& s);
bool validate_witness(const GridWitness& w, const WindowColoring& c, const DiffSetSpec& s);

} // namespace vdw
