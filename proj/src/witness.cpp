#include "vdw/witness.hpp"

#include <algorithm>
#include <numeric>

namespace vdw {

std::size_t GridWitness::flat_index(std::span<const Int> coords) const
{
    std::size_t idx = 0;
    std::size_t stride = 1;
    for (std::size_t a = 0; a < dims.size(); ++a) {
        idx += static_cast<std::size_t>(coords[a]) * stride;
        stride *= static_cast<std::size_t>(dims[a]);
    }
    return idx;
}

std::vector<Int> GridWitness::coords_of(std::size_t flat) const
{
    std::vector<Int> out(dims.size());
    for (std::size_t a = 0; a < dims.size(); ++a) {
        out[a] = static_cast<Int>(flat % static_cast<std::size_t>(dims[a]));
        flat /= static_cast<std::size_t>(dims[a]);
    }
    return out;
}

bool validate_witness(const APWitness& w, const WindowColoring& c, const DiffSetSpec& s)
{
    if (w.k < 1 || w.d < 1 || !s.contains(w.d)) return false;
    if (w.a < 1 || w.a > c.n_max() || (w.k - 1) > (c.n_max() - w.a) / w.d) return false;
    for (Int i = 0; i < w.k; ++i) {
        if (c(w.a + i * w.d) != w.color) return false;
    }
    return true;
}

bool validate_witness(const SSeqWitness& w, const WindowColoring& c, const DiffSetSpec& s)
{
    if (w.elements.empty()) return false;
    for (std::size_t i = 0; i < w.elements.size(); ++i) {
        Int x = w.elements[i];
        if (!c.in_window(x) || c(x) != w.color) return false;
        if (i > 0 && (x <= w.elements[i - 1] || !s.contains(x - w.elements[i - 1]))) return false;
    }
    return true;
}

bool validate_witness(const PathWitness& w, const WindowColoring& c, const DiffSetSpec& s)
{
    return validate_witness(SSeqWitness{w.vertices, w.color}, c, s);
}

bool validate_witness(const PathWitness& w, const WindowColoring& c, const OrderedGraph& g)
{
    if (w.vertices.empty() || c.n_max() != g.vertex_count()) return false;
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        Int x = w.vertices[i];
        if (!c.in_window(x) || c(x) != w.color) return false;
        if (i > 0 && (x <= w.vertices[i - 1] || !g.adjacent(w.vertices[i - 1], x))) return false;
    }
    return true;
}

bool validate_witness(const PolyWitness& w, const WindowColoring& c, const DiffSetSpec& s)
{
    const auto* p = std::get_if<spec::PolynomialImage>(&s.variant());
    if (!p || w.k < 1 || w.d < 1 || w.step == 0) return false;
    auto step = poly_eval(p->coeffs, w.d);
    if (!step || *step != w.step) return false;
    for (Int i = 0; i <= w.k; ++i) {
        Int x = w.term(i);
        if (!c.in_window(x) || c(x) != w.color) return false;
    }
    return true;
}

bool validate_witness(const GridWitness& w, const WindowColoring& c, const DiffSetSpec& s)
{
    if (w.dims.empty() || w.axis_steps.size() != w.dims.size()) return false;
    std::size_t total = 1;
    for (std::size_t a = 0; a < w.dims.size(); ++a) {
        if (w.dims[a] < 1 || static_cast<Int>(w.axis_steps[a].size()) != w.dims[a] - 1) return false;
        total *= static_cast<std::size_t>(w.dims[a]);
    }
    if (w.points.size() != total) return false;
    for (Int x : w.points) {
        if (!c.in_window(x) || c(x) != w.color) return false;
    }
    std::vector<Int> sorted = w.points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

    std::size_t stride = 1;
    for (std::size_t a = 0; a < w.dims.size(); ++a) {
        for (std::size_t f = 0; f < total; ++f) {
            auto t = static_cast<Int>((f / stride) % static_cast<std::size_t>(w.dims[a]));
            if (t + 1 >= w.dims[a]) continue;
            Int diff = w.points[f + stride] - w.points[f];
            if (diff != w.axis_steps[a][static_cast<std::size_t>(t)] || !s.contains(diff < 0 ? -diff : diff)) return false;
        }
        stride *= static_cast<std::size_t>(w.dims[a]);
    }
    return true;
}

} // namespace vdw
