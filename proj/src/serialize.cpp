#include "vdw/serialize.hpp"

#include <fstream>
#include <sstream>

#include "vdw/error.hpp"

namespace vdw {

using nlohmann::json;

void write_coloring(std::ostream& os, const WindowColoring& c)
{
    if (!c.provenance().is_null()) os << "# " << c.provenance().dump() << '\n';
    os << c.n_max() << ' ' << c.r() << '\n';
    bool first = true;
    for (Color x : c.colors()) {
        if (!first) os << ' ';
        os << x;
        first = false;
    }
    os << '\n';
}

WindowColoring read_coloring(std::istream& is)
{
    json provenance;
    std::string line;
    while (is.peek() == '#') {
        std::getline(is, line);
        auto body = line.substr(1);
        if (provenance.is_null()) {
            try {
                provenance = json::parse(body);
            } catch (const json::exception&) {
                // free-form comment
            }
        }
    }
    long long n = 0;
    long long r = 0;
    if (!(is >> n >> r)) throw ParseError("coloring file: expected header 'N r'");
    if (n < 1) throw ParseError("coloring file: window must be nonempty (N >= 1)");
    if (r < 1) throw ParseError("coloring file: need r >= 1");
    std::vector<Color> colors;
    colors.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
        long long x;
        if (!(is >> x)) throw ParseError("coloring file: expected " + std::to_string(n) + " colors, got " + std::to_string(i));
        if (x < 1 || x > r) throw ParseError("coloring file: color " + std::to_string(x) + " at position " + std::to_string(i + 1) + " outside [1," + std::to_string(r) + "]");
        colors.push_back(static_cast<Color>(x));
    }
    long long extra;
    if (is >> extra) throw ParseError("coloring file: more than N colors");
    return WindowColoring(n, static_cast<Color>(r), std::move(colors), std::move(provenance));
}

WindowColoring read_coloring_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open coloring file '" + path + "'");
    return read_coloring(in);
}

void write_coloring_file(const std::string& path, const WindowColoring& c)
{
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    write_coloring(out, c);
}

json to_json(const DiffSetSpec& s)
{
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, spec::Explicit>) return {{"Explicit", {{"values", v.values}}}};
            else if constexpr (std::is_same_v<T, spec::KthPowers>) return {{"KthPowers", {{"k", v.k}}}};
            else if constexpr (std::is_same_v<T, spec::PolynomialImage>) return {{"PolynomialImage", {{"coeffs", v.coeffs}}}};
            else if constexpr (std::is_same_v<T, spec::OddPowerDiffs>) return {{"OddPowerDiffs", {{"m", v.m}}}};
            else if constexpr (std::is_same_v<T, spec::DifferenceOf>) return {{"DifferenceOf", {{"generators", v.generators}}}};
            else if constexpr (std::is_same_v<T, spec::ResidueClass>) return {{"ResidueClass", {{"a", v.a}, {"n", v.n}}}};
            else return {{"AllNaturals", json::object()}};
        },
        s.variant());
}

namespace {

template <class T>
T field(const json& body, const char* name, const std::string& tag)
{
    if (!body.is_object() || !body.contains(name)) throw ParseError("spec " + tag + ": missing field '" + name + "'");
    try {
        return body.at(name).get<T>();
    } catch (const json::exception& e) {
        throw ParseError("spec " + tag + ": bad field '" + std::string(name) + "': " + e.what());
    }
}

} // namespace

DiffSetSpec spec_from_json(const json& j)
{
    if (j.is_string()) {
        // bare tag, e.g. "AllNaturals"
        return spec_from_json(json{{j.get<std::string>(), json::object()}});
    }
    if (!j.is_object() || j.size() != 1) throw ParseError("spec: expected an object with exactly one variant tag");
    const auto& [tag, body] = *j.items().begin();
    if (tag == "Explicit") {
        if (body.is_array()) return DiffSetSpec::of_values(body.get<std::vector<Int>>());
        return DiffSetSpec::of_values(field<std::vector<Int>>(body, "values", tag));
    }
    if (tag == "KthPowers") return DiffSetSpec::kth_powers(field<int>(body, "k", tag));
    if (tag == "PolynomialImage") return DiffSetSpec::polynomial_image(field<std::vector<Int>>(body, "coeffs", tag));
    if (tag == "OddPowerDiffs") return DiffSetSpec::odd_power_diffs(field<Int>(body, "m", tag));
    if (tag == "DifferenceOf") return DiffSetSpec::difference_of(field<std::vector<Int>>(body, "generators", tag));
    if (tag == "ResidueClass") return DiffSetSpec::residue_class(field<Int>(body, "a", tag), field<Int>(body, "n", tag));
    if (tag == "AllNaturals") return DiffSetSpec::all_naturals();
    throw ParseError("spec: unknown variant '" + tag + "'");
}

DiffSetSpec parse_spec(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("spec: malformed JSON: ") + e.what());
    }
    return spec_from_json(j);
}

json to_json(const APWitness& w)
{
    return {{"type", "APWitness"}, {"a", w.a}, {"d", w.d}, {"k", w.k}, {"color", w.color}};
}

json to_json(const SSeqWitness& w)
{
    return {{"type", "SSeqWitness"}, {"elements", w.elements}, {"color", w.color}};
}

json to_json(const PathWitness& w)
{
    return {{"type", "PathWitness"}, {"vertices", w.vertices}, {"color", w.color}};
}

json to_json(const PolyWitness& w)
{
    std::vector<Int> terms;
    for (Int i = 0; i <= w.k; ++i) terms.push_back(w.term(i));
    return {{"type", "PolyWitness"}, {"a", w.a}, {"d", w.d}, {"step", w.step}, {"k", w.k}, {"color", w.color}, {"terms", terms}};
}

json to_json(const GridWitness& w)
{
    json pts = json::array();
    for (std::size_t f = 0; f < w.points.size(); ++f) pts.push_back({{"coords", w.coords_of(f)}, {"value", w.points[f]}});
    return {{"type", "GridWitness"}, {"dims", w.dims}, {"points", pts}, {"color", w.color}, {"axis_steps", w.axis_steps}};
}

APWitness ap_witness_from_json(const json& j)
{
    return APWitness{j.at("a").get<Int>(), j.at("d").get<Int>(), j.at("k").get<Int>(), j.at("color").get<Color>()};
}

SSeqWitness sseq_witness_from_json(const json& j)
{
    return SSeqWitness{j.at("elements").get<std::vector<Int>>(), j.at("color").get<Color>()};
}

GridWitness grid_witness_from_json(const json& j)
{
    GridWitness w;
    w.dims = j.at("dims").get<std::vector<Int>>();
    w.color = j.at("color").get<Color>();
    w.axis_steps = j.at("axis_steps").get<std::vector<std::vector<Int>>>();
    std::size_t total = 1;
    for (Int d : w.dims) total *= static_cast<std::size_t>(d);
    w.points.assign(total, 0);
    for (const auto& p : j.at("points")) {
        auto coords = p.at("coords").get<std::vector<Int>>();
        if (coords.size() != w.dims.size()) throw ParseError("GridWitness: coordinate arity mismatch");
        w.points.at(w.flat_index(coords)) = p.at("value").get<Int>();
    }
    return w;
}

json coloring_to_json(const WindowColoring& c)
{
    return {{"n_max", c.n_max()}, {"r", c.r()}, {"colors", std::vector<Color>(c.colors().begin(), c.colors().end())}};
}

WindowColoring coloring_from_json(const json& j)
{
    return WindowColoring(j.at("n_max").get<Int>(), j.at("r").get<Color>(), j.at("colors").get<std::vector<Color>>());
}

} // namespace vdw
