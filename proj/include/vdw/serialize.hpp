#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "vdw/coloring.hpp"
#include "vdw/diffset.hpp"
#include "vdw/witness.hpp"

namespace vdw {

// Coloring file:
//   # <provenance JSON>        (optional, any number of '#' lines)
//   N r
//   c_1 c_2 ... c_N
void write_coloring(std::ostream& os, const WindowColoring& c);
WindowColoring read_coloring(std::istream& is);
WindowColoring read_coloring_file(const std::string& path);
void write_coloring_file(const std::string& path, const WindowColoring& c);

/// Externally tagged: {"KthPowers":{"k":2}}, {"AllNaturals":{}}, ...
nlohmann::json to_json(const DiffSetSpec& s);
DiffSetSpec spec_from_json(const nlohmann::json& j);
DiffSetSpec parse_spec(const std::string& text);

/// {"type":"APWitness","a":..,"d":..,"k":..,"color":..} and friends.
nlohmann::json to_json(const APWitness& w);
nlohmann::json to_json(const SSeqWitness& w);
nlohmann::json to_json(const PathWitness& w);
nlohmann::json to_json(const PolyWitness& w);
nlohmann::json to_json(const GridWitness& w);

APWitness ap_witness_from_json(const nlohmann::json& j);
SSeqWitness sseq_witness_from_json(const nlohmann::json& j);
GridWitness grid_witness_from_json(const nlohmann::json& j);

/// {"n_max":N,"r":r,"colors":[...]} (provenance omitted).
nlohmann::json coloring_to_json(const WindowColoring& c);
WindowColoring coloring_from_json(const nlohmann::json& j);

} // namespace vdw
