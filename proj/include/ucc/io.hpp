// io.hpp -- file formats: family JSON/text, graph JSON/edge-list text,
// bijection JSON and suitable-index JSON.
//
// Families are stored in display labels. Zero-based files use 0..u-1; a file
// with "one_based": true uses labels 1..u where label u stands for element 0,
// so the paper's Z_n tables reproduce character for character.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ucc/bipartite.hpp"
#include "ucc/set_family.hpp"
#include "ucc/symmetry.hpp"
#include "ucc/translates.hpp"

namespace ucc {

int display_label(int element, int universe, bool one_based);
int internal_element(int label, int universe, bool one_based);
// sorted ascending display labels of a member set
std::vector<int> display_set(Mask m, int universe, bool one_based);

// A family plus its display convention, and, when it came from the translate
// pipeline, enough provenance to rebuild the tuple structure downstream.
struct FamilyDoc {
    SetFamily family;
    bool one_based = false;
    std::optional<std::vector<int>> translate_base;  // internal elements
    std::optional<int> translate_anchor;             // internal
    std::optional<SuitableIndex> suitable;

    bool operator==(const FamilyDoc&) const = default;
};

nlohmann::json family_to_json(const FamilyDoc& doc);
FamilyDoc family_from_json(const nlohmann::json& j);

// one set per line, elements whitespace-separated, '#' comments, '-' for the
// empty set; the writer adds a "# ucc-lab family ..." pragma the reader uses
std::string family_to_text(const FamilyDoc& doc);
FamilyDoc family_from_text(const std::string& text,
                           std::optional<int> universe_override = std::nullopt,
                           std::optional<bool> one_based_override = std::nullopt);

// autodetects JSON ('{' first) vs text
FamilyDoc read_family(std::istream& in,
                      std::optional<int> universe_override = std::nullopt,
                      std::optional<bool> one_based_override = std::nullopt);

nlohmann::json graph_to_json(const BipartiteGraph& g);
BipartiteGraph graph_from_json(const nlohmann::json& j);

// header "bipartite |X| |Y|", then one "x_label y_label" line per edge
std::string graph_to_text(const BipartiteGraph& g);
BipartiteGraph graph_from_text(const std::string& text);

BipartiteGraph read_graph(std::istream& in);

nlohmann::json bijection_to_json(const BipartiteGraph& g, const VertexBijection& f);
VertexBijection bijection_from_json(const nlohmann::json& j, const BipartiteGraph& g);

nlohmann::json suitable_to_json(const SuitableIndex& s);
SuitableIndex suitable_from_json(const nlohmann::json& j);

}  // namespace ucc
