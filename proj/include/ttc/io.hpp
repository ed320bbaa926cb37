#pragma once

#include "ttc/coloring.hpp"
#include "ttc/graph.hpp"
#include "ttc/labeling.hpp"

#include <optional>
#include <string>
#include <utility>

namespace ttc {

// Line-oriented graph text:
//   graph <name>
//   vertices <n>
//   edge <u> <v> [near|far]    # default near
// '#' starts a comment; blank lines are skipped; unknown directives are
// rejected.  Parse errors carry line and column.
struct GraphDocument {
    std::string name;
    Graph graph{0, {}};
    NearFarLabeling labeling;
};

GraphDocument parse_graph_file(const std::string& text);

// Canonical formatting: name, vertex count, then one explicit-label edge
// line per edge in index order.  parse(serialize(parse(x))) == parse(x).
std::string serialize_graph_file(const GraphDocument& doc);

// Coloring text:
//   pair <r>,<t>
//   color <vertex> <integer>
ThresholdColoring parse_coloring_file(const std::string& text, int vertex_count);
std::string serialize_coloring_file(const ThresholdColoring& col);

// "r,t"
std::optional<ParamPair> parse_pair(const std::string& text);

// Graphviz text with near edges solid and far edges dashed.
std::string export_dot(const GraphDocument& doc);

// True when g has exactly the edge set of build_family(family, n) for the n
// implied by its vertex count; returns that n.
std::optional<int> matches_family(const Graph& g, Family family);

} // namespace ttc
