#pragma once

#include "ttc/graph.hpp"
#include "ttc/labeling.hpp"

#include <tuple>
#include <vector>

namespace ttc {

// How a prism contraction renamed things: old vertex -> new vertex, and for
// every new edge the list of old edges it came from (the merged spoke has
// two preimages, everything else one).
struct ContractionRecord {
    int square = 0;
    std::vector<int> vertex_map;
    std::vector<std::vector<int>> edge_preimages;
};

// Contracts the two near peripheral edges of square i of a prism whose
// square i is balanced parallel with far spokes, producing the prism one
// shorter; its two spokes merge into one far spoke.  The labeling carries
// over: (N minus the contracted peripherals, F reindexed).
std::tuple<Graph, NearFarLabeling, ContractionRecord>
contract_square_near_edges(const Graph& g, const NearFarLabeling& lab, int square);

} // namespace ttc
