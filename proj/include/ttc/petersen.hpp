#pragma once

#include "ttc/coloring.hpp"
#include "ttc/graph.hpp"
#include "ttc/labeling.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace ttc {

// A cycle whose edge labels pair up.  For kind xxyyzz the cycle has length
// 6 with vertices x_0..x_5 and edges eps_i = x_{i-1} x_i (eps_6 closing),
// where eps_1/eps_2, eps_3/eps_4, eps_5/eps_6 carry equal labels.  For kind
// nxxyy the cycle has length 5 with eps_i = x_i x_{i+1}, eps_0 near, and
// eps_1/eps_2, eps_3/eps_4 carrying equal labels.
struct CycleWitness {
    enum class Kind { xxyyzz, nxxyy };
    Kind kind = Kind::xxyyzz;
    std::vector<int> vertices;
    std::vector<int> edges; // eps in the order above
};

// An edge cut all of whose edges are far; exists iff the near graph is
// disconnected.
struct FarEdgeCut {
    std::vector<int> a_side; // near-component of the least vertex
    std::vector<int> b_side;
    std::vector<int> edges;  // increasing edge indices
};

enum class PetersenStructure { far_edge_cut, xxyyzz, nxxyy, none };

struct DetectionResult {
    PetersenStructure found = PetersenStructure::none;
    std::optional<FarEdgeCut> cut;
    std::optional<CycleWitness> witness;
    // full census, independent of the priority order
    int near_components = 1;
    int xxyyzz_count = 0;
    int nxxyy_count = 0;
};

// Cached cycle catalogs of the Petersen graph; counts are asserted against
// the enumeration (12 pentagons, 10 hexagons) on first use.
const std::vector<std::vector<int>>& petersen_pentagons();
const std::vector<std::vector<int>>& petersen_hexagons();

// Scans in priority order far-edge-cut > xxyyzz > nxxyy and also reports
// how many structures of each kind the labeling admits.
DetectionResult detect_structures(const Graph& petersen, const NearFarLabeling& lab);

// Zigzag coloring with the three pair-boundary-complement vertices as the
// zero set; valid at (5,1).
ThresholdColoring color_via_xxyyzz(const Graph& petersen, const NearFarLabeling& lab,
                                   const CycleWitness& w);

// The five-cycle colorer: zeroes the ends of the near edge and the joint of
// the middle pair, colors the remaining seven vertices in the forced order,
// and repairs the odd-parity case by tripling and nudging the two cycle
// vertices that see no zero.  Valid at (14,4).
ThresholdColoring color_via_nxxyy(const Graph& petersen, const NearFarLabeling& lab,
                                  const CycleWitness& w);

// Lifts a coloring valid for (N with S moved near) at (r,t) to one valid
// for the original labeling: the side of the cut without the least vertex
// shifts by r+t, making every cut edge far.  Valid at (2r+t, t).
ThresholdColoring split_and_lift(const Graph& petersen, const NearFarLabeling& lab,
                                 const FarEdgeCut& cut, const ThresholdColoring& child);

// Total colorer by recursion on the number of far edges: far-edge-cuts are
// relabeled near and lifted, otherwise one of the two cycle structures
// applies.  With unify set, base cases are first embedded into (14,4) so
// the threshold stays 4 throughout the recursion.
ThresholdColoring petersen_color(const Graph& petersen, const NearFarLabeling& lab,
                                 bool unify = false);

struct PetersenAudit {
    std::uint64_t labelings = 0;
    std::uint64_t far_edge_cut = 0;
    std::uint64_t xxyyzz = 0;
    std::uint64_t nxxyy = 0;
    std::uint64_t uncovered = 0;
    // labelings with a connected near graph but neither cycle structure;
    // the case analysis says there are none
    std::uint64_t connected_without_cycles = 0;
};

// Classifies every labeling by its first structure in priority order.
PetersenAudit audit_case_analysis(int jobs = 1);

} // namespace ttc
