#pragma once

#include "ttc/coloring.hpp"
#include "ttc/graph.hpp"
#include "ttc/labeling.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ttc {

// Decomposition driving the sign-propagation colorer: a bipartition (A, B)
// of the vertices plus a set M of A-B edges that may be relabeled.
//
// The usable instances satisfy:
//   (i)   every edge inside A is near,
//   (ii)  every cycle of G[B] contains an even number of far edges,
//   (iii) M is an induced matching of A-B edges (vertex sets of distinct
//         M-edges at distance >= 2),
//   (iv)  for every b in B, all non-M edges from b into A carry one label.
struct ZigzagInstance {
    std::vector<int> a_side; // increasing vertex indices
    std::vector<int> b_side;
    std::vector<int> m_edges; // edge indices
};

struct ConditionReport {
    struct Entry {
        bool ok = true;
        std::string witness; // empty when ok
    };
    Entry edge_inside_a_near;   // (i)
    Entry b_cycles_even_far;    // (ii)
    Entry m_induced_matching;   // (iii)
    Entry a_edges_consistent;   // (iv)

    bool all_ok() const {
        return edge_inside_a_near.ok && b_cycles_even_far.ok && m_induced_matching.ok &&
               a_edges_consistent.ok;
    }
    std::string summary() const;
};

// Checks conditions (i)-(iv) and reports a failure witness per condition.
// Throws structural_error when (A, B) is not a bipartition of V.
ConditionReport check_conditions(const Graph& g, const NearFarLabeling& lab,
                                 const ZigzagInstance& inst);

// Colors the graph from a valid instance.
//
// Construction: relabel (N xor M, F xor M); color A with 0; take the BFS
// spanning forest of G[B] rooted at the least vertex of each component; a
// root gets magnitude 1 when its A-edges are near (or it has none), 2 when
// they are far; each tree step copies the parent's sign on a near edge and
// flips it on a far edge, with magnitude 1 iff the vertex has near A-edges.
// Non-tree B-edges are then already consistent (their sign relation is
// asserted, not assumed).  With M empty the result is valid at (5,1);
// otherwise colors are tripled and the endpoints of each relabeled M-edge
// nudged by +-1, giving (13,4).  The output is re-verified before returning.
ThresholdColoring zigzag_color(const Graph& g, const NearFarLabeling& lab,
                               const ZigzagInstance& inst);

// Fan colorer: apex 0; spine colored left to right with magnitude 1/2 by
// the apex edge label and a sign flip exactly on far spine edges.  Valid at
// (5,1) for every labeling.
ThresholdColoring fan_color(int n, const NearFarLabeling& lab);
ThresholdColoring fan_color(const Graph& fan, const NearFarLabeling& lab);

// Ladder colorer: the fixed 2-independent set {v_0, v_4, ...} u {u_2, u_6, ...}
// as A, M empty, via zigzag_color.  Valid at (5,1) for every labeling.
ThresholdColoring ladder_color(int n, const NearFarLabeling& lab);
ThresholdColoring ladder_color(const Graph& ladder, const NearFarLabeling& lab);

// The A-side used by ladder_color.
std::vector<int> ladder_zigzag_a_side(const Graph& ladder);

} // namespace ttc
