#pragma once

#include "ttc/coloring.hpp"
#include "ttc/contract.hpp"
#include "ttc/graph.hpp"
#include "ttc/labeling.hpp"
#include "ttc/zigzag.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ttc {

enum class SquareKind : std::uint8_t {
    balanced_parallel,    // 2 far + 2 near, near edges opposite
    balanced_nonparallel, // 2 far + 2 near, near edges adjacent
    unbalanced_even,      // 0 or 4 far
    unbalanced_odd,       // 3:1 split
};

struct SquareClass {
    int index = 0;
    SquareKind kind = SquareKind::unbalanced_even;
    std::optional<int> deviator;         // present iff unbalanced_odd
    std::pair<bool, bool> spokes_far{};  // left, right
    int far_count = 0;

    bool balanced() const {
        return kind == SquareKind::balanced_parallel || kind == SquareKind::balanced_nonparallel;
    }
    bool unbalanced() const { return !balanced(); }
    bool even() const { return far_count % 2 == 0; }
};

std::vector<SquareClass> classify_squares(const Graph& prism, const NearFarLabeling& lab);

// A set of far edges of the form {bottom(i), top(k), spokes i+1..k} or its
// mirror {top(i), bottom(k), spokes i+1..k}, spanning squares i..k (cyclic);
// the degenerate i == k case is the peripheral pair {top(i), bottom(i)}.
struct HalfCut {
    int start = 0;            // i
    int end = 0;              // k
    bool top_at_start = false; // true: {top(i), bottom(k), ...}
    std::vector<int> edges;    // increasing edge indices

    int span(int n) const { return ((end - start) % n + n) % n + 1; }
    bool degenerate() const { return start == end; }
};

// All half-cuts of the labeling, ordered by (span, start, variant).
std::vector<HalfCut> find_half_cuts(const Graph& prism, const NearFarLabeling& lab);

// First edge-disjoint pair of half-cuts in the enumeration order, if any.
std::optional<std::pair<HalfCut, HalfCut>> find_disjoint_half_cuts(const Graph& prism,
                                                                   const NearFarLabeling& lab);

// A far edge cut whose two sides each embed into a ladder.
struct UsefulCut {
    std::vector<int> a_side;       // component containing the least vertex
    std::vector<int> b_side;
    std::vector<int> crossing;     // increasing edge indices; == the cut
    struct LadderWitness {
        int length = 0;                              // ladder L_length
        std::vector<std::pair<int, int>> coords;     // per side vertex: (position, row)
    };
    LadderWitness a_witness;
    LadderWitness b_witness;
};

// Union of two edge-disjoint half-cuts, normalized (larger first) and
// re-paired when one is a peripheral pair sitting inside the other's span.
// The union separates the prism into two sides; explicit ladder embeddings
// are built and checked for both.
UsefulCut useful_cut_from_half_cuts(const Graph& prism, const NearFarLabeling& lab,
                                    const HalfCut& h1, const HalfCut& h2);

// Ladder-colors both sides of the cut, lifting the second side by 6, so
// crossing far edges separate by at least 2.  Valid at (11,1).
ThresholdColoring color_via_useful_cut(const Graph& prism, const NearFarLabeling& lab,
                                       const UsefulCut& cut);

// The (13,4) colorer for labelings with (i) no two disjoint half-cuts,
// (ii) a near edge at every vertex, and (iii) no parallel far-spoke square
// unless n == 3.  Dispatches on n mod 4 through the zigzag instance
// catalog; the all-parallel far-spoke case gets the two-row coloring.
ThresholdColoring wave_color(const Graph& prism, const NearFarLabeling& lab);

// The (31,4) colorer for labelings without a parallel far-spoke square
// (n > 3): neutralizes all-far vertices by relabeling their edges near,
// routes through the useful-cut (11,1) or the (13,4) colorer, embeds into
// (26,4), and writes 30 on the neutralized vertices.
ThresholdColoring base_prism_color(const Graph& prism, const NearFarLabeling& lab);

// Total colorer: contracts parallel far-spoke squares down to a base case
// and lifts the coloring back.  Valid at (31,4) for every labeling of every
// prism.
ThresholdColoring prism_color(const Graph& prism, const NearFarLabeling& lab);

} // namespace ttc
