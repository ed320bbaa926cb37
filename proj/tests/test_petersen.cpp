#include "doctest.h"

#include "ttc/petersen.hpp"
#include "ttc/solver.hpp"

#include <algorithm>
#include <functional>
#include <random>

using namespace ttc;

namespace {

const Graph& pet() {
    static const Graph g = build_family(Family::petersen);
    return g;
}

NearFarLabeling spoke_matching(const Graph& g) {
    NearFarLabeling lab(g.edge_count());
    for (int i = 0; i < 5; ++i) lab.set_far(PetersenIndex::spoke(i), true);
    return lab;
}

} // namespace

TEST_CASE("cycle catalogs") {
    CHECK(petersen_pentagons().size() == 12);
    CHECK(petersen_hexagons().size() == 10);
}

TEST_CASE("structure detection on the uniform labelings") {
    const auto all_near = detect_structures(pet(), NearFarLabeling::all_near(pet()));
    CHECK(all_near.found == PetersenStructure::xxyyzz);
    CHECK(all_near.xxyyzz_count == 10);
    CHECK(all_near.near_components == 1);

    const auto all_far = detect_structures(pet(), NearFarLabeling::all_far(pet()));
    CHECK(all_far.found == PetersenStructure::far_edge_cut);
    CHECK(all_far.near_components == 10);
}

TEST_CASE("a far perfect matching is a cut") {
    const auto det = detect_structures(pet(), spoke_matching(pet()));
    CHECK(det.found == PetersenStructure::far_edge_cut);
    REQUIRE(det.cut.has_value());
    CHECK(det.cut->edges.size() == 5);
    CHECK(det.cut->a_side.size() == 5);
}

TEST_CASE("every perfect matching disconnects the graph") {
    // enumerate perfect matchings by picking one edge per vertex greedily
    std::vector<std::vector<int>> matchings;
    std::vector<int> chosen;
    std::vector<char> used(10, 0);
    std::function<void()> extend = [&] {
        int v = -1;
        for (int x = 0; x < 10; ++x)
            if (!used[static_cast<size_t>(x)]) { v = x; break; }
        if (v == -1) {
            matchings.push_back(chosen);
            return;
        }
        for (auto [w, e] : pet().neighbors(v)) {
            if (used[static_cast<size_t>(w)]) continue;
            used[static_cast<size_t>(v)] = used[static_cast<size_t>(w)] = 1;
            chosen.push_back(e);
            extend();
            chosen.pop_back();
            used[static_cast<size_t>(v)] = used[static_cast<size_t>(w)] = 0;
        }
    };
    extend();
    CHECK(matchings.size() == 6);
    for (const auto& m : matchings) CHECK(components_without(pet(), m).size() == 2);
}

TEST_CASE("cut detection matches near-graph connectivity") {
    std::mt19937 rng(808);
    for (int trial = 0; trial < 1000; ++trial) {
        NearFarLabeling lab(pet().edge_count());
        for (int e = 0; e < pet().edge_count(); ++e) lab.set_far(e, rng() % 3 == 0);
        const auto det = detect_structures(pet(), lab);
        const auto comps = components_without(pet(), lab.far_edges());
        CHECK((det.found == PetersenStructure::far_edge_cut) == (comps.size() > 1));
        if (det.found == PetersenStructure::far_edge_cut) {
            for (int e : det.cut->edges) CHECK(lab.is_far(e));
        }
    }
}

TEST_CASE("hexagon colorer on the all-near labeling") {
    const NearFarLabeling lab = NearFarLabeling::all_near(pet());
    const auto det = detect_structures(pet(), lab);
    REQUIRE(det.witness.has_value());
    const auto col = color_via_xxyyzz(pet(), lab, *det.witness);
    CHECK(col.pair == ParamPair(5, 1));
    CHECK(verify(pet(), lab, col.pair, col).empty());
    // zero set, magnitude-1 neighbors, and the lone vertex with no zero-set
    // neighbor at magnitude 2
    CHECK(col.window_width() <= 3);
}

TEST_CASE("hexagon colorer across far pairs") {
    // all six hexagon edges far: every pair position is a far pair, and the
    // witness can be fed to the colorer directly
    NearFarLabeling lab(pet().edge_count());
    const auto& hex = petersen_hexagons().front();
    CycleWitness w;
    w.kind = CycleWitness::Kind::xxyyzz;
    w.vertices = hex;
    for (int i = 0; i < 6; ++i) {
        const int e = *pet().edge_index(hex[static_cast<size_t>(i)], hex[static_cast<size_t>((i + 1) % 6)]);
        w.edges.push_back(e);
        lab.set_far(e, true);
    }
    const auto col = color_via_xxyyzz(pet(), lab, w);
    CHECK(col.pair == ParamPair(5, 1));
    CHECK(verify(pet(), lab, col.pair, col).empty());
    // signs flip across the far pair-boundary vertices
    for (int i : {1, 3, 5}) CHECK(std::abs(col[w.vertices[static_cast<size_t>(i)]]) >= 1);
}

TEST_CASE("hexagon colorer validates its witness") {
    const NearFarLabeling all_near = NearFarLabeling::all_near(pet());
    auto det = detect_structures(pet(), all_near);
    REQUIRE(det.witness.has_value());
    CycleWitness w = *det.witness;
    NearFarLabeling broken = all_near;
    broken.set_far(w.edges[0], true); // only one of a pair flips
    CHECK_THROWS_AS(color_via_xxyyzz(pet(), broken, w), precondition_error);
    CycleWitness wrong_kind = w;
    wrong_kind.kind = CycleWitness::Kind::nxxyy;
    CHECK_THROWS_AS(color_via_xxyyzz(pet(), all_near, wrong_kind), precondition_error);
}

TEST_CASE("pentagon colorer over all labelings that need it") {
    // exhaustively feed the pentagon colorer wherever detection picks it
    const std::uint64_t total = std::uint64_t(1) << pet().edge_count();
    std::uint64_t used = 0;
    int even_parity_seen = 0, odd_parity_seen = 0;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        const auto lab = NearFarLabeling::from_bits(pet(), bits);
        const auto det = detect_structures(pet(), lab);
        if (det.found != PetersenStructure::nxxyy) continue;
        ++used;
        const auto col = color_via_nxxyy(pet(), lab, *det.witness);
        CHECK(col.pair == ParamPair(14, 4));
        CHECK(verify(pet(), lab, col.pair, col).empty());
        CHECK(col.window_width() <= 14);
        // even parity embeds a (5,1)-coloring, landing on {0,1,5,6,10};
        // odd parity triples and repairs, writing 2 on one anchor and -2
        // or 7 on the other
        const bool embedded_even =
            std::all_of(col.colors.begin(), col.colors.end(), [](int c) {
                return c == 0 || c == 1 || c == 5 || c == 6 || c == 10;
            });
        if (embedded_even) {
            ++even_parity_seen;
        } else {
            ++odd_parity_seen;
            const bool has2 = std::find(col.colors.begin(), col.colors.end(), 2) != col.colors.end();
            const bool has_partner =
                std::find(col.colors.begin(), col.colors.end(), -2) != col.colors.end() ||
                std::find(col.colors.begin(), col.colors.end(), 7) != col.colors.end();
            CHECK(has2);
            CHECK(has_partner);
        }
    }
    CHECK(used > 0);
    CHECK(even_parity_seen + odd_parity_seen == static_cast<int>(used));
    CHECK(odd_parity_seen > 0);
}

TEST_CASE("shift arithmetic of the cut lift") {
    const NearFarLabeling lab = spoke_matching(pet());
    const auto det = detect_structures(pet(), lab);
    REQUIRE(det.found == PetersenStructure::far_edge_cut);
    NearFarLabeling relabeled = lab;
    for (int e : det.cut->edges) relabeled.set_far(e, false);
    const auto child = petersen_color(pet(), relabeled);
    const auto lifted = split_and_lift(pet(), lab, *det.cut, child);
    CHECK(lifted.pair.r == 2 * child.pair.r + child.pair.t);
    CHECK(lifted.pair.t == child.pair.t);
    CHECK(verify(pet(), lab, lifted.pair, lifted).empty());
}

TEST_CASE("lift rejects a near edge in the cut") {
    const NearFarLabeling lab = spoke_matching(pet());
    auto det = detect_structures(pet(), lab);
    REQUIRE(det.cut.has_value());
    NearFarLabeling broken = lab;
    broken.set_far(det.cut->edges[0], false);
    ThresholdColoring child;
    child.colors.assign(10, 0);
    child.pair = ParamPair(1, 0);
    CHECK_THROWS_AS(split_and_lift(pet(), broken, *det.cut, child), precondition_error);
}

TEST_CASE("total colorer base cases") {
    const auto constant = petersen_color(pet(), NearFarLabeling::all_near(pet()));
    CHECK(constant.pair == ParamPair(1, 0));
    for (int v = 0; v < 10; ++v) CHECK(constant[v] == 0);

    const auto all_far = petersen_color(pet(), NearFarLabeling::all_far(pet()));
    CHECK(verify(pet(), NearFarLabeling::all_far(pet()), all_far.pair, all_far).empty());
    CHECK(all_far.pair.r > 2 * 1 + 0); // at least one cut lift applied
}

TEST_CASE("audit covers every labeling") {
    const PetersenAudit audit = audit_case_analysis();
    CHECK(audit.labelings == 32768);
    CHECK(audit.uncovered == 0);
    CHECK(audit.connected_without_cycles == 0);
    CHECK(audit.far_edge_cut + audit.xxyyzz + audit.nxxyy == audit.labelings);
    // all-near goes to the hexagon bucket by priority
    const auto det = detect_structures(pet(), NearFarLabeling::all_near(pet()));
    CHECK(det.found == PetersenStructure::xxyyzz);
    // the six far perfect matchings land in the cut bucket
    CHECK(detect_structures(pet(), spoke_matching(pet())).found == PetersenStructure::far_edge_cut);
}

TEST_CASE("ground truth: the worst labeling and its frontier") {
    // frozen from an exhaustive sweep: the labeling with all outer edges
    // and all spokes far maximizes the achieved pair, two cut lifts over a
    // (14,4) base
    NearFarLabeling lab = NearFarLabeling::from_bits(pet(), 0x3ff);
    const auto col = petersen_color(pet(), lab);
    CHECK(col.pair == ParamPair(68, 4));
    CHECK(verify(pet(), lab, col.pair, col).empty());

    const auto frontier = minimal_pair_frontier(pet(), lab, 8, 3);
    REQUIRE(frontier.size() == 2);
    CHECK(frontier[0] == ParamPair(4, 0));
    CHECK(frontier[1] == ParamPair(6, 1));
}

TEST_CASE("audit worker count does not change the histogram") {
    const PetersenAudit one = audit_case_analysis(1);
    const PetersenAudit four = audit_case_analysis(4);
    CHECK(one.far_edge_cut == four.far_edge_cut);
    CHECK(one.xxyyzz == four.xxyyzz);
    CHECK(one.nxxyy == four.nxxyy);
    CHECK(one.uncovered == four.uncovered);
}
