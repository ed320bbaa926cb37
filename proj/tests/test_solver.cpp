#include "doctest.h"

#include "ttc/solver.hpp"
#include "ttc/zigzag.hpp"

#include <random>

using namespace ttc;

namespace {

// plain enumeration over all r^|V| assignments
bool solvable_by_enumeration(const Graph& g, const NearFarLabeling& lab, const ParamPair& pair) {
    std::vector<int> colors(static_cast<size_t>(g.vertex_count()), 0);
    while (true) {
        bool ok = true;
        for (int e = 0; e < g.edge_count() && ok; ++e) {
            auto [u, v] = g.edge(e);
            const int d = std::abs(colors[static_cast<size_t>(u)] - colors[static_cast<size_t>(v)]);
            ok = lab.is_near(e) ? d <= pair.t : d > pair.t;
        }
        if (ok) return true;
        int i = 0;
        while (i < g.vertex_count() && colors[static_cast<size_t>(i)] == pair.r - 1)
            colors[static_cast<size_t>(i++)] = 0;
        if (i == g.vertex_count()) return false;
        ++colors[static_cast<size_t>(i)];
    }
}

NearFarLabeling k4_unbalanced(const Graph& k4) { return k4_certificate_labeling(k4); }

} // namespace

TEST_CASE("all-near graphs take the constant coloring") {
    const Graph pet = build_family(Family::petersen);
    const auto col = find_coloring(pet, NearFarLabeling::all_near(pet), ParamPair(1, 0));
    REQUIRE(col.has_value());
    for (int v = 0; v < 10; ++v) CHECK((*col)[v] == 0);
}

TEST_CASE("K4 with two opposite far edges is unsat") {
    const Graph k4 = build_family(Family::complete, 4);
    CHECK(!find_coloring(k4, k4_unbalanced(k4), ParamPair(10, 2)));
}

TEST_CASE("moebius spoke-far labeling is unsat at (25,4)") {
    const Graph m4 = build_family(Family::moebius, 4);
    CHECK(!find_coloring(m4, moebius_spoke_far_labeling(m4), ParamPair(25, 4)));
}

TEST_CASE("found colorings are canonical and valid") {
    std::mt19937 rng(5150);
    const Graph g = build_family(Family::prism, 3);
    for (int trial = 0; trial < 200; ++trial) {
        NearFarLabeling lab(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) lab.set_far(e, rng() % 2 == 0);
        const ParamPair pair(2 + static_cast<int>(rng() % 8), static_cast<int>(rng() % 4));
        const auto col = find_coloring(g, lab, pair);
        if (!col) continue;
        CHECK(verify(g, lab, pair, *col).empty());
        CHECK(*std::min_element(col->colors.begin(), col->colors.end()) == 0);
    }
}

TEST_CASE("search verdict equals plain enumeration on small cases") {
    std::mt19937 rng(31337);
    for (Family fam : {Family::cycle, Family::complete, Family::ladder}) {
        const int n = fam == Family::ladder ? 2 : 5;
        const Graph g = build_family(fam, n);
        for (int trial = 0; trial < 60; ++trial) {
            NearFarLabeling lab(g.edge_count());
            for (int e = 0; e < g.edge_count(); ++e) lab.set_far(e, rng() % 2 == 0);
            for (int r = 1; r <= 4; ++r)
                for (int t = 0; t < r; ++t) {
                    const ParamPair pair(r, t);
                    CHECK(find_coloring(g, lab, pair).has_value() ==
                          solvable_by_enumeration(g, lab, pair));
                }
        }
    }
}

TEST_CASE("prism 3 sweep at (31,4)") {
    const Graph g = build_family(Family::prism, 3);
    const SweepReport rep = total_check(g, ParamPair(31, 4));
    CHECK(rep.labelings == 512);
    CHECK(rep.failures.empty());
}

TEST_CASE("ladder 3 sweep at (5,1)") {
    const Graph g = build_family(Family::ladder, 3);
    SweepOptions opts;
    opts.constructor = [](const Graph& gg, const NearFarLabeling& l) { return ladder_color(gg, l); };
    const SweepReport rep = total_check(g, ParamPair(5, 1), opts);
    CHECK(rep.labelings == 1024);
    CHECK(rep.failures.empty());
    CHECK(rep.constructor_failures == 0);
}

TEST_CASE("moebius 3 sweep finds the spoke-far failure") {
    const Graph g = build_family(Family::moebius, 3);
    const SweepReport rep = total_check(g, ParamPair(25, 4));
    CHECK(rep.labelings == 512);
    const std::uint64_t spoke_far = moebius_spoke_far_labeling(g).to_bits();
    CHECK(std::find(rep.failures.begin(), rep.failures.end(), spoke_far) != rep.failures.end());
}

TEST_CASE("sweep refuses oversized graphs") {
    const Graph g = build_family(Family::prism, 9); // 27 edges
    CHECK_THROWS_AS(total_check(g, ParamPair(31, 4)), parameter_error);
}

TEST_CASE("constructor output is never trusted") {
    const Graph g = build_family(Family::prism, 3);
    SweepOptions junk;
    junk.constructor = [](const Graph& gg, const NearFarLabeling&) {
        ThresholdColoring c;
        c.colors.assign(static_cast<size_t>(gg.vertex_count()), 0);
        c.pair = ParamPair(31, 4);
        return c; // wrong whenever a far edge exists
    };
    const SweepReport with = total_check(g, ParamPair(31, 4), junk);
    const SweepReport without = total_check(g, ParamPair(31, 4));
    CHECK(with.failures == without.failures);
    CHECK(with.constructor_failures == 511);
}

TEST_CASE("sweep reports do not depend on the worker count") {
    const Graph g = build_family(Family::ladder, 2);
    SweepOptions one, eight;
    one.jobs = 1;
    eight.jobs = 8;
    const SweepReport a = total_check(g, ParamPair(5, 1), one);
    const SweepReport b = total_check(g, ParamPair(5, 1), eight);
    CHECK(a.failures == b.failures);
    CHECK(a.max_window == b.max_window);
}

TEST_CASE("minimal pair frontier basics") {
    const Graph pet = build_family(Family::petersen);
    const auto trivially_near = minimal_pair_frontier(pet, NearFarLabeling::all_near(pet), 4, 2);
    REQUIRE(trivially_near.size() == 1);
    CHECK(trivially_near[0] == ParamPair(1, 0));

    const Graph k2 = build_family(Family::complete, 2);
    NearFarLabeling far(k2.edge_count());
    far.set_far(0, true);
    const auto frontier = minimal_pair_frontier(k2, far, 4, 2);
    REQUIRE(frontier.size() == 1);
    CHECK(frontier[0] == ParamPair(2, 0));
}

TEST_CASE("frontier members are incomparable and solvable") {
    const Graph g = build_family(Family::moebius, 3);
    NearFarLabeling lab = moebius_spoke_far_labeling(g);
    lab.flip(0);
    const auto frontier = minimal_pair_frontier(g, lab, 8, 3);
    for (const auto& p : frontier) {
        CHECK(find_coloring(g, lab, p).has_value());
        for (const auto& q : frontier)
            if (!(p == q)) CHECK(!pair_leq(q, p).has_value());
    }
}

TEST_CASE("moebius certificates check out") {
    for (int n = 3; n <= 6; ++n) {
        const Graph g = build_family(Family::moebius, n);
        const auto cert = moebius_certificate(n);
        CHECK(cert.steps.size() == static_cast<size_t>(n));
        CHECK(check_certificate(g, moebius_spoke_far_labeling(g), cert));
    }
}

TEST_CASE("certificates fail against the wrong labeling") {
    const Graph g = build_family(Family::moebius, 4);
    const auto cert = moebius_certificate(4);
    CHECK(!check_certificate(g, NearFarLabeling::all_near(g), cert));
    NearFarLabeling tampered = moebius_spoke_far_labeling(g);
    tampered.flip(MoebiusIndex(g).peripheral(0));
    CHECK(!check_certificate(g, tampered, cert));
}

TEST_CASE("a broken chain is rejected") {
    const Graph g = build_family(Family::moebius, 4);
    auto cert = moebius_certificate(4);
    std::swap(cert.steps[1], cert.steps[2]);
    CHECK(!check_certificate(g, moebius_spoke_far_labeling(g), cert));
    auto cert2 = moebius_certificate(4);
    cert2.steps.pop_back();
    CHECK(!check_certificate(g, moebius_spoke_far_labeling(g), cert2));
}

TEST_CASE("K4 certificate") {
    const Graph k4 = build_family(Family::complete, 4);
    const auto cert = k4_certificate();
    CHECK(cert.steps.size() == 2);
    CHECK(check_certificate(k4, k4_unbalanced(k4), cert));
}

TEST_CASE("malformed certificates raise structural errors") {
    const Graph k4 = build_family(Family::complete, 4);
    ImpossibilityCertificate cert;
    cert.steps.push_back({0, 1, 2, 99});
    CHECK_THROWS_AS(check_certificate(k4, k4_unbalanced(k4), cert), structural_error);
}

TEST_CASE("checked certificate implies unsat across small pairs") {
    const Graph g = build_family(Family::moebius, 3);
    const NearFarLabeling lab = moebius_spoke_far_labeling(g);
    REQUIRE(check_certificate(g, lab, moebius_certificate(3)));
    for (int r = 1; r <= 12; ++r)
        for (int t = 0; t <= std::min(3, r - 1); ++t)
            CHECK(!find_coloring(g, lab, ParamPair(r, t)));
}

TEST_CASE("sign propagation holds on every valid coloring") {
    // graphs with a planted 4-cycle w x y z, far wx / yz, near xy / zw
    std::mt19937 rng(1234);
    int checked = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const int nv = 4 + static_cast<int>(rng() % 4);
        std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
        for (int u = 0; u < nv; ++u)
            for (int v = u + 1; v < nv; ++v) {
                const bool planted = (u == 0 && (v == 1 || v == 3)) || (u == 1 && v == 2) || (u == 2 && v == 3);
                if (!planted && rng() % 100 < 25) edges.emplace_back(u, v);
            }
        const Graph g(nv, edges);
        NearFarLabeling lab(g.edge_count());
        for (int e = 4; e < g.edge_count(); ++e) lab.set_far(e, rng() % 2 == 0);
        lab.set_far(0, true);  // wx
        lab.set_far(2, true);  // yz
        lab.set_far(1, false); // xy
        lab.set_far(3, false); // zw
        const ParamPair pair(2 + static_cast<int>(rng() % 6), static_cast<int>(rng() % 3));
        const auto col = find_coloring(g, lab, pair);
        if (!col) continue;
        ++checked;
        if ((*col)[0] > (*col)[1]) CHECK((*col)[3] > (*col)[2]);
    }
    CHECK(checked > 2000);
}
