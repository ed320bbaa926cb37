#include "ttc/petersen.hpp"

#include "ttc/zigzag.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace ttc {

namespace {

void require_petersen(const Graph& g) {
    if (!g.is_family(Family::petersen)) throw family_error("not the petersen graph");
}

std::vector<std::vector<int>> enumerate_cycles(const Graph& g, size_t len) {
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
    std::function<void()> dfs = [&] {
        const int v = path.back();
        if (path.size() == len) {
            if (g.adjacent(v, path.front()) && path[1] < path.back())
                out.push_back(path);
            return;
        }
        for (auto [w, e] : g.neighbors(v)) {
            (void)e;
            if (w <= path.front() || used[static_cast<size_t>(w)]) continue;
            used[static_cast<size_t>(w)] = 1;
            path.push_back(w);
            dfs();
            path.pop_back();
            used[static_cast<size_t>(w)] = 0;
        }
    };
    for (int s = 0; s < g.vertex_count(); ++s) {
        path = {s};
        used.assign(static_cast<size_t>(g.vertex_count()), 0);
        used[static_cast<size_t>(s)] = 1;
        dfs();
    }
    return out;
}

struct Catalogs {
    std::vector<std::vector<int>> pentagons;
    std::vector<std::vector<int>> hexagons;
    std::vector<std::array<int, 5>> pentagon_edges;
    std::vector<std::array<int, 6>> hexagon_edges;
};

const Catalogs& catalogs() {
    static const Catalogs cat = [] {
        Catalogs c;
        const Graph g = build_family(Family::petersen);
        c.pentagons = enumerate_cycles(g, 5);
        c.hexagons = enumerate_cycles(g, 6);
        if (c.pentagons.size() != 12 || c.hexagons.size() != 10)
            throw construction_error("petersen cycle census mismatch");
        for (const auto& cyc : c.pentagons) {
            std::array<int, 5> e{};
            for (int i = 0; i < 5; ++i) e[static_cast<size_t>(i)] = *g.edge_index(cyc[static_cast<size_t>(i)], cyc[static_cast<size_t>((i + 1) % 5)]);
            c.pentagon_edges.push_back(e);
        }
        for (const auto& cyc : c.hexagons) {
            std::array<int, 6> e{};
            for (int i = 0; i < 6; ++i) e[static_cast<size_t>(i)] = *g.edge_index(cyc[static_cast<size_t>(i)], cyc[static_cast<size_t>((i + 1) % 6)]);
            c.hexagon_edges.push_back(e);
        }
        return c;
    }();
    return cat;
}

// alignment search: rotate and/or reverse the cycle so the labels pair up
std::optional<CycleWitness> align_xxyyzz(const Graph& g, const NearFarLabeling& lab,
                                         const std::vector<int>& cyc) {
    for (int dir : {1, -1}) {
        for (int off = 0; off < 6; ++off) {
            std::vector<int> vs(6), es(6);
            for (int j = 0; j < 6; ++j) vs[static_cast<size_t>(j)] = cyc[static_cast<size_t>(((off + dir * j) % 6 + 6) % 6)];
            for (int j = 0; j < 6; ++j)
                es[static_cast<size_t>(j)] = *g.edge_index(vs[static_cast<size_t>(j)], vs[static_cast<size_t>((j + 1) % 6)]);
            // eps_i = es[i-1]; pairs (eps1,eps2), (eps3,eps4), (eps5,eps6)
            if (lab.is_far(es[0]) == lab.is_far(es[1]) && lab.is_far(es[2]) == lab.is_far(es[3]) &&
                lab.is_far(es[4]) == lab.is_far(es[5])) {
                CycleWitness w;
                w.kind = CycleWitness::Kind::xxyyzz;
                w.vertices = std::move(vs);
                w.edges = std::move(es);
                return w;
            }
        }
    }
    return std::nullopt;
}

std::optional<CycleWitness> align_nxxyy(const Graph& g, const NearFarLabeling& lab,
                                        const std::vector<int>& cyc) {
    for (int dir : {1, -1}) {
        for (int off = 0; off < 5; ++off) {
            std::vector<int> vs(5), es(5);
            for (int j = 0; j < 5; ++j) vs[static_cast<size_t>(j)] = cyc[static_cast<size_t>(((off + dir * j) % 5 + 5) % 5)];
            for (int j = 0; j < 5; ++j)
                es[static_cast<size_t>(j)] = *g.edge_index(vs[static_cast<size_t>(j)], vs[static_cast<size_t>((j + 1) % 5)]);
            if (lab.is_near(es[0]) && lab.is_far(es[1]) == lab.is_far(es[2]) &&
                lab.is_far(es[3]) == lab.is_far(es[4])) {
                CycleWitness w;
                w.kind = CycleWitness::Kind::nxxyy;
                w.vertices = std::move(vs);
                w.edges = std::move(es);
                return w;
            }
        }
    }
    return std::nullopt;
}

std::optional<FarEdgeCut> near_graph_cut(const Graph& g, const NearFarLabeling& lab) {
    auto comps = components_without(g, lab.far_edges());
    if (comps.size() < 2) return std::nullopt;
    FarEdgeCut cut;
    cut.a_side = comps.front();
    std::vector<char> in_a(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : cut.a_side) in_a[static_cast<size_t>(v)] = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_a[static_cast<size_t>(v)]) cut.b_side.push_back(v);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [x, y] = g.edge(e);
        if (in_a[static_cast<size_t>(x)] != in_a[static_cast<size_t>(y)]) cut.edges.push_back(e);
    }
    return cut;
}

void validate_witness(const Graph& g, const NearFarLabeling& lab, const CycleWitness& w) {
    const size_t len = w.kind == CycleWitness::Kind::xxyyzz ? 6 : 5;
    if (w.vertices.size() != len || w.edges.size() != len)
        throw structural_error("witness has wrong length");
    std::vector<int> sorted = w.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw structural_error("witness repeats a vertex");
    for (size_t i = 0; i < len; ++i) {
        auto e = g.edge_index(w.vertices[i], w.vertices[(i + 1) % len]);
        if (!e || *e != w.edges[i]) throw structural_error("witness edges do not match its cycle");
    }
    if (w.kind == CycleWitness::Kind::xxyyzz) {
        for (int i = 0; i < 3; ++i)
            if (lab.is_far(w.edges[static_cast<size_t>(2 * i)]) !=
                lab.is_far(w.edges[static_cast<size_t>(2 * i + 1)]))
                throw precondition_error("xxyyzz pair labels mismatch");
    } else {
        if (lab.is_far(w.edges[0])) throw precondition_error("designated edge is not near");
        if (lab.is_far(w.edges[1]) != lab.is_far(w.edges[2]) ||
            lab.is_far(w.edges[3]) != lab.is_far(w.edges[4]))
            throw precondition_error("nxxyy pair labels mismatch");
    }
}

} // namespace

const std::vector<std::vector<int>>& petersen_pentagons() { return catalogs().pentagons; }
const std::vector<std::vector<int>>& petersen_hexagons() { return catalogs().hexagons; }

DetectionResult detect_structures(const Graph& petersen, const NearFarLabeling& lab) {
    require_petersen(petersen);
    if (lab.size() != petersen.edge_count())
        throw structural_error("labeling size does not match edge count");
    DetectionResult res;
    auto comps = components_without(petersen, lab.far_edges());
    res.near_components = static_cast<int>(comps.size());

    std::optional<CycleWitness> first_hex, first_pent;
    for (const auto& cyc : catalogs().hexagons) {
        if (auto w = align_xxyyzz(petersen, lab, cyc)) {
            ++res.xxyyzz_count;
            if (!first_hex) first_hex = w;
        }
    }
    for (const auto& cyc : catalogs().pentagons) {
        if (auto w = align_nxxyy(petersen, lab, cyc)) {
            ++res.nxxyy_count;
            if (!first_pent) first_pent = w;
        }
    }

    if (res.near_components > 1) {
        res.found = PetersenStructure::far_edge_cut;
        res.cut = near_graph_cut(petersen, lab);
    } else if (first_hex) {
        res.found = PetersenStructure::xxyyzz;
        res.witness = first_hex;
    } else if (first_pent) {
        res.found = PetersenStructure::nxxyy;
        res.witness = first_pent;
    }
    return res;
}

ThresholdColoring color_via_xxyyzz(const Graph& petersen, const NearFarLabeling& lab,
                                   const CycleWitness& w) {
    require_petersen(petersen);
    if (w.kind != CycleWitness::Kind::xxyyzz) throw precondition_error("witness kind mismatch");
    validate_witness(petersen, lab, w);
    ZigzagInstance inst;
    inst.a_side = {w.vertices[0], w.vertices[2], w.vertices[4]};
    std::sort(inst.a_side.begin(), inst.a_side.end());
    std::vector<char> in_a(static_cast<size_t>(petersen.vertex_count()), 0);
    for (int v : inst.a_side) in_a[static_cast<size_t>(v)] = 1;
    for (int v = 0; v < petersen.vertex_count(); ++v)
        if (!in_a[static_cast<size_t>(v)]) inst.b_side.push_back(v);
    return zigzag_color(petersen, lab, inst);
}

ThresholdColoring color_via_nxxyy(const Graph& petersen, const NearFarLabeling& lab,
                                  const CycleWitness& w) {
    require_petersen(petersen);
    if (w.kind != CycleWitness::Kind::nxxyy) throw precondition_error("witness kind mismatch");
    validate_witness(petersen, lab, w);

    const int x0 = w.vertices[0], x1 = w.vertices[1], x2 = w.vertices[2], x3 = w.vertices[3],
              x4 = w.vertices[4];
    std::vector<char> in_a(static_cast<size_t>(petersen.vertex_count()), 0);
    for (int v : {x0, x1, x3}) in_a[static_cast<size_t>(v)] = 1;

    auto a_neighbor_label = [&](int v) -> int { // -1 none, 0 near, 1 far
        int seen = -1;
        for (auto [w2, e] : petersen.neighbors(v)) {
            if (!in_a[static_cast<size_t>(w2)]) continue;
            const int far = lab.is_far(e) ? 1 : 0;
            if (seen != -1 && seen != far)
                throw construction_error("mixed zero-set edge labels at vertex " + std::to_string(v));
            seen = far;
        }
        return seen;
    };

    // the two vertices outside the cycle with no zero-set neighbor anchor
    // the coloring order; each hangs next to one of x2, x4
    auto b_neighbor = [&](int v, int not1, int not2) {
        int out = -1;
        for (auto [w2, e] : petersen.neighbors(v)) {
            (void)e;
            if (in_a[static_cast<size_t>(w2)] || w2 == not1 || w2 == not2) continue;
            out = w2;
        }
        return out;
    };
    int v1 = -1, v6 = -1;
    for (int v = 0; v < petersen.vertex_count(); ++v) {
        if (in_a[static_cast<size_t>(v)]) continue;
        if (a_neighbor_label(v) == -1) {
            if (petersen.adjacent(v, x2))
                v1 = v;
            else if (petersen.adjacent(v, x4))
                v6 = v;
        }
    }
    if (v1 < 0 || v6 < 0 || !petersen.adjacent(v1, v6))
        throw construction_error("nxxyy frame does not match the expected shape");
    const int v2 = x2, v7 = x4;
    const int v3 = b_neighbor(v1, v2, v6);
    const int v4 = b_neighbor(v3, v1, -1);
    const int v5 = b_neighbor(v4, v3, -1);
    if (v3 < 0 || v4 < 0 || v5 < 0 || !petersen.adjacent(v5, v6))
        throw construction_error("nxxyy chain does not close");

    std::vector<int> color(static_cast<size_t>(petersen.vertex_count()), 0);
    auto set_from = [&](int v, int from) {
        const int e = *petersen.edge_index(v, from);
        const bool flip = lab.is_far(e);
        const int sign = (color[static_cast<size_t>(from)] > 0) == !flip ? 1 : -1;
        const int lbl = a_neighbor_label(v);
        if (lbl == -1) throw construction_error("chain vertex lacks a zero-set edge");
        color[static_cast<size_t>(v)] = sign * (lbl == 0 ? 1 : 2);
    };
    color[static_cast<size_t>(v1)] = 1;
    set_from(v2, v1);
    set_from(v3, v1);
    set_from(v4, v3);
    set_from(v5, v4);
    {
        const bool far56 = lab.is_far(*petersen.edge_index(v5, v6));
        const bool pos5 = color[static_cast<size_t>(v5)] > 0;
        color[static_cast<size_t>(v6)] = far56 == pos5 ? -1 : 2;
    }
    set_from(v7, v6);

    int cycle_far = 0;
    for (auto [a, b] : {std::pair{v1, v3}, {v3, v4}, {v4, v5}, {v5, v6}, {v6, v1}})
        cycle_far += lab.is_far(*petersen.edge_index(a, b)) ? 1 : 0;

    ThresholdColoring out;
    if (cycle_far % 2 == 0) {
        out.colors = std::move(color);
        out.pair = ParamPair(5, 1);
        if (!is_valid(petersen, lab, out.pair, out))
            throw construction_error("even-parity nxxyy coloring failed verification");
        return embed_into(out, ParamPair(14, 4));
    }
    for (int& c : color) c *= 3;
    color[static_cast<size_t>(v1)] -= 1; // 3*1 - 1
    color[static_cast<size_t>(v6)] += 1;
    out.colors = std::move(color);
    out.pair = ParamPair(14, 4);
    if (!is_valid(petersen, lab, out.pair, out))
        throw construction_error("odd-parity nxxyy coloring failed verification");
    return out;
}

ThresholdColoring split_and_lift(const Graph& petersen, const NearFarLabeling& lab,
                                 const FarEdgeCut& cut, const ThresholdColoring& child) {
    require_petersen(petersen);
    for (int e : cut.edges)
        if (lab.is_near(e)) throw precondition_error("cut contains a near edge");
    NearFarLabeling relabeled = lab;
    for (int e : cut.edges) relabeled.set_far(e, false);
    if (!is_valid(petersen, relabeled, child.pair, child))
        throw precondition_error("child coloring is not valid for the relabeled instance");

    ThresholdColoring out = canonicalized(child);
    const int delta = child.pair.r + child.pair.t;
    for (int v : cut.b_side) out.colors[static_cast<size_t>(v)] += delta;
    out.pair = ParamPair(2 * child.pair.r + child.pair.t, child.pair.t);
    if (!is_valid(petersen, lab, out.pair, out))
        throw construction_error("lifted coloring failed verification");
    return out;
}

ThresholdColoring petersen_color(const Graph& petersen, const NearFarLabeling& lab, bool unify) {
    require_petersen(petersen);
    if (lab.far_count() == 0) {
        ThresholdColoring out;
        out.colors.assign(static_cast<size_t>(petersen.vertex_count()), 0);
        out.pair = unify ? ParamPair(14, 4) : ParamPair(1, 0);
        return out;
    }
    const DetectionResult det = detect_structures(petersen, lab);
    switch (det.found) {
    case PetersenStructure::far_edge_cut: {
        NearFarLabeling relabeled = lab;
        for (int e : det.cut->edges) relabeled.set_far(e, false);
        const ThresholdColoring child = petersen_color(petersen, relabeled, unify);
        return split_and_lift(petersen, lab, *det.cut, child);
    }
    case PetersenStructure::xxyyzz: {
        ThresholdColoring col = color_via_xxyyzz(petersen, lab, *det.witness);
        return unify ? embed_into(col, ParamPair(14, 4)) : col;
    }
    case PetersenStructure::nxxyy:
        return color_via_nxxyy(petersen, lab, *det.witness);
    case PetersenStructure::none:
        break;
    }
    throw uncovered_case_error("labeling admits no cut and no paired cycle");
}

PetersenAudit audit_case_analysis(int jobs) {
    const Graph g = build_family(Family::petersen);
    (void)catalogs();
    const std::uint64_t total = std::uint64_t(1) << g.edge_count();
    PetersenAudit audit;
    audit.labelings = total;

    const int nworkers = std::max(1, jobs);
    std::vector<PetersenAudit> parts(static_cast<size_t>(nworkers));
    auto worker = [&](int id) {
        PetersenAudit& part = parts[static_cast<size_t>(id)];
        const std::uint64_t begin = total * static_cast<std::uint64_t>(id) / static_cast<std::uint64_t>(nworkers);
        const std::uint64_t end = total * static_cast<std::uint64_t>(id + 1) / static_cast<std::uint64_t>(nworkers);
        for (std::uint64_t bits = begin; bits < end; ++bits) {
            const NearFarLabeling lab = NearFarLabeling::from_bits(g, bits);
            const DetectionResult det = detect_structures(g, lab);
            switch (det.found) {
            case PetersenStructure::far_edge_cut: ++part.far_edge_cut; break;
            case PetersenStructure::xxyyzz: ++part.xxyyzz; break;
            case PetersenStructure::nxxyy: ++part.nxxyy; break;
            case PetersenStructure::none: ++part.uncovered; break;
            }
            if (det.near_components == 1 && det.xxyyzz_count == 0 && det.nxxyy_count == 0)
                ++part.connected_without_cycles;
        }
    };
    if (nworkers == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int id = 0; id < nworkers; ++id) threads.emplace_back(worker, id);
        for (auto& t : threads) t.join();
    }
    for (const auto& part : parts) {
        audit.far_edge_cut += part.far_edge_cut;
        audit.xxyyzz += part.xxyyzz;
        audit.nxxyy += part.nxxyy;
        audit.uncovered += part.uncovered;
        audit.connected_without_cycles += part.connected_without_cycles;
    }
    return audit;
}

} // namespace ttc
