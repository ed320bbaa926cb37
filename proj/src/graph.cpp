#include "ttc/graph.hpp"

#include <algorithm>
#include <queue>

namespace ttc {

std::string family_name(Family f) {
    switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::ladder: return "ladder";
    case Family::prism: return "prism";
    case Family::moebius: return "moebius";
    case Family::fan: return "fan";
    case Family::petersen: return "petersen";
    case Family::k33: return "k33";
    case Family::product: return "product";
    case Family::generic: return "generic";
    }
    return "generic";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::path, Family::cycle, Family::complete, Family::ladder,
                     Family::prism, Family::moebius, Family::fan, Family::petersen,
                     Family::k33, Family::product, Family::generic}) {
        if (family_name(f) == name) return f;
    }
    return std::nullopt;
}

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
    : vertex_count_(vertex_count), edges_(std::move(edge_list)) {
    if (vertex_count_ < 0) throw structural_error("negative vertex count");
    adjacency_.assign(static_cast<size_t>(vertex_count_), {});
    for (size_t e = 0; e < edges_.size(); ++e) {
        auto& [a, b] = edges_[e];
        if (a > b) std::swap(a, b);
        if (a < 0 || b >= vertex_count_)
            throw structural_error("edge endpoint out of range");
        if (a == b) throw structural_error("loop edge");
        adjacency_[static_cast<size_t>(a)].emplace_back(b, static_cast<int>(e));
        adjacency_[static_cast<size_t>(b)].emplace_back(a, static_cast<int>(e));
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        for (size_t i = 1; i < nbrs.size(); ++i)
            if (nbrs[i].first == nbrs[i - 1].first)
                throw structural_error("duplicate edge");
    }
}

std::optional<int> Graph::edge_index(int u, int v) const {
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_ || u == v)
        return std::nullopt;
    const auto& nbrs = adjacency_[static_cast<size_t>(u)];
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), std::make_pair(v, -1));
    if (it != nbrs.end() && it->first == v) return it->second;
    return std::nullopt;
}

namespace {

Graph with_meta(Graph g, Family f, int n, std::vector<EdgeKind> kinds = {},
                std::vector<std::pair<int, int>> fibres = {});

} // namespace

struct GraphMetaAccess {
    static Graph set(Graph g, Family f, int n, std::vector<EdgeKind> kinds,
                     std::vector<std::pair<int, int>> fibres) {
        g.family_ = f;
        g.family_n_ = n;
        g.edge_kinds_ = std::move(kinds);
        g.fibre_coords_ = std::move(fibres);
        return g;
    }
};

namespace {

Graph with_meta(Graph g, Family f, int n, std::vector<EdgeKind> kinds,
                std::vector<std::pair<int, int>> fibres) {
    return GraphMetaAccess::set(std::move(g), f, n, std::move(kinds), std::move(fibres));
}

std::vector<EdgeKind> ring_kinds(int peripheral, int spokes) {
    std::vector<EdgeKind> kinds;
    kinds.reserve(static_cast<size_t>(peripheral + spokes));
    for (int i = 0; i < peripheral; ++i) kinds.push_back(EdgeKind::peripheral);
    for (int i = 0; i < spokes; ++i) kinds.push_back(EdgeKind::spoke);
    return kinds;
}

} // namespace

Graph build_family(Family family, int n) {
    std::vector<std::pair<int, int>> edges;
    switch (family) {
    case Family::path: {
        if (n < 0) throw parameter_error("path length must be >= 0");
        for (int i = 0; i < n; ++i) edges.emplace_back(i, i + 1);
        return with_meta(Graph(n + 1, std::move(edges)), family, n);
    }
    case Family::cycle: {
        if (n < 3) throw parameter_error("cycle length must be >= 3");
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
        return with_meta(Graph(n, std::move(edges)), family, n);
    }
    case Family::complete: {
        if (n < 1) throw parameter_error("complete graph order must be >= 1");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        return with_meta(Graph(n, std::move(edges)), family, n);
    }
    case Family::ladder: {
        if (n < 0) throw parameter_error("ladder length must be >= 0");
        const int v0 = 0, u0 = n + 1;
        for (int i = 0; i < n; ++i) edges.emplace_back(v0 + i, v0 + i + 1);
        for (int i = 0; i < n; ++i) edges.emplace_back(u0 + i, u0 + i + 1);
        for (int i = 0; i <= n; ++i) edges.emplace_back(v0 + i, u0 + i);
        std::vector<std::pair<int, int>> fibres(static_cast<size_t>(2 * n + 2));
        for (int i = 0; i <= n; ++i) {
            fibres[static_cast<size_t>(i)] = {i, 0};
            fibres[static_cast<size_t>(u0 + i)] = {i, 1};
        }
        return with_meta(Graph(2 * n + 2, std::move(edges)), family, n,
                         ring_kinds(2 * n, n + 1), std::move(fibres));
    }
    case Family::prism: {
        if (n < 3) throw parameter_error("prism length must be >= 3");
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
        for (int i = 0; i < n; ++i) edges.emplace_back(n + i, n + (i + 1) % n);
        for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
        std::vector<std::pair<int, int>> fibres(static_cast<size_t>(2 * n));
        for (int i = 0; i < n; ++i) {
            fibres[static_cast<size_t>(i)] = {i, 0};
            fibres[static_cast<size_t>(n + i)] = {i, 1};
        }
        return with_meta(Graph(2 * n, std::move(edges)), family, n,
                         ring_kinds(2 * n, n), std::move(fibres));
    }
    case Family::moebius: {
        if (n < 3) throw parameter_error("moebius ladder length must be >= 3");
        for (int i = 0; i < 2 * n; ++i) edges.emplace_back(i, (i + 1) % (2 * n));
        for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
        return with_meta(Graph(2 * n, std::move(edges)), family, n,
                         ring_kinds(2 * n, n));
    }
    case Family::fan: {
        if (n < 1) throw parameter_error("fan size must be >= 1");
        for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
        for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
        return with_meta(Graph(n + 1, std::move(edges)), family, n);
    }
    case Family::petersen: {
        for (int i = 0; i < 5; ++i) edges.emplace_back((i + 2) % 5, (i + 3) % 5);
        for (int i = 0; i < 5; ++i) edges.emplace_back(i, 5 + i);
        for (int i = 0; i < 5; ++i) edges.emplace_back(5 + (i + 1) % 5, 5 + (i + 4) % 5);
        return with_meta(Graph(10, std::move(edges)), family, 0);
    }
    case Family::k33: {
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                if ((i + j) % 2 == 1) edges.emplace_back(i, j);
        return with_meta(Graph(6, std::move(edges)), family, 0);
    }
    case Family::product:
    case Family::generic:
        throw parameter_error("family has no direct constructor");
    }
    throw parameter_error("unknown family");
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<std::pair<int, int>> edges;
    std::vector<EdgeKind> kinds;
    const bool tag = nh == 2;
    // h-fibre edges first within each base vertex keeps spokes contiguous
    // per fibre; overall order is by base vertex, then edge lists of h and g.
    for (int a = 0; a < ng; ++a) {
        for (int e = 0; e < h.edge_count(); ++e) {
            auto [b1, b2] = h.edge(e);
            edges.emplace_back(a * nh + b1, a * nh + b2);
            kinds.push_back(tag ? EdgeKind::spoke : EdgeKind::plain);
        }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a1, a2] = g.edge(e);
        for (int b = 0; b < nh; ++b) {
            edges.emplace_back(a1 * nh + b, a2 * nh + b);
            kinds.push_back(tag ? EdgeKind::peripheral : EdgeKind::plain);
        }
    }
    std::vector<std::pair<int, int>> fibres(static_cast<size_t>(ng * nh));
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < nh; ++b) fibres[static_cast<size_t>(a * nh + b)] = {a, b};
    return with_meta(Graph(ng * nh, std::move(edges)), Family::product, 0,
                     std::move(kinds), std::move(fibres));
}

std::vector<SquareRef> squares_of(const Graph& g) {
    std::vector<SquareRef> out;
    switch (g.family()) {
    case Family::ladder: {
        LadderIndex ix(g);
        for (int i = 0; i < ix.n; ++i) {
            SquareRef s;
            s.index = i;
            s.vertices = {ix.v(i), ix.v(i + 1), ix.u(i), ix.u(i + 1)};
            s.edges = {ix.top(i), ix.bottom(i), ix.spoke(i), ix.spoke(i + 1)};
            out.push_back(s);
        }
        return out;
    }
    case Family::prism: {
        PrismIndex ix(g);
        for (int i = 0; i < ix.n; ++i) {
            SquareRef s;
            s.index = i;
            s.vertices = {ix.v(i), ix.v(i + 1), ix.u(i), ix.u(i + 1)};
            s.edges = {ix.top(i), ix.bottom(i), ix.spoke(i), ix.spoke(i + 1)};
            out.push_back(s);
        }
        return out;
    }
    case Family::moebius: {
        MoebiusIndex ix(g);
        // Square i pairs spokes i and i+1; the last square wraps through the
        // peripheral edges v_{n-1} v_n and v_{2n-1} v_0.
        for (int i = 0; i < ix.n; ++i) {
            SquareRef s;
            s.index = i;
            s.vertices = {ix.v(i), ix.v(i + 1), ix.v(ix.n + i), ix.v(ix.n + i + 1)};
            s.edges = {ix.peripheral(i), ix.peripheral(ix.n + i), ix.spoke(i),
                       ix.spoke(i + 1)};
            out.push_back(s);
        }
        return out;
    }
    default:
        throw family_error("squares are defined only for ladders, prisms, and moebius ladders");
    }
}

std::vector<std::vector<int>> components_without(const Graph& g,
                                                 const std::vector<int>& removed_edges) {
    std::vector<char> removed(static_cast<size_t>(g.edge_count()), 0);
    for (int e : removed_edges) {
        if (e < 0 || e >= g.edge_count()) throw structural_error("removed edge index out of range");
        removed[static_cast<size_t>(e)] = 1;
    }
    std::vector<int> comp(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (comp[static_cast<size_t>(s)] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[static_cast<size_t>(s)] = id;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            out.back().push_back(v);
            for (auto [w, e] : g.neighbors(v)) {
                if (removed[static_cast<size_t>(e)] || comp[static_cast<size_t>(w)] >= 0) continue;
                comp[static_cast<size_t>(w)] = id;
                q.push(w);
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

PrismIndex::PrismIndex(const Graph& g) : n(g.family_n()) {
    if (!g.is_family(Family::prism)) throw family_error("not a prism");
}

LadderIndex::LadderIndex(const Graph& g) : n(g.family_n()) {
    if (!g.is_family(Family::ladder)) throw family_error("not a ladder");
}

MoebiusIndex::MoebiusIndex(const Graph& g) : n(g.family_n()) {
    if (!g.is_family(Family::moebius)) throw family_error("not a moebius ladder");
}

} // namespace ttc
