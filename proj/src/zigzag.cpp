#include "ttc/zigzag.hpp"

#include <algorithm>
#include <queue>

namespace ttc {

namespace {

std::string edge_str(const Graph& g, int e) {
    auto [u, v] = g.edge(e);
    return "edge " + std::to_string(e) + " {" + std::to_string(u) + "," + std::to_string(v) + "}";
}

} // namespace

std::string ConditionReport::summary() const {
    std::string s;
    auto add = [&](const char* name, const Entry& e) {
        if (!e.ok) s += std::string(s.empty() ? "" : "; ") + name + ": " + e.witness;
    };
    add("(i)", edge_inside_a_near);
    add("(ii)", b_cycles_even_far);
    add("(iii)", m_induced_matching);
    add("(iv)", a_edges_consistent);
    return s.empty() ? "ok" : s;
}

ConditionReport check_conditions(const Graph& g, const NearFarLabeling& lab,
                                 const ZigzagInstance& inst) {
    if (lab.size() != g.edge_count())
        throw structural_error("labeling size does not match edge count");
    const int n = g.vertex_count();
    std::vector<int> side(static_cast<size_t>(n), -1);
    for (int v : inst.a_side) {
        if (v < 0 || v >= n || side[static_cast<size_t>(v)] != -1)
            throw structural_error("A side is not a vertex subset");
        side[static_cast<size_t>(v)] = 0;
    }
    for (int v : inst.b_side) {
        if (v < 0 || v >= n || side[static_cast<size_t>(v)] != -1)
            throw structural_error("B side overlaps A or repeats a vertex");
        side[static_cast<size_t>(v)] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (side[static_cast<size_t>(v)] == -1)
            throw structural_error("A and B do not cover all vertices");

    std::vector<char> in_m(static_cast<size_t>(g.edge_count()), 0);
    for (int e : inst.m_edges) {
        if (e < 0 || e >= g.edge_count()) throw structural_error("M edge index out of range");
        in_m[static_cast<size_t>(e)] = 1;
    }

    ConditionReport rep;

    // (i) edges inside A are near
    for (int e = 0; e < g.edge_count() && rep.edge_inside_a_near.ok; ++e) {
        auto [u, v] = g.edge(e);
        if (side[static_cast<size_t>(u)] == 0 && side[static_cast<size_t>(v)] == 0 &&
            lab.is_far(e))
            rep.edge_inside_a_near = {false, "far " + edge_str(g, e) + " inside A"};
    }

    // (ii) far parity over cycles of G[B]: enough to check fundamental
    // cycles of a spanning forest, since far-parity is additive over the
    // cycle space.
    {
        std::vector<int> parity(static_cast<size_t>(n), -1); // far-parity from root
        for (int s = 0; s < n && rep.b_cycles_even_far.ok; ++s) {
            if (side[static_cast<size_t>(s)] != 1 || parity[static_cast<size_t>(s)] != -1)
                continue;
            parity[static_cast<size_t>(s)] = 0;
            std::queue<int> q;
            q.push(s);
            while (!q.empty() && rep.b_cycles_even_far.ok) {
                int v = q.front();
                q.pop();
                for (auto [w, e] : g.neighbors(v)) {
                    if (side[static_cast<size_t>(w)] != 1) continue;
                    const int p = parity[static_cast<size_t>(v)] ^ (lab.is_far(e) ? 1 : 0);
                    if (parity[static_cast<size_t>(w)] == -1) {
                        parity[static_cast<size_t>(w)] = p;
                        q.push(w);
                    } else if (parity[static_cast<size_t>(w)] != p) {
                        rep.b_cycles_even_far = {
                            false, "odd-far cycle through " + edge_str(g, e) + " in G[B]"};
                    }
                }
            }
        }
    }

    // (iii) M is an induced matching of A-B edges
    for (size_t i = 0; i < inst.m_edges.size() && rep.m_induced_matching.ok; ++i) {
        const int e = inst.m_edges[i];
        auto [u, v] = g.edge(e);
        if (side[static_cast<size_t>(u)] == side[static_cast<size_t>(v)]) {
            rep.m_induced_matching = {false, edge_str(g, e) + " does not join A to B"};
            break;
        }
        for (size_t j = 0; j < i; ++j) {
            const int f = inst.m_edges[j];
            auto [x, y] = g.edge(f);
            for (int p : {u, v})
                for (int q : {x, y})
                    if (p == q || g.adjacent(p, q))
                        rep.m_induced_matching = {false, "M edges " + std::to_string(e) + " and " +
                                                             std::to_string(f) + " too close"};
        }
    }

    // (iv) non-M edges from one B vertex into A agree
    for (int b = 0; b < n && rep.a_edges_consistent.ok; ++b) {
        if (side[static_cast<size_t>(b)] != 1) continue;
        int seen = -1;
        for (auto [a, e] : g.neighbors(b)) {
            if (side[static_cast<size_t>(a)] != 0 || in_m[static_cast<size_t>(e)]) continue;
            const int far = lab.is_far(e) ? 1 : 0;
            if (seen == -1)
                seen = far;
            else if (seen != far)
                rep.a_edges_consistent = {
                    false, "vertex " + std::to_string(b) + " has mixed A-edge labels"};
        }
    }

    return rep;
}

ThresholdColoring zigzag_color(const Graph& g, const NearFarLabeling& lab,
                               const ZigzagInstance& inst) {
    ConditionReport rep = check_conditions(g, lab, inst);
    if (!rep.all_ok())
        throw precondition_error("zigzag conditions fail: " + rep.summary());

    const int n = g.vertex_count();
    std::vector<char> in_a(static_cast<size_t>(n), 0);
    for (int v : inst.a_side) in_a[static_cast<size_t>(v)] = 1;
    std::vector<char> in_m(static_cast<size_t>(g.edge_count()), 0);
    for (int e : inst.m_edges) in_m[static_cast<size_t>(e)] = 1;

    // Only M-edges that actually disagree with the other A-edges of their B
    // endpoint need relabeling; the rest already satisfy (iv).
    std::vector<int> m_active;
    for (int e : inst.m_edges) {
        auto [u, v] = g.edge(e);
        const int b = in_a[static_cast<size_t>(u)] ? v : u;
        bool disagrees = false;
        for (auto [a, f] : g.neighbors(b)) {
            if (!in_a[static_cast<size_t>(a)] || in_m[static_cast<size_t>(f)]) continue;
            if (lab.is_far(f) != lab.is_far(e)) disagrees = true;
        }
        if (disagrees) m_active.push_back(e);
    }
    std::vector<char> flipped(static_cast<size_t>(g.edge_count()), 0);
    for (int e : m_active) flipped[static_cast<size_t>(e)] = 1;
    auto far2 = [&](int e) { return lab.is_far(e) != (flipped[static_cast<size_t>(e)] != 0); };

    // Magnitude rule under the relabeled instance: 1 iff the vertex has a
    // near A-edge, 2 iff its A-edges are far; vertices without A-edges get
    // 2 as tree children and 1 as roots.
    auto a_edge_label = [&](int b) -> int { // -1 none, 0 near, 1 far
        int seen = -1;
        for (auto [a, e] : g.neighbors(b)) {
            if (!in_a[static_cast<size_t>(a)]) continue;
            seen = far2(e) ? 1 : 0;
        }
        return seen;
    };

    std::vector<int> color(static_cast<size_t>(n), 0);
    std::vector<char> done(static_cast<size_t>(n), 0);
    for (int v : inst.a_side) done[static_cast<size_t>(v)] = 1;

    for (int s = 0; s < n; ++s) {
        if (in_a[static_cast<size_t>(s)] || done[static_cast<size_t>(s)]) continue;
        const int root_label = a_edge_label(s);
        color[static_cast<size_t>(s)] = root_label == 1 ? 2 : 1;
        done[static_cast<size_t>(s)] = 1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, e] : g.neighbors(v)) {
                if (in_a[static_cast<size_t>(w)] || done[static_cast<size_t>(w)]) continue;
                const int sign = (color[static_cast<size_t>(v)] > 0) == !far2(e) ? 1 : -1;
                const int mag = a_edge_label(w) == 0 ? 1 : 2;
                color[static_cast<size_t>(w)] = sign * mag;
                done[static_cast<size_t>(w)] = 1;
                q.push(w);
            }
        }
    }

    // Non-forest B-edges must already agree in sign pattern; condition (ii)
    // guarantees this, so a failure here is a construction bug.
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (in_a[static_cast<size_t>(u)] || in_a[static_cast<size_t>(v)]) continue;
        const bool same_sign = (color[static_cast<size_t>(u)] > 0) == (color[static_cast<size_t>(v)] > 0);
        if (same_sign == far2(e))
            throw construction_error("sign pattern violates B-edge " + edge_str(g, e));
    }

    ThresholdColoring out;
    out.colors = std::move(color);
    if (inst.m_edges.empty()) {
        out.pair = ParamPair(5, 1);
    } else {
        for (int& c : out.colors) c *= 3;
        for (int e : m_active) {
            auto [u, v] = g.edge(e);
            const int a = in_a[static_cast<size_t>(u)] ? u : v;
            const int b = in_a[static_cast<size_t>(u)] ? v : u;
            const int s = out.colors[static_cast<size_t>(b)] > 0 ? 1 : -1;
            if (lab.is_near(e)) {
                // originally near, far after the flip: |c'(b)| = 2
                out.colors[static_cast<size_t>(b)] -= s;
                out.colors[static_cast<size_t>(a)] += s;
            } else {
                out.colors[static_cast<size_t>(b)] += s;
                out.colors[static_cast<size_t>(a)] -= s;
            }
        }
        out.pair = ParamPair(13, 4);
    }

    if (!is_valid(g, lab, out.pair, out))
        throw construction_error("zigzag output failed verification");
    return out;
}

ThresholdColoring fan_color(int n, const NearFarLabeling& lab) {
    return fan_color(build_family(Family::fan, n), lab);
}

ThresholdColoring fan_color(const Graph& fan, const NearFarLabeling& lab) {
    if (!fan.is_family(Family::fan)) throw family_error("not a fan");
    if (lab.size() != fan.edge_count())
        throw structural_error("labeling size does not match edge count");
    const int n = fan.family_n();
    auto apex_edge = [&](int i) { return i - 1; };      // {0, i}
    auto spine_edge = [&](int i) { return n - 1 + i; }; // {i, i+1}

    ThresholdColoring out;
    out.colors.assign(static_cast<size_t>(n + 1), 0);
    out.pair = ParamPair(5, 1);
    int sign = 1;
    for (int i = 1; i <= n; ++i) {
        if (i > 1 && lab.is_far(spine_edge(i - 1))) sign = -sign;
        const int mag = lab.is_far(apex_edge(i)) ? 2 : 1;
        out.colors[static_cast<size_t>(i)] = sign * mag;
    }
    if (!is_valid(fan, lab, out.pair, out))
        throw construction_error("fan coloring failed verification");
    return out;
}

std::vector<int> ladder_zigzag_a_side(const Graph& ladder) {
    LadderIndex ix(ladder);
    std::vector<int> a;
    for (int i = 0; i <= ix.n; i += 4) a.push_back(ix.v(i));
    for (int i = 2; i <= ix.n; i += 4) a.push_back(ix.u(i));
    std::sort(a.begin(), a.end());
    return a;
}

ThresholdColoring ladder_color(int n, const NearFarLabeling& lab) {
    return ladder_color(build_family(Family::ladder, n), lab);
}

ThresholdColoring ladder_color(const Graph& ladder, const NearFarLabeling& lab) {
    ZigzagInstance inst;
    inst.a_side = ladder_zigzag_a_side(ladder);
    std::vector<char> in_a(static_cast<size_t>(ladder.vertex_count()), 0);
    for (int v : inst.a_side) in_a[static_cast<size_t>(v)] = 1;
    for (int v = 0; v < ladder.vertex_count(); ++v)
        if (!in_a[static_cast<size_t>(v)]) inst.b_side.push_back(v);
    return zigzag_color(ladder, lab, inst);
}

} // namespace ttc
