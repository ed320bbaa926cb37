#include "ttc/prism.hpp"

#include "ttc/params.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <functional>
#include <set>
#include <string>

namespace ttc {

namespace {

// A dihedral placement of the prism, optionally exchanging the two rows.
// Patterns below are written in placement coordinates; the placement maps
// them onto the actual graph.
struct Pose {
    const Graph* g;
    int n;
    int rot;
    bool refl;
    bool swap_rows;

    int base(int i) const {
        const int j = (rot + (refl ? -i : i)) % n;
        return j < 0 ? j + n : j;
    }
    int v(int i) const { return swap_rows ? n + base(i) : base(i); }
    int u(int i) const { return swap_rows ? base(i) : n + base(i); }
    int top(int i) const { return *g->edge_index(v(i), v(i + 1)); }
    int bottom(int i) const { return *g->edge_index(u(i), u(i + 1)); }
    int spoke(int i) const { return *g->edge_index(v(i), u(i)); }
};

struct PosedSquare {
    std::array<int, 4> edge;  // top, bottom, left spoke, right spoke
    std::array<bool, 4> far;
    int far_count;
};

PosedSquare posed_square(const Pose& p, const NearFarLabeling& lab, int i) {
    PosedSquare s;
    s.edge = {p.top(i), p.bottom(i), p.spoke(i), p.spoke(i + 1)};
    s.far_count = 0;
    for (int j = 0; j < 4; ++j) {
        s.far[static_cast<size_t>(j)] = lab.is_far(s.edge[static_cast<size_t>(j)]);
        s.far_count += s.far[static_cast<size_t>(j)] ? 1 : 0;
    }
    return s;
}

bool unbalanced(const PosedSquare& s) { return s.far_count != 2; }

std::optional<int> deviator_of(const PosedSquare& s) {
    if (s.far_count != 1 && s.far_count != 3) return std::nullopt;
    const bool minority_far = s.far_count == 1;
    for (int j = 0; j < 4; ++j)
        if (s.far[static_cast<size_t>(j)] == minority_far) return s.edge[static_cast<size_t>(j)];
    return std::nullopt;
}

// balanced with adjacent near edges, oriented so that the two edges meeting
// at each corner of interest agree; the caller states which pairs must agree
bool nonparallel(const PosedSquare& s) {
    if (s.far_count != 2) return false;
    // parallel iff the matching pairs (top,bottom) or (spoke,spoke) share labels
    return !(s.far[0] == s.far[1]); // top/bottom differ <=> near edges adjacent
}

// (side, position) in placement coordinates; side 0 = v row, 1 = u row
using SidePos = std::pair<int, int>;

ZigzagInstance make_instance(const Graph& g, const Pose& p, const std::vector<SidePos>& a_canon,
                             const std::vector<int>& m_edges) {
    std::vector<int> a;
    a.reserve(a_canon.size());
    for (auto [side, pos] : a_canon) a.push_back(side == 0 ? p.v(pos) : p.u(pos));
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    std::vector<char> in_a(static_cast<size_t>(g.vertex_count()), 0);
    for (int x : a) in_a[static_cast<size_t>(x)] = 1;
    ZigzagInstance inst;
    inst.a_side = std::move(a);
    for (int x = 0; x < g.vertex_count(); ++x)
        if (!in_a[static_cast<size_t>(x)]) inst.b_side.push_back(x);
    inst.m_edges = m_edges;
    std::sort(inst.m_edges.begin(), inst.m_edges.end());
    return inst;
}

// Wave tail: positions first, first+2, ... up to last inclusive, alternating
// rows starting at start_side.
void append_tail(std::vector<SidePos>& a, int first, int last, int start_side) {
    int side = start_side;
    for (int pos = first; pos <= last; pos += 2) {
        a.push_back({side, pos});
        side ^= 1;
    }
}

struct Plan {
    std::vector<SidePos> a_canon;
    std::vector<int> anchor_squares; // placement square indices whose deviator joins M
};

std::optional<Plan> match_mod3_unbalanced(const Pose& p, const NearFarLabeling& lab) {
    const int n = p.n, k = (n - 3) / 4;
    if (!unbalanced(posed_square(p, lab, n - 1))) return std::nullopt;
    Plan plan;
    for (int j = 0; j <= k; ++j) plan.a_canon.push_back({0, 4 * j});
    for (int j = 0; j <= k; ++j) plan.a_canon.push_back({1, 4 * j + 2});
    plan.anchor_squares = {n - 1};
    return plan;
}

std::optional<Plan> match_mod3_nonparallel(const Pose& p, const NearFarLabeling& lab) {
    const int n = p.n, k = (n - 3) / 4;
    const PosedSquare s = posed_square(p, lab, n - 1);
    if (!nonparallel(s)) return std::nullopt;
    // both wave endpoints must see equal labels: v corner (top, left spoke),
    // u corner (bottom, right spoke of the previous index = spoke(0))
    if (s.far[0] != s.far[2] || s.far[1] != s.far[3]) return std::nullopt;
    Plan plan;
    for (int j = 0; j <= k; ++j) plan.a_canon.push_back({0, 4 * j});
    for (int j = 0; j <= k; ++j) plan.a_canon.push_back({1, 4 * j + 2});
    return plan;
}

std::optional<Plan> match_mod0(const Pose& p, const NearFarLabeling& lab) {
    const int n = p.n, k = (n - 4) / 4;
    if (!unbalanced(posed_square(p, lab, 0))) return std::nullopt;
    if (lab.is_far(p.top(1))) return std::nullopt;
    Plan plan;
    plan.a_canon = {{0, 1}, {0, 2}};
    for (int j = 0; j + 1 <= k; ++j) plan.a_canon.push_back({0, 4 * j + 6});
    for (int j = 0; j <= k; ++j) plan.a_canon.push_back({1, 4 * j + 4});
    plan.anchor_squares = {0};
    return plan;
}

std::optional<Plan> match_mod2(const Pose& p, const NearFarLabeling& lab) {
    const int n = p.n, k = (n - 6) / 4;
    if (!unbalanced(posed_square(p, lab, 0))) return std::nullopt;
    const PosedSquare s3 = posed_square(p, lab, 3);
    const bool s3_ok = unbalanced(s3) || (nonparallel(s3) && s3.far[1] == s3.far[2]);
    if (!s3_ok) return std::nullopt;
    Plan plan;
    plan.a_canon = {{1, 1}, {0, 3}};
    for (int j = 0; j <= k; ++j) plan.a_canon.push_back({1, 4 * j + 4});
    for (int j = 0; j <= k; ++j) plan.a_canon.push_back({0, 4 * j + 6});
    plan.anchor_squares = {0, 3};
    return plan;
}

// n = 4k+5 configurations: an anchor square with one extra near peripheral
// pair on each applicable side delays the wave by two in total.

void mod1_tail(std::vector<SidePos>& a, int n) {
    const int k = (n - 5) / 4;
    for (int j = 0; j + 1 <= k; ++j) a.push_back({0, 4 * j + 5});
    for (int j = 0; j + 1 <= k; ++j) a.push_back({1, 4 * j + 7});
}

std::optional<Plan> match_cfg1(const Pose& p, const NearFarLabeling& lab, int variant) {
    const PosedSquare s0 = posed_square(p, lab, 0);
    if (lab.is_far(p.bottom(1)) || lab.is_far(p.bottom(2))) return std::nullopt;
    bool ok = false;
    switch (variant) {
    case 0: ok = unbalanced(s0); break;
    // near {bottom(0), spoke(0)}, far {top(0), spoke(1)}
    case 1: ok = !s0.far[1] && !s0.far[2] && s0.far[0] && s0.far[3]; break;
    // near {top(0), spoke(1)}, far {bottom(0), spoke(0)}
    case 2: ok = !s0.far[0] && !s0.far[3] && s0.far[1] && s0.far[2]; break;
    default: break;
    }
    if (!ok) return std::nullopt;
    Plan plan;
    plan.a_canon = {{0, 0}, {1, 1}, {1, 2}, {1, 3}};
    mod1_tail(plan.a_canon, p.n);
    if (variant == 0) plan.anchor_squares = {0};
    return plan;
}

std::optional<Plan> match_cfg2(const Pose& p, const NearFarLabeling& lab, int variant) {
    const PosedSquare s1 = posed_square(p, lab, 1);
    if (lab.is_far(p.top(0)) || lab.is_far(p.bottom(2))) return std::nullopt;
    bool ok = false;
    switch (variant) {
    case 0: ok = unbalanced(s1); break;
    // near {top(1), spoke(2)}, far {bottom(1), spoke(1)}
    case 1: ok = !s1.far[0] && !s1.far[3] && s1.far[1] && s1.far[2]; break;
    // near {bottom(1), spoke(1)}, far {top(1), spoke(2)}
    case 2: ok = !s1.far[1] && !s1.far[2] && s1.far[0] && s1.far[3]; break;
    default: break;
    }
    if (!ok) return std::nullopt;
    Plan plan;
    plan.a_canon = {{0, 0}, {0, 1}, {1, 2}, {1, 3}};
    mod1_tail(plan.a_canon, p.n);
    if (variant == 0) plan.anchor_squares = {1};
    return plan;
}

// longer n = 4k+5 prisms: anchor at square 0 with top(1) near, second delay
// from an even square or a near peripheral within reach
std::optional<Plan> match_mod1_delay(const Pose& p, const NearFarLabeling& lab, int option) {
    const int n = p.n, k = (n - 5) / 4;
    if (n < 9) return std::nullopt;
    if (!unbalanced(posed_square(p, lab, 0))) return std::nullopt;
    if (lab.is_far(p.top(1))) return std::nullopt;
    Plan plan;
    plan.anchor_squares = {0};
    auto& a = plan.a_canon;
    const int last = 4 * k + 3;
    switch (option) {
    case 0: // square 3 has even far count
        if (posed_square(p, lab, 3).far_count % 2 != 0) return std::nullopt;
        a = {{1, 0}, {0, 1}, {0, 2}};
        append_tail(a, 5, last, 1);
        return plan;
    case 1: // square 7 even
        if (posed_square(p, lab, 7).far_count % 2 != 0) return std::nullopt;
        a = {{1, 0}, {0, 1}, {0, 2}, {1, 4}, {0, 6}};
        append_tail(a, 9, last, 1);
        return plan;
    case 2: // top(2) near
        if (lab.is_far(p.top(2))) return std::nullopt;
        a = {{1, 0}, {0, 1}, {0, 2}, {0, 3}};
        append_tail(a, 5, last, 1);
        return plan;
    case 3: // bottom(4) near
        if (lab.is_far(p.bottom(4))) return std::nullopt;
        a = {{1, 0}, {0, 1}, {0, 2}, {1, 4}, {1, 5}};
        append_tail(a, 7, last, 0);
        return plan;
    case 4: // top(6) near
        if (lab.is_far(p.top(6))) return std::nullopt;
        a = {{1, 0}, {0, 1}, {0, 2}, {1, 4}, {0, 6}, {0, 7}};
        append_tail(a, 9, last, 1);
        return plan;
    case 5: // bottom(8) near
        if (lab.is_far(p.bottom(8))) return std::nullopt;
        a = {{1, 0}, {0, 1}, {0, 2}, {1, 4}, {0, 6}, {1, 8}, {1, 9}};
        append_tail(a, 11, last, 0);
        return plan;
    default: return std::nullopt;
    }
}

std::vector<Pose> all_poses(const Graph& g) {
    const int n = g.family_n();
    std::vector<Pose> poses;
    poses.reserve(static_cast<size_t>(4 * n));
    for (int rot = 0; rot < n; ++rot)
        for (int refl = 0; refl < 2; ++refl)
            for (int swap = 0; swap < 2; ++swap)
                poses.push_back(Pose{&g, n, rot, refl != 0, swap != 0});
    return poses;
}

std::optional<ThresholdColoring> try_zigzag_plans(const Graph& g, const NearFarLabeling& lab) {
    const int n = g.family_n();
    const auto poses = all_poses(g);

    using Matcher = std::function<std::optional<Plan>(const Pose&)>;
    std::vector<Matcher> matchers;
    switch (n % 4) {
    case 3:
        matchers.push_back([&](const Pose& p) { return match_mod3_unbalanced(p, lab); });
        matchers.push_back([&](const Pose& p) { return match_mod3_nonparallel(p, lab); });
        break;
    case 0:
        matchers.push_back([&](const Pose& p) { return match_mod0(p, lab); });
        break;
    case 2:
        matchers.push_back([&](const Pose& p) { return match_mod2(p, lab); });
        break;
    case 1:
        for (int v = 0; v < 3; ++v)
            matchers.push_back([&lab, v](const Pose& p) { return match_cfg1(p, lab, v); });
        for (int v = 0; v < 3; ++v)
            matchers.push_back([&lab, v](const Pose& p) { return match_cfg2(p, lab, v); });
        for (int opt = 0; opt < 6; ++opt)
            matchers.push_back([&lab, opt](const Pose& p) { return match_mod1_delay(p, lab, opt); });
        break;
    default:
        break;
    }

    for (const auto& matcher : matchers) {
        for (const auto& pose : poses) {
            auto plan = matcher(pose);
            if (!plan) continue;
            std::vector<int> m_edges;
            for (int sq : plan->anchor_squares)
                if (auto dev = deviator_of(posed_square(pose, lab, sq))) m_edges.push_back(*dev);
            ZigzagInstance inst = make_instance(g, pose, plan->a_canon, m_edges);
            try {
                return zigzag_color(g, lab, inst);
            } catch (const precondition_error&) {
                // placement matched but the instance fails a condition;
                // keep looking
            }
        }
    }
    return std::nullopt;
}

// n == 5 endgame: an unbalanced square whose only near incident peripheral
// is top(1) forces every other label, and the near edges then span a path
// colored 0,1,1,2,2,3,3,4,4,5.
std::optional<ThresholdColoring> try_near_path(const Graph& g, const NearFarLabeling& lab) {
    if (g.family_n() != 5) return std::nullopt;
    for (const auto& pose : all_poses(g)) {
        if (!unbalanced(posed_square(pose, lab, 0))) continue;
        if (lab.is_far(pose.top(1)) || lab.is_near(pose.bottom(1)) ||
            lab.is_near(pose.top(4)) || lab.is_near(pose.bottom(4)))
            continue;
        // the near graph must be a spanning path
        std::vector<std::vector<int>> near_adj(static_cast<size_t>(g.vertex_count()));
        int near_edges = 0;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (lab.is_far(e)) continue;
            auto [x, y] = g.edge(e);
            near_adj[static_cast<size_t>(x)].push_back(y);
            near_adj[static_cast<size_t>(y)].push_back(x);
            ++near_edges;
        }
        if (near_edges != g.vertex_count() - 1) return std::nullopt;
        std::vector<int> ends;
        bool path_shape = true;
        for (int x = 0; x < g.vertex_count(); ++x) {
            const size_t d = near_adj[static_cast<size_t>(x)].size();
            if (d == 1) ends.push_back(x);
            if (d > 2 || d == 0) path_shape = false;
        }
        if (!path_shape || ends.size() != 2) return std::nullopt;
        int at = pose.v(0);
        if (at != ends[0] && at != ends[1]) at = std::min(ends[0], ends[1]);
        ThresholdColoring out;
        out.colors.assign(static_cast<size_t>(g.vertex_count()), 0);
        out.pair = ParamPair(6, 1);
        int prev = -1;
        for (int step = 0; step < g.vertex_count(); ++step) {
            out.colors[static_cast<size_t>(at)] = (step + 1) / 2;
            int next = -1;
            for (int w : near_adj[static_cast<size_t>(at)])
                if (w != prev) next = w;
            prev = at;
            if (next == -1) break;
            at = next;
        }
        if (!is_valid(g, lab, out.pair, out)) return std::nullopt;
        return out;
    }
    return std::nullopt;
}

std::string bits_of(const NearFarLabeling& lab) {
    std::string s;
    for (int e = 0; e < lab.size(); ++e) s += lab.is_far(e) ? '1' : '0';
    return s;
}

} // namespace

std::vector<SquareClass> classify_squares(const Graph& prism, const NearFarLabeling& lab) {
    if (lab.size() != prism.edge_count())
        throw structural_error("labeling size does not match edge count");
    std::vector<SquareClass> out;
    for (const SquareRef& sq : squares_of(prism)) {
        SquareClass c;
        c.index = sq.index;
        std::array<bool, 4> far{};
        for (int j = 0; j < 4; ++j) {
            far[static_cast<size_t>(j)] = lab.is_far(sq.edges[static_cast<size_t>(j)]);
            c.far_count += far[static_cast<size_t>(j)] ? 1 : 0;
        }
        c.spokes_far = {far[2], far[3]};
        if (c.far_count == 2) {
            // parallel iff the near edges form a matching, i.e. the two
            // peripherals (or the two spokes) share a label
            c.kind = far[0] == far[1] ? SquareKind::balanced_parallel
                                      : SquareKind::balanced_nonparallel;
        } else if (c.far_count == 1 || c.far_count == 3) {
            c.kind = SquareKind::unbalanced_odd;
            const bool minority_far = c.far_count == 1;
            for (int j = 0; j < 4; ++j)
                if (far[static_cast<size_t>(j)] == minority_far)
                    c.deviator = sq.edges[static_cast<size_t>(j)];
        } else {
            c.kind = SquareKind::unbalanced_even;
        }
        out.push_back(c);
    }
    return out;
}

std::vector<HalfCut> find_half_cuts(const Graph& prism, const NearFarLabeling& lab) {
    PrismIndex ix(prism);
    if (lab.size() != prism.edge_count())
        throw structural_error("labeling size does not match edge count");
    const int n = ix.n;
    std::vector<HalfCut> out;
    for (int span = 1; span <= n; ++span) {
        for (int start = 0; start < n; ++start) {
            const int end = ix.wrap(start + span - 1);
            bool spokes_far = true;
            for (int m = 1; m < span && spokes_far; ++m)
                spokes_far = lab.is_far(ix.spoke(start + m));
            if (!spokes_far) continue;
            std::vector<int> spokes;
            for (int m = 1; m < span; ++m) spokes.push_back(ix.spoke(start + m));
            const int variants = span == 1 ? 1 : 2;
            for (int variant = 0; variant < variants; ++variant) {
                const bool top_at_start = span == 1 ? true : variant == 1;
                const int first = top_at_start ? ix.top(start) : ix.bottom(start);
                const int second = span == 1 ? ix.bottom(start)
                                             : (top_at_start ? ix.bottom(end) : ix.top(end));
                if (!lab.is_far(first) || !lab.is_far(second)) continue;
                HalfCut cut;
                cut.start = start;
                cut.end = end;
                cut.top_at_start = top_at_start;
                cut.edges = spokes;
                cut.edges.push_back(first);
                cut.edges.push_back(second);
                std::sort(cut.edges.begin(), cut.edges.end());
                out.push_back(std::move(cut));
            }
        }
    }
    return out;
}

std::optional<std::pair<HalfCut, HalfCut>> find_disjoint_half_cuts(const Graph& prism,
                                                                   const NearFarLabeling& lab) {
    const auto cuts = find_half_cuts(prism, lab);
    for (size_t i = 0; i < cuts.size(); ++i) {
        for (size_t j = i + 1; j < cuts.size(); ++j) {
            std::vector<int> inter;
            std::set_intersection(cuts[i].edges.begin(), cuts[i].edges.end(),
                                  cuts[j].edges.begin(), cuts[j].edges.end(),
                                  std::back_inserter(inter));
            if (inter.empty()) return std::make_pair(cuts[i], cuts[j]);
        }
    }
    return std::nullopt;
}

namespace {

// coordinates for one connected piece; positions start at 0.  Peripheral
// steps move one position following the cycle orientation, spokes keep the
// position; the piece never winds fully around, so this is conflict-free.
std::vector<std::pair<int, int>> piece_coords(const Graph& g, const std::vector<int>& piece) {
    PrismIndex ix(g);
    const int n = ix.n;
    std::vector<char> in_piece(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : piece) in_piece[static_cast<size_t>(v)] = 1;

    std::vector<std::pair<int, int>> coords(static_cast<size_t>(g.vertex_count()), {INT_MIN, -1});
    coords[static_cast<size_t>(piece.front())] = {0, piece.front() < n ? 0 : 1};
    std::vector<int> stack{piece.front()};
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (auto [y, e] : g.neighbors(x)) {
            (void)e;
            if (!in_piece[static_cast<size_t>(y)]) continue;
            const int row = y < n ? 0 : 1;
            int pos = coords[static_cast<size_t>(x)].first;
            if ((x < n) == (y < n)) pos += ix.wrap(y - x) == 1 ? 1 : -1;
            if (coords[static_cast<size_t>(y)].first == INT_MIN) {
                coords[static_cast<size_t>(y)] = {pos, row};
                stack.push_back(y);
            } else if (coords[static_cast<size_t>(y)] != std::pair<int, int>{pos, row}) {
                throw precondition_error("piece does not unroll into a ladder");
            }
        }
    }
    int lo = 0;
    for (int v : piece) {
        if (coords[static_cast<size_t>(v)].first == INT_MIN)
            throw precondition_error("piece is not connected as laid out");
        lo = std::min(lo, coords[static_cast<size_t>(v)].first);
    }
    std::vector<std::pair<int, int>> out(piece.size());
    std::set<std::pair<int, int>> taken;
    for (size_t i = 0; i < piece.size(); ++i) {
        out[i] = {coords[static_cast<size_t>(piece[i])].first - lo,
                  coords[static_cast<size_t>(piece[i])].second};
        if (!taken.insert(out[i]).second)
            throw precondition_error("piece does not embed injectively into a ladder");
    }
    return out;
}

// a side may be disconnected; its pieces line up along one ladder with an
// empty position between consecutive pieces
UsefulCut::LadderWitness make_ladder_witness(const Graph& g, const std::vector<int>& side) {
    std::vector<char> in_side(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : side) in_side[static_cast<size_t>(v)] = 1;
    std::vector<int> outside_edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [x, y] = g.edge(e);
        if (!in_side[static_cast<size_t>(x)] || !in_side[static_cast<size_t>(y)])
            outside_edges.push_back(e);
    }
    UsefulCut::LadderWitness wit;
    std::vector<std::pair<int, int>> coords(static_cast<size_t>(g.vertex_count()), {-1, -1});
    int offset = 0;
    for (const auto& piece : components_without(g, outside_edges)) {
        if (!in_side[static_cast<size_t>(piece.front())]) continue;
        const auto local = piece_coords(g, piece);
        int width = 0;
        for (size_t i = 0; i < piece.size(); ++i) {
            coords[static_cast<size_t>(piece[i])] = {local[i].first + offset, local[i].second};
            width = std::max(width, local[i].first + 1);
        }
        offset += width + 1;
    }
    wit.length = std::max(0, offset - 2);
    wit.coords.resize(side.size());
    for (size_t i = 0; i < side.size(); ++i) wit.coords[i] = coords[static_cast<size_t>(side[i])];
    return wit;
}

} // namespace

UsefulCut useful_cut_from_half_cuts(const Graph& prism, const NearFarLabeling& lab,
                                    const HalfCut& h1, const HalfCut& h2) {
    PrismIndex ix(prism);
    const int n = ix.n;
    {
        std::vector<int> inter;
        std::set_intersection(h1.edges.begin(), h1.edges.end(), h2.edges.begin(), h2.edges.end(),
                              std::back_inserter(inter));
        if (!inter.empty()) throw precondition_error("half-cuts are not edge-disjoint");
    }
    for (const HalfCut* h : {&h1, &h2})
        for (int e : h->edges)
            if (lab.is_near(e)) throw precondition_error("half-cut contains a near edge");

    HalfCut big = h1.edges.size() >= h2.edges.size() ? h1 : h2;
    HalfCut small = h1.edges.size() >= h2.edges.size() ? h2 : h1;

    // a peripheral pair strictly inside the other cut's span re-pairs into
    // two cuts meeting at its square
    if (small.degenerate() && big.span(n) >= 2) {
        const int d = ix.wrap(small.start - big.start);
        if (d >= 1 && d <= big.span(n) - 2) {
            auto build = [&](int from, int to) {
                HalfCut cut;
                cut.start = from;
                cut.end = to;
                cut.top_at_start = big.top_at_start;
                for (int m = 1; m < ix.wrap(to - from) + 1; ++m)
                    cut.edges.push_back(ix.spoke(from + m));
                cut.edges.push_back(big.top_at_start ? ix.top(from) : ix.bottom(from));
                cut.edges.push_back(big.top_at_start ? ix.bottom(to) : ix.top(to));
                std::sort(cut.edges.begin(), cut.edges.end());
                return cut;
            };
            const int j = small.start;
            HalfCut first = build(big.start, j);
            HalfCut second = build(j, big.end);
            big = std::move(first);
            small = std::move(second);
        }
    }

    UsefulCut cut;
    cut.crossing = big.edges;
    cut.crossing.insert(cut.crossing.end(), small.edges.begin(), small.edges.end());
    std::sort(cut.crossing.begin(), cut.crossing.end());

    // group the components of the remainder so that every cut edge crosses:
    // 2-color the component graph whose links are the cut edges
    const auto comps = components_without(prism, cut.crossing);
    std::vector<int> comp_of(static_cast<size_t>(prism.vertex_count()), -1);
    for (size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[static_cast<size_t>(v)] = static_cast<int>(c);
    std::vector<int> side_of(comps.size(), -1);
    for (size_t c = 0; c < comps.size(); ++c) {
        if (side_of[c] != -1) continue;
        side_of[c] = 0;
        std::vector<int> stack{static_cast<int>(c)};
        while (!stack.empty()) {
            const int at = stack.back();
            stack.pop_back();
            for (int e : cut.crossing) {
                auto [x, y] = prism.edge(e);
                const int cx = comp_of[static_cast<size_t>(x)], cy = comp_of[static_cast<size_t>(y)];
                int other = -1;
                if (cx == at) other = cy;
                else if (cy == at) other = cx;
                else continue;
                if (side_of[static_cast<size_t>(other)] == -1) {
                    side_of[static_cast<size_t>(other)] = side_of[static_cast<size_t>(at)] ^ 1;
                    stack.push_back(other);
                } else if (side_of[static_cast<size_t>(other)] == side_of[static_cast<size_t>(at)]) {
                    throw precondition_error("half-cut union is not two-sided");
                }
            }
        }
    }
    for (size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) (side_of[c] == 0 ? cut.a_side : cut.b_side).push_back(v);
    std::sort(cut.a_side.begin(), cut.a_side.end());
    std::sort(cut.b_side.begin(), cut.b_side.end());
    if (cut.a_side.empty() || cut.b_side.empty())
        throw precondition_error("half-cut union does not split the prism");

    std::vector<char> in_a(static_cast<size_t>(prism.vertex_count()), 0);
    for (int v : cut.a_side) in_a[static_cast<size_t>(v)] = 1;
    std::vector<int> crossing_check;
    for (int e = 0; e < prism.edge_count(); ++e) {
        auto [x, y] = prism.edge(e);
        if (in_a[static_cast<size_t>(x)] != in_a[static_cast<size_t>(y)]) crossing_check.push_back(e);
    }
    if (crossing_check != cut.crossing)
        throw precondition_error("half-cut union is not exactly the crossing set");

    cut.a_witness = make_ladder_witness(prism, cut.a_side);
    cut.b_witness = make_ladder_witness(prism, cut.b_side);
    return cut;
}

namespace {

ThresholdColoring color_side_via_ladder(const Graph& prism, const NearFarLabeling& lab,
                                        const std::vector<int>& side,
                                        const UsefulCut::LadderWitness& wit) {
    const Graph ladder = build_family(Family::ladder, wit.length);
    LadderIndex lx(ladder);
    NearFarLabeling llab(ladder.edge_count());
    auto ladder_vertex = [&](std::pair<int, int> c) {
        return c.second == 0 ? lx.v(c.first) : lx.u(c.first);
    };
    std::vector<int> to_ladder(static_cast<size_t>(prism.vertex_count()), -1);
    for (size_t i = 0; i < side.size(); ++i)
        to_ladder[static_cast<size_t>(side[i])] = ladder_vertex(wit.coords[i]);
    for (int e = 0; e < prism.edge_count(); ++e) {
        auto [x, y] = prism.edge(e);
        const int lx1 = to_ladder[static_cast<size_t>(x)], lx2 = to_ladder[static_cast<size_t>(y)];
        if (lx1 < 0 || lx2 < 0) continue;
        auto le = ladder.edge_index(lx1, lx2);
        if (!le) throw construction_error("witness does not preserve adjacency");
        llab.set_far(*le, lab.is_far(e));
    }
    ThresholdColoring lcol = canonicalized(ladder_color(ladder, llab));
    ThresholdColoring out;
    out.colors.assign(static_cast<size_t>(prism.vertex_count()), 0);
    out.pair = lcol.pair;
    for (int v : side) out.colors[static_cast<size_t>(v)] = lcol[to_ladder[static_cast<size_t>(v)]];
    return out;
}

} // namespace

ThresholdColoring color_via_useful_cut(const Graph& prism, const NearFarLabeling& lab,
                                       const UsefulCut& cut) {
    ThresholdColoring a = color_side_via_ladder(prism, lab, cut.a_side, cut.a_witness);
    ThresholdColoring b = color_side_via_ladder(prism, lab, cut.b_side, cut.b_witness);
    ThresholdColoring out;
    out.colors.assign(static_cast<size_t>(prism.vertex_count()), 0);
    out.pair = ParamPair(11, 1);
    for (int v : cut.a_side) out.colors[static_cast<size_t>(v)] = a[v];
    for (int v : cut.b_side) out.colors[static_cast<size_t>(v)] = b[v] + 6;
    if (!is_valid(prism, lab, out.pair, out))
        throw construction_error("useful-cut coloring failed verification");
    return out;
}

ThresholdColoring wave_color(const Graph& prism, const NearFarLabeling& lab) {
    PrismIndex ix(prism);
    const int n = ix.n;
    if (lab.size() != prism.edge_count())
        throw structural_error("labeling size does not match edge count");

    for (int v = 0; v < prism.vertex_count(); ++v) {
        bool has_near = false;
        for (auto [w, e] : prism.neighbors(v)) {
            (void)w;
            has_near = has_near || lab.is_near(e);
        }
        if (!has_near)
            throw precondition_error("vertex " + std::to_string(v) + " has no near edge");
    }
    const auto classes = classify_squares(prism, lab);
    if (n > 3)
        for (const auto& c : classes)
            if (c.kind == SquareKind::balanced_parallel && c.spokes_far.first)
                throw precondition_error("parallel far-spoke square present");
    if (find_disjoint_half_cuts(prism, lab))
        throw precondition_error("two disjoint half-cuts present");

    const ParamPair target(13, 4);

    const bool all_parallel = std::all_of(classes.begin(), classes.end(), [](const SquareClass& c) {
        return c.kind == SquareKind::balanced_parallel;
    });
    if (all_parallel) {
        // all spokes share one label; near spokes would put a peripheral
        // pair of far edges across every square, so the spokes are far and
        // the two rows can take colors 0 and 1
        if (!classes.front().spokes_far.first)
            throw uncovered_case_error("all-parallel near-spoke labeling passed the half-cut check");
        ThresholdColoring two;
        two.colors.assign(static_cast<size_t>(prism.vertex_count()), 0);
        for (int i = 0; i < n; ++i) two.colors[static_cast<size_t>(ix.u(i))] = 1;
        two.pair = ParamPair(2, 0);
        if (!is_valid(prism, lab, two.pair, two))
            throw construction_error("two-row coloring failed verification");
        return embed_into(two, target);
    }

    if (auto col = try_zigzag_plans(prism, lab)) {
        ThresholdColoring out = embed_into(*col, target);
        if (!is_valid(prism, lab, out.pair, out))
            throw construction_error("zigzag plan output failed verification");
        return out;
    }
    if (auto col = try_near_path(prism, lab)) return embed_into(*col, target);

    throw uncovered_case_error("no case applies to prism n=" + std::to_string(n) +
                               " labeling " + bits_of(lab));
}

ThresholdColoring base_prism_color(const Graph& prism, const NearFarLabeling& lab) {
    PrismIndex ix(prism);
    const int n = ix.n;
    if (lab.size() != prism.edge_count())
        throw structural_error("labeling size does not match edge count");
    if (n > 3)
        for (const auto& c : classify_squares(prism, lab))
            if (c.kind == SquareKind::balanced_parallel && c.spokes_far.first)
                throw precondition_error("parallel far-spoke square present");

    // vertices with no near edge get all their edges relabeled near via a
    // maximal independent subset, then an out-of-band color
    std::vector<int> all_far_vertices;
    for (int v = 0; v < prism.vertex_count(); ++v) {
        bool any_near = false;
        for (auto [w, e] : prism.neighbors(v)) {
            (void)w;
            any_near = any_near || lab.is_near(e);
        }
        if (!any_near) all_far_vertices.push_back(v);
    }
    std::vector<int> chosen;
    std::vector<char> blocked(static_cast<size_t>(prism.vertex_count()), 0);
    for (int v : all_far_vertices) {
        if (blocked[static_cast<size_t>(v)]) continue;
        chosen.push_back(v);
        for (auto [w, e] : prism.neighbors(v)) {
            (void)e;
            blocked[static_cast<size_t>(w)] = 1;
        }
    }
    NearFarLabeling relabeled = lab;
    for (int v : chosen)
        for (auto [w, e] : prism.neighbors(v)) {
            (void)w;
            relabeled.set_far(e, false);
        }

    ThresholdColoring inner;
    if (auto cuts = find_disjoint_half_cuts(prism, relabeled)) {
        UsefulCut cut = useful_cut_from_half_cuts(prism, relabeled, cuts->first, cuts->second);
        inner = color_via_useful_cut(prism, relabeled, cut);
    } else {
        inner = wave_color(prism, relabeled);
    }

    ThresholdColoring out = embed_into(inner, ParamPair(26, 4));
    for (int v : chosen) out.colors[static_cast<size_t>(v)] = 30;
    out.pair = ParamPair(31, 4);
    if (!is_valid(prism, lab, out.pair, out))
        throw construction_error("base colorer output failed verification");
    return out;
}

ThresholdColoring prism_color(const Graph& prism, const NearFarLabeling& lab) {
    PrismIndex ix(prism);
    const int n = ix.n;
    if (n >= 4) {
        for (const auto& c : classify_squares(prism, lab)) {
            if (c.kind != SquareKind::balanced_parallel || !c.spokes_far.first) continue;
            auto [smaller, smaller_lab, rec] = contract_square_near_edges(prism, lab, c.index);
            const ThresholdColoring inner = prism_color(smaller, smaller_lab);
            ThresholdColoring out;
            out.colors.assign(static_cast<size_t>(prism.vertex_count()), 0);
            out.pair = inner.pair;
            for (int v = 0; v < prism.vertex_count(); ++v)
                out.colors[static_cast<size_t>(v)] = inner[rec.vertex_map[static_cast<size_t>(v)]];
            if (!is_valid(prism, lab, out.pair, out))
                throw construction_error("lifted coloring failed verification");
            return out;
        }
    }
    return base_prism_color(prism, lab);
}

} // namespace ttc
