#include "ttc/coloring.hpp"

#include <algorithm>
#include <cstdlib>

namespace ttc {

int ThresholdColoring::window_width() const {
    if (colors.empty()) return 0;
    auto [lo, hi] = std::minmax_element(colors.begin(), colors.end());
    return *hi - *lo + 1;
}

std::string Violation::str() const {
    switch (kind) {
    case ViolationKind::near_too_far: return "near-too-far edge " + std::to_string(edge);
    case ViolationKind::far_too_near: return "far-too-near edge " + std::to_string(edge);
    case ViolationKind::range_overflow: return "range-overflow";
    }
    return "";
}

std::vector<Violation> verify(const Graph& g, const NearFarLabeling& lab,
                              const ParamPair& pair, const ThresholdColoring& col) {
    if (lab.size() != g.edge_count())
        throw structural_error("labeling size does not match edge count");
    if (static_cast<int>(col.colors.size()) != g.vertex_count())
        throw structural_error("coloring does not cover all vertices");
    std::vector<Violation> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        const int d = std::abs(col[u] - col[v]);
        if (lab.is_near(e) && d > pair.t)
            out.push_back({ViolationKind::near_too_far, e});
        else if (lab.is_far(e) && d <= pair.t)
            out.push_back({ViolationKind::far_too_near, e});
    }
    if (col.window_width() > pair.r) out.push_back({ViolationKind::range_overflow, -1});
    return out;
}

ThresholdColoring translate_coloring(const ThresholdColoring& col, int delta) {
    ThresholdColoring out = col;
    for (int& c : out.colors) c += delta;
    return out;
}

ThresholdColoring canonicalized(const ThresholdColoring& col) {
    if (col.colors.empty()) return col;
    const int lo = *std::min_element(col.colors.begin(), col.colors.end());
    return translate_coloring(col, -lo);
}

std::pair<int, int> scaled_threshold_interval(const ParamPair& pair, int lambda) {
    if (lambda < 1) throw parameter_error("scale factor must be >= 1");
    return {lambda * pair.t, lambda * pair.t + lambda - 1};
}

ThresholdColoring scale_coloring(const ThresholdColoring& col, int lambda) {
    if (lambda < 1) throw parameter_error("scale factor must be >= 1");
    ThresholdColoring out = col;
    for (int& c : out.colors) c *= lambda;
    const auto [t_lo, t_hi] = scaled_threshold_interval(col.pair, lambda);
    (void)t_lo;
    out.pair = ParamPair(lambda * (col.pair.r - 1) + 1, t_hi);
    return out;
}

ThresholdColoring apply_embedding(const ThresholdColoring& col, const MonotoneEmbedding& emb) {
    ThresholdColoring out = canonicalized(col);
    if (out.window_width() > emb.from.r)
        throw precondition_error("coloring window exceeds embedding domain");
    for (int& c : out.colors) c = emb(c);
    out.pair = emb.to;
    return out;
}

ThresholdColoring embed_into(const ThresholdColoring& col, const ParamPair& target) {
    auto emb = pair_leq(col.pair, target);
    if (!emb) throw precondition_error("pairs are incomparable: " + col.pair.str() +
                                       " vs " + target.str());
    return apply_embedding(col, *emb);
}

} // namespace ttc
