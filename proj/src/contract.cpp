#include "ttc/contract.hpp"

namespace ttc {

std::tuple<Graph, NearFarLabeling, ContractionRecord>
contract_square_near_edges(const Graph& g, const NearFarLabeling& lab, int square) {
    PrismIndex ix(g);
    if (lab.size() != g.edge_count())
        throw structural_error("labeling size does not match edge count");
    const int n = ix.n;
    if (n < 4) throw precondition_error("contraction needs a prism of length >= 4");
    const int i = ix.wrap(square);
    if (!lab.is_far(ix.spoke(i)) || !lab.is_far(ix.spoke(i + 1)) ||
        !lab.is_near(ix.top(i)) || !lab.is_near(ix.bottom(i)))
        throw precondition_error("square is not balanced parallel with far spokes");

    const int m = n - 1;
    Graph out = build_family(Family::prism, m);
    PrismIndex ox(out);

    ContractionRecord rec;
    rec.square = i;
    rec.vertex_map.assign(static_cast<size_t>(g.vertex_count()), -1);
    // new position k holds old position i+1+k; the merged pair {i, i+1}
    // becomes new position 0
    for (int k = 0; k < m; ++k) {
        const int old_pos = ix.wrap(i + 1 + k);
        rec.vertex_map[static_cast<size_t>(ix.v(old_pos))] = ox.v(k);
        rec.vertex_map[static_cast<size_t>(ix.u(old_pos))] = ox.u(k);
    }
    rec.vertex_map[static_cast<size_t>(ix.v(i))] = ox.v(0);
    rec.vertex_map[static_cast<size_t>(ix.u(i))] = ox.u(0);

    rec.edge_preimages.assign(static_cast<size_t>(out.edge_count()), {});
    NearFarLabeling out_lab(out.edge_count());
    for (int k = 0; k < m; ++k) {
        const int old_pos = ix.wrap(i + 1 + k);
        rec.edge_preimages[static_cast<size_t>(ox.top(k))] = {ix.top(old_pos)};
        rec.edge_preimages[static_cast<size_t>(ox.bottom(k))] = {ix.bottom(old_pos)};
        rec.edge_preimages[static_cast<size_t>(ox.spoke(k))] =
            k == 0 ? std::vector<int>{ix.spoke(i), ix.spoke(i + 1)}
                   : std::vector<int>{ix.spoke(old_pos)};
        out_lab.set_far(ox.top(k), lab.is_far(ix.top(old_pos)));
        out_lab.set_far(ox.bottom(k), lab.is_far(ix.bottom(old_pos)));
        out_lab.set_far(ox.spoke(k), k == 0 ? true : lab.is_far(ix.spoke(old_pos)));
    }
    return {std::move(out), std::move(out_lab), std::move(rec)};
}

} // namespace ttc
