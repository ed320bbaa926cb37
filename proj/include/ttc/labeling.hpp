#pragma once

#include "ttc/errors.hpp"
#include "ttc/graph.hpp"

#include <cstdint>
#include <vector>

namespace ttc {

// Near-far labeling of a graph's edges: bit set = far edge.
class NearFarLabeling {
public:
    NearFarLabeling() = default;
    explicit NearFarLabeling(int edge_count) : far_(static_cast<size_t>(edge_count), false) {}
    NearFarLabeling(int edge_count, std::vector<int> far_edges)
        : far_(static_cast<size_t>(edge_count), false) {
        for (int e : far_edges) set_far(e, true);
    }

    static NearFarLabeling all_near(const Graph& g) { return NearFarLabeling(g.edge_count()); }
    static NearFarLabeling all_far(const Graph& g) {
        NearFarLabeling l(g.edge_count());
        for (size_t i = 0; i < l.far_.size(); ++i) l.far_[i] = true;
        return l;
    }
    // Bit i of `bits` labels edge i far.  Requires <= 64 edges.
    static NearFarLabeling from_bits(const Graph& g, std::uint64_t bits) {
        if (g.edge_count() > 64) throw parameter_error("bit labeling limited to 64 edges");
        NearFarLabeling l(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) l.far_[static_cast<size_t>(e)] = (bits >> e) & 1u;
        return l;
    }

    int size() const { return static_cast<int>(far_.size()); }
    bool is_far(int e) const { return far_[static_cast<size_t>(e)]; }
    bool is_near(int e) const { return !far_[static_cast<size_t>(e)]; }
    void set_far(int e, bool far) {
        if (e < 0 || e >= size()) throw structural_error("edge index out of range");
        far_[static_cast<size_t>(e)] = far;
    }
    void flip(int e) { set_far(e, !is_far(e)); }

    int far_count() const {
        int c = 0;
        for (bool b : far_) c += b ? 1 : 0;
        return c;
    }
    std::vector<int> far_edges() const {
        std::vector<int> out;
        for (int e = 0; e < size(); ++e)
            if (is_far(e)) out.push_back(e);
        return out;
    }

    std::uint64_t to_bits() const {
        if (size() > 64) throw parameter_error("bit labeling limited to 64 edges");
        std::uint64_t bits = 0;
        for (int e = 0; e < size(); ++e)
            if (is_far(e)) bits |= std::uint64_t(1) << e;
        return bits;
    }

    bool operator==(const NearFarLabeling& o) const { return far_ == o.far_; }

private:
    std::vector<bool> far_;
};

} // namespace ttc
