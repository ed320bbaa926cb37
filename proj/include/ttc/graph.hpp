#pragma once

#include "ttc/errors.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ttc {

enum class Family {
    path,
    cycle,
    complete,
    ladder,
    prism,
    moebius,
    fan,
    petersen,
    k33,
    product,
    generic,
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// Edge role inside a ladder / prism / Moebius ladder, or inside a cartesian
// product with K2.  A spoke joins the two copies of a vertex; everything
// else along the base graph is peripheral.
enum class EdgeKind : std::uint8_t { plain, spoke, peripheral };

// One square of a ladder / prism / Moebius ladder: the 4-cycle spanned by
// two consecutive spokes.
struct SquareRef {
    int index = 0;
    // v_i, v_{i+1}, u_i, u_{i+1}
    std::array<int, 4> vertices{};
    // top peripheral (v_i v_{i+1}), bottom peripheral (u_i u_{i+1}),
    // left spoke (v_i u_i), right spoke (v_{i+1} u_{i+1})
    std::array<int, 4> edges{};

    int top() const { return edges[0]; }
    int bottom() const { return edges[1]; }
    int left_spoke() const { return edges[2]; }
    int right_spoke() const { return edges[3]; }
};

// Immutable simple undirected graph with indexed edges.  Edge indices are
// stable: 0..|E|-1 in construction order.
class Graph {
public:
    Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Endpoints with first < second.
    std::pair<int, int> edge(int e) const { return edges_[static_cast<size_t>(e)]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // Index of edge {u,v}, if present.
    std::optional<int> edge_index(int u, int v) const;
    bool adjacent(int u, int v) const { return edge_index(u, v).has_value(); }

    // (neighbor, edge index) pairs sorted by neighbor.
    const std::vector<std::pair<int, int>>& neighbors(int v) const {
        return adjacency_[static_cast<size_t>(v)];
    }
    int degree(int v) const { return static_cast<int>(adjacency_[static_cast<size_t>(v)].size()); }

    Family family() const { return family_; }
    int family_n() const { return family_n_; }
    bool is_family(Family f) const { return family_ == f; }

    EdgeKind edge_kind(int e) const {
        return edge_kinds_.empty() ? EdgeKind::plain : edge_kinds_[static_cast<size_t>(e)];
    }
    bool has_fibre_coords() const { return !fibre_coords_.empty(); }
    // (base index, K2-or-second-factor index) for product-like graphs.
    std::pair<int, int> fibre_coords(int v) const { return fibre_coords_[static_cast<size_t>(v)]; }

private:
    friend Graph build_family(Family, int);
    friend Graph cartesian_product(const Graph&, const Graph&);
    friend struct GraphMetaAccess;

    int vertex_count_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adjacency_;
    Family family_ = Family::generic;
    int family_n_ = 0;
    std::vector<EdgeKind> edge_kinds_;
    std::vector<std::pair<int, int>> fibre_coords_;
};

// Builds the named graph family with the fixed vertex/edge indexing below.
//
//   path n       P_n, the path of length n: n+1 vertices 0..n, edge i = {i, i+1}.
//   cycle n      C_n, n >= 3: edge i = {i, (i+1) mod n}.
//   complete n   K_n, n >= 1: edges in lexicographic order.
//   ladder n     L_n = P_n x K2, n >= 0: v_i = i, u_i = n+1+i;
//                edges: top i = {v_i, v_{i+1}} (0..n-1), bottom n+i = {u_i, u_{i+1}},
//                spokes 2n+i = {v_i, u_i} (0..n).
//   prism n      C_n x K2, n >= 3: v_i = i, u_i = n+i;
//                edges: top i, bottom n+i, spokes 2n+i (all mod n).
//   moebius n    M_n, n >= 3: vertices v_0..v_{2n-1} along the peripheral
//                cycle; edges: peripheral i = {v_i, v_{i+1 mod 2n}} (0..2n-1),
//                spokes 2n+i = {v_i, v_{n+i}} (0..n-1).
//   fan n        F_n, n >= 1: apex 0, spine 1..n; edges: apex i-1 = {0, i}
//                (i = 1..n), spine n-1+i = {i, i+1} (i = 1..n-1).
//   petersen     vertices p_0..p_4 outer, p_5..p_9 inner; edges:
//                outer  e_i  (index i)    = {p_{(i+2)%5}, p_{(i+3)%5}},
//                spokes f_i  (index 5+i)  = {p_i, p_{5+i}},
//                inner  e'_i (index 10+i) = {p_{5+(i+1)%5}, p_{5+(i+4)%5}}.
//   k33          parts {0,2,4} / {1,3,5}, edges in lexicographic order.
Graph build_family(Family family, int n = 0);

// Cartesian product: vertex (a,b) gets index a*|V(h)| + b; two vertices are
// adjacent iff they agree in one coordinate and are adjacent in the other.
// Fibre coordinates are recorded; when |V(h)| == 2 the h-fibre edges are
// tagged as spokes and the g-fibre edges as peripheral.
Graph cartesian_product(const Graph& g, const Graph& h);

// All squares of a ladder, prism, or Moebius ladder, in index order.
// Prism/Moebius squares are cyclic (index mod n); ladder squares are 0..n-1.
std::vector<SquareRef> squares_of(const Graph& g);

// Partition of the vertex set into connected components of the graph with
// the given edges removed.  Components are ordered by least vertex and each
// component lists its vertices in increasing order.
std::vector<std::vector<int>> components_without(const Graph& g,
                                                 const std::vector<int>& removed_edges);

// Convenient fixed-layout accessors.  These encode the indexing contract of
// build_family and are used by the constructive colorers.

struct PrismIndex {
    int n;
    explicit PrismIndex(const Graph& g);
    int wrap(int i) const { return ((i % n) + n) % n; }
    int v(int i) const { return wrap(i); }
    int u(int i) const { return n + wrap(i); }
    int top(int i) const { return wrap(i); }            // v_i v_{i+1}
    int bottom(int i) const { return n + wrap(i); }     // u_i u_{i+1}
    int spoke(int i) const { return 2 * n + wrap(i); }  // v_i u_i
};

struct LadderIndex {
    int n;
    explicit LadderIndex(const Graph& g);
    int v(int i) const { return i; }
    int u(int i) const { return n + 1 + i; }
    int top(int i) const { return i; }
    int bottom(int i) const { return n + i; }
    int spoke(int i) const { return 2 * n + i; }
};

struct MoebiusIndex {
    int n;
    explicit MoebiusIndex(const Graph& g);
    int wrap2n(int i) const { return ((i % (2 * n)) + 2 * n) % (2 * n); }
    int v(int i) const { return wrap2n(i); }
    int peripheral(int i) const { return wrap2n(i); }            // v_i v_{i+1}
    int spoke(int i) const { return 2 * n + ((i % n) + n) % n; } // v_i v_{n+i}
};

struct PetersenIndex {
    static int outer(int i) { return ((i % 5) + 5) % 5; }        // e_i
    static int spoke(int i) { return 5 + ((i % 5) + 5) % 5; }    // f_i
    static int inner(int i) { return 10 + ((i % 5) + 5) % 5; }   // e'_i
};

} // namespace ttc
