#pragma once

#include "erlab/rng.hpp"
#include "erlab/vertex_set.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace erlab {

/// Dense undirected simple graph on vertices [0, n) with bit-packed rows.
///
/// Invariants: no self-loops, symmetric adjacency, row popcount = degree.
/// Treated as a value; mutation is only used while building.
class Graph {
public:
    static constexpr int kMaxOrder = 1 << 16;

    Graph() = default;
    explicit Graph(int n);

    int order() const noexcept { return n_; }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool adjacent(int u, int v) const noexcept { return rows_[u].test(v); }

    const VertexSet& neighbours(int v) const noexcept { return rows_[v]; }
    int degree(int v) const noexcept { return rows_[v].count(); }
    std::int64_t edge_count() const noexcept;
    int min_degree() const noexcept;
    int max_degree() const noexcept;

    VertexSet vertices() const { return VertexSet::full(n_); }
    VertexSet empty_set() const { return VertexSet(n_); }
    std::vector<std::pair<int, int>> edges() const;

    /// Number of edges with both ends in S.
    std::int64_t edges_within(const VertexSet& s) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<VertexSet> rows_;
};

/// G[S] with vertices renumbered in increasing order of S.
Graph induced(const Graph& g, const VertexSet& s);
Graph induced(const Graph& g, const std::vector<int>& vertices);

/// Vertices adjacent to every member of X. X must be nonempty.
VertexSet common_neighbourhood(const Graph& g, const VertexSet& x);

/// G·H: (u,a)~(v,b) iff u~v in G, or u = v and a~b in H. Vertex (u,a) has
/// index u·v(H)+a.
Graph lexicographic_product(const Graph& g, const Graph& h);

/// Edge union of two graphs on the same vertex set.
Graph union_same_vertices(const Graph& g1, const Graph& g2);

Graph complement(const Graph& g);

/// Erdős–Rényi G(n, p). Pairs are visited in (i < j) row-major order.
Graph random_gnp(int n, double p, RngConfig rng);

/// Random d-regular graph: a circulant start mixed by 10·e(G) random
/// degree-preserving double-edge swaps. Requires n·d even and d < n.
/// Close to uniform for the sizes used here, not exactly uniform.
Graph random_regular(int n, int d, RngConfig rng);

/// Maps a vertex set of an induced subgraph G[S] back to G's labels.
VertexSet lift(const VertexSet& local, const std::vector<int>& parent_labels, int parent_order);

namespace graphs {

Graph empty(int n);
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph complete_bipartite(int a, int b);
/// Complete multipartite graph with `parts` parts of `size` vertices each;
/// part j occupies [j·size, (j+1)·size).
Graph complete_multipartite(int parts, int size);
Graph petersen();
Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace graphs

}  // namespace erlab
