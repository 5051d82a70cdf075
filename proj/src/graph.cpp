#include "erlab/graph.hpp"

#include "erlab/errors.hpp"

#include <algorithm>
#include <string>

namespace erlab {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxOrder) throw SizeError("graph order " + std::to_string(n) + " outside [0, 65536]");
    rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    rows_[u].set(v);
    rows_[v].set(u);
}

void Graph::remove_edge(int u, int v) {
    rows_[u].reset(v);
    rows_[v].reset(u);
}

std::int64_t Graph::edge_count() const noexcept {
    std::int64_t twice = 0;
    for (const auto& row : rows_) twice += row.count();
    return twice / 2;
}

int Graph::min_degree() const noexcept {
    int best = n_ == 0 ? 0 : n_;
    for (const auto& row : rows_) best = std::min(best, row.count());
    return best;
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (const auto& row : rows_) best = std::max(best, row.count());
    return best;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        rows_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

std::int64_t Graph::edges_within(const VertexSet& s) const {
    std::int64_t twice = 0;
    s.for_each([&](int v) { twice += rows_[v].intersection_count(s); });
    return twice / 2;
}

Graph induced(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order()) throw DomainError("vertex set universe does not match graph order");
    return induced(g, s.to_vector());
}

Graph induced(const Graph& g, const std::vector<int>& vertices) {
    Graph out(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0 || vertices[i] >= g.order()) throw DomainError("induced: vertex out of range");
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return out;
}

VertexSet common_neighbourhood(const Graph& g, const VertexSet& x) {
    if (x.universe() != g.order()) throw DomainError("vertex set universe does not match graph order");
    const int first = x.first();
    if (first < 0) throw DomainError("common neighbourhood of the empty set is undefined");
    VertexSet out = g.neighbours(first);
    x.for_each([&](int v) { out &= g.neighbours(v); });
    return out;
}

Graph lexicographic_product(const Graph& g, const Graph& h) {
    const std::int64_t size = static_cast<std::int64_t>(g.order()) * h.order();
    if (size > Graph::kMaxOrder) throw SizeError("lexicographic product has " + std::to_string(size) + " vertices");
    const int m = h.order();
    Graph out(static_cast<int>(size));
    for (int u = 0; u < g.order(); ++u) {
        for (auto [a, b] : h.edges()) out.add_edge(u * m + a, u * m + b);
        g.neighbours(u).for_each([&](int v) {
            if (v <= u) return;
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) out.add_edge(u * m + a, v * m + b);
        });
    }
    return out;
}

Graph union_same_vertices(const Graph& g1, const Graph& g2) {
    if (g1.order() != g2.order()) throw DomainError("union of graphs with different vertex counts");
    Graph out = g1;
    for (auto [u, v] : g2.edges()) out.add_edge(u, v);
    return out;
}

Graph complement(const Graph& g) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

Graph random_gnp(int n, double p, RngConfig rng) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("edge probability outside [0, 1]");
    Graph out(n);
    Rng gen(rng);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (gen.bernoulli(p)) out.add_edge(u, v);
    return out;
}

Graph random_regular(int n, int d, RngConfig rng) {
    if (d < 0 || d >= n || (static_cast<std::int64_t>(n) * d) % 2 != 0)
        throw DomainError("no " + std::to_string(d) + "-regular graph on " + std::to_string(n) + " vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int k = 1; k <= d / 2; ++k) g.add_edge(v, (v + k) % n);
    if (d % 2 == 1)
        for (int v = 0; v < n / 2; ++v) g.add_edge(v, v + n / 2);
    std::vector<std::pair<int, int>> edges = g.edges();
    if (edges.size() < 2) return g;
    Rng gen(rng);
    const std::uint64_t swaps = 10 * static_cast<std::uint64_t>(edges.size());
    for (std::uint64_t i = 0; i < swaps; ++i) {
        const auto a = static_cast<std::size_t>(gen.uniform_below(edges.size()));
        const auto b = static_cast<std::size_t>(gen.uniform_below(edges.size()));
        auto [u, v] = edges[a];
        auto [x, y] = edges[b];
        if (gen.bernoulli(0.5)) std::swap(x, y);
        // u-v, x-y  ->  u-x, v-y
        if (u == x || u == y || v == x || v == y || g.adjacent(u, x) || g.adjacent(v, y)) continue;
        g.remove_edge(u, v);
        g.remove_edge(x, y);
        g.add_edge(u, x);
        g.add_edge(v, y);
        edges[a] = {u, x};
        edges[b] = {v, y};
    }
    return g;
}

VertexSet lift(const VertexSet& local, const std::vector<int>& parent_labels, int parent_order) {
    VertexSet out(parent_order);
    local.for_each([&](int v) { out.set(parent_labels[static_cast<std::size_t>(v)]); });
    return out;
}

namespace graphs {

Graph empty(int n) { return Graph(n); }

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw DomainError("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph complete_multipartite(int parts, int size) {
    Graph g(parts * size);
    for (int u = 0; u < parts * size; ++u)
        for (int v = u + 1; v < parts * size; ++v)
            if (u / size != v / size) g.add_edge(u, v);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

}  // namespace graphs

}  // namespace erlab
