#pragma once

#include "erlab/graph.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace erlab {

/// Bipartite graph with parts X = [0, x_size) and Y = [0, y_size), stored as
/// sorted neighbour lists on both sides.
class BipartiteIncidence {
public:
    BipartiteIncidence() = default;
    BipartiteIncidence(int x_size, int y_size);
    /// Edges are (x, y) pairs; duplicates are rejected.
    BipartiteIncidence(int x_size, int y_size, const std::vector<std::pair<int, int>>& edges);

    int x_size() const noexcept { return static_cast<int>(x_adj_.size()); }
    int y_size() const noexcept { return static_cast<int>(y_adj_.size()); }

    const std::vector<int>& x_neighbours(int x) const { return x_adj_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& y_neighbours(int y) const { return y_adj_[static_cast<std::size_t>(y)]; }
    bool has_edge(int x, int y) const;
    std::int64_t edge_count() const noexcept;

    /// Adds x–y if absent; returns false if the edge already existed.
    bool add_edge(int x, int y);

    /// Same structure with the roles of X and Y exchanged.
    BipartiteIncidence swapped() const;

    /// Ordinary graph on X ∪ Y with X at [0, |X|) and Y at [|X|, |X|+|Y|).
    Graph to_graph() const;

    /// Neighbourhood of x as a bitmask over Y.
    VertexSet x_mask(int x) const;
    /// Neighbourhood of y as a bitmask over X.
    VertexSet y_mask(int y) const;

    friend bool operator==(const BipartiteIncidence&, const BipartiteIncidence&) = default;

private:
    std::vector<std::vector<int>> x_adj_;
    std::vector<std::vector<int>> y_adj_;
};

/// "X=<count> Y=<count>" header followed by one "x y" line per edge.
std::string incidence_encode(const BipartiteIncidence& k);
BipartiteIncidence incidence_decode(std::string_view text);

/// Point/line incidence of PG(2, p) for prime p: X = lines, Y = points.
/// p = 2 gives the Fano plane.
BipartiteIncidence projective_plane_incidence(int p);

}  // namespace erlab
