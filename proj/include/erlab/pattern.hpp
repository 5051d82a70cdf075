#pragma once

#include "erlab/graph.hpp"

#include <string>
#include <string_view>

namespace erlab {

/// A forbidden graph F whose vertex set is identified with [s].
class Pattern {
public:
    /// Requires v(graph) >= 2.
    explicit Pattern(Graph graph, std::string name = {});

    /// Parses a pattern name:
    ///   K<n>       complete graph         C<n>  cycle
    ///   P<n>       path on n vertices     E<n>  edgeless graph
    ///   K<a>,<b>   complete bipartite     g6:<graph6 string>
    static Pattern parse(std::string_view name);

    static Pattern clique(int n);
    static Pattern cycle(int n);
    static Pattern path(int n);
    static Pattern biclique(int a, int b);

    const Graph& graph() const noexcept { return graph_; }
    int size() const noexcept { return graph_.order(); }
    int min_degree() const noexcept { return min_degree_; }
    const std::string& name() const noexcept { return name_; }

private:
    Graph graph_;
    int min_degree_;
    std::string name_;
};

}  // namespace erlab
