#pragma once

#include "erlab/graph.hpp"
#include "erlab/pattern.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace erlab {

inline constexpr int kCanonicalMaxOrder = 11;

/// Canonical code of a graph on at most kCanonicalMaxOrder vertices: the
/// minimum upper-triangle adjacency bit string over all leaves of an
/// individualization/refinement tree driven by iterated degree refinement.
/// Two graphs of equal order are isomorphic iff their codes are equal.
std::uint64_t canonical_code(const Graph& g);

/// Graph with the given code (inverse of canonical_code up to isomorphism).
Graph graph_from_code(int n, std::uint64_t code);

/// Upper-triangle adjacency bits in the vertex order given (no canonization).
std::uint64_t adjacency_code(const Graph& g);

struct EnumerationOptions {
    /// When false every labelled extension is kept (oracle mode).
    bool deduplicate = true;
    /// Maximum graphs held at any level before BudgetError.
    std::uint64_t level_budget = 20'000'000;
};

/// All graphs on n vertices (one per isomorphism class when deduplicating)
/// that do not contain `forbidden` as a subgraph, grown one vertex at a time
/// with forbidden-containing graphs pruned at every level. Deduplicated
/// output is sorted by canonical code.
std::vector<Graph> enumerate_graphs(int n, const std::optional<Pattern>& forbidden = std::nullopt,
                                    const EnumerationOptions& options = {});

}  // namespace erlab
