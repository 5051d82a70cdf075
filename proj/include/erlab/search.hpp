#pragma once

#include "erlab/graph.hpp"
#include "erlab/incidence.hpp"
#include "erlab/pattern.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace erlab {

inline constexpr std::uint64_t kDefaultSearchBudget = 2'000'000'000ULL;

/// Copy semantics for pattern search. Non-induced containment is the
/// F-freeness notion used throughout; induced copies are opt-in.
enum class CopyMode { non_induced, induced };

/// Order in which pattern vertices are embedded: max-degree vertex first,
/// then repeatedly the unplaced vertex with most placed neighbours (ties:
/// higher degree, then lower index).
std::vector<int> embedding_order(const Graph& pattern);

/// Injective edge-preserving map V(F) -> V(G), indexed by pattern vertex.
/// Returns the first map found when pattern vertices are placed in
/// embedding_order() and host candidates are tried in increasing order,
/// i.e. the least map in that order.
std::optional<std::vector<int>> contains_subgraph(const Graph& g, const Pattern& f,
                                                  CopyMode mode = CopyMode::non_induced);

/// Enumerates every embedding; the callback returns false to stop early.
/// Returns the number of embeddings visited. Throws BudgetError if more than
/// `budget` search nodes are expanded.
std::uint64_t for_each_embedding(const Graph& g, const Pattern& f, CopyMode mode,
                                 const std::function<bool(const std::vector<int>&)>& visit,
                                 std::uint64_t budget = kDefaultSearchBudget);

/// Embeddings restricted to the vertices of `within` (a subset of V(G)).
std::optional<std::vector<int>> find_copy_within(const Graph& g, const Pattern& f, const VertexSet& within,
                                                 CopyMode mode = CopyMode::non_induced);

struct CliqueResult {
    int size = 0;
    std::vector<int> witness;
    std::uint64_t nodes = 0;
};

/// Exact maximum clique by branch and bound with a greedy-colouring bound.
CliqueResult clique_number(const Graph& g, std::uint64_t budget = kDefaultSearchBudget);

/// Exact maximum clique of G[within].
CliqueResult clique_number_within(const Graph& g, const VertexSet& within,
                                  std::uint64_t budget = kDefaultSearchBudget);

/// Empty optional iff G is K_r-free; otherwise an r-clique (sorted).
std::optional<std::vector<int>> find_clique(const Graph& g, int r, std::uint64_t budget = kDefaultSearchBudget);

struct KrFreeResult {
    bool free = true;
    std::vector<int> witness;
};
KrFreeResult is_kr_free(const Graph& g, int r, std::uint64_t budget = kDefaultSearchBudget);

/// Proper colouring with at most k colours, or empty if none exists.
std::optional<std::vector<int>> colour_with(const Graph& g, int k, std::uint64_t budget = kDefaultSearchBudget);

struct ColouringResult {
    int chromatic_number = 0;
    std::vector<int> colouring;
};
/// Exact chromatic number (DSatur branch and bound).
ColouringResult chromatic_number(const Graph& g, std::uint64_t budget = kDefaultSearchBudget);

struct SmallSubgraphVerdict {
    bool exhaustive = false;
    /// True when no s-set needing more than r-1 colours was found.
    bool passed = true;
    std::uint64_t subsets_checked = 0;
    std::vector<int> counterexample;
};

/// Checks whether every s-vertex subgraph of G is (r-1)-colourable.
/// Exhaustive when s <= 12 and C(n, s) <= budget, otherwise `budget` random
/// s-subsets drawn from `rng`.
SmallSubgraphVerdict every_small_subgraph_colorable(const Graph& g, int s, int r, std::uint64_t budget,
                                                    RngConfig rng = {});

/// Alternating cycle x0 y0 x1 y1 ... in a bipartite incidence structure:
/// y_i is adjacent to x_i and x_{i+1 mod k}.
struct BipartiteCycle {
    std::vector<int> xs;
    std::vector<int> ys;
};

/// C4 detection by Y-pair codegree marking.
std::optional<BipartiteCycle> find_c4(const BipartiteIncidence& k);
/// Independent C4 detection by X-pair neighbourhood intersection.
std::optional<BipartiteCycle> find_c4_by_x_pairs(const BipartiteIncidence& k);
std::optional<BipartiteCycle> find_c6(const BipartiteIncidence& k);

bool bipartite_has_c4(const BipartiteIncidence& k);
bool bipartite_has_c6(const BipartiteIncidence& k);

/// Four X-vertices and six distinct Y-vertices, one per X-pair, adjacent to
/// both vertices of its pair. ys[i] belongs to the i-th pair in order
/// (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
struct RootedSubdivision {
    std::vector<int> xs;
    std::vector<int> ys;
};

inline constexpr int kSubdivisionMaxX = 600;

/// Searches for a 1-subdivision of K4 whose branch vertices lie in X.
/// Throws BudgetError when |X| > kSubdivisionMaxX.
std::optional<RootedSubdivision> find_rooted_k4_subdivision(const BipartiteIncidence& k);
bool has_rooted_k4_subdivision(const BipartiteIncidence& k);

}  // namespace erlab
