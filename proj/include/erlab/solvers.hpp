#pragma once

#include "erlab/graph.hpp"
#include "erlab/pattern.hpp"
#include "erlab/rng.hpp"
#include "erlab/search.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace erlab {

enum class SolveMode { exact, greedy };

/// Certified outcome of a solver or extraction procedure.
struct SolveReport {
    VertexSet witness;
    std::int64_t value = 0;
    /// Exact solvers: the value is proven optimal. Extraction procedures:
    /// the proof route succeeded (false means the greedy fallback was used).
    bool optimal = false;
    std::uint64_t nodes_explored = 0;
    std::optional<RngConfig> seed;
    /// Which route produced the witness ("exact", "greedy", "proof", "fallback", ...).
    std::string route;
    /// Human-readable step log for procedures with several stages.
    std::vector<std::string> trail;
    /// Named measurements logged alongside the witness (reference curves,
    /// intermediate sizes). Never used for pass/fail decisions.
    std::map<std::string, double> metrics;
};

/// Hyperedges are the vertex sets of copies of F in G (deduplicated, each
/// sorted). Copy semantics are explicit.
struct CopyHypergraph {
    int n = 0;
    int uniformity = 0;
    std::vector<std::vector<int>> edges;

    static CopyHypergraph build(const Graph& g, const Pattern& f, CopyMode mode,
                                std::uint64_t max_edges = 1'000'000);
};

/// n/(d̄+1) = n²/(2e+n), the guarantee of the minimum-degree greedy.
double turan_bound(const Graph& g);

/// Exact (clique search on the complement) or minimum-degree greedy.
SolveReport independence_number(const Graph& g, SolveMode mode = SolveMode::exact,
                                 std::uint64_t budget = kDefaultSearchBudget);

/// Minimum-degree greedy restricted to `within`: repeatedly take a vertex of
/// minimum degree in the remaining induced subgraph (lowest index on ties)
/// and delete its closed neighbourhood.
VertexSet greedy_independent_set(const Graph& g, const VertexSet& within);

/// Maximum independent set of a uniform hypergraph (no hyperedge entirely
/// inside the returned set). Branch and bound, branching on the free vertex
/// in the most live hyperedges.
SolveReport hypergraph_max_independent(const CopyHypergraph& h, std::uint64_t budget = kDefaultSearchBudget);

/// Largest F-free induced subgraph. Exact mode solves the copy hypergraph
/// and requires n <= 100 and at most 10^6 copies. Greedy mode runs a few
/// rounds of sparsify (keep each vertex with probability p'), delete one
/// vertex per surviving copy, then re-add deleted vertices while F-free.
SolveReport alpha_f(const Graph& g, const Pattern& f, SolveMode mode, RngConfig rng = {},
                    std::uint64_t budget = kDefaultSearchBudget);

/// Greedy F-free subset of `within` (same procedure as greedy alpha_f).
VertexSet greedy_ffree_subset(const Graph& g, const Pattern& f, const VertexSet& within, RngConfig rng);

/// True iff G[S] contains no copy of F.
bool is_ffree(const Graph& g, const Pattern& f, const VertexSet& s, CopyMode mode = CopyMode::non_induced);

inline constexpr std::uint64_t kCountBudget = 100'000'000;

/// Number of t-subsets T with G[T] F-free (no induced copy in induced mode).
/// Requires C(n, t) <= budget.
std::uint64_t count_ffree_sets(const Graph& g, const Pattern& f, int t, CopyMode mode,
                               std::uint64_t budget = kCountBudget);

/// Visits every F-free t-subset in lexicographic order.
void for_each_ffree_set(const Graph& g, const Pattern& f, int t, CopyMode mode,
                        const std::function<bool(const std::vector<int>&)>& visit,
                        std::uint64_t budget = kCountBudget);

inline constexpr int kFExactMaxOrder = 9;

struct FExactResult {
    int value = 0;
    Graph witness;
    /// n < v(F): every set is F-free and the value is n.
    bool vacuous = false;
    std::uint64_t graphs_examined = 0;
    bool deduplicated = true;
};

/// f_{F,H}(n): the minimum of alpha_F over all H-free graphs on n vertices,
/// with a minimizing graph. n <= 9.
FExactResult f_exact(const Pattern& f, const Pattern& h, int n, std::uint64_t budget = 20'000'000,
                     bool deduplicate = true);

}  // namespace erlab
