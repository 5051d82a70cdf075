#pragma once

#include "erlab/graph.hpp"
#include "erlab/incidence.hpp"
#include "erlab/pattern.hpp"
#include "erlab/rational.hpp"
#include "erlab/rng.hpp"
#include "erlab/search.hpp"
#include "erlab/solvers.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace erlab {

/// For each y, the part in [0, parts) given to each x in N(y), in the order
/// of y_neighbours(y).
struct BlowupPlan {
    int parts = 0;
    std::vector<std::vector<int>> assignment;
};

struct BlowupResult {
    /// Graph on the X side.
    Graph graph;
    BlowupPlan plan;
    /// Every edge comes from exactly one y whose plan puts its ends in
    /// F-adjacent parts, and every such pair is an edge.
    bool provenance_ok = false;
    /// Exact clique number, or -1 when the search ran out of budget.
    int clique_number = -1;
};

/// For every y, splits N(y) uniformly at random into v(F) parts and joins
/// parts i, j completely whenever ij is an edge of F. Requires a C4-free
/// host (PreconditionError with the cycle otherwise): then each edge has a
/// unique source y.
BlowupResult blowup_on_host(const BipartiteIncidence& k, const Pattern& f, RngConfig rng,
                            std::uint64_t budget = kDefaultSearchBudget);

/// Recomputes edge provenance of a blow-up from scratch.
bool audit_blowup(const BipartiteIncidence& k, const Pattern& f, const BlowupPlan& plan, const Graph& h);

/// p = n^(-2/r) / log2(n). Requires n >= 3 and r >= 1.
double random_union_probability(int n, int r);

/// G0 together with an independent G(n, p) on the same vertices,
/// p = random_union_probability(n, r).
Graph union_with_random(const Graph& g0, int r, RngConfig rng);

struct RandomGraphAudit {
    int n = 0;
    int r = 0;
    int s = 0;
    double p = 0.0;
    std::uint64_t samples = 0;
    /// Sampled s-sets whose induced subgraph has a vertex of degree <= r-1.
    std::uint64_t low_degree_sets = 0;
    double fraction = 0.0;
    std::int64_t alpha_greedy = 0;
    /// n^(2/r)·log2(n)^3.
    double alpha_reference = 0.0;
};

/// Samples G(n, p) at the schedule above and checks random s-sets for a
/// vertex of induced degree at most r-1.
RandomGraphAudit random_graph_audit(int n, int r, int s, std::uint64_t samples, RngConfig rng);

struct KttAudit {
    int k = 0;
    int i = 0;
    int t = 0;
    int order = 0;
    /// Order of H; G = H·H.
    int inner_order = 0;
    /// r = 2^(floor(k/2) - i) and the edge probability used for G1.
    int r = 0;
    double p = 0.0;
    std::optional<int> clique_number;
    std::int64_t alpha_ktt_lower = 0;
    std::optional<std::int64_t> alpha_ktt_exact;
    std::optional<std::int64_t> alpha_h;
    std::optional<std::int64_t> alpha_ktt_h;
    /// t·alpha(H)·alpha_Ktt(H) when both factors are exact.
    std::optional<std::int64_t> product_bound;
    std::optional<bool> product_bound_holds;
    SmallSubgraphVerdict colourability;
    std::vector<std::string> notes;
};

struct KttConstruction {
    Graph graph;
    Graph h;
    KttAudit audit;
};

/// Squared construction for K_(2^k)-free graphs with small alpha_(K_t,t):
/// H = G0 ∪ G(m, p) on m = floor(sqrt(n)) vertices, G = H·H. G0 is empty
/// when i = 1 and otherwise built the same way one level down (k -> i,
/// i -> max(1, floor(i/2 - sqrt(i)))) and padded with isolated vertices.
/// k = 1 returns the empty graph on n vertices. Requires 1 <= i <= k/2 for
/// k >= 2.
KttConstruction recursive_kttfree(int k, int i, int t, int s_check, int n, RngConfig rng,
                                  std::uint64_t budget = 2'000'000, std::uint64_t check_samples = 20'000);

/// Closed interval of rationals.
struct RationalInterval {
    Rational lo;
    Rational hi;
};

struct RhoReport {
    int k = 0;
    Rational c;
    /// k <= C/5: the bound is 1.
    bool trivial_branch = false;
    /// floor(k/2 - sqrt(k)) on the recursive branch, else 0.
    int i = 0;
    /// Set when the recursion needed i < 1 somewhere and used rho <= 1.
    bool clamped = false;
    Rational bound;
    /// C/k·(1 - k^(-1/3)).
    RationalInterval closed_form;
    bool bound_within_closed_form = false;
    /// 1 <= (C/5)/k <= C/k·(1 - k^(-1/3)), meaningful on the trivial branch.
    bool trivial_chain_holds = false;
    /// C/k·((k/2)^(-1/3) - k^(-1/3)) >= C/(4k^(4/3)).
    bool rhs_lower_bound_holds = false;
    RationalInterval rhs;
    /// 3C/k^(3/2) + 2^(1 - sqrt k).
    RationalInterval lhs;
    /// lhs <= rhs decided on the intervals; empty when they overlap.
    std::optional<bool> step_inequality;
};

/// Evaluates the recursive upper bound for rho_(2^k) with base rho <= 1 for
/// k <= C/5 and compares it with the closed form, all in exact rationals
/// (roots enclosed in intervals of width 2^-40). Requires k >= 2, C > 0.
RhoReport rho_recursion_bound(int k, const Rational& c);

struct GeneratedHost {
    BipartiteIncidence incidence;
    std::int64_t target = 0;
    /// True when every pair was tried before reaching the target.
    bool saturated = false;
};

/// Random greedy {C4, C6}-free bipartite graph: pairs are tried in random
/// order and an edge is kept when its ends are at distance > 5.
GeneratedHost generate_c4c6free(int na, int nb, std::int64_t target_edges, RngConfig rng);

struct TriangleFreeBlowup {
    Graph graph;
    BlowupPlan plan;
    bool triangle_free = false;
    std::int64_t alpha_f_greedy = 0;
    std::optional<std::int64_t> alpha_f_exact;
    /// sqrt(n·log2 n).
    double reference_curve = 0.0;
};

/// Random blow-ups of a triangle-free F inside the Y-neighbourhoods of a
/// {C4, C6}-free host; the result lives on X and is triangle-free.
TriangleFreeBlowup trianglefree_blowup(const BipartiteIncidence& host, const Pattern& f, RngConfig rng,
                                       std::uint64_t budget = 5'000'000);

struct FFreeCountReport {
    int q = 0;
    int s = 0;
    /// q^(2 - 1/(s-1))·log2(q)^3 and the size actually counted.
    double t_formula = 0.0;
    int t = 0;
    bool t_clamped = false;
    std::uint64_t count = 0;
    /// (q^(1/(s-1)))^t.
    double bound = 0.0;
    bool within_bound = false;
};

/// Counts F-free t-sets of H by brute force. t defaults to the formula
/// value, lowered until C(n, t) fits the budget.
FFreeCountReport ffree_count_report(const Graph& h, const Pattern& f, int q, std::optional<int> t = std::nullopt,
                                    std::uint64_t budget = 20'000'000);

struct SparsifyReport {
    int q = 0;
    int t = 0;
    double keep_probability = 0.0;
    int host_order = 0;
    int kept = 0;
    std::uint64_t ffree_sets = 0;
    int removed = 0;
    VertexSet vertices;
    Graph graph;
    bool kr_free = false;
    bool every_t_set_contains_f = false;
};

/// Keeps each vertex of H with probability q^(-1/(s-1)), then deletes one
/// vertex from each F-free t-set that survived, and verifies the result.
SparsifyReport sparsify_skeleton(const Graph& h, const Pattern& f, int q, int r, int t, RngConfig rng,
                                 std::uint64_t budget = 20'000'000);

}  // namespace erlab
