#pragma once

#include "erlab/graph.hpp"
#include "erlab/pattern.hpp"
#include "erlab/rational.hpp"
#include "erlab/rng.hpp"
#include "erlab/solvers.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace erlab {

/// coefficient · base^exponent, compared exactly against rationals.
struct PowerThreshold {
    Rational coefficient = 1;
    std::int64_t base = 1;
    Rational exponent = 0;

    static PowerThreshold constant(const Rational& value) { return {value, 1, 0}; }

    /// x <= value and x >= value, decided without rounding.
    bool at_most(const Rational& x) const;
    bool at_least(const Rational& x) const;
    double approx() const;
};

struct GoodSetParams {
    int s = 1;
    Rational beta = Rational(1, 2);
    Rational delta = 0;
    Rational epsilon = 0;
};

struct GoodSets {
    /// Each set sorted; sets in lexicographic order.
    std::vector<std::vector<int>> sets;
    /// ceil(n^(1-beta)): a set is good iff |N(X)| reaches this.
    std::int64_t threshold = 0;
};

inline constexpr std::uint64_t kGoodSetStoreLimit = 5'000'000;

/// All s-sets X with |N(X)| >= n^(1-beta). Requires C(n, s) <= budget.
GoodSets enumerate_good_sets(const Graph& g, const GoodSetParams& params, std::uint64_t budget = kCountBudget);

/// g(Y): the number of good s-sets containing Y.
class GoodSetIndex {
public:
    explicit GoodSetIndex(const GoodSets& good) : good_(&good) {}

    std::uint64_t total() const noexcept { return good_->sets.size(); }
    /// Direct scan; Y sorted.
    std::uint64_t count(const std::vector<int>& y) const;
    /// Tally of every j-subset of some good set, keyed in lexicographic order.
    /// Throws BudgetError past `limit` distinct subsets.
    std::map<std::vector<int>, std::uint64_t> tally(int j, std::uint64_t limit = kGoodSetStoreLimit) const;

private:
    const GoodSets* good_;
};

struct DensePair {
    VertexSet u;
    VertexSet w;
    /// e(U, W) over |U|·|W| with ordered pairs; u = w counts as a non-edge.
    Rational density;
};

struct DensePairResult {
    std::optional<DensePair> pair;
    /// The maximal k and the lexicographically least witness Y of that size.
    int k = 0;
    std::vector<int> y;
    std::uint64_t good_total = 0;
    std::string failure;
};

/// Ordered-pair density d(U, W).
Rational pair_density(const Graph& g, const VertexSet& u, const VertexSet& w);

/// Dense-pair search over the good s-sets: maximal k with a k-set Y such
/// that g(Y) >= 2^(1-k) n^(-k) g and |N(Y)| < n^(1-(k-1)eps); then W = N(Y)
/// and U = {v not in Y : |N(Y+v)| >= |N(Y)| / n^eps}. Failure (no good
/// sets, empty U, or d(U,W) < n^-eps) is reported, not thrown.
DensePairResult find_dense_pair(const Graph& g, const GoodSetParams& params, std::uint64_t budget = kCountBudget);

struct DrcResult {
    VertexSet a;
    /// W intersected with the common neighbourhood of the samples.
    VertexSet n;
    std::vector<int> samples;
    std::vector<int> deleted;
    /// Every clique_size-subset of A has more than threshold·|U| common
    /// neighbours in U (rechecked after filtering).
    bool verified = false;
};

/// Dependent random choice: sample q vertices of U with repetition, let N be
/// W within their common neighbourhood, then for every clique_size-subset K
/// of N (lexicographic order, skipping subsets that already lost a vertex)
/// with |N(K) ∩ U| <= threshold·|U|, delete the largest vertex of K.
DrcResult drc_filter(const Graph& g, const VertexSet& u, const VertexSet& w, int q_samples, int clique_size,
                     const PowerThreshold& threshold, RngConfig rng, std::uint64_t budget = kCountBudget);

struct ExtractionOptions {
    /// Limit on C(n, s) for good-set enumeration and on subset scans.
    std::uint64_t budget = kCountBudget;
    /// Overrides the s implied by delta.
    std::optional<int> s_override;
};

/// Large-neighbourhood extraction for K_r-free hosts: scan the good s-sets
/// (beta = 1/2, s = ceil(1/delta)) for one whose common neighbourhood spans
/// at most one edge and return that neighbourhood minus one endpoint. Falls
/// back to greedy alpha_F (optimal = false) when no such set is found.
/// Throws PreconditionError when F does not contain K_(r-2).
SolveReport extract_ffree_sparse(const Graph& g, const Pattern& f, int r, const Rational& delta,
                                    RngConfig rng = {}, const ExtractionOptions& options = {});

/// Recursive extraction for K_(2^k)-free hosts: dense pair (beta = 1/k,
/// eps = delta², s = ceil(1/delta³)), dependent random choice with
/// q = floor(2^(k-1)/delta) samples, then recurse into A when it is
/// K_(2^(k-1))-free and into the common neighbourhood of a 2^(k-1)-clique of
/// A otherwise. k = 1 returns an independent set. Any failed step falls back
/// to greedy alpha_F (optimal = false).
SolveReport extract_ffree_recursive(const Graph& g, const Pattern& f, int k, const Rational& delta,
                                    RngConfig rng = {}, const ExtractionOptions& options = {});

/// Independent set in a K4-free graph: per trial, take the common
/// neighbourhood of two random vertices and run the minimum-degree greedy
/// inside it; the best trial is compared with the greedy on all of G.
/// Throws PreconditionError (with a K4 witness) if G contains K4.
SolveReport independent_set_k4free(const Graph& g, int trials, RngConfig rng = {});

}  // namespace erlab
