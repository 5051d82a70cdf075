#pragma once

#include "erlab/pattern.hpp"
#include "erlab/rational.hpp"
#include "erlab/rng.hpp"
#include "erlab/vertex_set.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace erlab {

/// A is s-dominating in F when every vertex outside A has at least s
/// neighbours in A.
bool verify_domination(const Pattern& f, const VertexSet& a, int s);

inline constexpr int kGammaMaxOrder = 24;

struct GammaResult {
    int value = 0;
    /// Lexicographically least minimum s-dominating set.
    VertexSet witness;
};

/// Exact s-domination number by ascending-size search. Vertices of degree
/// below s are forced into A. Requires v(F) <= 24.
GammaResult gamma_s_exact(const Pattern& f, int s);

/// s = floor(delta·t/3), where t is the minimum degree of F.
int default_domination_threshold(const Pattern& f, double delta);

struct DominationResult {
    /// Smallest set over all trials (earliest trial on ties).
    VertexSet set;
    int s = 0;
    /// Every trial produced a valid s-dominating set.
    bool valid = false;
    std::uint64_t trials = 0;
    std::uint64_t size_sum = 0;
    /// size_sum / trials, exact.
    Rational mean_size;
    /// Sample variance of |A| over trials (0 for a single trial).
    double size_variance = 0.0;
};

/// Sample A0 with each vertex kept with probability 0.9·delta, then add every
/// vertex outside A0 with fewer than s neighbours in A0. Trial i draws from
/// rng.child(i). When s is omitted it is floor(delta·t/3).
DominationResult randomized_dominating_set(const Pattern& f, std::optional<int> s, double delta, RngConfig rng,
                                           std::uint64_t trials = 1, int jobs = 1);

/// Empirical check of E|A| <= delta·v(F) on a random t-regular graph with
/// delta = 6 ln t / t.
struct DominationBoundReport {
    int t = 0;
    int order = 0;
    double delta = 0.0;
    int s = 0;
    std::uint64_t trials = 0;
    double mean_ratio = 0.0;
    double standard_error = 0.0;
    bool all_valid = false;
    /// "pass" when mean_ratio <= delta + 2 standard errors, else "warn".
    std::string verdict;
};

DominationBoundReport domination_bound_report(int t, int order, std::uint64_t trials, RngConfig rng, int jobs = 1);

}  // namespace erlab
