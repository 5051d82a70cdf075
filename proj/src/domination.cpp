#include "erlab/domination.hpp"

#include "erlab/combinatorics.hpp"
#include "erlab/errors.hpp"
#include "erlab/graph.hpp"
#include "erlab/parallel.hpp"

#include <cmath>
#include <vector>

namespace erlab {

bool verify_domination(const Pattern& f, const VertexSet& a, int s) {
    const Graph& g = f.graph();
    if (a.universe() != g.order()) throw DomainError("dominating set universe does not match v(F)");
    for (int v = 0; v < g.order(); ++v)
        if (!a.test(v) && g.neighbours(v).intersection_count(a) < s) return false;
    return true;
}

GammaResult gamma_s_exact(const Pattern& f, int s) {
    const Graph& g = f.graph();
    const int n = g.order();
    if (n > kGammaMaxOrder) throw BudgetError("exact s-domination limited to 24 vertices");
    if (s < 0) throw DomainError("negative domination threshold");
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    std::uint32_t forced = 0;
    std::vector<int> optional_vertices;
    for (int v = 0; v < n; ++v) {
        g.neighbours(v).for_each([&](int u) { adj[static_cast<std::size_t>(v)] |= 1u << u; });
        if (g.degree(v) < s)
            forced |= 1u << v;
        else
            optional_vertices.push_back(v);
    }
    const auto dominates = [&](std::uint32_t a) {
        for (int v = 0; v < n; ++v)
            if (!((a >> v) & 1u) && std::popcount(adj[static_cast<std::size_t>(v)] & a) < s) return false;
        return true;
    };
    const int m = static_cast<int>(optional_vertices.size());
    for (int extra = 0; extra <= m; ++extra) {
        std::uint32_t found = 0;
        bool hit = false;
        // Combinations come in lexicographic order, and adding the common
        // forced set preserves that order, so the first hit is lex-least.
        for_each_combination(m, extra, [&](const std::vector<int>& idx) {
            std::uint32_t a = forced;
            for (int i : idx) a |= 1u << optional_vertices[static_cast<std::size_t>(i)];
            if (!dominates(a)) return true;
            found = a;
            hit = true;
            return false;
        });
        if (hit) {
            GammaResult result;
            result.value = std::popcount(found);
            result.witness = VertexSet(n);
            for (int v = 0; v < n; ++v)
                if ((found >> v) & 1u) result.witness.set(v);
            return result;
        }
    }
    throw std::logic_error("gamma_s_exact: the full vertex set always dominates");
}

int default_domination_threshold(const Pattern& f, double delta) {
    return static_cast<int>(std::floor(delta * f.min_degree() / 3.0));
}

DominationResult randomized_dominating_set(const Pattern& f, std::optional<int> s, double delta, RngConfig rng,
                                           std::uint64_t trials, int jobs) {
    if (!(delta > 0.0 && delta <= 1.0)) throw DomainError("delta outside (0, 1]");
    if (trials == 0) throw DomainError("at least one trial is required");
    const Graph& g = f.graph();
    const int n = g.order();
    const int threshold = s.value_or(default_domination_threshold(f, delta));
    if (threshold < 0) throw DomainError("negative domination threshold");

    std::vector<VertexSet> sets(static_cast<std::size_t>(trials));
    parallel_for(static_cast<std::size_t>(trials), jobs, [&](std::size_t i) {
        Rng gen(rng.child(i));
        VertexSet a0(n);
        for (int v = 0; v < n; ++v)
            if (gen.bernoulli(0.9 * delta)) a0.set(v);
        VertexSet a = a0;
        for (int v = 0; v < n; ++v)
            if (!a0.test(v) && g.neighbours(v).intersection_count(a0) < threshold) a.set(v);
        sets[i] = std::move(a);
    });

    DominationResult result;
    result.s = threshold;
    result.trials = trials;
    result.valid = true;
    double sum_sq = 0.0;
    result.set = sets.front();
    for (const auto& a : sets) {
        const int size = a.count();
        result.size_sum += static_cast<std::uint64_t>(size);
        sum_sq += static_cast<double>(size) * size;
        result.valid = result.valid && verify_domination(f, a, threshold);
        if (size < result.set.count()) result.set = a;
    }
    result.mean_size = Rational(result.size_sum, trials);
    if (trials > 1) {
        const double mean = static_cast<double>(result.size_sum) / static_cast<double>(trials);
        result.size_variance = (sum_sq - static_cast<double>(trials) * mean * mean) / static_cast<double>(trials - 1);
        if (result.size_variance < 0.0) result.size_variance = 0.0;
    }
    return result;
}

DominationBoundReport domination_bound_report(int t, int order, std::uint64_t trials, RngConfig rng, int jobs) {
    DominationBoundReport report;
    report.t = t;
    report.order = order;
    report.trials = trials;
    report.delta = 6.0 * std::log(static_cast<double>(t)) / t;
    const Pattern f(random_regular(order, t, rng.child(0)), "random-" + std::to_string(t) + "-regular");
    const auto result = randomized_dominating_set(f, std::nullopt, report.delta, rng.child(1), trials, jobs);
    report.s = result.s;
    report.all_valid = result.valid;
    report.mean_ratio = to_double(result.mean_size) / order;
    report.standard_error = std::sqrt(result.size_variance / static_cast<double>(trials)) / order;
    report.verdict = report.mean_ratio <= report.delta + 2.0 * report.standard_error ? "pass" : "warn";
    return report;
}

}  // namespace erlab
