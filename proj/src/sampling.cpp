#include "erlab/sampling.hpp"

#include "erlab/combinatorics.hpp"
#include "erlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace erlab {

bool PowerThreshold::at_most(const Rational& x) const {
    if (coefficient < 0 || base < 1) throw DomainError("threshold must be nonnegative with base >= 1");
    if (x <= 0) return true;
    if (coefficient == 0) return false;
    return at_least_power(coefficient / x, base, -exponent);
}

bool PowerThreshold::at_least(const Rational& x) const {
    if (coefficient < 0 || base < 1) throw DomainError("threshold must be nonnegative with base >= 1");
    if (coefficient == 0) return x >= 0;
    return at_least_power(x / coefficient, base, exponent);
}

double PowerThreshold::approx() const {
    return to_double(coefficient) * std::pow(static_cast<double>(base), to_double(exponent));
}

namespace {

std::string join(const std::vector<int>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + "}";
}

int count_common_within(const Graph& g, const std::vector<int>& k, const VertexSet& within) {
    VertexSet c = within;
    for (int v : k) c &= g.neighbours(v);
    return c.count();
}

void check_params(const GoodSetParams& p, bool full) {
    if (p.s < 1) throw DomainError("good sets need s >= 1");
    if (p.beta <= 0 || p.beta >= 1) throw DomainError("beta must lie in (0, 1)");
    if (!full) return;
    if (p.delta <= 0 || p.delta >= p.beta) throw DomainError("delta must lie in (0, beta)");
    if (p.epsilon <= 0) throw DomainError("epsilon must be positive");
}

}  // namespace

GoodSets enumerate_good_sets(const Graph& g, const GoodSetParams& params, std::uint64_t budget) {
    check_params(params, false);
    const int n = g.order();
    const int s = params.s;
    if (binomial_saturating(n, s) > budget)
        throw BudgetError("C(" + std::to_string(n) + ", " + std::to_string(s) + ") exceeds the good-set budget");
    GoodSets out;
    out.threshold = n == 0 ? 0 : ceil_power(n, 1 - params.beta);
    if (s > n) return out;
    // Common neighbourhoods only shrink as X grows, so prune below threshold.
    std::vector<int> chosen;
    std::function<void(int, const VertexSet&)> extend = [&](int from, const VertexSet& common) {
        if (static_cast<int>(chosen.size()) == s) {
            if (out.sets.size() >= kGoodSetStoreLimit) throw BudgetError("too many good sets to store");
            out.sets.push_back(chosen);
            return;
        }
        for (int v = from; v <= n - (s - static_cast<int>(chosen.size())); ++v) {
            const VertexSet next = chosen.empty() ? g.neighbours(v) : common & g.neighbours(v);
            if (next.count() < out.threshold) continue;
            chosen.push_back(v);
            extend(v + 1, next);
            chosen.pop_back();
        }
    };
    extend(0, g.vertices());
    return out;
}

std::uint64_t GoodSetIndex::count(const std::vector<int>& y) const {
    std::uint64_t c = 0;
    for (const auto& x : good_->sets)
        if (std::includes(x.begin(), x.end(), y.begin(), y.end())) ++c;
    return c;
}

std::map<std::vector<int>, std::uint64_t> GoodSetIndex::tally(int j, std::uint64_t limit) const {
    std::map<std::vector<int>, std::uint64_t> out;
    std::vector<int> sub(static_cast<std::size_t>(std::max(j, 0)));
    for (const auto& x : good_->sets) {
        for_each_combination(static_cast<int>(x.size()), j, [&](const std::vector<int>& idx) {
            for (int i = 0; i < j; ++i) sub[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            ++out[sub];
            return true;
        });
        if (out.size() > limit) throw BudgetError("good-set subset tally exceeds its budget");
    }
    return out;
}

Rational pair_density(const Graph& g, const VertexSet& u, const VertexSet& w) {
    const std::int64_t pairs = static_cast<std::int64_t>(u.count()) * w.count();
    if (pairs == 0) return 0;
    std::int64_t edges = 0;
    u.for_each([&](int v) { edges += g.neighbours(v).intersection_count(w); });
    return Rational(edges, pairs);
}

DensePairResult find_dense_pair(const Graph& g, const GoodSetParams& params, std::uint64_t budget) {
    check_params(params, true);
    const int n = g.order();
    const GoodSets good = enumerate_good_sets(g, params, budget);
    const GoodSetIndex index(good);
    DensePairResult result;
    result.good_total = index.total();
    if (result.good_total == 0) {
        result.failure = "no good sets";
        return result;
    }
    const BigInt total = result.good_total;
    // Every Y inside a good set has |N(Y)| >= threshold, so the k-sets are
    // searched directly with that pruning; g(Y) is counted only at leaves.
    std::vector<int> y;
    for (int k = std::min(params.s, n); k >= 1 && result.y.empty(); --k) {
        const Rational size_exponent = 1 - (k - 1) * params.epsilon;
        if (at_least_power(Rational(good.threshold), n, size_exponent)) continue;
        BigInt scale = BigInt(1) << (k - 1);
        for (int i = 0; i < k; ++i) scale *= n;
        std::function<bool(int, const VertexSet&)> extend = [&](int from, const VertexSet& common) {
            if (static_cast<int>(y.size()) == k) {
                if (at_least_power(Rational(common.count()), n, size_exponent)) return false;
                if (BigInt(index.count(y)) * scale < total) return false;
                result.k = k;
                result.y = y;
                return true;
            }
            for (int v = from; v <= n - (k - static_cast<int>(y.size())); ++v) {
                const VertexSet next = y.empty() ? g.neighbours(v) : common & g.neighbours(v);
                if (next.count() < good.threshold) continue;
                y.push_back(v);
                const bool done = extend(v + 1, next);
                y.pop_back();
                if (done) return true;
            }
            return false;
        };
        extend(0, g.vertices());
    }
    if (result.y.empty()) {
        result.failure = "no qualifying Y";
        return result;
    }
    const VertexSet yset(n, result.y);
    const VertexSet w = common_neighbourhood(g, yset);
    const int w_size = w.count();
    VertexSet u(n);
    for (int v = 0; v < n; ++v) {
        if (yset.test(v)) continue;
        const int nv = (w & g.neighbours(v)).count();
        if (at_least_power(Rational(nv, w_size), n, -params.epsilon)) u.set(v);
    }
    if (u.empty()) {
        result.failure = "U is empty";
        return result;
    }
    const Rational density = pair_density(g, u, w);
    if (!at_least_power(density, n, -params.epsilon)) {
        result.failure = "density " + to_string(density) + " below n^-eps";
        return result;
    }
    result.pair = DensePair{std::move(u), w, density};
    return result;
}

DrcResult drc_filter(const Graph& g, const VertexSet& u, const VertexSet& w, int q_samples, int clique_size,
                     const PowerThreshold& threshold, RngConfig rng, std::uint64_t budget) {
    if (u.empty() || w.empty()) throw DomainError("dependent random choice needs nonempty U and W");
    if (q_samples < 0 || clique_size < 1) throw DomainError("need q >= 0 and clique size >= 1");
    const int n = g.order();
    const std::vector<int> pool = u.to_vector();
    const int u_size = static_cast<int>(pool.size());
    Rng gen(rng);
    DrcResult out;
    out.n = w;
    for (int i = 0; i < q_samples; ++i) {
        const int x = pool[static_cast<std::size_t>(gen.uniform_below(pool.size()))];
        out.samples.push_back(x);
        out.n &= g.neighbours(x);
    }
    const std::vector<int> cand = out.n.to_vector();
    const int m = static_cast<int>(cand.size());
    if (binomial_saturating(m, clique_size) > budget)
        throw BudgetError("C(" + std::to_string(m) + ", " + std::to_string(clique_size) + ") exceeds the filter budget");
    std::vector<char> gone(cand.size(), 0);
    std::vector<int> k(static_cast<std::size_t>(clique_size));
    for_each_combination(m, clique_size, [&](const std::vector<int>& idx) {
        for (int i : idx)
            if (gone[static_cast<std::size_t>(i)]) return true;
        for (int i = 0; i < clique_size; ++i) k[static_cast<std::size_t>(i)] = cand[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        if (threshold.at_most(Rational(count_common_within(g, k, u), u_size))) {
            gone[static_cast<std::size_t>(idx.back())] = 1;
            out.deleted.push_back(k.back());
        }
        return true;
    });
    out.a = VertexSet(n);
    for (std::size_t i = 0; i < cand.size(); ++i)
        if (!gone[i]) out.a.set(cand[i]);

    const std::vector<int> kept = out.a.to_vector();
    out.verified = for_each_combination(static_cast<int>(kept.size()), clique_size, [&](const std::vector<int>& idx) {
        for (int i = 0; i < clique_size; ++i) k[static_cast<std::size_t>(i)] = kept[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        return !threshold.at_most(Rational(count_common_within(g, k, u), u_size));
    });
    if (!out.verified) throw std::logic_error("dependent random choice left a subset below threshold");
    return out;
}

namespace {

void require_pattern_fits(const Pattern& f, int r) {
    if (r < 4) throw DomainError("extraction needs r >= 4");
    if (!contains_subgraph(f.graph(), Pattern::clique(r - 2)))
        throw PreconditionError(f.name() + " does not contain K" + std::to_string(r - 2));
}

SolveReport fallback(const Graph& g, const Pattern& f, RngConfig rng, std::vector<std::string>& trail,
                     const std::string& why) {
    trail.push_back("fallback to greedy (" + why + ")");
    SolveReport r = alpha_f(g, f, SolveMode::greedy, rng);
    r.route = "fallback";
    r.optimal = false;
    return r;
}

void finish(const Graph& g, const Pattern& f, SolveReport& report) {
    report.value = report.witness.count();
    if (!is_ffree(g, f, report.witness)) throw std::logic_error("extraction returned a set containing F");
}

}  // namespace

SolveReport extract_ffree_sparse(const Graph& g, const Pattern& f, int r, const Rational& delta, RngConfig rng,
                                    const ExtractionOptions& options) {
    require_pattern_fits(f, r);
    if (delta <= 0) throw DomainError("delta must be positive");
    const int n = g.order();
    SolveReport report;
    report.seed = rng;
    if (n < f.size()) {
        report.witness = g.vertices();
        report.optimal = true;
        report.route = "vacuous";
        finish(g, f, report);
        return report;
    }
    GoodSetParams params;
    params.s = options.s_override.value_or(static_cast<int>(ceil(1 / delta)));
    params.beta = Rational(1, 2);
    params.delta = delta;
    report.metrics["reference_curve"] = 0.5 * std::pow(static_cast<double>(n), 0.5 - 2 * to_double(delta));
    report.trail.push_back("s=" + std::to_string(params.s) + " beta=1/2");
    try {
        const auto kr = find_clique(g, r, options.budget);
        report.trail.push_back(kr ? "host contains K" + std::to_string(r) + " " + join(*kr)
                                  : "host is K" + std::to_string(r) + "-free");
    } catch (const BudgetError&) {
        report.trail.push_back("host K" + std::to_string(r) + "-freeness not decided within budget");
    }

    std::optional<GoodSets> good;
    try {
        good = enumerate_good_sets(g, params, options.budget);
    } catch (const BudgetError& e) {
        auto fb = fallback(g, f, rng, report.trail, e.what());
        fb.trail = std::move(report.trail);
        fb.metrics = std::move(report.metrics);
        finish(g, f, fb);
        return fb;
    }
    report.metrics["good_sets"] = static_cast<double>(good->sets.size());
    report.trail.push_back(std::to_string(good->sets.size()) + " good sets (threshold " + std::to_string(good->threshold) + ")");
    for (const auto& x : good->sets) {
        VertexSet nx = common_neighbourhood(g, VertexSet(n, x));
        if (g.edges_within(nx) > 1) continue;
        // At most one edge: drop its larger endpoint.
        for (const int v : nx.to_vector())
            if ((g.neighbours(v) & nx).first() >= 0 && (g.neighbours(v) & nx).first() < v) nx.reset(v);
        report.witness = nx;
        report.optimal = true;
        report.route = "proof";
        report.trail.push_back("X=" + join(x) + " has a sparse common neighbourhood of size " + std::to_string(nx.count()));
        finish(g, f, report);
        return report;
    }
    auto fb = fallback(g, f, rng, report.trail, "no good set with a sparse common neighbourhood");
    fb.trail = std::move(report.trail);
    fb.metrics = std::move(report.metrics);
    finish(g, f, fb);
    return fb;
}

namespace {

struct Recursion {
    const Pattern& f;
    Rational delta;
    ExtractionOptions options;
    std::vector<std::string> trail;
    std::map<std::string, double> metrics;

    void note(int depth, const std::string& line) { trail.push_back(std::string(static_cast<std::size_t>(2 * depth), ' ') + line); }

    SolveReport independent(const Graph& g, int depth) {
        SolveReport r;
        try {
            r = g.order() <= 100 ? independence_number(g, SolveMode::exact, options.budget)
                                 : independence_number(g, SolveMode::greedy);
        } catch (const BudgetError&) {
            r = independence_number(g, SolveMode::greedy);
        }
        r.optimal = true;
        r.route = "proof";
        note(depth, "k=1 n=" + std::to_string(g.order()) + ": independent set of size " + std::to_string(r.witness.count()));
        return r;
    }

    SolveReport fail(const Graph& g, int depth, RngConfig rng, const std::string& why) {
        note(depth, "fallback to greedy (" + why + ")");
        SolveReport r = alpha_f(g, f, SolveMode::greedy, rng);
        r.route = "fallback";
        r.optimal = false;
        return r;
    }

    SolveReport run(const Graph& g, int k, RngConfig rng, int depth) {
        const int n = g.order();
        if (n < f.size()) {
            note(depth, "k=" + std::to_string(k) + " n=" + std::to_string(n) + ": smaller than F");
            SolveReport r;
            r.witness = g.vertices();
            r.optimal = true;
            r.route = "proof";
            return r;
        }
        if (k == 1) {
            SolveReport r = independent(g, depth);
            if (is_ffree(g, f, r.witness)) return r;
            return fail(g, depth, rng.child(1), "F has no edges");
        }
        const std::string head = "k=" + std::to_string(k) + " n=" + std::to_string(n) + ": ";
        if (delta >= Rational(1, k)) return fail(g, depth, rng.child(1), "delta >= 1/k");
        GoodSetParams params;
        params.beta = Rational(1, k);
        params.delta = delta;
        params.epsilon = delta * delta;
        params.s = options.s_override.value_or(static_cast<int>(ceil(1 / (delta * delta * delta))));
        DensePairResult dp;
        try {
            dp = find_dense_pair(g, params, options.budget);
        } catch (const BudgetError& e) {
            return fail(g, depth, rng.child(1), e.what());
        }
        if (depth == 0) metrics["good_sets"] = static_cast<double>(dp.good_total);
        if (!dp.pair) return fail(g, depth, rng.child(1), "dense pair: " + dp.failure);
        const DensePair& pair = *dp.pair;
        note(depth, head + "s=" + std::to_string(params.s) + " Y=" + join(dp.y) + " |U|=" + std::to_string(pair.u.count()) +
                        " |W|=" + std::to_string(pair.w.count()) + " d=" + to_string(pair.density));

        const int clique = 1 << (k - 1);
        const int q = static_cast<int>(floor(Rational(clique) / delta));
        DrcResult drc;
        try {
            drc = drc_filter(g, pair.u, pair.w, q, clique, PowerThreshold{1, n, -2 * delta}, rng.child(0), options.budget);
        } catch (const BudgetError& e) {
            return fail(g, depth, rng.child(1), e.what());
        }
        note(depth, head + "q=" + std::to_string(q) + " |N|=" + std::to_string(drc.n.count()) +
                        " |A|=" + std::to_string(drc.a.count()) + " deleted=" + std::to_string(drc.deleted.size()));
        if (depth == 0) {
            metrics["dense_u"] = pair.u.count();
            metrics["dense_w"] = pair.w.count();
            metrics["filter_a"] = drc.a.count();
        }
        if (drc.a.empty()) return fail(g, depth, rng.child(1), "A is empty");

        std::optional<std::vector<int>> kk;
        try {
            kk = find_clique(induced(g, drc.a), clique, options.budget);
        } catch (const BudgetError& e) {
            return fail(g, depth, rng.child(1), e.what());
        }
        VertexSet next;
        if (!kk) {
            note(depth, head + "branch A: G[A] is K" + std::to_string(clique) + "-free");
            next = drc.a;
        } else {
            const VertexSet kset = lift(VertexSet(drc.a.count(), *kk), drc.a.to_vector(), n);
            next = common_neighbourhood(g, kset);
            note(depth, head + "branch B: K=" + join(kset.to_vector()) + " |B|=" + std::to_string(next.count()));
            if (next.empty()) return fail(g, depth, rng.child(1), "B is empty");
        }
        const std::vector<int> labels = next.to_vector();
        SolveReport sub = run(induced(g, next), k - 1, rng.child(2), depth + 1);
        sub.witness = lift(sub.witness, labels, n);
        return sub;
    }
};

}  // namespace

SolveReport extract_ffree_recursive(const Graph& g, const Pattern& f, int k, const Rational& delta, RngConfig rng,
                                    const ExtractionOptions& options) {
    if (k < 1) throw DomainError("recursion depth k must be at least 1");
    if (delta <= 0) throw DomainError("delta must be positive");
    Recursion rec{f, delta, options, {}, {}};
    SolveReport report = rec.run(g, k, rng, 0);
    report.trail = std::move(rec.trail);
    report.metrics = std::move(rec.metrics);
    report.metrics["reference_curve"] =
        std::pow(static_cast<double>(g.order()), 1.0 / k - std::ldexp(1.0, k) * to_double(delta));
    report.seed = rng;
    report.nodes_explored = 0;
    finish(g, f, report);
    return report;
}

SolveReport independent_set_k4free(const Graph& g, int trials, RngConfig rng) {
    if (trials < 0) throw DomainError("trials must be nonnegative");
    const auto k4 = is_kr_free(g, 4);
    if (!k4.free) throw PreconditionError("graph contains K4", k4.witness);
    const int n = g.order();
    SolveReport report;
    report.seed = rng;
    report.route = "greedy";
    report.witness = greedy_independent_set(g, g.vertices());
    Rng gen(rng);
    int best_trial = -1;
    for (int t = 0; t < trials && n >= 2; ++t) {
        const int x1 = static_cast<int>(gen.uniform_below(static_cast<std::uint64_t>(n)));
        int x2 = static_cast<int>(gen.uniform_below(static_cast<std::uint64_t>(n - 1)));
        if (x2 >= x1) ++x2;
        const VertexSet common = g.neighbours(x1) & g.neighbours(x2);
        const VertexSet pick = greedy_independent_set(g, common);
        if (pick.count() > report.witness.count()) {
            report.witness = pick;
            report.route = "sampled";
            best_trial = t;
        }
    }
    report.value = report.witness.count();
    report.optimal = false;
    report.metrics["best_trial"] = best_trial;
    const double d = n == 0 ? 0.0 : 2.0 * static_cast<double>(g.edge_count()) / n;
    report.metrics["average_degree"] = d;
    report.metrics["reference_curve"] = n == 0 ? 0.0 : d / std::cbrt(static_cast<double>(n));
    if (g.edges_within(report.witness) != 0) throw std::logic_error("independent_set_k4free returned a non-independent set");
    return report;
}

}  // namespace erlab
