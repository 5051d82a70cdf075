#include "erlab/solvers.hpp"

#include "erlab/canonical.hpp"
#include "erlab/combinatorics.hpp"
#include "erlab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace erlab {

CopyHypergraph CopyHypergraph::build(const Graph& g, const Pattern& f, CopyMode mode, std::uint64_t max_edges) {
    CopyHypergraph h;
    h.n = g.order();
    h.uniformity = f.size();
    std::set<std::vector<int>> seen;
    std::vector<int> key;
    for_each_embedding(g, f, mode, [&](const std::vector<int>& map) {
        key = map;
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second && seen.size() > max_edges)
            throw BudgetError("copy hypergraph exceeds " + std::to_string(max_edges) + " hyperedges");
        return true;
    });
    h.edges.assign(seen.begin(), seen.end());
    return h;
}

double turan_bound(const Graph& g) {
    const double n = g.order();
    if (n == 0) return 0.0;
    return n * n / (2.0 * static_cast<double>(g.edge_count()) + n);
}

VertexSet greedy_independent_set(const Graph& g, const VertexSet& within) {
    VertexSet remaining = within;
    VertexSet chosen(g.order());
    while (!remaining.empty()) {
        int pick = -1;
        int pick_deg = 0;
        remaining.for_each([&](int v) {
            const int d = g.neighbours(v).intersection_count(remaining);
            if (pick < 0 || d < pick_deg) {
                pick = v;
                pick_deg = d;
            }
        });
        chosen.set(pick);
        remaining.reset(pick);
        remaining -= g.neighbours(pick);
    }
    return chosen;
}

SolveReport independence_number(const Graph& g, SolveMode mode, std::uint64_t budget) {
    SolveReport report;
    if (mode == SolveMode::exact) {
        const auto res = clique_number(complement(g), budget);
        report.witness = VertexSet(g.order(), res.witness);
        report.optimal = true;
        report.nodes_explored = res.nodes;
        report.route = "exact";
    } else {
        report.witness = greedy_independent_set(g, g.vertices());
        report.route = "greedy";
    }
    report.value = report.witness.count();
    if (g.edges_within(report.witness) != 0) throw std::logic_error("independence_number produced a non-independent set");
    return report;
}

// ---------------------------------------------------------------------------
// Hypergraph maximum independent set

namespace {

class HypergraphMis {
public:
    HypergraphMis(const CopyHypergraph& h, std::uint64_t budget) : n_(h.n), budget_(budget), best_(h.n) {
        for (const auto& e : h.edges) edges_.emplace_back(h.n, e);
    }

    SolveReport run() {
        std::vector<int> alive(edges_.size());
        std::iota(alive.begin(), alive.end(), 0);
        branch(VertexSet(n_), VertexSet(n_), std::move(alive));
        SolveReport report;
        report.witness = best_;
        report.value = best_size_;
        report.optimal = true;
        report.nodes_explored = nodes_;
        report.route = "exact";
        return report;
    }

private:
    void branch(VertexSet in, VertexSet out, std::vector<int> alive) {
        if (++nodes_ > budget_) throw BudgetError("hypergraph independent-set search exceeded its node budget");
        VertexSet free = VertexSet::full(n_) - in - out;
        // A live edge with one free vertex left forces that vertex out.
        for (bool changed = true; changed;) {
            changed = false;
            std::vector<int> still;
            still.reserve(alive.size());
            for (int e : alive) {
                const auto& edge = edges_[static_cast<std::size_t>(e)];
                if (edge.intersects(out)) continue;
                const int left = edge.intersection_count(free);
                if (left == 0) return;
                if (left == 1) {
                    const VertexSet last = edge & free;
                    out |= last;
                    free -= last;
                    changed = true;
                    continue;
                }
                still.push_back(e);
            }
            alive = std::move(still);
        }
        VertexSet covered(n_);
        for (int e : alive) covered |= edges_[static_cast<std::size_t>(e)];
        covered &= free;
        in |= free - covered;
        free = covered;

        const int in_size = in.count();
        if (in_size + free.count() <= best_size_) return;
        if (free.empty()) {
            best_size_ = in_size;
            best_ = in;
            return;
        }
        // Pairs of free vertices that cannot both join: partition free into
        // cliques of this conflict graph; each clique contributes at most one.
        std::vector<VertexSet> conflicts(static_cast<std::size_t>(n_), VertexSet(n_));
        std::vector<int> load(static_cast<std::size_t>(n_), 0);
        for (int e : alive) {
            const VertexSet part = edges_[static_cast<std::size_t>(e)] & free;
            part.for_each([&](int v) { ++load[static_cast<std::size_t>(v)]; });
            if (part.count() == 2) {
                const int a = part.first();
                const int b = part.next(a);
                conflicts[static_cast<std::size_t>(a)].set(b);
                conflicts[static_cast<std::size_t>(b)].set(a);
            }
        }
        int cliques = 0;
        for (VertexSet rest = free; !rest.empty();) {
            const int v = rest.first();
            rest.reset(v);
            VertexSet cand = rest & conflicts[static_cast<std::size_t>(v)];
            while (!cand.empty()) {
                const int u = cand.first();
                rest.reset(u);
                cand.reset(u);
                cand &= conflicts[static_cast<std::size_t>(u)];
            }
            ++cliques;
        }
        if (in_size + cliques <= best_size_) return;

        int pick = free.first();
        free.for_each([&](int v) {
            if (load[static_cast<std::size_t>(v)] > load[static_cast<std::size_t>(pick)]) pick = v;
        });
        VertexSet with = in;
        with.set(pick);
        branch(std::move(with), out, alive);
        out.set(pick);
        branch(std::move(in), std::move(out), std::move(alive));
    }

    int n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<VertexSet> edges_;
    VertexSet best_;
    int best_size_ = -1;
};

}  // namespace

SolveReport hypergraph_max_independent(const CopyHypergraph& h, std::uint64_t budget) {
    return HypergraphMis(h, budget).run();
}

bool is_ffree(const Graph& g, const Pattern& f, const VertexSet& s, CopyMode mode) {
    if (s.count() < f.size()) return true;
    return !find_copy_within(g, f, s, mode).has_value();
}

VertexSet greedy_ffree_subset(const Graph& g, const Pattern& f, const VertexSet& within, RngConfig rng) {
    constexpr double kKeep[] = {1.0, 0.9, 0.75, 0.5};
    Rng gen(rng);
    VertexSet best(g.order());
    int best_size = -1;
    for (double keep : kKeep) {
        VertexSet w(g.order());
        within.for_each([&](int v) {
            if (gen.bernoulli(keep)) w.set(v);
        });
        // Delete one vertex from each surviving copy until none is left.
        while (auto copy = find_copy_within(g, f, w)) {
            int drop = (*copy)[0];
            int drop_deg = -1;
            for (int v : *copy) {
                const int d = g.neighbours(v).intersection_count(w);
                if (d > drop_deg || (d == drop_deg && v > drop)) {
                    drop = v;
                    drop_deg = d;
                }
            }
            w.reset(drop);
        }
        std::vector<int> outside = (within - w).to_vector();
        gen.shuffle(outside);
        for (int v : outside) {
            w.set(v);
            if (!is_ffree(g, f, w)) w.reset(v);
        }
        if (w.count() > best_size) {
            best_size = w.count();
            best = w;
        }
    }
    return best;
}

SolveReport alpha_f(const Graph& g, const Pattern& f, SolveMode mode, RngConfig rng, std::uint64_t budget) {
    SolveReport report;
    if (f.size() > g.order()) {
        report.witness = g.vertices();
        report.optimal = true;
        report.route = "vacuous";
    } else if (mode == SolveMode::exact) {
        if (g.order() > 100) throw BudgetError("exact alpha_F limited to 100 vertices");
        const auto hyper = CopyHypergraph::build(g, f, CopyMode::non_induced);
        report = hypergraph_max_independent(hyper, budget);
    } else {
        report.witness = greedy_ffree_subset(g, f, g.vertices(), rng);
        report.route = "greedy";
        report.seed = rng;
    }
    report.value = report.witness.count();
    if (!is_ffree(g, f, report.witness)) throw std::logic_error("alpha_f produced a set containing F");
    return report;
}

namespace {

/// Hyperedges as masks, bucketed by their largest vertex.
std::vector<std::vector<VertexSet>> edges_by_max(const CopyHypergraph& h) {
    std::vector<std::vector<VertexSet>> out(static_cast<std::size_t>(h.n));
    for (const auto& e : h.edges) out[static_cast<std::size_t>(e.back())].emplace_back(h.n, e);
    return out;
}

}  // namespace

void for_each_ffree_set(const Graph& g, const Pattern& f, int t, CopyMode mode,
                        const std::function<bool(const std::vector<int>&)>& visit, std::uint64_t budget) {
    const int n = g.order();
    if (t < 0 || t > n) return;
    if (binomial_saturating(n, t) > budget)
        throw BudgetError("C(" + std::to_string(n) + ", " + std::to_string(t) + ") exceeds the enumeration budget");
    const auto hyper = CopyHypergraph::build(g, f, mode);
    const auto by_max = edges_by_max(hyper);
    std::vector<int> chosen;
    VertexSet mask(n);
    std::function<bool(int)> extend = [&](int from) -> bool {
        if (static_cast<int>(chosen.size()) == t) return visit(chosen);
        for (int v = from; v <= n - (t - static_cast<int>(chosen.size())); ++v) {
            mask.set(v);
            bool ok = true;
            for (const auto& e : by_max[static_cast<std::size_t>(v)])
                if (e.subset_of(mask)) {
                    ok = false;
                    break;
                }
            if (ok) {
                chosen.push_back(v);
                const bool go_on = extend(v + 1);
                chosen.pop_back();
                if (!go_on) {
                    mask.reset(v);
                    return false;
                }
            }
            mask.reset(v);
        }
        return true;
    };
    extend(0);
}

std::uint64_t count_ffree_sets(const Graph& g, const Pattern& f, int t, CopyMode mode, std::uint64_t budget) {
    if (t < 0 || t > g.order()) return 0;
    if (binomial_saturating(g.order(), t) > budget)
        throw BudgetError("C(" + std::to_string(g.order()) + ", " + std::to_string(t) + ") exceeds the counting budget");
    if (t < f.size()) return binomial_saturating(g.order(), t);
    std::uint64_t count = 0;
    for_each_ffree_set(
        g, f, t, mode,
        [&](const std::vector<int>&) {
            ++count;
            return true;
        },
        budget);
    return count;
}

FExactResult f_exact(const Pattern& f, const Pattern& h, int n, std::uint64_t budget, bool deduplicate) {
    if (n < 0) throw DomainError("negative order");
    if (n > kFExactMaxOrder) throw BudgetError("f_exact enumerates graphs on at most 9 vertices");
    FExactResult result;
    result.deduplicated = deduplicate;
    if (n < f.size()) {
        result.value = n;
        result.witness = Graph(n);
        result.vacuous = true;
        return result;
    }
    EnumerationOptions options;
    options.deduplicate = deduplicate;
    options.level_budget = budget;
    const auto family = enumerate_graphs(n, h, options);
    if (family.empty()) throw DomainError("no " + h.name() + "-free graph on " + std::to_string(n) + " vertices");
    result.value = n + 1;
    for (const auto& g : family) {
        ++result.graphs_examined;
        const auto value = static_cast<int>(alpha_f(g, f, SolveMode::exact).value);
        if (value < result.value) {
            result.value = value;
            result.witness = g;
        }
    }
    return result;
}

}  // namespace erlab
