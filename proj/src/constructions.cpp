#include "erlab/constructions.hpp"

#include "erlab/combinatorics.hpp"
#include "erlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace erlab {

namespace {

std::vector<int> cycle_witness(const BipartiteCycle& c, int x_size) {
    std::vector<int> out;
    for (std::size_t i = 0; i < c.xs.size(); ++i) {
        out.push_back(c.xs[i]);
        out.push_back(x_size + c.ys[i]);
    }
    return out;
}

BlowupPlan random_plan(const BipartiteIncidence& k, int parts, RngConfig rng) {
    Rng gen(rng);
    BlowupPlan plan;
    plan.parts = parts;
    plan.assignment.resize(static_cast<std::size_t>(k.y_size()));
    for (int y = 0; y < k.y_size(); ++y)
        for (std::size_t j = 0; j < k.y_neighbours(y).size(); ++j)
            plan.assignment[static_cast<std::size_t>(y)].push_back(static_cast<int>(gen.uniform_below(static_cast<std::uint64_t>(parts))));
    return plan;
}

Graph realize(const BipartiteIncidence& k, const Pattern& f, const BlowupPlan& plan) {
    Graph h(k.x_size());
    for (int y = 0; y < k.y_size(); ++y) {
        const auto& nb = k.y_neighbours(y);
        const auto& part = plan.assignment[static_cast<std::size_t>(y)];
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b)
                if (f.graph().adjacent(part[a], part[b])) h.add_edge(nb[a], nb[b]);
    }
    return h;
}

int part_of(const BipartiteIncidence& k, const BlowupPlan& plan, int y, int x) {
    const auto& nb = k.y_neighbours(y);
    const auto pos = std::lower_bound(nb.begin(), nb.end(), x) - nb.begin();
    return plan.assignment[static_cast<std::size_t>(y)][static_cast<std::size_t>(pos)];
}

}  // namespace

bool audit_blowup(const BipartiteIncidence& k, const Pattern& f, const BlowupPlan& plan, const Graph& h) {
    if (h.order() != k.x_size() || plan.assignment.size() != static_cast<std::size_t>(k.y_size())) return false;
    for (int y = 0; y < k.y_size(); ++y)
        if (plan.assignment[static_cast<std::size_t>(y)].size() != k.y_neighbours(y).size()) return false;
    std::vector<int> shared;
    for (int u = 0; u < h.order(); ++u)
        for (int v = u + 1; v < h.order(); ++v) {
            shared.clear();
            const auto& a = k.x_neighbours(u);
            const auto& b = k.x_neighbours(v);
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
            int sources = 0;
            for (int y : shared)
                sources += f.graph().adjacent(part_of(k, plan, y, u), part_of(k, plan, y, v));
            if (h.adjacent(u, v) ? (shared.size() != 1 || sources != 1) : sources != 0) return false;
        }
    return true;
}

BlowupResult blowup_on_host(const BipartiteIncidence& k, const Pattern& f, RngConfig rng, std::uint64_t budget) {
    if (const auto c4 = find_c4(k)) throw PreconditionError("host contains a C4", cycle_witness(*c4, k.x_size()));
    BlowupResult out;
    out.plan = random_plan(k, f.size(), rng);
    out.graph = realize(k, f, out.plan);
    out.provenance_ok = audit_blowup(k, f, out.plan, out.graph);
    try {
        out.clique_number = clique_number(out.graph, budget).size;
    } catch (const BudgetError&) {
        out.clique_number = -1;
    }
    return out;
}

double random_union_probability(int n, int r) {
    if (n < 3) throw DomainError("the random union needs at least 3 vertices");
    if (r < 1) throw DomainError("r must be positive");
    return std::pow(static_cast<double>(n), -2.0 / r) / std::log2(static_cast<double>(n));
}

Graph union_with_random(const Graph& g0, int r, RngConfig rng) {
    const double p = random_union_probability(g0.order(), r);
    return union_same_vertices(g0, random_gnp(g0.order(), p, rng));
}

RandomGraphAudit random_graph_audit(int n, int r, int s, std::uint64_t samples, RngConfig rng) {
    if (s < 1 || s > n) throw DomainError("need 1 <= s <= n");
    RandomGraphAudit out;
    out.n = n;
    out.r = r;
    out.s = s;
    out.p = random_union_probability(n, r);
    const Graph g = random_gnp(n, out.p, rng.child(0));
    Rng gen(rng.child(1));
    for (std::uint64_t i = 0; i < samples; ++i) {
        const auto pick = random_subset(n, s, gen);
        const VertexSet set(n, pick);
        const bool low = std::any_of(pick.begin(), pick.end(),
                                     [&](int v) { return g.neighbours(v).intersection_count(set) <= r - 1; });
        out.low_degree_sets += low;
    }
    out.samples = samples;
    out.fraction = samples == 0 ? 0.0 : static_cast<double>(out.low_degree_sets) / static_cast<double>(samples);
    out.alpha_greedy = greedy_independent_set(g, g.vertices()).count();
    out.alpha_reference = std::pow(static_cast<double>(n), 2.0 / r) * std::pow(std::log2(static_cast<double>(n)), 3);
    return out;
}

namespace {

int isqrt(int n) {
    int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

/// floor(x/2 - sqrt(x)), exactly.
int half_minus_root(int x) {
    // Largest integer i with x <= (x/2 - i)^2 and x/2 - i >= 0, i.e.
    // 4x <= (x - 2i)^2 with x - 2i >= 0.
    int i = x / 2;
    while (true) {
        const std::int64_t d = static_cast<std::int64_t>(x) - 2 * static_cast<std::int64_t>(i);
        if (d >= 0 && 4 * static_cast<std::int64_t>(x) <= d * d) return i;
        --i;
    }
}

Graph build_level(int k, int i, int n, RngConfig rng, int& r_out, double& p_out, Graph* h_out) {
    if (k == 1) return Graph(n);
    if (i < 1 || 2 * i > k) throw DomainError("need 1 <= i <= k/2");
    const int m = isqrt(n);
    if (m < 3) throw DomainError("level size " + std::to_string(n) + " is too small to square-root");
    Graph g0(m);
    if (i > 1) {
        int r_inner = 0;
        double p_inner = 0.0;
        const Graph inner = build_level(i, std::max(1, half_minus_root(i)), m, rng.child(1), r_inner, p_inner, nullptr);
        for (auto [u, v] : inner.edges()) g0.add_edge(u, v);
    }
    r_out = 1 << (k / 2 - i);
    p_out = random_union_probability(m, r_out);
    Graph h = union_with_random(g0, r_out, rng.child(0));
    Graph g = lexicographic_product(h, h);
    if (h_out) *h_out = std::move(h);
    return g;
}

}  // namespace

KttConstruction recursive_kttfree(int k, int i, int t, int s_check, int n, RngConfig rng, std::uint64_t budget,
                                  std::uint64_t check_samples) {
    if (k < 1) throw DomainError("k must be at least 1");
    if (t < 1) throw DomainError("t must be at least 1");
    if (n < 1) throw DomainError("n must be positive");
    KttConstruction out;
    KttAudit& a = out.audit;
    a.k = k;
    a.i = i;
    a.t = t;
    const Pattern ktt = Pattern::biclique(t, t);
    if (k == 1) {
        out.graph = Graph(n);
        out.h = Graph(0);
        a.order = n;
        a.clique_number = n > 0 ? 1 : 0;
        a.alpha_ktt_lower = n;
        a.alpha_ktt_exact = n;
        a.colourability = every_small_subgraph_colorable(out.graph, std::min(s_check, n), 2, budget, rng.child(2));
        a.notes.push_back("base case: empty graph");
        return out;
    }
    out.graph = build_level(k, i, n, rng, a.r, a.p, &out.h);
    a.order = out.graph.order();
    a.inner_order = out.h.order();
    if (a.order != n) a.notes.push_back("order rounded down to the square " + std::to_string(a.order));
    if (i > 1) a.notes.push_back("G0 built recursively and padded; its properties are sampled, not proven");

    try {
        a.clique_number = clique_number(out.graph, budget).size;
    } catch (const BudgetError&) {
        a.notes.push_back("clique number not decided within budget");
    }
    a.alpha_ktt_lower = alpha_f(out.graph, ktt, SolveMode::greedy, rng.child(3)).value;
    if (a.order <= 40) {
        try {
            a.alpha_ktt_exact = alpha_f(out.graph, ktt, SolveMode::exact, {}, budget).value;
        } catch (const BudgetError&) {
        }
    }
    try {
        a.alpha_h = independence_number(out.h, SolveMode::exact, budget).value;
        a.alpha_ktt_h = alpha_f(out.h, ktt, SolveMode::exact, {}, budget).value;
        a.product_bound = static_cast<std::int64_t>(t) * *a.alpha_h * *a.alpha_ktt_h;
        a.product_bound_holds = a.alpha_ktt_exact.value_or(a.alpha_ktt_lower) <= *a.product_bound;
        if (!a.alpha_ktt_exact) a.notes.push_back("product bound compared against the greedy lower estimate");
    } catch (const BudgetError&) {
        a.notes.push_back("alpha(H) or alpha_Ktt(H) not exact within budget");
    }
    a.colourability = every_small_subgraph_colorable(out.graph, s_check, 1 << k, check_samples, rng.child(2));
    if (!a.colourability.exhaustive) a.notes.push_back("small-subgraph colourability sampled");
    return out;
}

// ---------------------------------------------------------------------------
// Exact arithmetic for the rho recursion

namespace {

constexpr int kRootBits = 40;

BigInt iroot(const BigInt& x, int degree) {
    BigInt lo = 0, hi = 1;
    while (boost::multiprecision::pow(hi, static_cast<unsigned>(degree)) <= x) hi <<= 1;
    while (hi - lo > 1) {
        const BigInt mid = (lo + hi) >> 1;
        if (boost::multiprecision::pow(mid, static_cast<unsigned>(degree)) <= x)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

/// Interval of width 2^-40 around x^(1/degree).
RationalInterval root_interval(int x, int degree) {
    const BigInt d = BigInt(1) << kRootBits;
    const BigInt a = iroot(BigInt(x) * boost::multiprecision::pow(d, static_cast<unsigned>(degree)), degree);
    const bool exact = boost::multiprecision::pow(a, static_cast<unsigned>(degree)) ==
                       BigInt(x) * boost::multiprecision::pow(d, static_cast<unsigned>(degree));
    return {Rational(a, d), Rational(exact ? a : BigInt(a + 1), d)};
}

Rational pow2(int e) { return e >= 0 ? Rational(BigInt(1) << e) : Rational(BigInt(1), BigInt(1) << -e); }

Rational rho_bound(int k, const Rational& c, bool& clamped) {
    if (k < 2 || Rational(k) <= c / 5) return 1;
    const int i = half_minus_root(k);
    if (i < 1) {
        clamped = true;
        return 1;
    }
    const Rational v = rho_bound(i, c, clamped) / 2 + pow2(i - k / 2);
    return std::min(v, Rational(1));
}

}  // namespace

RhoReport rho_recursion_bound(int k, const Rational& c) {
    if (k < 2) throw DomainError("the rho recursion starts at k = 2");
    if (c <= 0) throw DomainError("C must be positive");
    RhoReport out;
    out.k = k;
    out.c = c;
    out.trivial_branch = Rational(k) <= c / 5;
    out.i = out.trivial_branch ? 0 : half_minus_root(k);
    out.bound = rho_bound(k, c, out.clamped);

    const RationalInterval cube = root_interval(k, 3);
    const RationalInterval inv_cube{1 / cube.hi, 1 / cube.lo};
    const Rational scale = c / k;
    out.closed_form = {scale * (1 - inv_cube.hi), scale * (1 - inv_cube.lo)};
    out.bound_within_closed_form = out.bound <= out.closed_form.lo;

    // k^(-1/3) <= 4/5 iff 125 <= 64k.
    out.trivial_chain_holds = Rational(1) <= c / (5 * k) && 125 <= 64 * k;

    const RationalInterval two = root_interval(2, 3);
    out.rhs = {scale * inv_cube.lo * (two.lo - 1), scale * inv_cube.hi * (two.hi - 1)};
    // rhs = C·k^(-4/3)·(2^(1/3) - 1) and 2^(1/3) - 1 >= 1/4 because 2·64 >= 125.
    out.rhs_lower_bound_holds = 2 * 64 >= 125 && two.lo - 1 >= Rational(1, 4);

    const RationalInterval root = root_interval(k, 2);
    const int fl = isqrt(k);
    const int cl = fl * fl == k ? fl : fl + 1;
    out.lhs = {3 * c / (k * root.hi) + pow2(1 - cl), 3 * c / (k * root.lo) + pow2(1 - fl)};
    if (out.lhs.hi <= out.rhs.lo)
        out.step_inequality = true;
    else if (out.lhs.lo > out.rhs.hi)
        out.step_inequality = false;
    return out;
}

// ---------------------------------------------------------------------------
// Triangle-free blow-ups on {C4, C6}-free hosts

GeneratedHost generate_c4c6free(int na, int nb, std::int64_t target_edges, RngConfig rng) {
    if (na < 0 || nb < 0 || target_edges < 0) throw DomainError("sizes must be nonnegative");
    GeneratedHost out;
    out.target = target_edges;
    out.incidence = BipartiteIncidence(na, nb);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(na) * static_cast<std::size_t>(nb));
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b) pairs.emplace_back(a, b);
    Rng gen(rng);
    gen.shuffle(pairs);
    auto& k = out.incidence;
    // Vertices: X at [0, na), Y at [na, na + nb).
    std::vector<int> dist(static_cast<std::size_t>(na + nb));
    const auto close = [&](int a, int b) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> todo;
        dist[static_cast<std::size_t>(a)] = 0;
        todo.push(a);
        while (!todo.empty()) {
            const int v = todo.front();
            todo.pop();
            const int dv = dist[static_cast<std::size_t>(v)];
            if (dv == 5) continue;
            const auto& nbrs = v < na ? k.x_neighbours(v) : k.y_neighbours(v - na);
            for (int w : nbrs) {
                const int id = v < na ? na + w : w;
                if (dist[static_cast<std::size_t>(id)] >= 0) continue;
                dist[static_cast<std::size_t>(id)] = dv + 1;
                if (id == na + b) return true;
                todo.push(id);
            }
        }
        return false;
    };
    std::size_t tried = 0;
    for (; tried < pairs.size() && k.edge_count() < target_edges; ++tried) {
        const auto [a, b] = pairs[tried];
        if (!close(a, b)) k.add_edge(a, b);
    }
    out.saturated = k.edge_count() < target_edges;
    if (find_c4(k) || find_c6(k)) throw std::logic_error("generated host contains a short cycle");
    return out;
}

TriangleFreeBlowup trianglefree_blowup(const BipartiteIncidence& host, const Pattern& f, RngConfig rng,
                                       std::uint64_t budget) {
    if (const auto tri = contains_subgraph(f.graph(), Pattern::clique(3)))
        throw PreconditionError(f.name() + " contains a triangle", *tri);
    if (const auto c4 = find_c4(host)) throw PreconditionError("host contains a C4", cycle_witness(*c4, host.x_size()));
    if (const auto c6 = find_c6(host)) throw PreconditionError("host contains a C6", cycle_witness(*c6, host.x_size()));
    TriangleFreeBlowup out;
    out.plan = random_plan(host, f.size(), rng.child(0));
    out.graph = realize(host, f, out.plan);
    out.triangle_free = !find_clique(out.graph, 3).has_value();
    out.alpha_f_greedy = alpha_f(out.graph, f, SolveMode::greedy, rng.child(1)).value;
    if (out.graph.order() <= 100) {
        try {
            out.alpha_f_exact = alpha_f(out.graph, f, SolveMode::exact, {}, budget).value;
        } catch (const BudgetError&) {
        }
    }
    const double n = out.graph.order();
    out.reference_curve = n >= 2 ? std::sqrt(n * std::log2(n)) : 0.0;
    return out;
}

// ---------------------------------------------------------------------------
// Counting and sparsifying

FFreeCountReport ffree_count_report(const Graph& h, const Pattern& f, int q, std::optional<int> t,
                                    std::uint64_t budget) {
    if (q < 2) throw DomainError("q must be at least 2");
    FFreeCountReport out;
    out.q = q;
    out.s = f.size();
    const double e = 1.0 / (out.s - 1);
    out.t_formula = std::pow(q, 2.0 - e) * std::pow(std::log2(static_cast<double>(q)), 3);
    out.t = t.value_or(std::max(1, static_cast<int>(std::lround(out.t_formula))));
    out.t = std::min(out.t, h.order());
    while (out.t > 0 && binomial_saturating(h.order(), out.t) > budget) {
        --out.t;
        out.t_clamped = true;
    }
    out.count = count_ffree_sets(h, f, out.t, CopyMode::non_induced, budget);
    out.bound = std::pow(std::pow(q, e), out.t);
    out.within_bound = static_cast<double>(out.count) <= out.bound;
    return out;
}

SparsifyReport sparsify_skeleton(const Graph& h, const Pattern& f, int q, int r, int t, RngConfig rng,
                                 std::uint64_t budget) {
    if (q < 2 || t < 1) throw DomainError("need q >= 2 and t >= 1");
    SparsifyReport out;
    out.q = q;
    out.t = t;
    out.host_order = h.order();
    out.keep_probability = std::pow(q, -1.0 / (f.size() - 1));
    Rng gen(rng);
    VertexSet kept(h.order());
    for (int v = 0; v < h.order(); ++v)
        if (gen.bernoulli(out.keep_probability)) kept.set(v);
    out.kept = kept.count();
    const std::vector<int> labels = kept.to_vector();
    const Graph g0 = induced(h, kept);
    std::vector<char> gone(labels.size(), 0);
    for_each_ffree_set(
        g0, f, t, CopyMode::non_induced,
        [&](const std::vector<int>& set) {
            ++out.ffree_sets;
            if (std::none_of(set.begin(), set.end(), [&](int v) { return gone[static_cast<std::size_t>(v)] != 0; })) {
                gone[static_cast<std::size_t>(set.back())] = 1;
                ++out.removed;
            }
            return true;
        },
        budget);
    out.vertices = VertexSet(h.order());
    for (std::size_t j = 0; j < labels.size(); ++j)
        if (!gone[j]) out.vertices.set(labels[j]);
    out.graph = induced(h, out.vertices);
    out.kr_free = is_kr_free(out.graph, r).free;
    out.every_t_set_contains_f = count_ffree_sets(out.graph, f, t, CopyMode::non_induced, budget) == 0;
    return out;
}

}  // namespace erlab
