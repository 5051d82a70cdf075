#include "doctest.h"
#include "oracles.hpp"

#include "erlab/errors.hpp"
#include "erlab/sampling.hpp"

#include <algorithm>
#include <cstdint>

using namespace erlab;

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t out = 1;
    while (e-- > 0) out *= b;
    return out;
}

// Good s-sets by mask scan; threshold is the least m with m^den >= n^num.
std::vector<std::vector<int>> good_sets_oracle(const Graph& g, int s, int num, int den) {
    const int n = g.order();
    std::int64_t threshold = 0;
    while (ipow(threshold, den) < ipow(n, num)) ++threshold;
    std::vector<std::vector<int>> out;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        if (std::popcount(m) != s) continue;
        const auto x = oracle::members(m);
        int common = 0;
        for (int v = 0; v < n; ++v) {
            bool all = true;
            for (int u : x) all = all && g.adjacent(u, v);
            common += all;
        }
        if (common >= threshold) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Parts P1, P2 independent and complete to P3, which carries a perfect matching.
Graph matched_tripartite() {
    Graph g = graphs::complete_multipartite(3, 8);
    for (int v = 0; v < 16; ++v)
        for (int w = v + 1; w < 16; ++w)
            if (g.adjacent(v, w)) g.remove_edge(v, w);
    for (int v = 16; v < 24; v += 2) g.add_edge(v, v + 1);
    return g;
}

}  // namespace

TEST_CASE("power thresholds compare exactly") {
    const PowerThreshold t{1, 16, Rational(-1, 2)};
    CHECK(t.at_most(Rational(1, 4)));
    CHECK(t.at_least(Rational(1, 4)));
    CHECK_FALSE(t.at_most(Rational(26, 100)));
    CHECK(PowerThreshold::constant(0).at_most(0));
    CHECK_FALSE(PowerThreshold::constant(0).at_most(Rational(1, 1000)));
    CHECK(t.approx() == doctest::Approx(0.25));
}

TEST_CASE("good sets: worked examples") {
    GoodSetParams p;
    p.s = 2;
    const auto kmm = enumerate_good_sets(graphs::complete_bipartite(10, 10), p);
    CHECK(kmm.sets.size() == 90);
    CHECK(kmm.threshold == 5);
    for (const auto& x : kmm.sets) CHECK((x[0] < 10) == (x[1] < 10));
    CHECK(enumerate_good_sets(graphs::empty(12), p).sets.empty());
    p.s = 3;
    CHECK(enumerate_good_sets(graphs::complete(12), p).sets.size() == 220);
    p.s = 30;
    CHECK_THROWS_AS(enumerate_good_sets(graphs::empty(60), p), BudgetError);
}

TEST_CASE("good sets match a direct scan") {
    for (int seed = 0; seed < 25; ++seed) {
        const int n = 9 + seed % 6;
        const Graph g = oracle::random_graph(n, 0.35 + 0.02 * seed, static_cast<std::uint64_t>(seed) + 900);
        for (int s = 1; s <= 3; ++s) {
            GoodSetParams p;
            p.s = s;
            p.beta = Rational(1, 2);
            CHECK(enumerate_good_sets(g, p).sets == good_sets_oracle(g, s, 1, 2));
            p.beta = Rational(1, 3);
            CHECK(enumerate_good_sets(g, p).sets == good_sets_oracle(g, s, 2, 3));
        }
    }
}

TEST_CASE("good-set index") {
    GoodSetParams p;
    p.s = 3;
    const auto good = enumerate_good_sets(graphs::complete_bipartite(6, 6), p);
    const GoodSetIndex index(good);
    CHECK(index.total() == 40);
    CHECK(index.count({}) == index.total());
    CHECK(index.count({0}) == 10);
    CHECK(index.count({0, 1}) == 4);
    CHECK(index.count({0, 6}) == 0);
    const auto pairs = index.tally(2);
    CHECK(pairs.size() == 30);
    for (const auto& [y, c] : pairs) CHECK(c == index.count(y));
}

TEST_CASE("dense pair on a complete bipartite graph") {
    const Graph g = graphs::complete_bipartite(20, 20);
    GoodSetParams p;
    p.s = 4;
    p.beta = Rational(1, 2);
    p.delta = Rational(1, 10);
    p.epsilon = Rational(1, 5);
    const auto r = find_dense_pair(g, p);
    REQUIRE(r.pair.has_value());
    CHECK(r.k == 1);
    CHECK(r.y == std::vector<int>{0});
    CHECK(r.good_total == 2 * 4845);
    // Recompute W, U and the density by hand.
    for (int v = 0; v < 40; ++v) CHECK(r.pair->w.test(v) == (v >= 20));
    for (int v = 0; v < 40; ++v) CHECK(r.pair->u.test(v) == (v >= 1 && v < 20));
    CHECK(r.pair->density == 1);
}

TEST_CASE("dense pair trivial cases") {
    GoodSetParams p;
    p.s = 2;
    p.delta = Rational(1, 10);
    p.epsilon = Rational(1, 5);
    const auto empty = find_dense_pair(graphs::empty(10), p);
    CHECK_FALSE(empty.pair.has_value());
    CHECK(empty.good_total == 0);
    const auto kn = find_dense_pair(graphs::complete(10), p);
    REQUIRE(kn.pair.has_value());
    CHECK(kn.y.size() == 1);
    CHECK(kn.pair->density == Rational(8 * 9, 9 * 9));
    p.delta = Rational(1, 2);
    CHECK_THROWS_AS(find_dense_pair(graphs::complete(10), p), DomainError);
}

TEST_CASE("dense pair postconditions hold on random graphs") {
    for (int seed = 0; seed < 30; ++seed) {
        const int n = 14 + seed % 10;
        const Graph g = oracle::random_graph(n, 0.4 + 0.01 * seed, static_cast<std::uint64_t>(seed) + 31);
        GoodSetParams p;
        p.s = 3;
        p.beta = Rational(1, 2);
        p.delta = Rational(1, 10);
        p.epsilon = Rational(1, 5);
        const auto r = find_dense_pair(g, p);
        // The witness is the lexicographically least Y of the largest size k
        // among all subsets of good sets, recomputed from the full tally.
        const auto good = enumerate_good_sets(g, p);
        const GoodSetIndex index(good);
        std::vector<int> expect;
        for (int k = p.s; k >= 1 && expect.empty() && !good.sets.empty(); --k)
            for (const auto& [y, c] : index.tally(k)) {
                std::int64_t ny = 0;
                for (int v = 0; v < n; ++v) {
                    bool all = true;
                    for (int x : y) all = all && g.adjacent(x, v);
                    ny += all;
                }
                // c·2^(k-1)·n^k >= g and ny^5 < n^(5-(k-1)) with eps = 1/5.
                if (static_cast<std::int64_t>(c) * ipow(2, k - 1) * ipow(n, k) < static_cast<std::int64_t>(good.sets.size())) continue;
                if (ipow(ny, 5) >= ipow(n, 5 - (k - 1))) continue;
                expect = y;
                break;
            }
        CHECK(r.y == expect);
        if (!r.pair) continue;
        // W = N(Y).
        std::int64_t ny = 0;
        for (int v = 0; v < n; ++v) {
            bool all = true;
            for (int y : r.y) all = all && g.adjacent(y, v);
            CHECK(r.pair->w.test(v) == all);
            ny += all;
        }
        // v in U iff v not in Y and |N(Y)|^5 <= n·|N(Y+v)|^5.
        for (int v = 0; v < n; ++v) {
            std::int64_t nyv = 0;
            for (int w = 0; w < n; ++w) nyv += r.pair->w.test(w) && g.adjacent(v, w);
            const bool in_y = std::find(r.y.begin(), r.y.end(), v) != r.y.end();
            CHECK(r.pair->u.test(v) == (!in_y && ipow(ny, 5) <= n * ipow(nyv, 5)));
        }
        std::int64_t e = 0;
        for (int u = 0; u < n; ++u)
            for (int w = 0; w < n; ++w) e += r.pair->u.test(u) && r.pair->w.test(w) && g.adjacent(u, w);
        CHECK(r.pair->density == Rational(e, static_cast<std::int64_t>(r.pair->u.count()) * r.pair->w.count()));
    }
}

TEST_CASE("dependent random choice") {
    const Graph kn = graphs::complete(12);
    const auto all = kn.vertices();
    const auto r = drc_filter(kn, all, all, 3, 2, PowerThreshold{1, 12, Rational(-1)}, {1, 0});
    CHECK(r.deleted.empty());
    CHECK(r.a == r.n);
    CHECK(r.verified);
    for (int x : r.samples) CHECK_FALSE(r.a.test(x));

    const Graph c = graphs::cycle(10);
    const auto zero = drc_filter(c, c.vertices(), c.vertices(), 0, 1, PowerThreshold::constant(0), {1, 0});
    CHECK(zero.a == c.vertices());
    CHECK_THROWS_AS(drc_filter(c, VertexSet(10), c.vertices(), 1, 1, PowerThreshold::constant(0), {}), DomainError);
}

TEST_CASE("dependent random choice post-verification by pair scan") {
    // K_{12,12} plus a perfect matching on the first side.
    Graph g = graphs::complete_bipartite(12, 12);
    for (int v = 0; v < 12; v += 2) g.add_edge(v, v + 1);
    VertexSet u(24), w(24);
    for (int v = 0; v < 12; ++v) w.set(v);
    for (int v = 0; v < 24; ++v) u.set(v);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        for (const Rational level : {Rational(49, 100), Rational(51, 100)}) {
            const auto r = drc_filter(g, u, w, 1, 2, PowerThreshold::constant(level), {seed, 0});
            const auto a = r.a.to_vector();
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = i + 1; j < a.size(); ++j) {
                    int common = 0;
                    for (int x = 0; x < 24; ++x) common += g.adjacent(a[i], x) && g.adjacent(a[j], x);
                    CHECK(Rational(common, 24) > level);
                }
            CHECK(r.a.subset_of(w));
            // Pairs inside W share exactly the 12 vertices of the other side.
            if (level > Rational(1, 2))
                CHECK(a.size() <= 1);
            else
                CHECK(r.a == r.n);
        }
    }
}

TEST_CASE("sparse-neighbourhood extraction") {
    const Graph kmm = graphs::complete_bipartite(9, 9);
    const auto r = extract_ffree_sparse(kmm, Pattern::clique(3), 4, Rational(1, 3));
    CHECK(r.optimal);
    CHECK(r.route == "proof");
    CHECK(r.value >= 8);
    CHECK(kmm.edges_within(r.witness) == 0);
    const auto tiny = extract_ffree_sparse(graphs::complete(2), Pattern::clique(3), 4, Rational(1, 3));
    CHECK(tiny.value == 2);
    CHECK_THROWS_AS(extract_ffree_sparse(kmm, Pattern::cycle(4), 5, Rational(1, 3)), PreconditionError);
    // One edge inside the neighbourhood: one endpoint is dropped.
    Graph g = graphs::complete_bipartite(6, 6);
    g.add_edge(6, 7);
    const auto one = extract_ffree_sparse(g, Pattern::clique(3), 4, Rational(1, 2));
    CHECK(one.optimal);
    CHECK(g.edges_within(one.witness) == 0);
    CHECK(one.value >= 5);
}

TEST_CASE("sparse-neighbourhood extraction always verifies") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = random_gnp(20, 0.3, {seed, 5});
        for (const auto& f : {Pattern::clique(3), Pattern::cycle(4)}) {
            const auto r = extract_ffree_sparse(g, f, 4, Rational(1, 3), {seed, 6});
            CHECK(is_ffree(g, f, r.witness));
            CHECK(r.value == r.witness.count());
        }
    }
}

TEST_CASE("recursive extraction: base case") {
    const auto r = extract_ffree_recursive(graphs::cycle(5), Pattern::clique(2), 1, Rational(1, 10));
    CHECK(r.value == 2);
    CHECK(r.optimal);
}

TEST_CASE("recursive extraction bottoms out in a part") {
    const Graph g = graphs::complete_multipartite(3, 8);
    const auto r = extract_ffree_recursive(g, Pattern::biclique(2, 2), 2, Rational(9, 20), {3, 0});
    CHECK(r.optimal);
    CHECK(r.value == 8);
    CHECK(g.edges_within(r.witness) == 0);
    const auto w = r.witness.to_vector();
    CHECK(w.front() / 8 == w.back() / 8);
    const bool took_a = std::any_of(r.trail.begin(), r.trail.end(),
                                    [](const std::string& s) { return s.find("branch A") != std::string::npos; });
    CHECK(took_a);
}

TEST_CASE("recursive extraction takes the clique branch") {
    const Graph g = matched_tripartite();
    CHECK_FALSE(find_clique(g, 4).has_value());
    const auto r = extract_ffree_recursive(g, Pattern::biclique(2, 2), 2, Rational(9, 20), {3, 0});
    const bool took_b = std::any_of(r.trail.begin(), r.trail.end(),
                                    [](const std::string& s) { return s.find("branch B") != std::string::npos; });
    CHECK(took_b);
    CHECK(r.optimal);
    CHECK(r.value == 16);
    // B is the common neighbourhood of an edge of P3, which is P1 ∪ P2.
    for (int v = 0; v < 24; ++v) CHECK(r.witness.test(v) == (v < 16));
    CHECK(g.edges_within(r.witness) == 0);
}

TEST_CASE("recursive extraction is deterministic and always verifies") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const Graph g = random_gnp(22, 0.45, {seed, 7});
        const auto a = extract_ffree_recursive(g, Pattern::clique(3), 2, Rational(2, 5), {seed, 8});
        const auto b = extract_ffree_recursive(g, Pattern::clique(3), 2, Rational(2, 5), {seed, 8});
        CHECK(a.witness == b.witness);
        CHECK(a.trail == b.trail);
        CHECK(is_ffree(g, Pattern::clique(3), a.witness));
    }
    // delta too large for the level falls back honestly.
    const auto fb = extract_ffree_recursive(graphs::complete_multipartite(3, 4), Pattern::clique(3), 2, Rational(3, 4));
    CHECK_FALSE(fb.optimal);
    CHECK(fb.route == "fallback");
    CHECK(is_ffree(graphs::complete_multipartite(3, 4), Pattern::clique(3), fb.witness));
}

TEST_CASE("independent sets in K4-free graphs") {
    CHECK(independent_set_k4free(graphs::empty(7), 5, {}).value == 7);
    CHECK(independent_set_k4free(graphs::cycle(5), 10, {1, 1}).value == 2);
    try {
        independent_set_k4free(graphs::complete(5), 3, {});
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        CHECK(e.witness().size() == 4);
        CHECK(oracle::is_clique(graphs::complete(5), e.witness()));
    }
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const Graph g = matched_tripartite();
        const auto r = independent_set_k4free(g, 8, {seed, 0});
        CHECK(g.edges_within(r.witness) == 0);
        CHECK(r.value >= greedy_independent_set(g, g.vertices()).count());
        CHECK(r.value == 16);
        const Graph h = random_gnp(40, 0.1, {seed, 3});
        if (find_clique(h, 4)) continue;
        const auto s = independent_set_k4free(h, 20, {seed, 4});
        CHECK(h.edges_within(s.witness) == 0);
        CHECK(s.witness == independent_set_k4free(h, 20, {seed, 4}).witness);
    }
}
