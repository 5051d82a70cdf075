#include "doctest.h"
#include "oracles.hpp"

#include "erlab/canonical.hpp"
#include "erlab/combinatorics.hpp"
#include "erlab/errors.hpp"
#include "erlab/graph_io.hpp"
#include "erlab/solvers.hpp"

#include <map>
#include <set>

using namespace erlab;

TEST_CASE("independence number") {
    CHECK(independence_number(graphs::cycle(5)).value == 2);
    CHECK(independence_number(graphs::complete_bipartite(3, 3)).value == 3);
    CHECK(independence_number(graphs::petersen()).value == oracle::independence_number(graphs::petersen()));
    CHECK(independence_number(graphs::petersen()).value == 4);
    for (int seed = 0; seed < 40; ++seed) {
        const Graph g = oracle::random_graph(30, 0.2 + 0.01 * seed, static_cast<std::uint64_t>(seed));
        const auto greedy = independence_number(g, SolveMode::greedy);
        CHECK(static_cast<double>(greedy.value) >= turan_bound(g) - 1e-9);
        CHECK(greedy.value <= independence_number(g).value);
    }
}

TEST_CASE("alpha_F examples") {
    for (int n = 2; n <= 7; ++n) CHECK(alpha_f(graphs::complete(n), Pattern::clique(3), SolveMode::exact).value == 2);
    const auto r = alpha_f(graphs::complete_bipartite(3, 3), Pattern::cycle(4), SolveMode::exact);
    CHECK(r.value == 4);
    CHECK(r.optimal);
    const auto vac = alpha_f(graphs::complete(3), Pattern::clique(4), SolveMode::exact);
    CHECK(vac.value == 3);
    CHECK(vac.route == "vacuous");
}

TEST_CASE("alpha_K2 equals alpha on every labelled graph with 5 vertices") {
    for (const auto& g : oracle::all_labelled(5))
        CHECK(alpha_f(g, Pattern::clique(2), SolveMode::exact).value == independence_number(g).value);
}

TEST_CASE("alpha_F matches subset brute force") {
    const std::vector<Pattern> fs = {Pattern::clique(2), Pattern::clique(3), Pattern::cycle(4), Pattern::path(3)};
    for (int seed = 0; seed < 80; ++seed) {
        const Graph g = oracle::random_graph(8, 0.2 + 0.1 * (seed % 7), static_cast<std::uint64_t>(seed) * 31 + 1);
        for (const auto& f : fs) {
            const auto got = alpha_f(g, f, SolveMode::exact);
            CHECK(got.value == oracle::alpha_f(g, f.graph()));
            CHECK(is_ffree(g, f, got.witness));
            // α_F(G) = n iff G is F-free.
            CHECK((got.value == g.order()) == !contains_subgraph(g, f).has_value());
        }
    }
}

TEST_CASE("alpha_F is monotone under induced subgraphs") {
    for (int seed = 0; seed < 30; ++seed) {
        const Graph g = oracle::random_graph(12, 0.5, static_cast<std::uint64_t>(seed) + 700);
        const VertexSet s(12, {0, 1, 3, 4, 6, 8, 9, 11});
        CHECK(alpha_f(induced(g, s), Pattern::clique(3), SolveMode::exact).value <=
              alpha_f(g, Pattern::clique(3), SolveMode::exact).value);
    }
}

TEST_CASE("greedy alpha_F always verifies") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = random_gnp(40, 0.3, {seed, 1});
        for (const auto& f : {Pattern::clique(3), Pattern::cycle(4), Pattern::path(3)}) {
            const auto r = alpha_f(g, f, SolveMode::greedy, {seed, 2});
            CHECK(is_ffree(g, f, r.witness));
            CHECK(r.seed.has_value());
            CHECK_FALSE(r.optimal);
        }
    }
    // Same seed, same witness.
    const Graph g = random_gnp(50, 0.3, {1, 1});
    CHECK(alpha_f(g, Pattern::clique(3), SolveMode::greedy, {4, 4}).witness ==
          alpha_f(g, Pattern::clique(3), SolveMode::greedy, {4, 4}).witness);
}

TEST_CASE("hypergraph independent set on hand-built instances") {
    CopyHypergraph h;
    h.n = 5;
    h.uniformity = 3;
    // Every 4-set contains one of these edges.
    h.edges = {{0, 1, 2}, {2, 3, 4}, {0, 3, 4}};
    CHECK(hypergraph_max_independent(h).value == 3);
    h.edges.clear();
    CHECK(hypergraph_max_independent(h).value == 5);
    const auto copies = CopyHypergraph::build(graphs::complete(4), Pattern::clique(3), CopyMode::non_induced);
    CHECK(copies.edges.size() == 4);
    const auto p3 = CopyHypergraph::build(graphs::complete(3), Pattern::path(3), CopyMode::induced);
    CHECK(p3.edges.empty());
}

TEST_CASE("counting F-free sets") {
    CHECK(count_ffree_sets(graphs::complete(4), Pattern::clique(3), 3, CopyMode::non_induced) == 0);
    CHECK(count_ffree_sets(graphs::cycle(6), Pattern::path(3), 2, CopyMode::non_induced) == 15);
    for (int seed = 0; seed < 20; ++seed) {
        const Graph g = oracle::random_graph(11, 0.35, static_cast<std::uint64_t>(seed) + 40);
        for (int t = 0; t <= 6; ++t) {
            std::uint64_t independent = 0;
            for_each_combination(11, t, [&](const std::vector<int>& s) {
                independent += oracle::is_independent(g, s);
                return true;
            });
            CHECK(count_ffree_sets(g, Pattern::clique(2), t, CopyMode::non_induced) == independent);
        }
        // Induced counting never rejects more sets than non-induced counting.
        CHECK(count_ffree_sets(g, Pattern::path(3), 4, CopyMode::induced) >=
              count_ffree_sets(g, Pattern::path(3), 4, CopyMode::non_induced));
    }
    CHECK_THROWS_AS(count_ffree_sets(graphs::empty(60), Pattern::clique(2), 30, CopyMode::non_induced), BudgetError);
}

TEST_CASE("canonical codes identify isomorphism classes") {
    // Labelled graphs on 5 vertices fall into 34 isomorphism classes.
    std::set<std::uint64_t> codes;
    for (const auto& g : oracle::all_labelled(5)) codes.insert(canonical_code(g));
    CHECK(codes.size() == 34);
    std::set<std::uint64_t> six;
    for (const auto& g : enumerate_graphs(6)) six.insert(canonical_code(g));
    CHECK(six.size() == 156);
    CHECK(enumerate_graphs(7).size() == 1044);
    // Relabelling leaves the code unchanged.
    for (int seed = 0; seed < 50; ++seed) {
        const Graph g = oracle::random_graph(9, 0.4, static_cast<std::uint64_t>(seed));
        std::vector<int> perm = {3, 7, 1, 0, 8, 2, 6, 4, 5};
        Graph h(9);
        for (auto [u, v] : g.edges()) h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        CHECK(canonical_code(g) == canonical_code(h));
        CHECK(canonical_code(graph_from_code(9, canonical_code(g))) == canonical_code(g));
    }
}

TEST_CASE("H-free enumeration") {
    // Triangle-free graphs on 1..7 vertices: 1, 2, 3, 7, 14, 38, 107.
    const int expected[] = {1, 2, 3, 7, 14, 38, 107};
    for (int n = 1; n <= 7; ++n) CHECK(enumerate_graphs(n, Pattern::clique(3)).size() == static_cast<std::size_t>(expected[n - 1]));
    EnumerationOptions raw;
    raw.deduplicate = false;
    CHECK(enumerate_graphs(4, std::nullopt, raw).size() == 64);
}

TEST_CASE("f_exact small values") {
    const auto f5 = f_exact(Pattern::clique(2), Pattern::clique(3), 5);
    CHECK(f5.value == 2);
    CHECK(canonical_code(f5.witness) == canonical_code(graphs::cycle(5)));
    CHECK_FALSE(f5.vacuous);
    const auto f8 = f_exact(Pattern::clique(2), Pattern::clique(3), 8);
    CHECK(f8.value == 3);
    CHECK_FALSE(contains_subgraph(f8.witness, Pattern::clique(3)));
    CHECK(independence_number(f8.witness).value == 3);
    // Deduplication is only an optimization.
    CHECK(f_exact(Pattern::clique(2), Pattern::clique(3), 5, 20'000'000, false).value == 2);
    // H ⊆ F gives n.
    for (int n = 3; n <= 6; ++n) CHECK(f_exact(Pattern::clique(4), Pattern::clique(3), n).value == n);
    // K4-free graphs are K5-free, so forbidding less can only lower the minimum.
    for (int n = 3; n <= 7; ++n)
        CHECK(f_exact(Pattern::clique(3), Pattern::clique(5), n).value <= f_exact(Pattern::clique(3), Pattern::clique(4), n).value);
    const auto vac = f_exact(Pattern::clique(4), Pattern::clique(3), 2);
    CHECK(vac.vacuous);
    CHECK(vac.value == 2);
    CHECK_THROWS_AS(f_exact(Pattern::clique(2), Pattern::clique(3), 10), BudgetError);
}
