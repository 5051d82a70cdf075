// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "oracles.hpp"

#include "cli.hpp"

#include "erlab/canonical.hpp"
#include "erlab/constructions.hpp"
#include "erlab/domination.hpp"
#include "erlab/errors.hpp"
#include "erlab/finite_geometry.hpp"
#include "erlab/graph_io.hpp"
#include "erlab/sampling.hpp"
#include "erlab/search.hpp"
#include "erlab/solvers.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

using namespace erlab;

namespace {

struct Tally {
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first_failure = what;
    }
};

using Criterion = std::function<std::string(Tally&)>;

// Vertex masks of all copies of F in G (every injective edge-preserving map).
std::vector<std::uint32_t> copy_masks(const Graph& g, const Graph& f) {
    std::vector<std::uint32_t> out;
    std::vector<int> map(static_cast<std::size_t>(f.order()), -1);
    std::function<void(int, std::uint32_t)> go = [&](int i, std::uint32_t used) {
        if (i == f.order()) {
            out.push_back(used);
            return;
        }
        for (int v = 0; v < g.order(); ++v) {
            if ((used >> v) & 1u) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (f.adjacent(i, j) && !g.adjacent(v, map[static_cast<std::size_t>(j)])) ok = false;
            if (!ok) continue;
            map[static_cast<std::size_t>(i)] = v;
            go(i + 1, used | (1u << v));
        }
    };
    go(0, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int brute_alpha_f(const Graph& g, const Graph& f) {
    const auto copies = copy_masks(g, f);
    int best = 0;
    for (std::uint32_t m = 0; m < (1u << g.order()); ++m) {
        const int size = std::popcount(m);
        if (size <= best) continue;
        if (std::none_of(copies.begin(), copies.end(), [&](std::uint32_t c) { return (c & m) == c; })) best = size;
    }
    return best;
}

std::vector<Graph> small_corpus(int max_order) {
    std::vector<Graph> corpus;
    for (int n = 1; n <= max_order; ++n) {
        auto level = enumerate_graphs(n);
        corpus.insert(corpus.end(), level.begin(), level.end());
    }
    return corpus;
}

// Random graph with every K4 broken by deleting one of its edges.
Graph k4free_gnp(int n, double p, RngConfig rng) {
    Graph g = random_gnp(n, p, rng);
    while (const auto k = find_clique(g, 4)) g.remove_edge((*k)[0], (*k)[1]);
    return g;
}

std::string fmt(const char* format, auto... values) {
    char buffer[256];
    std::snprintf(buffer, sizeof buffer, format, values...);
    return buffer;
}

// ---------------------------------------------------------------------------

std::string unital_exactness(Tally& t) {
    for (int q : {2, 3}) {
        const auto info = hermitian_unital_info(q);
        const auto& k = info.incidence;
        const std::int64_t ex = q * q * q * q - q * q * q + q * q, ey = q * q * q + 1;
        t.expect(k.x_size() == ex, fmt("q=%d |X|=%d", q, k.x_size()));
        t.expect(k.y_size() == ey, fmt("q=%d |Y|=%d", q, k.y_size()));
        for (int x = 0; x < k.x_size(); ++x)
            t.expect(static_cast<int>(k.x_neighbours(x).size()) == q + 1, fmt("q=%d d(x%d)", q, x));
        for (int y = 0; y < k.y_size(); ++y)
            t.expect(static_cast<int>(k.y_neighbours(y).size()) == q * q, fmt("q=%d d(y%d)", q, y));
        t.expect(!find_c4(k) && !find_c4_by_x_pairs(k), fmt("q=%d C4", q));
        // Independent check: two secant lines share at most one point.
        for (int a = 0; a < k.x_size(); ++a)
            for (int b = a + 1; b < k.x_size(); ++b) {
                const auto& na = k.x_neighbours(a);
                const auto& nb = k.x_neighbours(b);
                int common = 0;
                for (int y : na) common += std::count(nb.begin(), nb.end(), y);
                t.expect(common <= 1, fmt("q=%d lines %d,%d share %d points", q, a, b, common));
            }
        const auto census = hermitian_line_census(GaloisField(q));
        t.expect(census.size() == 2 && census.at(1) == ey && census.at(q + 1) == ex, fmt("q=%d census", q));
    }
    const auto two = hermitian_unital_info(2);
    t.expect(two.subdivision_checked && !has_rooted_k4_subdivision(two.incidence), "q=2 rooted K4 subdivision");
    return "q in {2,3}: sizes, degrees, C4-free; q=2 rooted-K4-subdivision-free";
}

std::string blowup_kr_free(Tally& t) {
    const auto k = hermitian_unital(3);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto b = blowup_on_host(k, Pattern::cycle(4), {seed, 0});
        t.expect(b.provenance_ok, fmt("seed %llu provenance", static_cast<unsigned long long>(seed)));
        t.expect(b.clique_number >= 0 && b.clique_number < 4, fmt("seed %llu omega", static_cast<unsigned long long>(seed)));
        t.expect(!find_clique(b.graph, 4), fmt("seed %llu K4 found", static_cast<unsigned long long>(seed)));
    }
    return "100 seeds, q=3, F=C4: no K4";
}

struct ProductCase {
    Graph g;
    Graph h;
};

std::vector<ProductCase> product_corpus() {
    std::vector<ProductCase> cases;
    const auto corpus = small_corpus(5);
    for (const auto& g : corpus)
        for (const auto& h : corpus) cases.push_back({g, h});
    Rng rng({2024, 7});
    for (int i = 0; i < 200; ++i) {
        const int a = 1 + static_cast<int>(rng.uniform_below(6)), b = 1 + static_cast<int>(rng.uniform_below(6));
        const double pa = rng.uniform01(), pb = rng.uniform01();
        cases.push_back({oracle::random_graph(a, pa, 1000 + 2 * i), oracle::random_graph(b, pb, 1001 + 2 * i)});
    }
    return cases;
}

std::int64_t alpha_ktt(const Graph& g, int t) {
    if (g.order() == 0) return 0;
    return alpha_f(g, Pattern::biclique(t, t), SolveMode::exact).value;
}

std::string product_inequality(Tally& t) {
    const auto cases = product_corpus();
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& [g, h] = cases[i];
        const Graph gh = lexicographic_product(g, h);
        const std::int64_t ag = independence_number(g).value;
        for (int tt = 1; tt <= 2; ++tt) {
            const auto lhs = alpha_ktt(gh, tt);
            const auto rhs = ag * alpha_ktt(h, tt) + (tt - 1) * alpha_ktt(g, tt);
            t.expect(lhs <= rhs, fmt("case %zu t=%d: %lld > %lld", i, tt, static_cast<long long>(lhs),
                                     static_cast<long long>(rhs)));
        }
    }
    return fmt("%zu pairs (all graphs on <= 5 vertices squared, plus 200 random with v <= 6), t in {1,2}",
               cases.size());
}

std::string product_identities(Tally& t) {
    const auto cases = product_corpus();
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& [g, h] = cases[i];
        const Graph gh = lexicographic_product(g, h);
        const int wg = clique_number(g).size, wh = clique_number(h).size, wgh = clique_number(gh).size;
        t.expect(wgh == wg * wh, fmt("case %zu omega %d != %d*%d", i, wgh, wg, wh));
        const int cg = chromatic_number(g).chromatic_number, ch = chromatic_number(h).chromatic_number;
        const int cgh = chromatic_number(gh).chromatic_number;
        t.expect(cgh <= cg * ch, fmt("case %zu chi %d > %d*%d", i, cgh, cg, ch));
        // The factor solvers themselves against brute force.
        t.expect(wg == oracle::clique_number(g) && cg == oracle::chromatic_number(g), fmt("case %zu factor", i));
    }
    return fmt("%zu pairs: omega multiplicative, chi submultiplicative", cases.size());
}

std::string oracle_equivalence(Tally& t) {
    const std::vector<Pattern> patterns{Pattern::clique(2), Pattern::clique(3), Pattern::cycle(4), Pattern::path(3)};
    std::uint64_t graphs = 0;
    for (int n = 1; n <= 8; ++n) {
        const auto level = enumerate_graphs(n);
        static const std::size_t expected[] = {0, 1, 2, 4, 11, 34, 156, 1044, 12346};
        t.expect(level.size() == expected[n], fmt("n=%d: %zu isomorphism classes", n, level.size()));
        for (const auto& g : level) {
            ++graphs;
            for (const auto& f : patterns) {
                const auto got = alpha_f(g, f, SolveMode::exact).value;
                t.expect(got == brute_alpha_f(g, f.graph()), fmt("alpha_%s n=%d", f.name().c_str(), n));
            }
            if (n < 2) continue;
            const Pattern as_pattern(g);
            for (int s = 1; s <= 3; ++s) {
                const auto r = gamma_s_exact(as_pattern, s);
                t.expect(r.value == oracle::gamma_s(g, s) && verify_domination(as_pattern, r.witness, s),
                         fmt("gamma_%d n=%d", s, n));
            }
        }
    }
    return fmt("%llu graphs (all on <= 8 vertices): alpha_F for K2,K3,C4,P3 and gamma_s for s=1,2,3",
               static_cast<unsigned long long>(graphs));
}

std::string f_exact_values(Tally& t) {
    std::string detail;
    for (const auto& [n, want] : std::vector<std::pair<int, int>>{{5, 2}, {8, 3}}) {
        const auto r = f_exact(Pattern::clique(2), Pattern::clique(3), n);
        t.expect(r.value == want, fmt("f(%d) = %d", n, r.value));
        t.expect(r.witness.order() == n && oracle::clique_number(r.witness) <= 2, fmt("f(%d) witness has K3", n));
        t.expect(oracle::independence_number(r.witness) == want, fmt("f(%d) witness alpha", n));
        detail += fmt("f(%d)=%d witness %s; ", n, r.value, graph6_encode(r.witness).c_str());
    }
    return detail + "F=K2, H=K3";
}

std::string constructive_validity(Tally& t) {
    // Host families: unital blow-ups, lexicographic products, G(n, p).
    std::vector<std::pair<std::string, Graph>> hosts;
    const auto u2 = hermitian_unital(2), u3 = hermitian_unital(3);
    for (std::uint64_t s = 0; s < 3; ++s) {
        hosts.emplace_back("blowup q=3 C4", blowup_on_host(u3, Pattern::cycle(4), {s, 11}).graph);
        hosts.emplace_back("blowup q=2 K2", blowup_on_host(u2, Pattern::clique(2), {s, 12}).graph);
    }
    hosts.emplace_back("C5.E4", lexicographic_product(graphs::cycle(5), graphs::empty(4)));
    hosts.emplace_back("Petersen.E3", lexicographic_product(graphs::petersen(), graphs::empty(3)));
    hosts.emplace_back("C7.K1", lexicographic_product(graphs::cycle(7), graphs::empty(1)));
    for (std::uint64_t s = 0; s < 3; ++s) hosts.emplace_back("gnp 40 0.15", k4free_gnp(40, 0.15, {s, 13}));
    for (const auto& [name, g] : hosts) t.expect(!find_clique(g, 4), name + " host has K4");

    const std::vector<Pattern> fs{Pattern::clique(3), Pattern::cycle(4), Pattern::clique(2)};
    int runs = 0;
    auto ffree = [&](const Graph& g, const Pattern& f, const VertexSet& w) {
        return !oracle::contains_within(g, f.graph(), w.to_vector());
    };
    for (int i = 0; i < 125; ++i) {
        const auto& [name, g] = hosts[static_cast<std::size_t>(i) % hosts.size()];
        const Pattern& f = fs[static_cast<std::size_t>(i) % 2];
        const RngConfig rng{static_cast<std::uint64_t>(i), 21};
        const auto r = extract_ffree_sparse(g, f, 4, Rational(1, 3), rng);
        t.expect(ffree(g, f, r.witness) && r.value == r.witness.count(), fmt("sparse run %d on ", i) + name);
        ++runs;
    }
    for (int i = 0; i < 125; ++i) {
        const auto& [name, g] = hosts[static_cast<std::size_t>(i) % hosts.size()];
        const Pattern& f = fs[static_cast<std::size_t>(i) % 3];
        const RngConfig rng{static_cast<std::uint64_t>(i), 22};
        ExtractionOptions opt;
        opt.s_override = 2 + i % 2;
        const auto r = extract_ffree_recursive(g, f, 2, Rational(9, 20), rng, opt);
        t.expect(ffree(g, f, r.witness) && r.value == r.witness.count(), fmt("recursive run %d on ", i) + name);
        ++runs;
    }
    for (int i = 0; i < 125; ++i) {
        const auto& [name, g] = hosts[static_cast<std::size_t>(i) % hosts.size()];
        const int n = g.order();
        VertexSet u = g.vertices(), w = g.vertices();
        const auto pair = find_dense_pair(g, {2, Rational(1, 2), Rational(1, 4), Rational(1, 16)});
        if (pair.pair) {
            u = pair.pair->u;
            w = pair.pair->w;
        }
        if (u.empty()) u = g.vertices();
        const int clique_size = 2 + i % 2;
        const PowerThreshold level{1, n, Rational(-1, 2)};
        const auto r = drc_filter(g, u, w, 2, clique_size, level, {static_cast<std::uint64_t>(i), 23});
        const auto a = r.a.to_vector();
        bool ok = r.verified && r.a.subset_of(w);
        std::vector<int> pick;
        std::function<void(std::size_t)> scan = [&](std::size_t from) {
            if (!ok) return;
            if (static_cast<int>(pick.size()) == clique_size) {
                int common = 0;
                u.for_each([&](int x) {
                    bool all = true;
                    for (int v : pick) all = all && g.adjacent(v, x);
                    common += all;
                });
                ok = !level.at_most(Rational(common, u.count()));
                return;
            }
            for (std::size_t j = from; j < a.size(); ++j) {
                pick.push_back(a[j]);
                scan(j + 1);
                pick.pop_back();
            }
        };
        scan(0);
        t.expect(ok, fmt("filter run %d on ", i) + name);
        ++runs;
    }
    for (int i = 0; i < 125; ++i) {
        const auto& [name, g] = hosts[static_cast<std::size_t>(i) % hosts.size()];
        const auto r = independent_set_k4free(g, 20, {static_cast<std::uint64_t>(i), 24});
        t.expect(oracle::is_independent(g, r.witness.to_vector()) && r.value == r.witness.count(),
                 fmt("k4free-independent run %d on ", i) + name);
        ++runs;
    }
    return fmt("%d runs over %zu hosts (unital blow-ups, products, G(n,p))", runs, hosts.size());
}

std::string trianglefree_blowups(Tally& t) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto host = generate_c4c6free(40, 40, 120, {seed, 31});
        const auto b = trianglefree_blowup(host.incidence, Pattern::cycle(4), {seed, 32});
        t.expect(b.triangle_free, fmt("seed %llu flagged", static_cast<unsigned long long>(seed)));
        t.expect(!oracle::contains(b.graph, graphs::complete(3)), fmt("seed %llu has K3", static_cast<unsigned long long>(seed)));
    }
    return "100 seeds, hosts 40+40 {C4,C6}-free, F=C4: triangle-free";
}

std::string rho_chain(Tally& t) {
    for (int k = 2; k <= 60; ++k) {
        const auto r = rho_recursion_bound(k, 10000);
        t.expect(r.trivial_branch && r.bound == 1, fmt("k=%d branch", k));
        t.expect(r.trivial_chain_holds, fmt("k=%d chain 1 <= C/(5k) <= closed form", k));
        t.expect(r.bound_within_closed_form, fmt("k=%d bound above closed form", k));
        t.expect(r.rhs_lower_bound_holds, fmt("k=%d rhs below C/(4k^(4/3))", k));
        t.expect(r.closed_form.lo <= r.closed_form.hi && r.rhs.lo <= r.rhs.hi, fmt("k=%d intervals", k));
        // Floating-point cross-check of the enclosures.
        const double closed = 10000.0 / k * (1 - std::cbrt(1.0 / k));
        const double rhs = 10000.0 / k * (std::cbrt(2.0 / k) - std::cbrt(1.0 / k));
        t.expect(std::abs(to_double(r.closed_form.lo) - closed) < 1e-6 * closed, fmt("k=%d closed form value", k));
        t.expect(std::abs(to_double(r.rhs.lo) - rhs) < 1e-6 * rhs, fmt("k=%d rhs value", k));
        t.expect(rhs >= 10000.0 / (4 * std::pow(k, 4.0 / 3)), fmt("k=%d float rhs", k));
    }
    return "k in [2,60], C=10^4, exact rationals";
}

std::string strip_wall_time(const std::string& text) {
    auto j = cli::Json::parse(text);
    j.erase("wall_time");
    return j.dump(2);
}

std::string determinism(Tally& t) {
    Rng rng({77, 1});
    for (int i = 0; i < 1000; ++i) {
        static const int sizes[] = {0, 1, 2, 5, 17, 62, 63, 64, 100, 258};
        const int n = i < 10 ? sizes[i] : static_cast<int>(rng.uniform_below(70));
        const Graph g = random_gnp(n, rng.uniform01(), {static_cast<std::uint64_t>(i), 2});
        const auto code = graph6_encode(g);
        t.expect(graph6_decode(code) == g, fmt("graph6 round trip %d (n=%d)", i, n));
        t.expect(graph6_encode(graph6_decode(code)) == code, fmt("graph6 re-encode %d", i));
    }

    const auto dir = std::filesystem::temp_directory_path() / ("erlab_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    const auto manifest = (dir / "manifest.json").string();
    {
        std::ofstream m(manifest);
        m << R"({
  "schema": 1,
  "command": "preset sparse-extract",
  "params": {"q": 3, "host": "C4", "F": "K3", "r": 4, "delta": "1/3"},
  "seeds": [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15],
  "parallelism": 1
})";
    }
    std::string reports[2];
    int codes[2];
    const int jobs[2] = {1, 8};
    for (int i = 0; i < 2; ++i) {
        std::ostringstream out, err;
        codes[i] = cli::run({"run", manifest, "--jobs", std::to_string(jobs[i])}, out, err);
        reports[i] = out.str();
        t.expect(codes[i] == 0, fmt("cli exit %d with --jobs %d: ", codes[i], jobs[i]) + err.str());
    }
    if (codes[0] == 0 && codes[1] == 0)
        t.expect(strip_wall_time(reports[0]) == strip_wall_time(reports[1]), "reports differ between --jobs 1 and 8");
    std::filesystem::remove_all(dir);
    return "1000 graph6 round trips; manifest reports identical (wall_time removed) for --jobs 1 and 8";
}

std::string report_fields(Tally& t) {
    const auto dir = std::filesystem::temp_directory_path() / ("erlab_fields_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    const auto host = (dir / "host.g6").string();
    auto run = [&](const std::vector<std::string>& args) -> cli::Json {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        t.expect(code == 0, args[0] + " " + args[1] + ": exit " + std::to_string(code) + " " + err.str());
        return code == 0 ? cli::Json::parse(out.str()) : cli::Json::object();
    };
    auto present = [&](const cli::Json& j, const std::vector<std::string>& path) {
        const cli::Json* at = &j;
        for (const auto& key : path) {
            if (!at->is_object() || !at->contains(key)) {
                at = nullptr;
                break;
            }
            at = &(*at)[key];
        }
        std::string joined;
        for (const auto& key : path) joined += "/" + key;
        t.expect(at != nullptr && !at->is_null(), "missing field " + joined);
        return at != nullptr && at->is_number() ? at->get<double>() : 0.0;
    };

    const auto sparse = run({"preset", "sparse-extract", "--seeds", "0..3", "--out", host});
    for (const auto& r : sparse.value("results", cli::Json::array())) {
        t.expect(present(r, {"metrics", "reference_curve"}) > 0.0, "sparse reference curve");
        present(r, {"size"});
    }
    const auto recursive = run({"solve", "extract-recursive", "--in", host, "--F", "K3", "--k", "2", "--delta",
                                "9/20", "--s", "3", "--seeds", "0..3"});
    for (const auto& r : recursive.value("results", cli::Json::array())) {
        t.expect(present(r, {"metrics", "reference_curve"}) > 0.0, "recursive reference curve");
        present(r, {"size"});
    }
    const auto dom = run({"solve", "dominate", "--F", "g6:" + graph6_encode(random_regular(40, 12, {5, 5})),
                          "--delta", "0.5", "--trials", "200", "--seeds", "0,1"});
    for (const auto& r : dom.value("results", cli::Json::array())) {
        t.expect(present(r, {"mean_ratio"}) > 0.0, "domination mean ratio");
        present(r, {"delta"});
        present(r, {"mean_size"});
    }
    const auto count = run({"solve", "ffree-count", "--in", host, "--F", "C4", "--q", "3", "--t", "4"});
    for (const auto& r : count.value("results", cli::Json::array())) {
        present(r, {"count"});
        present(r, {"bound"});
        present(r, {"within_bound"});
    }
    std::filesystem::remove_all(dir);
    return "extraction sizes with reference curves, mean |A|/v(F) with delta, F-free counts with bound";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Criterion>> criteria{
        {"unital exactness", unital_exactness},
        {"blow-up K4-freeness", blowup_kr_free},
        {"product inequality for alpha_Ktt", product_inequality},
        {"product identities", product_identities},
        {"oracle equivalence", oracle_equivalence},
        {"f_exact values", f_exact_values},
        {"constructive validity", constructive_validity},
        {"triangle-free blow-up", trianglefree_blowups},
        {"rho recursion arithmetic", rho_chain},
        {"determinism and formats", determinism},
        {"report fields", report_fields},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Tally tally;
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        try {
            detail = criteria[i].second(tally);
        } catch (const std::exception& e) {
            tally.expect(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = tally.failures == 0;
        failed += !pass;
        std::cout << "criterion " << i + 1 << " [" << criteria[i].first << "]: " << (pass ? "PASS" : "FAIL") << " ("
                  << tally.checks << " checks, " << fmt("%.1f s", seconds) << ") " << detail;
        if (!pass) std::cout << " -- " << tally.failures << " failures, first: " << tally.first_failure;
        std::cout << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
