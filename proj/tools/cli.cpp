#include "cli.hpp"

#include "CLI11.hpp"

#include "erlab/canonical.hpp"
#include "erlab/constructions.hpp"
#include "erlab/domination.hpp"
#include "erlab/errors.hpp"
#include "erlab/finite_geometry.hpp"
#include "erlab/graph_io.hpp"
#include "erlab/parallel.hpp"
#include "erlab/sampling.hpp"
#include "erlab/search.hpp"
#include "erlab/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace erlab::cli {
namespace {

std::string str(std::int64_t v) { return std::to_string(v); }
std::string ustr(std::uint64_t v) { return std::to_string(v); }

Json vertices(const std::vector<int>& v) { return Json(v); }
Json vertices(const VertexSet& s) { return Json(s.to_vector()); }

// ---------------------------------------------------------------------------
// Inputs

struct Input {
    std::optional<Graph> graph;
    std::optional<BipartiteIncidence> incidence;
};

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError({{0, "in", "cannot read " + path}});
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Input decode_input(const std::string& path) {
    const std::string text = read_text(path);
    Input input;
    try {
        if (text.rfind("X=", 0) == 0) {
            input.incidence = incidence_decode(text);
            input.graph = input.incidence->to_graph();
        } else {
            input.graph = read_graph_file(path);
        }
    } catch (const std::exception& e) {
        throw InputError({{0, "in", path + ": " + e.what()}});
    }
    return input;
}

// ---------------------------------------------------------------------------
// Operations

struct Context {
    const ConstructionParams& p;
    const Input& input;
    std::optional<std::uint64_t> budget;

    std::uint64_t budget_or(std::uint64_t fallback) const { return budget.value_or(fallback); }
    const Graph& graph() const { return *input.graph; }
    Pattern pattern(const std::string& name) const { return Pattern::parse(p.text(name)); }
    Rational rational(const std::string& name) const { return parse_rational(p.text(name)); }
};

struct Outcome {
    Json result = Json::object();
    bool verified = false;
    std::optional<Graph> graph;
    std::optional<BipartiteIncidence> incidence;
};

using Runner = std::function<Outcome(const Context&, RngConfig)>;

struct Operation {
    std::string command;
    std::string help;
    std::vector<FieldSpec> fields;
    bool seeded = false;
    Runner run;
};

FieldSpec required(std::string name, FieldType type, std::string help) {
    return {std::move(name), type, Json(), std::move(help)};
}
FieldSpec with_default(std::string name, FieldType type, Json value, std::string help) {
    return {std::move(name), type, std::move(value), std::move(help)};
}
// Optional fields without a default are echoed as null.
FieldSpec optional_field(std::string name, FieldType type, std::string help) {
    return {std::move(name), type, Json("__optional__"), std::move(help)};
}
bool is_optional_marker(const Json& v) { return v.is_string() && v.get<std::string>() == "__optional__"; }

FieldSpec input_field() { return required("in", FieldType::path, "input graph (graph6, edge list or incidence)"); }

std::optional<std::int64_t> maybe(const ConstructionParams& p, const std::string& name) {
    if (!p.has(name)) return std::nullopt;
    return p.integer(name);
}

Json solve_json(const SolveReport& r) {
    Json j;
    j["value"] = str(r.value);
    j["witness"] = vertices(r.witness);
    j["optimal"] = r.optimal;
    j["route"] = r.route;
    j["nodes_explored"] = ustr(r.nodes_explored);
    if (!r.trail.empty()) j["trail"] = r.trail;
    if (!r.metrics.empty()) {
        Json m = Json::object();
        for (const auto& [k, v] : r.metrics) m[k] = v;
        j["metrics"] = m;
    }
    return j;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    bool ok = true;
    s.for_each([&](int v) { ok = ok && !g.neighbours(v).intersects(s); });
    return ok;
}

bool is_clique(const Graph& g, const std::vector<int>& w) {
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b)
            if (!g.adjacent(w[a], w[b])) return false;
    return true;
}

// F-free re-verification of an extracted set; also records the check.
Outcome extraction_outcome(const Graph& g, const Pattern& f, const SolveReport& r) {
    Outcome o;
    o.result = solve_json(r);
    o.result["size"] = str(r.witness.count());
    const bool free = is_ffree(g, f, r.witness);
    o.result["ffree_verified"] = free;
    o.verified = free && r.value == r.witness.count();
    return o;
}

Json blowup_json(const BlowupResult& b, int r) {
    Json j;
    j["order"] = str(b.graph.order());
    j["edges"] = str(b.graph.edge_count());
    j["clique_number"] = str(b.clique_number);
    j["kr_free"] = b.clique_number >= 0 && b.clique_number < r;
    j["provenance_ok"] = b.provenance_ok;
    // Provenance sidecar: for each y, the part of every x in N(y).
    j["plan"] = {{"parts", str(b.plan.parts)}, {"assignment", b.plan.assignment}};
    return j;
}

void require_kr1_free(const Pattern& f, int r) {
    if (r < 2) throw DomainError("r must be at least 2");
    if (const auto c = find_clique(f.graph(), r - 1))
        throw PreconditionError(f.name() + " contains K" + std::to_string(r - 1), *c);
}

Outcome unital_outcome(int q) {
    const auto info = hermitian_unital_info(q);
    const auto& k = info.incidence;
    Outcome o;
    const std::int64_t qq = q;
    const std::int64_t ex = qq * qq * qq * qq - qq * qq * qq + qq * qq;
    const std::int64_t ey = qq * qq * qq + 1;
    bool x_regular = true;
    for (int x = 0; x < k.x_size(); ++x) x_regular = x_regular && static_cast<int>(k.x_neighbours(x).size()) == q + 1;
    bool y_regular = true;
    for (int y = 0; y < k.y_size(); ++y) y_regular = y_regular && static_cast<int>(k.y_neighbours(y).size()) == q * q;
    const bool c4_free = !bipartite_has_c4(k);
    Json& j = o.result;
    j["x_size"] = str(k.x_size());
    j["y_size"] = str(k.y_size());
    j["expected_x_size"] = str(ex);
    j["expected_y_size"] = str(ey);
    j["x_degree"] = str(q + 1);
    j["y_degree"] = str(q * q);
    j["x_regular"] = x_regular;
    j["y_regular"] = y_regular;
    j["edges"] = str(k.edge_count());
    j["c4_free"] = c4_free;
    j["rooted_k4_subdivision_checked"] = info.subdivision_checked;
    if (info.subdivision_checked) j["rooted_k4_subdivision_free"] = true;
    j["warnings"] = info.warnings;
    j["layout"] = "X = secant lines at [0, |X|), Y = curve points after";
    o.verified = k.x_size() == ex && k.y_size() == ey && x_regular && y_regular && c4_free;
    o.incidence = k;
    return o;
}

std::vector<Operation> build_operations() {
    using F = FieldType;
    std::vector<Operation> ops;

    ops.push_back({"construct unital", "secant-line/point incidence of the Hermitian curve",
                   {required("q", F::integer, "prime q <= 7")}, false,
                   [](const Context& c, RngConfig) { return unital_outcome(c.p.small("q")); }});

    ops.push_back({"construct projective-plane", "line/point incidence of PG(2, p)",
                   {required("p", F::integer, "prime p")}, false, [](const Context& c, RngConfig) {
                       Outcome o;
                       const auto k = projective_plane_incidence(c.p.small("p"));
                       o.result["x_size"] = str(k.x_size());
                       o.result["y_size"] = str(k.y_size());
                       o.result["edges"] = str(k.edge_count());
                       const bool c4_free = !bipartite_has_c4(k);
                       o.result["c4_free"] = c4_free;
                       o.verified = c4_free;
                       o.incidence = k;
                       return o;
                   }});

    ops.push_back({"construct blowup", "random blow-up of F inside the point neighbourhoods of the unital",
                   {with_default("q", F::integer, 3, "prime q <= 7"),
                    with_default("F", F::pattern, "C4", "K_(r-1)-free pattern"),
                    with_default("r", F::integer, 4, "clique size that must be absent")},
                   true, [](const Context& c, RngConfig rng) {
                       const Pattern f = c.pattern("F");
                       const int r = c.p.small("r");
                       require_kr1_free(f, r);
                       const auto b = blowup_on_host(hermitian_unital(c.p.small("q")), f, rng,
                                                     c.budget_or(kDefaultSearchBudget));
                       Outcome o;
                       o.result = blowup_json(b, r);
                       o.verified = b.provenance_ok && o.result["kr_free"].get<bool>();
                       o.graph = b.graph;
                       return o;
                   }});

    ops.push_back({"construct c4c6free", "random greedy bipartite graph without C4 and C6",
                   {required("na", F::integer, "size of X"), required("nb", F::integer, "size of Y"),
                    required("edges", F::integer, "target edge count")},
                   true, [](const Context& c, RngConfig rng) {
                       const auto h = generate_c4c6free(c.p.small("na"), c.p.small("nb"), c.p.integer("edges"), rng);
                       Outcome o;
                       const bool c4 = bipartite_has_c4(h.incidence), c6 = bipartite_has_c6(h.incidence);
                       o.result["edges"] = str(h.incidence.edge_count());
                       o.result["target"] = str(h.target);
                       o.result["saturated"] = h.saturated;
                       o.result["c4_free"] = !c4;
                       o.result["c6_free"] = !c6;
                       o.verified = !c4 && !c6;
                       o.incidence = h.incidence;
                       return o;
                   }});

    ops.push_back({"construct trianglefree-blowup", "blow-up of a triangle-free F on a greedy {C4, C6}-free host",
                   {with_default("na", F::integer, 40, "host X size"), with_default("nb", F::integer, 40, "host Y size"),
                    with_default("edges", F::integer, 120, "host target edge count"),
                    with_default("F", F::pattern, "C4", "triangle-free pattern")},
                   true, [](const Context& c, RngConfig rng) {
                       const auto host =
                           generate_c4c6free(c.p.small("na"), c.p.small("nb"), c.p.integer("edges"), rng.child(0));
                       const Pattern f = c.pattern("F");
                       const auto b = trianglefree_blowup(host.incidence, f, rng.child(1), c.budget_or(5'000'000));
                       const bool recheck = is_kr_free(b.graph, 3).free;
                       Outcome o;
                       Json& j = o.result;
                       j["host_edges"] = str(host.incidence.edge_count());
                       j["order"] = str(b.graph.order());
                       j["edges"] = str(b.graph.edge_count());
                       j["triangle_free"] = b.triangle_free && recheck;
                       j["alpha_f_greedy"] = str(b.alpha_f_greedy);
                       j["alpha_f_exact"] = b.alpha_f_exact ? Json(str(*b.alpha_f_exact)) : Json();
                       j["reference_curve"] = b.reference_curve;
                       o.verified = b.triangle_free && recheck;
                       o.graph = b.graph;
                       return o;
                   }});

    ops.push_back({"construct kttfree", "squared recursive construction with small alpha_(K_t,t)",
                   {required("k", F::integer, "clique exponent: output is K_(2^k)-free"),
                    required("i", F::integer, "recursion parameter, 1 <= i <= k/2"),
                    with_default("t", F::integer, 2, "K_t,t side"),
                    with_default("s", F::integer, 4, "subgraph size for the colourability check"),
                    required("n", F::integer, "target order")},
                   true, [](const Context& c, RngConfig rng) {
                       const auto kc = recursive_kttfree(c.p.small("k"), c.p.small("i"), c.p.small("t"),
                                                         c.p.small("s"), c.p.small("n"), rng, c.budget_or(2'000'000));
                       const auto& a = kc.audit;
                       Outcome o;
                       Json& j = o.result;
                       auto opt = [](const auto& v) { return v ? Json(str(*v)) : Json(); };
                       j["order"] = str(a.order);
                       j["inner_order"] = str(a.inner_order);
                       j["r"] = str(a.r);
                       j["p"] = a.p;
                       j["clique_number"] = opt(a.clique_number);
                       j["alpha_ktt_lower"] = str(a.alpha_ktt_lower);
                       j["alpha_ktt_exact"] = opt(a.alpha_ktt_exact);
                       j["alpha_h"] = opt(a.alpha_h);
                       j["alpha_ktt_h"] = opt(a.alpha_ktt_h);
                       j["product_bound"] = opt(a.product_bound);
                       j["product_bound_holds"] = a.product_bound_holds ? Json(*a.product_bound_holds) : Json();
                       j["colourability"] = {{"exhaustive", a.colourability.exhaustive},
                                             {"passed", a.colourability.passed},
                                             {"subsets_checked", ustr(a.colourability.subsets_checked)}};
                       j["notes"] = a.notes;
                       const std::int64_t limit = std::int64_t{1} << c.p.small("k");
                       const bool clique_ok = !a.clique_number || *a.clique_number < limit;
                       o.verified = clique_ok && a.colourability.passed && a.product_bound_holds.value_or(true);
                       o.graph = kc.graph;
                       return o;
                   }});

    ops.push_back({"construct gnp", "Erdos-Renyi random graph",
                   {required("n", F::integer, "order"), required("p", F::number, "edge probability")}, true,
                   [](const Context& c, RngConfig rng) {
                       Outcome o;
                       o.graph = random_gnp(c.p.small("n"), c.p.number("p"), rng);
                       o.result["order"] = str(o.graph->order());
                       o.result["edges"] = str(o.graph->edge_count());
                       o.verified = true;
                       return o;
                   }});

    ops.push_back({"solve alpha-f", "largest F-free induced subgraph",
                   {input_field(), required("F", F::pattern, "forbidden pattern"),
                    with_default("mode", F::text, "exact", "exact or greedy")},
                   true, [](const Context& c, RngConfig rng) {
                       const std::string mode = c.p.text("mode");
                       if (mode != "exact" && mode != "greedy") throw DomainError("mode must be exact or greedy");
                       const Pattern f = c.pattern("F");
                       const auto r = alpha_f(c.graph(), f, mode == "exact" ? SolveMode::exact : SolveMode::greedy, rng,
                                              c.budget_or(kDefaultSearchBudget));
                       return extraction_outcome(c.graph(), f, r);
                   }});

    ops.push_back({"solve f-exact", "minimum alpha_F over all H-free graphs on n vertices",
                   {required("F", F::pattern, "pattern to avoid in the subset"),
                    required("H", F::pattern, "pattern the host must avoid"),
                    required("n", F::integer, "order, at most 9")},
                   false, [](const Context& c, RngConfig) {
                       const Pattern f = c.pattern("F"), h = c.pattern("H");
                       const auto r = f_exact(f, h, c.p.small("n"), c.budget_or(20'000'000));
                       Outcome o;
                       o.result["value"] = str(r.value);
                       o.result["vacuous"] = r.vacuous;
                       o.result["graphs_examined"] = ustr(r.graphs_examined);
                       o.result["deduplicated"] = r.deduplicated;
                       o.result["witness_graph6"] = graph6_encode(r.witness);
                       o.result["witness_edges"] = str(r.witness.edge_count());
                       const bool h_free = !contains_subgraph(r.witness, h).has_value();
                       const auto check = r.witness.order() >= 1 ? alpha_f(r.witness, f, SolveMode::exact).value : 0;
                       o.result["witness_h_free"] = h_free;
                       o.result["witness_alpha_f"] = str(check);
                       o.verified = h_free && (r.vacuous || check == r.value);
                       o.graph = r.witness;
                       return o;
                   }});

    ops.push_back({"solve gamma", "exact s-domination number of F",
                   {required("F", F::pattern, "pattern"), required("s", F::integer, "domination threshold")}, false,
                   [](const Context& c, RngConfig) {
                       const Pattern f = c.pattern("F");
                       const int s = c.p.small("s");
                       const auto r = gamma_s_exact(f, s);
                       Outcome o;
                       o.result["value"] = str(r.value);
                       o.result["witness"] = vertices(r.witness);
                       o.verified = verify_domination(f, r.witness, s) && r.witness.count() == r.value;
                       return o;
                   }});

    ops.push_back({"solve dominate", "randomized s-dominating set, averaged over trials",
                   {required("F", F::pattern, "pattern"), required("delta", F::number, "sampling parameter"),
                    optional_field("s", F::integer, "threshold, default floor(delta*t/3)"),
                    with_default("trials", F::integer, 100, "trials per seed")},
                   true, [](const Context& c, RngConfig rng) {
                       const Pattern f = c.pattern("F");
                       const double delta = c.p.number("delta");
                       std::optional<int> s;
                       if (const auto v = maybe(c.p, "s")) s = static_cast<int>(*v);
                       const auto r = randomized_dominating_set(f, s, delta, rng,
                                                                static_cast<std::uint64_t>(c.p.integer("trials")));
                       Outcome o;
                       Json& j = o.result;
                       j["s"] = str(r.s);
                       j["best_size"] = str(r.set.count());
                       j["best_set"] = vertices(r.set);
                       j["trials"] = ustr(r.trials);
                       j["size_sum"] = ustr(r.size_sum);
                       j["mean_size"] = to_string(r.mean_size);
                       j["mean_ratio"] = to_double(r.mean_size) / f.size();
                       j["delta"] = delta;
                       j["size_variance"] = r.size_variance;
                       j["valid"] = r.valid;
                       o.verified = r.valid && verify_domination(f, r.set, r.s);
                       return o;
                   }});

    ops.push_back({"solve domination-bound", "mean dominating-set ratio on a random t-regular graph",
                   {required("t", F::integer, "degree"), required("order", F::integer, "number of vertices"),
                    with_default("trials", F::integer, 200, "trials")},
                   true, [](const Context& c, RngConfig rng) {
                       const auto r = domination_bound_report(c.p.small("t"), c.p.small("order"),
                                                              static_cast<std::uint64_t>(c.p.integer("trials")), rng);
                       Outcome o;
                       Json& j = o.result;
                       j["delta"] = r.delta;
                       j["s"] = str(r.s);
                       j["trials"] = ustr(r.trials);
                       j["mean_ratio"] = r.mean_ratio;
                       j["standard_error"] = r.standard_error;
                       j["all_valid"] = r.all_valid;
                       j["verdict"] = r.verdict;
                       o.verified = r.all_valid;
                       return o;
                   }});

    ops.push_back({"solve independence", "independence number",
                   {input_field(), with_default("mode", F::text, "exact", "exact or greedy")}, false,
                   [](const Context& c, RngConfig) {
                       const std::string mode = c.p.text("mode");
                       if (mode != "exact" && mode != "greedy") throw DomainError("mode must be exact or greedy");
                       const auto r = independence_number(
                           c.graph(), mode == "exact" ? SolveMode::exact : SolveMode::greedy,
                           c.budget_or(kDefaultSearchBudget));
                       Outcome o;
                       o.result = solve_json(r);
                       o.verified = is_independent(c.graph(), r.witness) && r.witness.count() == r.value;
                       return o;
                   }});

    ops.push_back({"solve clique", "clique number", {input_field()}, false, [](const Context& c, RngConfig) {
                       const auto r = clique_number(c.graph(), c.budget_or(kDefaultSearchBudget));
                       Outcome o;
                       o.result["value"] = str(r.size);
                       o.result["witness"] = vertices(r.witness);
                       o.result["nodes_explored"] = ustr(r.nodes);
                       o.verified = is_clique(c.graph(), r.witness) && static_cast<int>(r.witness.size()) == r.size;
                       return o;
                   }});

    ops.push_back({"solve chromatic", "chromatic number", {input_field()}, false, [](const Context& c, RngConfig) {
                       const Graph& g = c.graph();
                       const auto r = chromatic_number(g, c.budget_or(kDefaultSearchBudget));
                       Outcome o;
                       o.result["value"] = str(r.chromatic_number);
                       o.result["colouring"] = r.colouring;
                       bool proper = static_cast<int>(r.colouring.size()) == g.order();
                       for (const auto& [u, v] : g.edges())
                           proper = proper && r.colouring[static_cast<std::size_t>(u)] !=
                                                  r.colouring[static_cast<std::size_t>(v)];
                       o.verified = proper;
                       return o;
                   }});

    ops.push_back({"solve extract-sparse", "F-free set from a sparse common neighbourhood in a K_r-free graph",
                   {input_field(), required("F", F::pattern, "pattern containing K_(r-2)"),
                    required("r", F::integer, "the host is K_r-free"),
                    required("delta", F::rational, "precision parameter"),
                    optional_field("s", F::integer, "good-set size, default ceil(1/delta)")},
                   true, [](const Context& c, RngConfig rng) {
                       const Pattern f = c.pattern("F");
                       ExtractionOptions opt{c.budget_or(kCountBudget), std::nullopt};
                       if (const auto s = maybe(c.p, "s")) opt.s_override = static_cast<int>(*s);
                       const auto r = extract_ffree_sparse(c.graph(), f, c.p.small("r"), c.rational("delta"), rng, opt);
                       return extraction_outcome(c.graph(), f, r);
                   }});

    ops.push_back({"solve extract-recursive", "F-free set by dense pairs and dependent random choice",
                   {input_field(), required("F", F::pattern, "pattern"),
                    required("k", F::integer, "the host is K_(2^k)-free"),
                    required("delta", F::rational, "precision parameter, below 1/k"),
                    optional_field("s", F::integer, "good-set size, default ceil(1/delta^3)")},
                   true, [](const Context& c, RngConfig rng) {
                       const Pattern f = c.pattern("F");
                       ExtractionOptions opt{c.budget_or(kCountBudget), std::nullopt};
                       if (const auto s = maybe(c.p, "s")) opt.s_override = static_cast<int>(*s);
                       const auto r =
                           extract_ffree_recursive(c.graph(), f, c.p.small("k"), c.rational("delta"), rng, opt);
                       return extraction_outcome(c.graph(), f, r);
                   }});

    ops.push_back({"solve k4free-independent", "independent set in a K4-free graph via common neighbourhoods",
                   {input_field(), with_default("trials", F::integer, 100, "sampled vertex pairs")}, true,
                   [](const Context& c, RngConfig rng) {
                       const auto r = independent_set_k4free(c.graph(), c.p.small("trials"), rng);
                       Outcome o;
                       o.result = solve_json(r);
                       o.verified = is_independent(c.graph(), r.witness) && r.witness.count() == r.value;
                       return o;
                   }});

    ops.push_back({"solve ffree-count", "number of F-free t-sets against (q^(1/(s-1)))^t",
                   {input_field(), required("F", F::pattern, "pattern"), required("q", F::integer, "host parameter"),
                    optional_field("t", F::integer, "set size, default from q")},
                   false, [](const Context& c, RngConfig) {
                       std::optional<int> t;
                       if (const auto v = maybe(c.p, "t")) t = static_cast<int>(*v);
                       const auto r =
                           ffree_count_report(c.graph(), c.pattern("F"), c.p.small("q"), t, c.budget_or(20'000'000));
                       Outcome o;
                       Json& j = o.result;
                       j["s"] = str(r.s);
                       j["t_formula"] = r.t_formula;
                       j["t"] = str(r.t);
                       j["t_clamped"] = r.t_clamped;
                       j["count"] = ustr(r.count);
                       j["bound"] = r.bound;
                       j["within_bound"] = r.within_bound;
                       // The bound is asymptotic; the count is reported, not judged.
                       o.verified = true;
                       return o;
                   }});

    ops.push_back({"solve sparsify", "random sparsification that leaves no F-free t-set",
                   {input_field(), required("F", F::pattern, "pattern"), required("q", F::integer, "host parameter"),
                    required("r", F::integer, "the host is K_r-free"), required("t", F::integer, "set size")},
                   true, [](const Context& c, RngConfig rng) {
                       const auto r = sparsify_skeleton(c.graph(), c.pattern("F"), c.p.small("q"), c.p.small("r"),
                                                        c.p.small("t"), rng, c.budget_or(20'000'000));
                       Outcome o;
                       Json& j = o.result;
                       j["keep_probability"] = r.keep_probability;
                       j["host_order"] = str(r.host_order);
                       j["kept"] = str(r.kept);
                       j["ffree_sets"] = ustr(r.ffree_sets);
                       j["removed"] = str(r.removed);
                       j["order"] = str(r.graph.order());
                       j["kr_free"] = r.kr_free;
                       j["every_t_set_contains_f"] = r.every_t_set_contains_f;
                       o.verified = r.kr_free && r.every_t_set_contains_f;
                       o.graph = r.graph;
                       return o;
                   }});

    ops.push_back({"verify krfree", "checks that the graph has no r-clique",
                   {input_field(), required("r", F::integer, "clique size")}, false,
                   [](const Context& c, RngConfig) {
                       const auto r = is_kr_free(c.graph(), c.p.small("r"), c.budget_or(kDefaultSearchBudget));
                       Outcome o;
                       o.result["free"] = r.free;
                       o.result["witness"] = r.witness;
                       o.verified = r.free;
                       return o;
                   }});

    ops.push_back({"verify ffree", "checks that the graph has no copy of F",
                   {input_field(), required("F", F::pattern, "pattern"), with_default("induced", F::flag, false,
                                                                                      "look for induced copies")},
                   false, [](const Context& c, RngConfig) {
                       const auto copy = contains_subgraph(c.graph(), c.pattern("F"),
                                                           c.p.flag("induced") ? CopyMode::induced
                                                                               : CopyMode::non_induced);
                       Outcome o;
                       o.result["free"] = !copy.has_value();
                       o.result["witness"] = copy ? Json(*copy) : Json::array();
                       o.verified = !copy;
                       return o;
                   }});

    ops.push_back({"verify c4free", "checks a bipartite incidence (or graph) for 4-cycles", {input_field()}, false,
                   [](const Context& c, RngConfig) {
                       Outcome o;
                       if (c.input.incidence) {
                           const auto cyc = find_c4(*c.input.incidence);
                           o.result["free"] = !cyc.has_value();
                           o.result["witness_x"] = cyc ? Json(cyc->xs) : Json::array();
                           o.result["witness_y"] = cyc ? Json(cyc->ys) : Json::array();
                           o.verified = !cyc;
                       } else {
                           const auto copy = contains_subgraph(c.graph(), Pattern::cycle(4));
                           o.result["free"] = !copy.has_value();
                           o.result["witness"] = copy ? Json(*copy) : Json::array();
                           o.verified = !copy;
                       }
                       return o;
                   }});

    ops.push_back({"verify colourable", "every s-vertex subgraph is (r-1)-colourable",
                   {input_field(), required("s", F::integer, "subgraph size"), required("r", F::integer, "clique size"),
                    with_default("samples", F::integer, 20000, "sampled subsets when not exhaustive")},
                   true, [](const Context& c, RngConfig rng) {
                       const auto v = every_small_subgraph_colorable(
                           c.graph(), c.p.small("s"), c.p.small("r"),
                           static_cast<std::uint64_t>(c.p.integer("samples")), rng);
                       Outcome o;
                       o.result["exhaustive"] = v.exhaustive;
                       o.result["passed"] = v.passed;
                       o.result["subsets_checked"] = ustr(v.subsets_checked);
                       o.result["counterexample"] = v.counterexample;
                       o.verified = v.passed;
                       return o;
                   }});

    ops.push_back({"rho", "recursive bound on rho_(2^k) against C/k*(1 - k^(-1/3))",
                   {required("k", F::integer, "exponent, at least 2"),
                    with_default("C", F::rational, "10000", "constant")},
                   false, [](const Context& c, RngConfig) {
                       const auto r = rho_recursion_bound(c.p.small("k"), c.rational("C"));
                       auto interval = [](const RationalInterval& i) {
                           return Json{{"lo", to_string(i.lo)}, {"hi", to_string(i.hi)}, {"approx", to_double(i.lo)}};
                       };
                       Outcome o;
                       Json& j = o.result;
                       j["trivial_branch"] = r.trivial_branch;
                       j["i"] = str(r.i);
                       j["clamped"] = r.clamped;
                       j["bound"] = to_string(r.bound);
                       j["closed_form"] = interval(r.closed_form);
                       j["bound_within_closed_form"] = r.bound_within_closed_form;
                       j["trivial_chain_holds"] = r.trivial_chain_holds;
                       j["rhs"] = interval(r.rhs);
                       j["rhs_lower_bound_holds"] = r.rhs_lower_bound_holds;
                       j["lhs"] = interval(r.lhs);
                       j["step_inequality"] = r.step_inequality ? Json(*r.step_inequality) : Json();
                       o.verified = r.bound_within_closed_form && r.rhs_lower_bound_holds &&
                                    (!r.trivial_branch || r.trivial_chain_holds);
                       return o;
                   }});

    auto host_fields = [](std::vector<FieldSpec> extra) {
        std::vector<FieldSpec> fields{with_default("q", F::integer, 3, "unital parameter"),
                                      with_default("host", F::pattern, "C4", "pattern blown up to build the host")};
        fields.insert(fields.end(), extra.begin(), extra.end());
        return fields;
    };

    ops.push_back({"preset sparse-extract", "unital blow-up host, then sparse-neighbourhood extraction",
                   host_fields({with_default("F", F::pattern, "K3", "pattern for the extracted set"),
                                with_default("r", F::integer, 4, "the host is K_r-free"),
                                with_default("delta", F::rational, "1/3", "precision parameter")}),
                   true, [](const Context& c, RngConfig rng) {
                       const int r = c.p.small("r");
                       const Pattern host_f = c.pattern("host"), f = c.pattern("F");
                       require_kr1_free(host_f, r);
                       const auto b = blowup_on_host(hermitian_unital(c.p.small("q")), host_f, rng.child(0));
                       const auto e = extract_ffree_sparse(b.graph, f, r, c.rational("delta"), rng.child(1),
                                                           {c.budget_or(kCountBudget), std::nullopt});
                       Outcome o = extraction_outcome(b.graph, f, e);
                       o.result["host"] = blowup_json(b, r);
                       o.verified = o.verified && b.provenance_ok && o.result["host"]["kr_free"].get<bool>();
                       o.graph = b.graph;
                       return o;
                   }});

    ops.push_back({"preset recursive-extract", "unital blow-up host, then recursive extraction",
                   host_fields({with_default("F", F::pattern, "K3", "pattern for the extracted set"),
                                with_default("k", F::integer, 2, "the host is K_(2^k)-free"),
                                with_default("delta", F::rational, "9/20", "precision parameter"),
                                with_default("s", F::integer, 3, "good-set size used by the dense-pair search")}),
                   true, [](const Context& c, RngConfig rng) {
                       const int k = c.p.small("k");
                       const int r = 1 << k;
                       const Pattern host_f = c.pattern("host"), f = c.pattern("F");
                       require_kr1_free(host_f, r);
                       const auto b = blowup_on_host(hermitian_unital(c.p.small("q")), host_f, rng.child(0));
                       ExtractionOptions opt{c.budget_or(kCountBudget), std::nullopt};
                       if (const auto s = maybe(c.p, "s")) opt.s_override = static_cast<int>(*s);
                       const auto e = extract_ffree_recursive(b.graph, f, k, c.rational("delta"), rng.child(1), opt);
                       Outcome o = extraction_outcome(b.graph, f, e);
                       o.result["host"] = blowup_json(b, r);
                       o.verified = o.verified && b.provenance_ok && o.result["host"]["kr_free"].get<bool>();
                       o.graph = b.graph;
                       return o;
                   }});

    ops.push_back({"preset blowup-k4", "C4 blow-up on the unital, checked for K4 and edge provenance",
                   {with_default("q", F::integer, 3, "unital parameter"),
                    with_default("F", F::pattern, "C4", "triangle-free pattern")},
                   true, [](const Context& c, RngConfig rng) {
                       const Pattern f = c.pattern("F");
                       require_kr1_free(f, 4);
                       const auto k = hermitian_unital(c.p.small("q"));
                       const auto b = blowup_on_host(k, f, rng, c.budget_or(kDefaultSearchBudget));
                       const auto kr = is_kr_free(b.graph, 4, c.budget_or(kDefaultSearchBudget));
                       const bool audit = audit_blowup(k, f, b.plan, b.graph);
                       Outcome o;
                       o.result = blowup_json(b, 4);
                       o.result["k4_free_recheck"] = kr.free;
                       o.result["k4_witness"] = kr.witness;
                       o.result["provenance_recheck"] = audit;
                       o.verified = b.provenance_ok && audit && kr.free && o.result["kr_free"].get<bool>();
                       o.graph = b.graph;
                       return o;
                   }});

    return ops;
}

const std::vector<Operation>& operations() {
    static const std::vector<Operation> ops = build_operations();
    return ops;
}

const Operation* find_operation(const std::string& command) {
    for (const auto& op : operations())
        if (op.command == command) return &op;
    return nullptr;
}

// ---------------------------------------------------------------------------
// Validation

int line_of(const std::string& source, const std::string& key) {
    if (source.empty()) return 0;
    const auto at = source.find("\"" + key + "\"");
    if (at == std::string::npos) return 0;
    return 1 + static_cast<int>(std::count(source.begin(), source.begin() + static_cast<std::ptrdiff_t>(at), '\n'));
}

const char* type_name(FieldType t) {
    switch (t) {
        case FieldType::integer: return "an integer";
        case FieldType::number: return "a number";
        case FieldType::rational: return "a rational such as \"1/3\"";
        case FieldType::text: return "a string";
        case FieldType::pattern: return "a pattern name such as \"C4\"";
        case FieldType::path: return "a file path";
        case FieldType::flag: return "a boolean";
    }
    return "a value";
}

std::optional<Json> coerce(FieldType type, const Json& v, std::string& why) {
    switch (type) {
        case FieldType::integer:
            if (v.is_number_integer()) return v;
            if (v.is_string()) {
                const auto s = v.get<std::string>();
                std::size_t used = 0;
                try {
                    const auto x = std::stoll(s, &used);
                    if (used == s.size()) return Json(x);
                } catch (const std::exception&) {
                }
            }
            return std::nullopt;
        case FieldType::number:
            if (v.is_number()) return Json(v.get<double>());
            return std::nullopt;
        case FieldType::rational:
            try {
                if (v.is_number_integer()) return Json(to_string(Rational(v.get<std::int64_t>())));
                if (v.is_string()) return Json(to_string(parse_rational(v.get<std::string>())));
            } catch (const std::exception& e) {
                why = e.what();
            }
            return std::nullopt;
        case FieldType::pattern:
            if (!v.is_string()) return std::nullopt;
            try {
                Pattern::parse(v.get<std::string>());
                return v;
            } catch (const std::exception& e) {
                why = e.what();
                return std::nullopt;
            }
        case FieldType::text:
        case FieldType::path:
            if (v.is_string()) return v;
            return std::nullopt;
        case FieldType::flag:
            if (v.is_boolean()) return v;
            return std::nullopt;
    }
    return std::nullopt;
}

ConstructionParams validate_params(const Operation& op, const Json& given, const std::string& source,
                                   std::vector<Diagnostic>& diags) {
    Json out = Json::object();
    if (!given.is_object()) {
        diags.push_back({line_of(source, "params"), "params", "must be an object"});
        return ConstructionParams(out);
    }
    for (auto it = given.begin(); it != given.end(); ++it) {
        const bool known = std::any_of(op.fields.begin(), op.fields.end(),
                                       [&](const FieldSpec& f) { return f.name == it.key(); });
        if (!known) diags.push_back({line_of(source, it.key()), "params." + it.key(), "unknown field"});
    }
    for (const auto& f : op.fields) {
        const auto it = given.find(f.name);
        if (it == given.end() || it->is_null()) {
            if (f.default_value.is_null())
                diags.push_back({line_of(source, "params"), "params." + f.name, "required field missing"});
            out[f.name] = is_optional_marker(f.default_value) ? Json() : f.default_value;
            continue;
        }
        std::string why;
        if (auto v = coerce(f.type, *it, why)) {
            out[f.name] = *v;
        } else {
            diags.push_back({line_of(source, f.name), "params." + f.name,
                             std::string("expected ") + type_name(f.type) + (why.empty() ? "" : ": " + why)});
            out[f.name] = Json();
        }
    }
    return ConstructionParams(out);
}

std::optional<std::uint64_t> parse_seed(const Json& v) {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(v.get<std::int64_t>());
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

void check_seeds(const Operation& op, std::vector<std::uint64_t>& seeds, std::vector<Diagnostic>& diags, int line) {
    if (!op.seeded && !seeds.empty())
        diags.push_back({line, "seeds", op.command + " is deterministic and takes no seeds"});
    if (op.seeded && seeds.empty()) seeds.push_back(0);
}

std::optional<std::uint64_t> budget_from_env() {
    const char* raw = std::getenv("ERLAB_BUDGET");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    const std::string s = raw;
    if (s.find_first_not_of("0123456789") != std::string::npos)
        throw InputError({{0, "ERLAB_BUDGET", "expected a positive integer, got \"" + s + "\""}});
    try {
        const auto v = std::stoull(s);
        if (v == 0) throw std::out_of_range("zero");
        return v;
    } catch (const std::exception&) {
        throw InputError({{0, "ERLAB_BUDGET", "expected a positive integer, got \"" + s + "\""}});
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError({{0, "output", "cannot write " + path}});
    out << content;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

// ---------------------------------------------------------------------------

std::int64_t ConstructionParams::integer(const std::string& name) const { return values_.at(name).get<std::int64_t>(); }
int ConstructionParams::small(const std::string& name) const {
    const auto v = integer(name);
    if (v < -1'000'000'000 || v > 1'000'000'000) throw DomainError(name + " is out of range");
    return static_cast<int>(v);
}
double ConstructionParams::number(const std::string& name) const { return values_.at(name).get<double>(); }
std::string ConstructionParams::text(const std::string& name) const { return values_.at(name).get<std::string>(); }
bool ConstructionParams::flag(const std::string& name) const { return values_.at(name).get<bool>(); }
bool ConstructionParams::has(const std::string& name) const {
    const auto it = values_.find(name);
    return it != values_.end() && !it->is_null();
}

InputError::InputError(std::vector<Diagnostic> diagnostics) : diagnostics_(std::move(diagnostics)) {
    for (const auto& d : diagnostics_) {
        if (!summary_.empty()) summary_ += "; ";
        if (d.line > 0) summary_ += "line " + std::to_string(d.line) + ": ";
        summary_ += d.field + ": " + d.message;
    }
}

std::vector<std::string> command_names() {
    std::vector<std::string> names;
    for (const auto& op : operations()) names.push_back(op.command);
    return names;
}

const std::vector<FieldSpec>& command_fields(const std::string& command) {
    const auto* op = find_operation(command);
    if (op == nullptr) throw InputError({{0, "command", "unknown command \"" + command + "\""}});
    return op->fields;
}

Request parse_manifest(const std::string& source) {
    Json doc;
    try {
        doc = Json::parse(source);
    } catch (const Json::parse_error& e) {
        // byte is 1-based; turn it into a line number.
        const auto upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, source.size());
        const int line = 1 + static_cast<int>(std::count(source.begin(),
                                                         source.begin() + static_cast<std::ptrdiff_t>(upto), '\n'));
        throw InputError({{line, "manifest", e.what()}});
    }
    if (!doc.is_object()) throw InputError({{1, "manifest", "must be a JSON object"}});

    std::vector<Diagnostic> diags;
    static const std::vector<std::string> known{"schema", "command", "params", "inputs",
                                                "output", "report", "seeds",  "parallelism"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            diags.push_back({line_of(source, it.key()), it.key(), "unknown field"});

    if (!doc.contains("schema")) {
        diags.push_back({1, "schema", "required field missing"});
    } else if (!doc["schema"].is_number_integer() || doc["schema"].get<std::int64_t>() != kSchemaVersion) {
        diags.push_back({line_of(source, "schema"), "schema", "unsupported version, expected 1"});
    }

    Request req;
    const Operation* op = nullptr;
    if (!doc.contains("command") || !doc["command"].is_string()) {
        diags.push_back({line_of(source, "command"), "command", "required string missing"});
    } else {
        req.command = doc["command"].get<std::string>();
        op = find_operation(req.command);
        if (op == nullptr) diags.push_back({line_of(source, "command"), "command", "unknown command \"" + req.command + "\""});
    }

    Json params = doc.contains("params") ? doc["params"] : Json::object();
    if (doc.contains("inputs")) {
        const auto& in = doc["inputs"];
        if (!in.is_array() || in.size() > 1 || (in.size() == 1 && !in[0].is_string())) {
            diags.push_back({line_of(source, "inputs"), "inputs", "expected a list with at most one path"});
        } else if (in.size() == 1) {
            if (params.is_object() && params.contains("in"))
                diags.push_back({line_of(source, "inputs"), "inputs", "input given both here and in params.in"});
            else if (params.is_object())
                params["in"] = in[0];
        }
    }
    for (const char* key : {"output", "report"}) {
        if (!doc.contains(key)) continue;
        if (!doc[key].is_string()) {
            diags.push_back({line_of(source, key), key, "expected a path"});
            continue;
        }
        (std::string(key) == "output" ? req.output : req.report) = doc[key].get<std::string>();
    }
    if (doc.contains("seeds")) {
        if (!doc["seeds"].is_array()) {
            diags.push_back({line_of(source, "seeds"), "seeds", "expected a list of non-negative integers"});
        } else {
            for (std::size_t i = 0; i < doc["seeds"].size(); ++i) {
                if (const auto s = parse_seed(doc["seeds"][i]))
                    req.seeds.push_back(*s);
                else
                    diags.push_back({line_of(source, "seeds"), "seeds[" + std::to_string(i) + "]",
                                     "expected a non-negative integer"});
            }
        }
    }
    if (doc.contains("parallelism")) {
        const auto& p = doc["parallelism"];
        if (!p.is_number_integer() || p.get<std::int64_t>() < 1 || p.get<std::int64_t>() > 256)
            diags.push_back({line_of(source, "parallelism"), "parallelism", "expected an integer in [1, 256]"});
        else
            req.jobs = static_cast<int>(p.get<std::int64_t>());
    }
    if (op != nullptr) {
        req.params = validate_params(*op, params, source, diags);
        check_seeds(*op, req.seeds, diags, line_of(source, "seeds"));
    }
    if (!diags.empty()) throw InputError(std::move(diags));
    return req;
}

Json execute(const Request& request) {
    const auto start = std::chrono::steady_clock::now();
    const Operation* op = find_operation(request.command);
    if (op == nullptr) throw InputError({{0, "command", "unknown command \"" + request.command + "\""}});
    const auto budget = budget_from_env();

    Input input;
    if (request.params.has("in")) input = decode_input(request.params.text("in"));

    const Context ctx{request.params, input, budget};
    std::vector<Outcome> outcomes;
    if (op->seeded) {
        outcomes.resize(request.seeds.size());
        parallel_for(request.seeds.size(), request.jobs,
                     [&](std::size_t i) { outcomes[i] = op->run(ctx, RngConfig{request.seeds[i], 0}); });
    } else {
        outcomes.push_back(op->run(ctx, RngConfig{}));
    }

    Json report;
    report["schema"] = kSchemaVersion;
    report["operation"] = request.command;
    report["parameters"] = request.params.json();
    Json seeds = Json::array();
    for (const auto s : request.seeds) seeds.push_back(ustr(s));
    report["seeds"] = seeds;

    Json results = Json::array();
    Json failures = Json::array();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        Json r;
        if (op->seeded) r["seed"] = ustr(request.seeds[i]);
        for (auto it = outcomes[i].result.begin(); it != outcomes[i].result.end(); ++it) r[it.key()] = it.value();
        r["verified"] = outcomes[i].verified;
        if (!outcomes[i].verified) failures.push_back(op->seeded ? Json(ustr(request.seeds[i])) : Json(str(i)));
        results.push_back(std::move(r));
    }
    report["results"] = results;
    const bool passed = failures.empty();
    report["verification"] = {{"passed", passed}, {"failures", failures}};

    Json artifacts = Json::array();
    if (request.output) {
        const bool any = std::any_of(outcomes.begin(), outcomes.end(),
                                     [](const Outcome& o) { return o.graph || o.incidence; });
        if (!any) throw InputError({{0, "output", request.command + " produces no graph artifact"}});
        if (passed) {
            std::string content;
            const bool text_incidence = !ends_with(*request.output, ".g6") && outcomes.size() == 1 &&
                                        outcomes[0].incidence.has_value();
            if (text_incidence) {
                content = incidence_encode(*outcomes[0].incidence);
            } else {
                for (const auto& o : outcomes) {
                    if (o.graph)
                        content += graph6_encode(*o.graph) + "\n";
                    else if (o.incidence)
                        content += graph6_encode(o.incidence->to_graph()) + "\n";
                }
            }
            write_file(*request.output, content);
            artifacts.push_back(*request.output);
        }
    }
    report["artifacts"] = artifacts;
    report["wall_time"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Command line

namespace {

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    std::stringstream ss(text);
    std::string item;
    auto number = [&](const std::string& s) -> std::uint64_t {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw InputError({{0, "--seeds", "bad seed \"" + s + "\""}});
        return std::stoull(s);
    };
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            seeds.push_back(number(item));
            continue;
        }
        const auto lo = number(item.substr(0, dots)), hi = number(item.substr(dots + 2));
        if (hi < lo || hi - lo > 1'000'000) throw InputError({{0, "--seeds", "bad range \"" + item + "\""}});
        for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
    }
    return seeds;
}

Json flag_value(FieldType type, const std::string& raw) {
    switch (type) {
        case FieldType::integer: {
            std::size_t used = 0;
            try {
                const auto v = std::stoll(raw, &used);
                if (used == raw.size()) return Json(v);
            } catch (const std::exception&) {
            }
            return Json(raw);  // rejected by validation with a field diagnostic
        }
        case FieldType::number: {
            std::size_t used = 0;
            try {
                const auto v = std::stod(raw, &used);
                if (used == raw.size()) return Json(v);
            } catch (const std::exception&) {
            }
            return Json(raw);
        }
        case FieldType::flag:
            if (raw == "true" || raw == "1") return Json(true);
            if (raw == "false" || raw == "0") return Json(false);
            return Json(raw);
        default:
            return Json(raw);
    }
}

struct Leaf {
    const Operation* op = nullptr;
    CLI::App* app = nullptr;
    std::map<std::string, std::string> values;
    std::string seeds;
    int jobs = 1;
    std::string out;
    std::string report;
};

int finish(const Json& report, const std::optional<std::string>& report_path, std::ostream& out) {
    const std::string text = dump_report(report);
    if (report_path)
        write_file(*report_path, text);
    else
        out << text;
    return report["verification"]["passed"].get<bool>() ? static_cast<int>(ExitCode::ok)
                                                        : static_cast<int>(ExitCode::verification_failed);
}

void print_diagnostics(const InputError& e, const std::string& source, std::ostream& err) {
    for (const auto& d : e.diagnostics()) {
        err << "error: ";
        if (!source.empty()) err << source << ":";
        if (d.line > 0) err << d.line << ":";
        if (!source.empty() || d.line > 0) err << " ";
        err << d.field << ": " << d.message << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Extremal F-free subset experiments: constructions, solvers and verifiers", "erlab"};
    app.require_subcommand(1);

    std::map<std::string, CLI::App*> groups;
    std::deque<Leaf> leaves;
    for (const auto& op : operations()) {
        const auto space = op.command.find(' ');
        CLI::App* parent = &app;
        std::string name = op.command;
        if (space != std::string::npos) {
            const std::string group = op.command.substr(0, space);
            name = op.command.substr(space + 1);
            if (!groups.count(group)) {
                groups[group] = app.add_subcommand(group, group + " operations");
                groups[group]->require_subcommand(1);
            }
            parent = groups[group];
        }
        Leaf& leaf = leaves.emplace_back();
        leaf.op = &op;
        leaf.app = parent->add_subcommand(name, op.help);
        for (const auto& f : op.fields) {
            std::string help = f.help;
            if (!f.default_value.is_null() && !is_optional_marker(f.default_value))
                help += " (default " + (f.default_value.is_string() ? f.default_value.get<std::string>()
                                                                    : f.default_value.dump()) + ")";
            leaf.app->add_option("--" + f.name, leaf.values[f.name], help);
        }
        if (op.seeded) leaf.app->add_option("--seeds", leaf.seeds, "comma-separated seeds or ranges a..b (default 0)");
        leaf.app->add_option("--jobs", leaf.jobs, "worker threads for seed-level parallelism")->check(CLI::Range(1, 256));
        leaf.app->add_option("--out", leaf.out, "graph artifact path (.g6 for graph6)");
        leaf.app->add_option("--report", leaf.report, "write the JSON report here instead of stdout");
    }

    std::string manifest_path;
    int run_jobs = 0;
    std::string run_report;
    CLI::App* run_cmd = app.add_subcommand("run", "execute a JSON manifest");
    run_cmd->add_option("manifest", manifest_path, "manifest path")->required();
    run_cmd->add_option("--jobs", run_jobs, "override the manifest parallelism")->check(CLI::Range(1, 256));
    run_cmd->add_option("--report", run_report, "override the manifest report path");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::input_error);
    }

    std::string source_name;
    try {
        if (run_cmd->parsed()) {
            source_name = manifest_path;
            std::ifstream in(manifest_path, std::ios::binary);
            if (!in) throw InputError({{0, "manifest", "cannot read " + manifest_path}});
            std::ostringstream buf;
            buf << in.rdbuf();
            Request req = parse_manifest(buf.str());
            source_name.clear();
            // Relative paths in a manifest are taken from its directory.
            const auto base = std::filesystem::path(manifest_path).parent_path();
            auto resolve = [&](const std::string& p) {
                const std::filesystem::path path(p);
                return path.is_absolute() || base.empty() ? p : (base / path).string();
            };
            if (req.params.has("in")) {
                Json params = req.params.json();
                params["in"] = resolve(params["in"].get<std::string>());
                req.params = ConstructionParams(params);
            }
            if (req.output) req.output = resolve(*req.output);
            if (req.report) req.report = resolve(*req.report);
            if (run_jobs > 0) req.jobs = run_jobs;
            if (!run_report.empty()) req.report = run_report;
            return finish(execute(req), req.report, out);
        }

        for (auto& leaf : leaves) {
            if (!leaf.app->parsed()) continue;
            Json params = Json::object();
            for (const auto& f : leaf.op->fields)
                if (leaf.app->count("--" + f.name) > 0) params[f.name] = flag_value(f.type, leaf.values[f.name]);
            std::vector<Diagnostic> diags;
            Request req;
            req.command = leaf.op->command;
            req.params = validate_params(*leaf.op, params, "", diags);
            for (auto& d : diags)
                if (d.field.rfind("params.", 0) == 0) d.field = "--" + d.field.substr(7);
            if (!leaf.seeds.empty()) req.seeds = parse_seed_list(leaf.seeds);
            check_seeds(*leaf.op, req.seeds, diags, 0);
            if (!diags.empty()) throw InputError(std::move(diags));
            req.jobs = leaf.jobs;
            if (!leaf.out.empty()) req.output = leaf.out;
            if (!leaf.report.empty()) req.report = leaf.report;
            return finish(execute(req), req.report, out);
        }
        err << "error: no command given\n";
        return static_cast<int>(ExitCode::input_error);
    } catch (const InputError& e) {
        print_diagnostics(e, source_name, err);
        return static_cast<int>(ExitCode::input_error);
    } catch (const PreconditionError& e) {
        err << "error: precondition failed: " << e.what();
        if (!e.witness().empty()) {
            err << " (witness:";
            for (int v : e.witness()) err << " " << v;
            err << ")";
        }
        err << "\n";
        return static_cast<int>(ExitCode::input_error);
    } catch (const ConstructionError& e) {
        err << "error: construction self-check failed: " << e.what() << "\n";
        return static_cast<int>(ExitCode::verification_failed);
    } catch (const std::logic_error& e) {
        // DomainError, SizeError and argument errors land here too.
        const bool internal = dynamic_cast<const std::domain_error*>(&e) == nullptr &&
                              dynamic_cast<const std::length_error*>(&e) == nullptr &&
                              dynamic_cast<const std::invalid_argument*>(&e) == nullptr &&
                              dynamic_cast<const std::out_of_range*>(&e) == nullptr;
        err << "error: " << e.what() << "\n";
        return static_cast<int>(internal ? ExitCode::verification_failed : ExitCode::input_error);
    } catch (const BudgetError& e) {
        err << "error: budget exceeded: " << e.what() << " (raise ERLAB_BUDGET)\n";
        return static_cast<int>(ExitCode::input_error);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::input_error);
    }
}

}  // namespace erlab::cli
