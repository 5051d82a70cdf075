#include "erlab/search.hpp"

#include "erlab/combinatorics.hpp"
#include "erlab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace erlab {

std::vector<int> embedding_order(const Graph& pattern) {
    const int s = pattern.order();
    std::vector<int> order;
    std::vector<bool> placed(static_cast<std::size_t>(s), false);
    std::vector<int> placed_nbrs(static_cast<std::size_t>(s), 0);
    for (int step = 0; step < s; ++step) {
        int best = -1;
        for (int v = 0; v < s; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            if (best < 0) {
                best = v;
                continue;
            }
            const auto key = [&](int u) { return std::pair(placed_nbrs[static_cast<std::size_t>(u)], pattern.degree(u)); };
            if (key(v) > key(best)) best = v;
        }
        placed[static_cast<std::size_t>(best)] = true;
        order.push_back(best);
        pattern.neighbours(best).for_each([&](int u) { ++placed_nbrs[static_cast<std::size_t>(u)]; });
    }
    return order;
}

namespace {

class EmbeddingSearch {
public:
    EmbeddingSearch(const Graph& g, const Graph& f, CopyMode mode, VertexSet allowed, std::uint64_t budget)
        : g_(g), f_(f), mode_(mode), allowed_(std::move(allowed)), budget_(budget), order_(embedding_order(f)),
          map_(static_cast<std::size_t>(f.order()), -1), used_(g.order()) {
        const int s = f.order();
        back_adj_.resize(static_cast<std::size_t>(s));
        back_non_.resize(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < i; ++j) {
                const int a = order_[static_cast<std::size_t>(i)];
                const int b = order_[static_cast<std::size_t>(j)];
                (f.adjacent(a, b) ? back_adj_ : back_non_)[static_cast<std::size_t>(i)].push_back(b);
            }
        // Host vertices whose degree can accommodate each pattern degree.
        const int max_deg = f.max_degree();
        degree_ok_.assign(static_cast<std::size_t>(max_deg + 1), VertexSet(g.order()));
        for (int v = 0; v < g.order(); ++v) {
            const int d = std::min(g.degree(v), max_deg);
            for (int k = 0; k <= d; ++k) degree_ok_[static_cast<std::size_t>(k)].set(v);
        }
    }

    std::uint64_t run(const std::function<bool(const std::vector<int>&)>& visit) {
        visit_ = &visit;
        if (f_.order() > g_.order()) return 0;
        recurse(0);
        return found_;
    }

private:
    bool recurse(std::size_t pos) {
        if (++nodes_ > budget_) throw BudgetError("subgraph search exceeded its node budget");
        if (pos == order_.size()) {
            ++found_;
            return (*visit_)(map_);
        }
        const int u = order_[pos];
        VertexSet cand = allowed_ - used_;
        cand &= degree_ok_[static_cast<std::size_t>(f_.degree(u))];
        for (int b : back_adj_[pos]) cand &= g_.neighbours(map_[static_cast<std::size_t>(b)]);
        if (mode_ == CopyMode::induced)
            for (int b : back_non_[pos]) cand -= g_.neighbours(map_[static_cast<std::size_t>(b)]);
        for (int v = cand.first(); v >= 0; v = cand.next(v)) {
            map_[static_cast<std::size_t>(u)] = v;
            used_.set(v);
            const bool go_on = recurse(pos + 1);
            used_.reset(v);
            map_[static_cast<std::size_t>(u)] = -1;
            if (!go_on) return false;
        }
        return true;
    }

    const Graph& g_;
    const Graph& f_;
    CopyMode mode_;
    VertexSet allowed_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::uint64_t found_ = 0;
    std::vector<int> order_;
    std::vector<std::vector<int>> back_adj_;
    std::vector<std::vector<int>> back_non_;
    std::vector<VertexSet> degree_ok_;
    std::vector<int> map_;
    VertexSet used_;
    const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
};

}  // namespace

std::optional<std::vector<int>> find_copy_within(const Graph& g, const Pattern& f, const VertexSet& within,
                                                 CopyMode mode) {
    std::optional<std::vector<int>> witness;
    EmbeddingSearch search(g, f.graph(), mode, within, kDefaultSearchBudget);
    search.run([&](const std::vector<int>& map) {
        witness = map;
        return false;
    });
    return witness;
}

std::optional<std::vector<int>> contains_subgraph(const Graph& g, const Pattern& f, CopyMode mode) {
    return find_copy_within(g, f, g.vertices(), mode);
}

std::uint64_t for_each_embedding(const Graph& g, const Pattern& f, CopyMode mode,
                                 const std::function<bool(const std::vector<int>&)>& visit, std::uint64_t budget) {
    EmbeddingSearch search(g, f.graph(), mode, g.vertices(), budget);
    return search.run(visit);
}

// ---------------------------------------------------------------------------
// Maximum clique

namespace {

class CliqueSearch {
public:
    CliqueSearch(const Graph& g, int target, std::uint64_t budget) : g_(g), target_(target), budget_(budget) {}

    CliqueResult run(VertexSet candidates) {
        best_size_ = target_ > 0 ? target_ - 1 : 0;
        if (!candidates.empty()) expand(candidates);
        CliqueResult out;
        out.witness = best_;
        std::sort(out.witness.begin(), out.witness.end());
        out.size = static_cast<int>(best_.size());
        out.nodes = nodes_;
        return out;
    }

private:
    void expand(VertexSet& p) {
        if (++nodes_ > budget_) throw BudgetError("clique search exceeded its node budget");
        std::vector<int> order;
        std::vector<int> bound;
        VertexSet uncoloured = p;
        int colour = 0;
        while (!uncoloured.empty()) {
            ++colour;
            VertexSet q = uncoloured;
            for (int v = q.first(); v >= 0; v = q.first()) {
                q.reset(v);
                q -= g_.neighbours(v);
                uncoloured.reset(v);
                order.push_back(v);
                bound.push_back(colour);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (static_cast<int>(current_.size()) + bound[i] <= best_size_) return;
            const int v = order[i];
            current_.push_back(v);
            VertexSet next = p & g_.neighbours(v);
            if (static_cast<int>(current_.size()) > best_size_) {
                best_size_ = static_cast<int>(current_.size());
                best_ = current_;
                if (target_ > 0 && best_size_ >= target_) {
                    done_ = true;
                    return;
                }
            }
            if (!next.empty()) expand(next);
            if (done_) return;
            current_.pop_back();
            p.reset(v);
        }
    }

    const Graph& g_;
    int target_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    int best_size_ = 0;
    bool done_ = false;
    std::vector<int> current_;
    std::vector<int> best_;
};

}  // namespace

CliqueResult clique_number(const Graph& g, std::uint64_t budget) { return clique_number_within(g, g.vertices(), budget); }

CliqueResult clique_number_within(const Graph& g, const VertexSet& within, std::uint64_t budget) {
    return CliqueSearch(g, 0, budget).run(within);
}

std::optional<std::vector<int>> find_clique(const Graph& g, int r, std::uint64_t budget) {
    if (r <= 0) return std::vector<int>{};
    if (r == 1) {
        if (g.order() == 0) return std::nullopt;
        return std::vector<int>{0};
    }
    auto res = CliqueSearch(g, r, budget).run(g.vertices());
    if (res.size < r) return std::nullopt;
    res.witness.resize(static_cast<std::size_t>(r));
    return res.witness;
}

KrFreeResult is_kr_free(const Graph& g, int r, std::uint64_t budget) {
    if (r < 2) throw DomainError("is_kr_free needs r >= 2");
    auto w = find_clique(g, r, budget);
    if (!w) return {};
    return KrFreeResult{false, *w};
}

// ---------------------------------------------------------------------------
// Colouring

namespace {

class ColourSearch {
public:
    ColourSearch(const Graph& g, int k, std::uint64_t budget)
        : g_(g), k_(k), budget_(budget), colour_(static_cast<std::size_t>(g.order()), -1),
          forbidden_(static_cast<std::size_t>(g.order()), std::vector<int>(static_cast<std::size_t>(k), 0)) {}

    std::optional<std::vector<int>> run() {
        if (g_.order() == 0) return std::vector<int>{};
        if (k_ <= 0) return std::nullopt;
        if (assign(0, 0)) return colour_;
        return std::nullopt;
    }

private:
    int saturation(int v) const {
        int s = 0;
        for (int c = 0; c < k_; ++c) s += forbidden_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] > 0;
        return s;
    }

    bool assign(int coloured, int used) {
        if (++nodes_ > budget_) throw BudgetError("colouring search exceeded its node budget");
        if (coloured == g_.order()) return true;
        int pick = -1;
        int pick_sat = -1;
        int pick_deg = -1;
        for (int v = 0; v < g_.order(); ++v) {
            if (colour_[static_cast<std::size_t>(v)] >= 0) continue;
            const int sat = saturation(v);
            int deg = 0;
            g_.neighbours(v).for_each([&](int u) { deg += colour_[static_cast<std::size_t>(u)] < 0; });
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        const int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (forbidden_[static_cast<std::size_t>(pick)][static_cast<std::size_t>(c)] > 0) continue;
            colour_[static_cast<std::size_t>(pick)] = c;
            g_.neighbours(pick).for_each([&](int u) { ++forbidden_[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)]; });
            if (assign(coloured + 1, std::max(used, c + 1))) return true;
            g_.neighbours(pick).for_each([&](int u) { --forbidden_[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)]; });
            colour_[static_cast<std::size_t>(pick)] = -1;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<int> colour_;
    std::vector<std::vector<int>> forbidden_;
};

}  // namespace

std::optional<std::vector<int>> colour_with(const Graph& g, int k, std::uint64_t budget) {
    return ColourSearch(g, k, budget).run();
}

ColouringResult chromatic_number(const Graph& g, std::uint64_t budget) {
    if (g.order() == 0) return {};
    int k = std::max(1, clique_number(g, budget).size);
    while (true) {
        if (auto c = colour_with(g, k, budget)) return ColouringResult{k, *c};
        ++k;
    }
}

SmallSubgraphVerdict every_small_subgraph_colorable(const Graph& g, int s, int r, std::uint64_t budget, RngConfig rng) {
    if (s > g.order()) throw DomainError("subgraph size exceeds graph order");
    if (s < 0 || r < 2) throw DomainError("every_small_subgraph_colorable needs s >= 0 and r >= 2");
    SmallSubgraphVerdict verdict;
    const int colours = r - 1;
    auto check = [&](const std::vector<int>& subset) {
        ++verdict.subsets_checked;
        if (colours >= s) return true;
        if (colour_with(induced(g, subset), colours)) return true;
        verdict.passed = false;
        verdict.counterexample = subset;
        return false;
    };
    if (s <= 12 && binomial_saturating(g.order(), s) <= budget) {
        verdict.exhaustive = true;
        for_each_combination(g.order(), s, check);
    } else {
        Rng gen(rng);
        for (std::uint64_t i = 0; i < budget; ++i)
            if (!check(random_subset(g.order(), s, gen))) break;
    }
    return verdict;
}

// ---------------------------------------------------------------------------
// Bipartite incidence structures

std::optional<BipartiteCycle> find_c4(const BipartiteIncidence& k) {
    const auto ys = static_cast<std::uint64_t>(k.y_size());
    std::unordered_map<std::uint64_t, int> owner;
    for (int x = 0; x < k.x_size(); ++x) {
        const auto& nb = k.x_neighbours(x);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const auto key = static_cast<std::uint64_t>(nb[i]) * ys + static_cast<std::uint64_t>(nb[j]);
                auto [it, inserted] = owner.emplace(key, x);
                if (!inserted) return BipartiteCycle{{it->second, x}, {nb[i], nb[j]}};
            }
    }
    return std::nullopt;
}

std::optional<BipartiteCycle> find_c4_by_x_pairs(const BipartiteIncidence& k) {
    std::vector<VertexSet> masks;
    for (int x = 0; x < k.x_size(); ++x) masks.push_back(k.x_mask(x));
    for (int a = 0; a < k.x_size(); ++a)
        for (int b = a + 1; b < k.x_size(); ++b) {
            const VertexSet common = masks[static_cast<std::size_t>(a)] & masks[static_cast<std::size_t>(b)];
            if (common.count() >= 2) {
                const int y1 = common.first();
                return BipartiteCycle{{a, b}, {y1, common.next(y1)}};
            }
        }
    return std::nullopt;
}

namespace {

/// X-vertices sharing at least one Y-neighbour with each X-vertex.
std::vector<VertexSet> share_graph(const BipartiteIncidence& k) {
    std::vector<VertexSet> share(static_cast<std::size_t>(k.x_size()), VertexSet(k.x_size()));
    for (int y = 0; y < k.y_size(); ++y) {
        const auto& nb = k.y_neighbours(y);
        for (int a : nb)
            for (int b : nb)
                if (a != b) share[static_cast<std::size_t>(a)].set(b);
    }
    return share;
}

std::optional<BipartiteCycle> find_c6_x_side(const BipartiteIncidence& k) {
    const auto share = share_graph(k);
    std::vector<VertexSet> masks;
    for (int x = 0; x < k.x_size(); ++x) masks.push_back(k.x_mask(x));
    for (int x1 = 0; x1 < k.x_size(); ++x1) {
        const auto& s1 = share[static_cast<std::size_t>(x1)];
        for (int x2 = s1.next(x1); x2 >= 0; x2 = s1.next(x2)) {
            const VertexSet s12 = masks[static_cast<std::size_t>(x1)] & masks[static_cast<std::size_t>(x2)];
            const VertexSet third = s1 & share[static_cast<std::size_t>(x2)];
            for (int x3 = third.next(x2); x3 >= 0; x3 = third.next(x3)) {
                const VertexSet s23 = masks[static_cast<std::size_t>(x2)] & masks[static_cast<std::size_t>(x3)];
                const VertexSet s31 = masks[static_cast<std::size_t>(x3)] & masks[static_cast<std::size_t>(x1)];
                for (int a = s12.first(); a >= 0; a = s12.next(a))
                    for (int b = s23.first(); b >= 0; b = s23.next(b)) {
                        if (b == a) continue;
                        for (int c = s31.first(); c >= 0; c = s31.next(c))
                            if (c != a && c != b) return BipartiteCycle{{x1, x2, x3}, {a, b, c}};
                    }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<BipartiteCycle> find_c6(const BipartiteIncidence& k) {
    if (k.y_size() >= k.x_size()) return find_c6_x_side(k);
    auto cyc = find_c6_x_side(k.swapped());
    if (!cyc) return std::nullopt;
    // Swapped cycle x'0 y'0 x'1 y'1 x'2 y'2 reads y'0 x'1 y'1 x'2 y'2 x'0 here.
    return BipartiteCycle{cyc->ys, {cyc->xs[1], cyc->xs[2], cyc->xs[0]}};
}

bool bipartite_has_c4(const BipartiteIncidence& k) { return find_c4(k).has_value(); }
bool bipartite_has_c6(const BipartiteIncidence& k) { return find_c6(k).has_value(); }

namespace {

bool distinct_representatives(const std::vector<VertexSet>& sets, std::size_t i, std::vector<int>& chosen) {
    if (i == sets.size()) return true;
    for (int y = sets[i].first(); y >= 0; y = sets[i].next(y)) {
        if (std::find(chosen.begin(), chosen.end(), y) != chosen.end()) continue;
        chosen.push_back(y);
        if (distinct_representatives(sets, i + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<RootedSubdivision> find_rooted_k4_subdivision(const BipartiteIncidence& k) {
    if (k.x_size() > kSubdivisionMaxX)
        throw BudgetError("rooted K4-subdivision search limited to |X| <= " + std::to_string(kSubdivisionMaxX));
    const auto share = share_graph(k);
    std::vector<VertexSet> masks;
    for (int x = 0; x < k.x_size(); ++x) masks.push_back(k.x_mask(x));
    auto common = [&](int a, int b) { return masks[static_cast<std::size_t>(a)] & masks[static_cast<std::size_t>(b)]; };
    for (int a = 0; a < k.x_size(); ++a) {
        const auto& sa = share[static_cast<std::size_t>(a)];
        for (int b = sa.next(a); b >= 0; b = sa.next(b)) {
            const VertexSet ab = sa & share[static_cast<std::size_t>(b)];
            for (int c = ab.next(b); c >= 0; c = ab.next(c)) {
                const VertexSet abc = ab & share[static_cast<std::size_t>(c)];
                for (int d = abc.next(c); d >= 0; d = abc.next(d)) {
                    const std::vector<VertexSet> sets{common(a, b), common(a, c), common(a, d),
                                                      common(b, c), common(b, d), common(c, d)};
                    std::vector<int> chosen;
                    if (distinct_representatives(sets, 0, chosen)) return RootedSubdivision{{a, b, c, d}, chosen};
                }
            }
        }
    }
    return std::nullopt;
}

bool has_rooted_k4_subdivision(const BipartiteIncidence& k) { return find_rooted_k4_subdivision(k).has_value(); }

}  // namespace erlab
