#include "erlab/canonical.hpp"

#include "erlab/errors.hpp"
#include "erlab/search.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace erlab {

namespace {

using Rows = std::array<std::uint16_t, kCanonicalMaxOrder>;
using Cells = std::vector<std::vector<int>>;

int pair_bits(int n) { return n * (n - 1) / 2; }

std::uint64_t code_for_order(const Rows& rows, int n, const std::vector<int>& order) {
    const int total = pair_bits(n);
    std::uint64_t code = 0;
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((rows[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] >> order[static_cast<std::size_t>(j)]) & 1u)
                code |= std::uint64_t{1} << (total - 1 - k);
    return code;
}

void refine(const Rows& rows, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            std::uint16_t splitter = 0;
            for (int v : cells[s]) splitter |= static_cast<std::uint16_t>(1u << v);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (cells[c].size() < 2) continue;
                std::vector<std::pair<int, int>> keyed;
                for (int v : cells[c])
                    keyed.emplace_back(std::popcount(static_cast<unsigned>(rows[static_cast<std::size_t>(v)] & splitter)), v);
                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                if (keyed.front().first == keyed.back().first) continue;
                Cells pieces;
                for (std::size_t i = 0; i < keyed.size(); ++i) {
                    if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
                    pieces.back().push_back(keyed[i].second);
                }
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
                changed = true;
                break;
            }
        }
    }
}

void search_leaves(const Rows& rows, int n, Cells cells, std::uint64_t& best, bool& have_best) {
    refine(rows, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& cell) { return cell.size() > 1; });
    if (target == cells.end()) {
        std::vector<int> order;
        for (const auto& cell : cells) order.push_back(cell.front());
        const auto code = code_for_order(rows, n, order);
        if (!have_best || code < best) {
            best = code;
            have_best = true;
        }
        return;
    }
    const auto index = static_cast<std::size_t>(target - cells.begin());
    for (int v : cells[index]) {
        Cells next;
        next.reserve(cells.size() + 1);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c != index) {
                next.push_back(cells[c]);
                continue;
            }
            next.push_back({v});
            std::vector<int> rest;
            for (int u : cells[c])
                if (u != v) rest.push_back(u);
            next.push_back(std::move(rest));
        }
        search_leaves(rows, n, std::move(next), best, have_best);
    }
}

Rows rows_of(const Graph& g) {
    Rows rows{};
    for (int v = 0; v < g.order(); ++v)
        g.neighbours(v).for_each([&](int u) { rows[static_cast<std::size_t>(v)] |= static_cast<std::uint16_t>(1u << u); });
    return rows;
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
    if (g.order() > kCanonicalMaxOrder) throw SizeError("adjacency code supports at most 11 vertices");
    std::vector<int> identity(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) identity[static_cast<std::size_t>(v)] = v;
    return code_for_order(rows_of(g), g.order(), identity);
}

std::uint64_t canonical_code(const Graph& g) {
    const int n = g.order();
    if (n > kCanonicalMaxOrder) throw SizeError("canonical code supports at most 11 vertices");
    if (n <= 1) return 0;
    Cells cells(1);
    for (int v = 0; v < n; ++v) cells[0].push_back(v);
    std::uint64_t best = 0;
    bool have_best = false;
    search_leaves(rows_of(g), n, std::move(cells), best, have_best);
    return best;
}

Graph graph_from_code(int n, std::uint64_t code) {
    Graph g(n);
    const int total = pair_bits(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((code >> (total - 1 - k)) & 1u) g.add_edge(i, j);
    return g;
}

std::vector<Graph> enumerate_graphs(int n, const std::optional<Pattern>& forbidden, const EnumerationOptions& options) {
    if (n < 0) throw DomainError("negative order");
    if (n > kCanonicalMaxOrder) throw BudgetError("graph enumeration limited to 11 vertices");
    std::vector<Graph> level{Graph(0)};
    for (int m = 0; m < n; ++m) {
        std::vector<Graph> next;
        std::vector<std::uint64_t> codes;
        std::unordered_set<std::uint64_t> seen;
        for (const auto& g : level) {
            for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
                Graph h(m + 1);
                for (auto [u, v] : g.edges()) h.add_edge(u, v);
                for (int u = 0; u < m; ++u)
                    if ((mask >> u) & 1u) h.add_edge(u, m);
                if (forbidden && forbidden->size() <= m + 1 && contains_subgraph(h, *forbidden)) continue;
                if (options.deduplicate) {
                    const auto code = canonical_code(h);
                    if (!seen.insert(code).second) continue;
                    codes.push_back(code);
                } else {
                    next.push_back(std::move(h));
                }
                if (seen.size() + next.size() > options.level_budget)
                    throw BudgetError("graph enumeration exceeded its per-level budget");
            }
        }
        if (options.deduplicate) {
            std::sort(codes.begin(), codes.end());
            next.clear();
            for (auto code : codes) next.push_back(graph_from_code(m + 1, code));
        }
        level = std::move(next);
    }
    return level;
}

}  // namespace erlab
