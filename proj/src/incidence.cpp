#include "erlab/incidence.hpp"

#include "erlab/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>

namespace erlab {

BipartiteIncidence::BipartiteIncidence(int x_size, int y_size) {
    if (x_size < 0 || y_size < 0) throw DomainError("negative part size");
    x_adj_.resize(static_cast<std::size_t>(x_size));
    y_adj_.resize(static_cast<std::size_t>(y_size));
}

BipartiteIncidence::BipartiteIncidence(int x_size, int y_size, const std::vector<std::pair<int, int>>& edges)
    : BipartiteIncidence(x_size, y_size) {
    for (auto [x, y] : edges)
        if (!add_edge(x, y)) throw DomainError("duplicate incidence edge");
}

bool BipartiteIncidence::has_edge(int x, int y) const {
    const auto& row = x_adj_[static_cast<std::size_t>(x)];
    return std::binary_search(row.begin(), row.end(), y);
}

std::int64_t BipartiteIncidence::edge_count() const noexcept {
    std::int64_t e = 0;
    for (const auto& row : x_adj_) e += static_cast<std::int64_t>(row.size());
    return e;
}

bool BipartiteIncidence::add_edge(int x, int y) {
    if (x < 0 || y < 0 || x >= x_size() || y >= y_size()) throw DomainError("incidence edge out of range");
    auto& row = x_adj_[static_cast<std::size_t>(x)];
    auto it = std::lower_bound(row.begin(), row.end(), y);
    if (it != row.end() && *it == y) return false;
    row.insert(it, y);
    auto& col = y_adj_[static_cast<std::size_t>(y)];
    col.insert(std::lower_bound(col.begin(), col.end(), x), x);
    return true;
}

BipartiteIncidence BipartiteIncidence::swapped() const {
    BipartiteIncidence out;
    out.x_adj_ = y_adj_;
    out.y_adj_ = x_adj_;
    return out;
}

Graph BipartiteIncidence::to_graph() const {
    Graph g(x_size() + y_size());
    for (int x = 0; x < x_size(); ++x)
        for (int y : x_neighbours(x)) g.add_edge(x, x_size() + y);
    return g;
}

VertexSet BipartiteIncidence::x_mask(int x) const {
    VertexSet s(y_size());
    for (int y : x_neighbours(x)) s.set(y);
    return s;
}

VertexSet BipartiteIncidence::y_mask(int y) const {
    VertexSet s(x_size());
    for (int x : y_neighbours(y)) s.set(x);
    return s;
}

std::string incidence_encode(const BipartiteIncidence& k) {
    std::string out = "X=" + std::to_string(k.x_size()) + " Y=" + std::to_string(k.y_size()) + "\n";
    for (int x = 0; x < k.x_size(); ++x)
        for (int y : k.x_neighbours(x)) out += std::to_string(x) + " " + std::to_string(y) + "\n";
    return out;
}

BipartiteIncidence incidence_decode(std::string_view text) {
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r' || text[pos] == '\n'))
            ++pos;
    };
    auto read_int = [&]() -> int {
        skip_space();
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{}) throw ParseError("incidence: expected integer", pos);
        pos = static_cast<std::size_t>(ptr - text.data());
        return value;
    };
    auto expect = [&](std::string_view tag) {
        skip_space();
        if (text.substr(pos, tag.size()) != tag) throw ParseError("incidence: expected '" + std::string(tag) + "'", pos);
        pos += tag.size();
    };
    expect("X=");
    const int xs = read_int();
    expect("Y=");
    const int ys = read_int();
    BipartiteIncidence k(xs, ys);
    skip_space();
    while (pos < text.size()) {
        const std::size_t at = pos;
        const int x = read_int();
        const int y = read_int();
        try {
            if (!k.add_edge(x, y)) throw ParseError("incidence: duplicate edge", at);
        } catch (const DomainError& e) {
            throw ParseError(std::string("incidence: ") + e.what(), at);
        }
        skip_space();
    }
    return k;
}

BipartiteIncidence projective_plane_incidence(int p) {
    if (p < 2) throw DomainError("projective plane order must be a prime >= 2");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw DomainError("projective plane order must be prime");
    // Normalized homogeneous triples: last nonzero coordinate equals 1.
    std::vector<std::array<int, 3>> triples;
    for (int z = 0; z < p; ++z)
        for (int y = 0; y < p; ++y)
            for (int x = 0; x < p; ++x) {
                std::array<int, 3> t{x, y, z};
                int last = 2;
                while (last >= 0 && t[static_cast<std::size_t>(last)] == 0) --last;
                if (last >= 0 && t[static_cast<std::size_t>(last)] == 1) triples.push_back(t);
            }
    const int count = static_cast<int>(triples.size());
    BipartiteIncidence k(count, count);
    for (int line = 0; line < count; ++line)
        for (int point = 0; point < count; ++point) {
            const auto& a = triples[static_cast<std::size_t>(line)];
            const auto& b = triples[static_cast<std::size_t>(point)];
            if ((a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) % p == 0) k.add_edge(line, point);
        }
    return k;
}

}  // namespace erlab
