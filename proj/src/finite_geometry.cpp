#include "erlab/finite_geometry.hpp"

#include "erlab/errors.hpp"
#include "erlab/search.hpp"

namespace erlab {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

GaloisField::GaloisField(int q) : q_(q) {
    if (!is_prime(q)) throw DomainError(std::to_string(q) + " is not prime");
    if (q > kMaxPrime) throw DomainError("field tables limited to q <= 13");
    bool found = false;
    for (int b = 0; b < q && !found; ++b)
        for (int c = 0; c < q && !found; ++c) {
            bool root = false;
            for (int x = 0; x < q && !root; ++x) root = (x * x + b * x + c) % q == 0;
            if (!root) {
                b_ = b;
                c_ = c;
                found = true;
            }
        }
    const int n = size();
    const auto sz = static_cast<std::size_t>(n);
    add_.resize(sz * sz);
    mul_.resize(sz * sz);
    neg_.resize(sz);
    inv_.assign(sz, 0);
    frob_.resize(sz);
    for (int x = 0; x < n; ++x) {
        const int x0 = x % q, x1 = x / q;
        neg_[static_cast<std::size_t>(x)] = (q - x0) % q + q * ((q - x1) % q);
        for (int y = 0; y < n; ++y) {
            const int y0 = y % q, y1 = y / q;
            add_[idx(x, y)] = (x0 + y0) % q + q * ((x1 + y1) % q);
            // (x0 + x1 w)(y0 + y1 w) with w² = -b w - c
            const int w2 = x1 * y1;
            const int c0 = ((x0 * y0 - c_ * w2) % q + q) % q;
            const int c1 = ((x0 * y1 + x1 * y0 - b_ * w2) % q + q) % q;
            mul_[idx(x, y)] = c0 + q * c1;
        }
    }
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y)
            if (mul(x, y) == 1) inv_[static_cast<std::size_t>(x)] = y;
    for (int x = 0; x < n; ++x) frob_[static_cast<std::size_t>(x)] = pow(x, static_cast<std::uint64_t>(q));
}

int GaloisField::inv(int x) const {
    if (x == 0) throw DomainError("zero has no inverse");
    return inv_[static_cast<std::size_t>(x)];
}

int GaloisField::pow(int x, std::uint64_t e) const noexcept {
    int out = 1;
    int base = x;
    while (e > 0) {
        if (e & 1u) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

std::vector<ProjectivePoint> projective_points(const GaloisField& field) {
    const int n = field.size();
    std::vector<ProjectivePoint> out;
    out.reserve(static_cast<std::size_t>(n * n + n + 1));
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) out.push_back({x, y, 1});
    for (int x = 0; x < n; ++x) out.push_back({x, 1, 0});
    out.push_back({1, 0, 0});
    return out;
}

bool on_hermitian_curve(const GaloisField& field, const ProjectivePoint& p) {
    return field.add(field.add(field.norm(p[0]), field.norm(p[1])), field.norm(p[2])) == 0;
}

namespace {

bool incident(const GaloisField& f, const ProjectivePoint& line, const ProjectivePoint& p) {
    return f.add(f.add(f.mul(line[0], p[0]), f.mul(line[1], p[1])), f.mul(line[2], p[2])) == 0;
}

/// For each line, the indices (into `curve`) of curve points on it.
std::vector<std::vector<int>> curve_points_per_line(const GaloisField& f, const std::vector<ProjectivePoint>& lines,
                                                     const std::vector<ProjectivePoint>& curve) {
    std::vector<std::vector<int>> out(lines.size());
    for (std::size_t l = 0; l < lines.size(); ++l)
        for (std::size_t p = 0; p < curve.size(); ++p)
            if (incident(f, lines[l], curve[p])) out[l].push_back(static_cast<int>(p));
    return out;
}

std::vector<ProjectivePoint> curve_points(const GaloisField& f) {
    std::vector<ProjectivePoint> out;
    for (const auto& p : projective_points(f))
        if (on_hermitian_curve(f, p)) out.push_back(p);
    return out;
}

}  // namespace

std::map<int, std::int64_t> hermitian_line_census(const GaloisField& field) {
    const auto lines = projective_points(field);
    std::map<int, std::int64_t> census;
    for (const auto& on : curve_points_per_line(field, lines, curve_points(field))) ++census[static_cast<int>(on.size())];
    return census;
}

UnitalInfo hermitian_unital_info(int q) {
    if (!is_prime(q)) throw DomainError(std::to_string(q) + " is not prime");
    if (q > kUnitalMaxPrime) throw DomainError("unital construction limited to q <= 7");
    const GaloisField f(q);
    const std::int64_t q2 = q * q, q3 = q2 * q, q4 = q3 * q;
    const auto check = [](bool ok, const std::string& what) {
        if (!ok) throw ConstructionError("Hermitian unital: " + what);
    };

    UnitalInfo info;
    info.points = curve_points(f);
    check(static_cast<std::int64_t>(info.points.size()) == q3 + 1, "curve has " + std::to_string(info.points.size()) +
                                                                       " points, expected q^3+1");
    const auto all_lines = projective_points(f);
    const auto on_line = curve_points_per_line(f, all_lines, info.points);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t l = 0; l < all_lines.size(); ++l) {
        const auto k = static_cast<int>(on_line[l].size());
        check(k == 1 || k == q + 1, "a line meets the curve in " + std::to_string(k) + " points");
        if (k != q + 1) continue;
        const int x = static_cast<int>(info.lines.size());
        info.lines.push_back(all_lines[l]);
        for (int y : on_line[l]) edges.emplace_back(x, y);
    }
    info.incidence = BipartiteIncidence(static_cast<int>(info.lines.size()), static_cast<int>(info.points.size()), edges);
    const auto& k = info.incidence;
    check(k.x_size() == q4 - q3 + q2, "secant count differs from q^4-q^3+q^2");
    for (int x = 0; x < k.x_size(); ++x) check(static_cast<int>(k.x_neighbours(x).size()) == q + 1, "line degree != q+1");
    for (int y = 0; y < k.y_size(); ++y) check(static_cast<int>(k.y_neighbours(y).size()) == q2, "point degree != q^2");
    check(!bipartite_has_c4(k), "incidence contains a C4");
    if (q <= 3) {
        check(!has_rooted_k4_subdivision(k), "incidence contains an X-rooted K4 subdivision");
        info.subdivision_checked = true;
    } else {
        info.warnings.push_back("rooted K4-subdivision check skipped for q = " + std::to_string(q));
    }
    return info;
}

BipartiteIncidence hermitian_unital(int q) { return hermitian_unital_info(q).incidence; }

}  // namespace erlab
