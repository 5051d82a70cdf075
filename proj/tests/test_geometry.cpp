#include "doctest.h"

#include "erlab/errors.hpp"
#include "erlab/finite_geometry.hpp"
#include "erlab/search.hpp"

#include <set>

using namespace erlab;

namespace {

void check_field_axioms(const GaloisField& f, int stride) {
    const int n = f.size();
    for (int x = 0; x < n; ++x) {
        CHECK(f.add(x, 0) == x);
        CHECK(f.mul(x, 1) == x);
        CHECK(f.add(x, f.neg(x)) == 0);
        if (x != 0) CHECK(f.mul(x, f.inv(x)) == 1);
        for (int y = 0; y < n; y += 1) {
            CHECK(f.add(x, y) == f.add(y, x));
            CHECK(f.mul(x, y) == f.mul(y, x));
            for (int z = (x + y) % stride; z < n; z += stride) {
                CHECK(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
                CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
                CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
            }
        }
    }
}

}  // namespace

TEST_CASE("field construction") {
    const GaloisField f2(2);
    CHECK(f2.size() == 4);
    CHECK(f2.poly_b() == 1);
    CHECK(f2.poly_c() == 1);
    for (int x = 1; x < 4; ++x) CHECK(f2.pow(x, 3) == 1);
    // Least (b, c) without a root in GF(3) is x² + 1.
    const GaloisField f3(3);
    CHECK(f3.poly_b() == 0);
    CHECK(f3.poly_c() == 1);
    CHECK_THROWS_AS(GaloisField(4), DomainError);
    CHECK_THROWS_AS(GaloisField(1), DomainError);
    CHECK_THROWS_AS(GaloisField(17), DomainError);
    CHECK_THROWS_AS(f2.inv(0), DomainError);
}

TEST_CASE("field axioms") {
    for (int q : {2, 3, 5}) check_field_axioms(GaloisField(q), 1);
    check_field_axioms(GaloisField(7), 7);
}

TEST_CASE("frobenius and norm") {
    for (int q : {2, 3, 5, 7, 11, 13}) {
        const GaloisField f(q);
        std::map<int, int> fibre;
        for (int x = 0; x < f.size(); ++x) {
            CHECK(f.frobenius(f.frobenius(x)) == x);
            CHECK((f.frobenius(x) == x) == f.in_base_field(x));
            CHECK(f.in_base_field(f.norm(x)));
            if (x != 0) ++fibre[f.norm(x)];
        }
        // N is (q+1)-to-1 from GF(q²)* onto GF(q)*.
        CHECK(static_cast<int>(fibre.size()) == q - 1);
        for (auto [value, count] : fibre) {
            CHECK(value != 0);
            CHECK(count == q + 1);
        }
    }
}

TEST_CASE("projective plane over GF(q²)") {
    const GaloisField f(2);
    const auto pts = projective_points(f);
    CHECK(pts.size() == 21);
    std::set<ProjectivePoint> unique(pts.begin(), pts.end());
    CHECK(unique.size() == 21);
    for (const auto& p : pts) {
        const int last = p[2] != 0 ? 2 : (p[1] != 0 ? 1 : 0);
        CHECK(p[static_cast<std::size_t>(last)] == 1);
    }
}

TEST_CASE("tangent/secant dichotomy") {
    for (int q : {2, 3, 5}) {
        const GaloisField f(q);
        const auto census = hermitian_line_census(f);
        const std::int64_t q3 = q * q * q;
        CHECK(census.size() == 2);
        CHECK(census.at(1) == q3 + 1);
        CHECK(census.at(q + 1) == q3 * q - q3 + q * q);
    }
}

TEST_CASE("Hermitian unital parameters") {
    for (int q : {2, 3, 5}) {
        const auto info = hermitian_unital_info(q);
        const auto& k = info.incidence;
        CHECK(k.y_size() == q * q * q + 1);
        CHECK(k.x_size() == q * q * q * q - q * q * q + q * q);
        for (int x = 0; x < k.x_size(); ++x) CHECK(k.x_neighbours(x).size() == static_cast<std::size_t>(q + 1));
        for (int y = 0; y < k.y_size(); ++y) CHECK(k.y_neighbours(y).size() == static_cast<std::size_t>(q * q));
        CHECK(k.edge_count() == static_cast<std::int64_t>(k.x_size()) * (q + 1));
        CHECK(k.edge_count() == static_cast<std::int64_t>(k.y_size()) * q * q);
        CHECK_FALSE(bipartite_has_c4(k));
        CHECK_FALSE(find_c4_by_x_pairs(k));
        CHECK(info.subdivision_checked == (q <= 3));
        // Two points share exactly one secant.
        for (int y1 = 0; y1 < k.y_size(); ++y1)
            for (int y2 = y1 + 1; y2 < k.y_size(); ++y2) CHECK(k.y_mask(y1).intersection_count(k.y_mask(y2)) == 1);
    }
    const auto k3 = hermitian_unital(3);
    CHECK(k3.edge_count() == 252);
    CHECK_FALSE(has_rooted_k4_subdivision(hermitian_unital(2)));
    CHECK_THROWS_AS(hermitian_unital(4), DomainError);
    CHECK_THROWS_AS(hermitian_unital(11), DomainError);
}

TEST_CASE("largest supported unital") {
    const auto info = hermitian_unital_info(7);
    CHECK(info.incidence.x_size() == 2107);
    CHECK(info.incidence.y_size() == 344);
    CHECK_FALSE(info.warnings.empty());
}
