#pragma once

#include "erlab/incidence.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace erlab {

bool is_prime(int q);

/// GF(q²) for prime q <= 13, as GF(q)[w]/(w² + b·w + c) with (b, c) the
/// lexicographically least pair for which the quadratic has no root in GF(q).
/// Element a0 + a1·w has index a0 + q·a1, so GF(q) is [0, q).
class GaloisField {
public:
    static constexpr int kMaxPrime = 13;

    explicit GaloisField(int q);

    int q() const noexcept { return q_; }
    int size() const noexcept { return q_ * q_; }
    /// Coefficients of the defining quadratic w² + b·w + c.
    int poly_b() const noexcept { return b_; }
    int poly_c() const noexcept { return c_; }

    int add(int x, int y) const noexcept { return add_[idx(x, y)]; }
    int sub(int x, int y) const noexcept { return add(x, neg(y)); }
    int mul(int x, int y) const noexcept { return mul_[idx(x, y)]; }
    int neg(int x) const noexcept { return neg_[static_cast<std::size_t>(x)]; }
    /// Multiplicative inverse; x must be nonzero.
    int inv(int x) const;
    int pow(int x, std::uint64_t e) const noexcept;
    /// x ↦ x^q, the nontrivial automorphism over GF(q).
    int frobenius(int x) const noexcept { return frob_[static_cast<std::size_t>(x)]; }
    /// N(x) = x^(q+1), an element of GF(q).
    int norm(int x) const noexcept { return mul(x, frobenius(x)); }
    bool in_base_field(int x) const noexcept { return x < q_; }

private:
    std::size_t idx(int x, int y) const noexcept {
        return static_cast<std::size_t>(x) * static_cast<std::size_t>(size()) + static_cast<std::size_t>(y);
    }

    int q_;
    int b_ = 0;
    int c_ = 0;
    std::vector<int> add_, mul_, neg_, inv_, frob_;
};

using ProjectivePoint = std::array<int, 3>;

/// Points of PG(2, q²) with the last nonzero coordinate equal to 1, in the
/// order (x, y, 1) by (y, x), then (x, 1, 0), then (1, 0, 0). Lines use the
/// same list as dual coordinates [a, b, c]: a·x + b·y + c·z = 0.
std::vector<ProjectivePoint> projective_points(const GaloisField& field);

bool on_hermitian_curve(const GaloisField& field, const ProjectivePoint& p);

/// Number of lines of PG(2, q²) meeting the Hermitian curve in k points,
/// keyed by k. The expected census is {1: q³+1, q+1: q⁴−q³+q²}.
std::map<int, std::int64_t> hermitian_line_census(const GaloisField& field);

struct UnitalInfo {
    BipartiteIncidence incidence;
    /// Curve points (Y side) and secant lines (X side) in projective coordinates.
    std::vector<ProjectivePoint> points;
    std::vector<ProjectivePoint> lines;
    bool subdivision_checked = false;
    std::vector<std::string> warnings;
};

inline constexpr int kUnitalMaxPrime = 7;

/// Incidence between the secant lines (X) and the points (Y) of the
/// Hermitian curve in PG(2, q²), q prime <= 7. The part sizes, degrees,
/// C4-freeness, the tangent/secant dichotomy and (for q <= 3) the absence
/// of an X-rooted K4 subdivision are verified before returning; a failed
/// check throws ConstructionError.
UnitalInfo hermitian_unital_info(int q);
BipartiteIncidence hermitian_unital(int q);

}  // namespace erlab
