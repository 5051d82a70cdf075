#include "erlab/rational.hpp"

#include "erlab/errors.hpp"

#include <cmath>

namespace erlab {

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
    if (digits.empty()) throw ParseError("expected digits in \"" + std::string(whole) + "\"", 0);
    BigInt out = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const char c = digits[i];
        if (c < '0' || c > '9') throw ParseError("unexpected character in \"" + std::string(whole) + "\"", i);
        out = out * 10 + (c - '0');
    }
    return out;
}

BigInt pow_big(BigInt base, BigInt exponent) {
    BigInt out = 1;
    while (exponent > 0) {
        if ((exponent & 1) != 0) out *= base;
        base *= base;
        exponent >>= 1;
    }
    return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    Rational value;
    if (const auto slash = body.find('/'); slash != std::string_view::npos) {
        const BigInt den = parse_integer(body.substr(slash + 1), text);
        if (den == 0) throw DomainError("zero denominator in \"" + std::string(text) + "\"");
        value = Rational(parse_integer(body.substr(0, slash), text), den);
    } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
        const auto frac = body.substr(dot + 1);
        const BigInt whole = dot == 0 ? BigInt(0) : parse_integer(body.substr(0, dot), text);
        const BigInt scale = pow_big(10, frac.size());
        value = Rational(whole) + Rational(frac.empty() ? BigInt(0) : parse_integer(frac, text), scale);
    } else {
        value = Rational(parse_integer(body, text));
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) {
    if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

bool at_least_power(const Rational& lhs, std::int64_t base, const Rational& exponent) {
    if (lhs < 0) return false;
    if (base < 1) throw DomainError("power base must be at least 1");
    const BigInt a = boost::multiprecision::numerator(exponent);
    const BigInt b = boost::multiprecision::denominator(exponent);
    const BigInt p = boost::multiprecision::numerator(lhs);
    const BigInt q = boost::multiprecision::denominator(lhs);
    // (p/q)^b >= base^a
    BigInt left = pow_big(p, b);
    BigInt right = pow_big(q, b);
    if (a >= 0)
        right *= pow_big(BigInt(base), a);
    else
        left *= pow_big(BigInt(base), -a);
    return left >= right;
}

std::int64_t ceil_power(std::int64_t base, const Rational& exponent) {
    const double estimate = std::pow(static_cast<double>(base), to_double(exponent));
    auto m = static_cast<std::int64_t>(std::ceil(estimate));
    if (m < 0) m = 0;
    while (m > 0 && at_least_power(Rational(m - 1), base, exponent)) --m;
    while (!at_least_power(Rational(m), base, exponent)) ++m;
    return m;
}

BigInt floor(const Rational& r) {
    const BigInt n = boost::multiprecision::numerator(r);
    const BigInt d = boost::multiprecision::denominator(r);
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

BigInt ceil(const Rational& r) {
    const BigInt f = floor(r);
    return Rational(f) == r ? f : BigInt(f + 1);
}

}  // namespace erlab
