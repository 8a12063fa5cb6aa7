#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

namespace leibniz {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    return Rational(std::move(num), std::move(den));
}

inline Rational make_rational(long long num, long long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

// Accepts "p" or "p/q" with optional leading '-' on p; q must be a positive
// integer literal. Result is normalized (gcd(p,q) = 1, q > 0).
inline Rational parse_rational(const std::string& s) {
    const auto fail = [&]() -> Rational {
        throw std::invalid_argument("rational: cannot parse \"" + s + "\"");
    };
    if (s.empty()) return fail();
    std::size_t pos = 0;
    if (s[pos] == '-') ++pos;
    std::size_t digits_begin = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == digits_begin) return fail();
    BigInt num(s.substr(0, pos));
    if (pos == s.size()) return Rational(num);
    if (s[pos] != '/') return fail();
    ++pos;
    std::size_t den_begin = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == den_begin || pos != s.size()) return fail();
    BigInt den(s.substr(den_begin));
    if (den == 0) return fail();
    return Rational(std::move(num), std::move(den));
}

// "p/q" for non-integers, "p" otherwise; inverse of parse_rational.
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline BigInt floor_rational(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

inline int sign(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

}  // namespace leibniz
