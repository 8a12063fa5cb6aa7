#pragma once

#include <algorithm>
#include <vector>

#include "leibniz/matrix.hpp"

namespace leibniz {

// Polynomials are coefficient vectors in ascending degree, no trailing zeros.
using Poly = std::vector<Rational>;

inline Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline bool poly_is_zero(const Poly& p) { return poly_trim(p).empty(); }

inline std::size_t poly_degree(const Poly& p) {
    Poly t = poly_trim(p);
    return t.empty() ? 0 : t.size() - 1;
}

inline Rational poly_eval(const Poly& p, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

inline Poly poly_derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * p[i]);
    return poly_trim(d);
}

inline Poly poly_neg(Poly p) {
    for (auto& c : p) c = -c;
    return p;
}

// Euclidean remainder of a by b (b nonzero).
inline Poly poly_rem(Poly a, const Poly& b_in) {
    Poly b = poly_trim(b_in);
    if (b.empty()) throw std::invalid_argument("poly_rem: division by zero polynomial");
    a = poly_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a = poly_trim(a);
    }
    return a;
}

inline Poly poly_monic(Poly p) {
    p = poly_trim(p);
    if (p.empty()) return p;
    Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

inline Poly poly_gcd(Poly a, Poly b) {
    a = poly_trim(a);
    b = poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

// Characteristic polynomial det(tI - M) by the Faddeev-LeVerrier recurrence;
// exact over the rationals.
inline Poly char_poly(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: not square");
    const std::size_t n = m.rows();
    Poly p(n + 1, Rational(0));
    p[n] = 1;
    Matrix acc = m;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational c = -acc.trace() / Rational(static_cast<long>(k));
        p[n - k] = c;
        if (k < n) acc = m * (acc + Matrix::identity(n) * c);
    }
    return p;
}

namespace detail {

inline std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(poly_trim(p));
    Poly d = poly_derivative(p);
    if (!poly_is_zero(d)) chain.push_back(d);
    while (chain.size() >= 2) {
        Poly r = poly_neg(poly_rem(chain[chain.size() - 2], chain.back()));
        if (poly_is_zero(r)) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
    int variations = 0, prev = 0;
    for (const Poly& p : chain) {
        int s = sign(poly_eval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

// Number of distinct real roots in (a, b]; valid for non-squarefree input too.
inline int roots_in(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

inline void isolate_integer_roots(const Poly& g, const std::vector<Poly>& chain,
                                  const Rational& lo, const Rational& hi,
                                  std::vector<BigInt>& out) {
    int count = roots_in(chain, lo, hi);
    if (count == 0) return;
    if (hi - lo < 1) {
        // a half-open interval of width < 1 contains at most one integer
        BigInt k = floor_rational(lo) + 1;
        if (Rational(k) <= hi && poly_eval(g, Rational(k)) == 0) out.push_back(k);
        return;
    }
    Rational mid = (lo + hi) / 2;
    isolate_integer_roots(g, chain, lo, mid, out);
    isolate_integer_roots(g, chain, mid, hi, out);
}

}  // namespace detail

// All rational roots of p (each listed once, ascending). Complete by the
// rational root theorem: after clearing denominators and substituting
// u = lead * t the problem becomes integer roots of a monic integer
// polynomial, which Sturm bisection finds without any factorization.
inline std::vector<Rational> rational_roots(const Poly& p_in) {
    Poly p = poly_trim(p_in);
    if (p.size() <= 1) return {};
    std::vector<Rational> roots;
    std::size_t low = 0;
    while (low < p.size() && p[low] == 0) ++low;
    if (low > 0) {
        roots.push_back(Rational(0));
        p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
    }
    if (p.size() <= 1) return roots;

    BigInt denom_lcm = 1;
    for (const auto& c : p)
        denom_lcm = boost::multiprecision::lcm(denom_lcm, denominator(c));
    std::vector<BigInt> ic(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        ic[i] = numerator(p[i] * Rational(denom_lcm));

    const BigInt lead = ic.back();
    const std::size_t deg = ic.size() - 1;
    // g(u) = lead^(deg-1) * p(u / lead), monic with integer coefficients:
    // the coefficient of u^i is ic[i] * lead^(deg-1-i)
    Poly g(deg + 1);
    g[deg] = 1;
    BigInt power = 1;
    for (std::size_t i = deg; i-- > 0;) {
        g[i] = Rational(ic[i] * power);
        power *= lead;
    }
    BigInt bound = 0;
    for (std::size_t i = 0; i < deg; ++i) {
        BigInt a = boost::multiprecision::abs(numerator(g[i]));
        bound = std::max(bound, a);
    }
    Rational lo = -Rational(bound) - 2;
    Rational hi = Rational(bound) + 2;
    std::vector<BigInt> integer_roots;
    detail::isolate_integer_roots(g, detail::sturm_chain(g), lo, hi, integer_roots);
    for (const BigInt& u : integer_roots) {
        Rational r = Rational(u) / Rational(lead);
        if (r != 0) roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace leibniz
