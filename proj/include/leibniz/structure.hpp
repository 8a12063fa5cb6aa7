#pragma once

#include <optional>

#include "leibniz/algebra.hpp"

namespace leibniz {

// span{ [u, v] : u in U, v in V } from basis pairs.
inline Subspace product_subspace(const LeibnizAlgebra& a, const Subspace& u, const Subspace& v) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < v.dim(); ++j)
            gens.push_back(a.bracket(u.basis().row(i), v.basis().row(j)));
    return Subspace::span(a.dim(), gens);
}

inline Subspace derived_subalgebra(const LeibnizAlgebra& a) {
    return product_subspace(a, Subspace::full(a.dim()), Subspace::full(a.dim()));
}

// Strictly decreasing chain; the last recorded term repeats under the step
// map. terms[0] = [L,L].
struct Series {
    std::vector<Subspace> terms;
    bool stabilized = false;  // reached a term with step(term) == term (always, given the cap)
    bool reaches_zero() const { return !terms.empty() && terms.back().dim() == 0; }
};

template <typename Step>
inline Series iterate_series(const LeibnizAlgebra& a, Step step) {
    Series s;
    Subspace cur = derived_subalgebra(a);
    s.terms.push_back(cur);
    for (std::size_t guard = 0; guard <= a.dim(); ++guard) {
        Subspace next = step(cur);
        if (next == cur) {
            s.stabilized = true;
            break;
        }
        if (next.dim() >= cur.dim()) throw std::logic_error("series failed to decrease");
        s.terms.push_back(next);
        cur = next;
        if (cur.dim() == 0) {
            s.stabilized = true;
            break;
        }
    }
    return s;
}

inline bool is_ideal(const LeibnizAlgebra& a, const Subspace& u);

inline Series derived_series(const LeibnizAlgebra& a) {
    Series s = iterate_series(a, [&](const Subspace& t) { return product_subspace(a, t, t); });
    for (const Subspace& t : s.terms)
        if (!is_ideal(a, t)) throw std::logic_error("derived series term is not a two-sided ideal");
    return s;
}

// C^1 = [L,L], C^{k+1} = [L, C^k]. Each term is verified to be a two-sided
// ideal and the products to satisfy [C^p, C^q] contained in C^{p+q}.
inline Series lower_central_series(const LeibnizAlgebra& a) {
    Series s = iterate_series(
        a, [&](const Subspace& t) { return product_subspace(a, Subspace::full(a.dim()), t); });
    for (const Subspace& t : s.terms)
        if (!is_ideal(a, t)) throw std::logic_error("central series term is not a two-sided ideal");
    auto term = [&](std::size_t k) {  // C^k, 1-based; constant past stabilization
        return s.terms[std::min(k, s.terms.size()) - 1];
    };
    for (std::size_t p = 1; p <= s.terms.size(); ++p)
        for (std::size_t q = 1; q <= s.terms.size(); ++q)
            if (!term(p + q).contains(product_subspace(a, term(p), term(q))))
                throw std::logic_error("central series fails [C^p,C^q] in C^{p+q}");
    return s;
}

inline bool is_solvable(const LeibnizAlgebra& a) { return derived_series(a).reaches_zero(); }
inline bool is_nilpotent(const LeibnizAlgebra& a) { return lower_central_series(a).reaches_zero(); }
inline bool is_abelian(const LeibnizAlgebra& a) { return derived_subalgebra(a).dim() == 0; }

// 1-based index of the first zero term of the lower central series, counting
// C^1 = [L,L] as index 1; abelian algebras have class 1, the zero algebra 0.
inline std::optional<std::size_t> nilpotency_class(const LeibnizAlgebra& a) {
    if (a.dim() == 0) return 0;
    Series s = lower_central_series(a);
    if (!s.reaches_zero()) return std::nullopt;
    return s.terms.size();
}

// Ker(L) = span{ [x,x] } = span{ [a,b] + [b,a] } (equal by polarization), the
// Leibniz kernel. For a left Leibniz algebra it is a two-sided ideal with
// [Ker, L] = 0; both facts are verified.
inline Subspace ker_ideal(const LeibnizAlgebra& a) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            gens.push_back(vec_add(a.bracket_basis(i, j), a.bracket_basis(j, i)));
    Subspace ker = Subspace::span(a.dim(), gens);
    if (!is_ideal(a, ker)) throw std::logic_error("Ker is not a two-sided ideal");
    if (product_subspace(a, ker, Subspace::full(a.dim())).dim() != 0)
        throw std::logic_error("Ker is not left-central");
    return ker;
}

// Left center: { x : [x,y] = 0 for all y } = intersection of null(r_{e_j}),
// a two-sided ideal.
inline Subspace left_center(const LeibnizAlgebra& a) {
    Subspace z = Subspace::full(a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j)
        z = intersect(z, nullspace(right_mult_matrix(a, unit_vec(a.dim(), j))));
    return z;
}

// Right center: { x : [y,x] = 0 for all y } = intersection of null(l_{e_j}),
// a subalgebra (not an ideal in general).
inline Subspace right_center(const LeibnizAlgebra& a) {
    Subspace z = Subspace::full(a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j)
        z = intersect(z, nullspace(left_mult_matrix(a, unit_vec(a.dim(), j))));
    return z;
}

inline Subspace center(const LeibnizAlgebra& a) {
    return intersect(left_center(a), right_center(a));
}

inline bool is_subalgebra(const LeibnizAlgebra& a, const Subspace& u) {
    return u.contains(product_subspace(a, u, u));
}

inline bool is_left_ideal(const LeibnizAlgebra& a, const Subspace& u) {
    return u.contains(product_subspace(a, Subspace::full(a.dim()), u));
}

inline bool is_right_ideal(const LeibnizAlgebra& a, const Subspace& u) {
    return u.contains(product_subspace(a, u, Subspace::full(a.dim())));
}

inline bool is_ideal(const LeibnizAlgebra& a, const Subspace& u) {
    return is_left_ideal(a, u) && is_right_ideal(a, u);
}

// { x : [x, U] contained in U }, the largest subspace left-multiplying U into
// itself. For a subalgebra U this contains U.
inline Subspace left_normalizer(const LeibnizAlgebra& a, const Subspace& u) {
    // condition on x: proj_{L/U}( l_x u_i ) = 0 for each basis vector u_i;
    // as a linear condition on x with u_i fixed: row (k', i) coefficient of
    // x_m is (P l_{e_m} u_i)_{k'}.
    const std::size_t n = a.dim();
    QuotientData q = quotient_data(u);
    const std::size_t rows = q.projection.rows() * u.dim();
    if (rows == 0) return Subspace::full(n);
    Matrix sys(rows, n);
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t i = 0; i < u.dim(); ++i) {
            Vec w = q.projection.apply(a.bracket(unit_vec(n, m), u.basis().row(i)));
            for (std::size_t kp = 0; kp < w.size(); ++kp) sys(kp * u.dim() + i, m) = w[kp];
        }
    }
    return nullspace(sys);
}

// { x : [U, x] contained in U }, the mirror of left_normalizer.
inline Subspace right_normalizer(const LeibnizAlgebra& a, const Subspace& u) {
    const std::size_t n = a.dim();
    QuotientData q = quotient_data(u);
    const std::size_t rows = q.projection.rows() * u.dim();
    if (rows == 0) return Subspace::full(n);
    Matrix sys(rows, n);
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t i = 0; i < u.dim(); ++i) {
            Vec w = q.projection.apply(a.bracket(u.basis().row(i), unit_vec(n, m)));
            for (std::size_t kp = 0; kp < w.size(); ++kp) sys(kp * u.dim() + i, m) = w[kp];
        }
    }
    return nullspace(sys);
}

// Smallest subalgebra containing U: close the span under bracketing.
inline Subspace subalgebra_closure(const LeibnizAlgebra& a, const Subspace& u) {
    Subspace cur = u;
    for (;;) {
        Subspace next = sum(cur, product_subspace(a, cur, cur));
        if (next == cur) return cur;
        cur = next;
    }
}

// Smallest two-sided ideal containing U.
inline Subspace ideal_closure(const LeibnizAlgebra& a, const Subspace& u) {
    Subspace cur = u;
    Subspace full = Subspace::full(a.dim());
    for (;;) {
        Subspace next = sum(cur, sum(product_subspace(a, full, cur), product_subspace(a, cur, full)));
        if (next == cur) return cur;
        cur = next;
    }
}

inline bool generates(const LeibnizAlgebra& a, const Subspace& u) {
    return subalgebra_closure(a, u).dim() == a.dim();
}

// Minimal generator count, dim L - dim [L,L]. Elements of [L,L] are
// non-generators, so no generating set beats a basis of a complement of
// [L,L]; whether every such complement generates is a separate question
// (it can fail outside the nilpotent case), so only the count is reported.
inline std::size_t min_generators(const LeibnizAlgebra& a) {
    return a.dim() - derived_subalgebra(a).dim();
}

struct NotAnIdeal : std::runtime_error {
    explicit NotAnIdeal(const std::string& what) : std::runtime_error(what) {}
};

// Quotient L/I with the projection and a linear section recorded; the
// subspace must be a two-sided ideal.
struct QuotientAlgebra {
    LeibnizAlgebra algebra;
    Matrix projection;  // (n-d) x n
    Matrix section;     // n x (n-d)
};

inline QuotientAlgebra quotient(const LeibnizAlgebra& a, const Subspace& ideal,
                                const std::string& name_prefix = "q") {
    if (!is_ideal(a, ideal)) throw NotAnIdeal("quotient: subspace is not a two-sided ideal");
    QuotientData q = quotient_data(ideal);
    const std::size_t m = q.projection.rows();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) names.push_back(name_prefix + std::to_string(i));
    LeibnizAlgebra out(m, names);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            out.set_bracket(i, j,
                            q.projection.apply(a.bracket(q.section.column(i), q.section.column(j))));
    if (!is_algebra_map(a, out, q.projection))
        throw std::logic_error("quotient: projection is not an algebra map");
    return {out, q.projection, q.section};
}

// L* = L / Ker(L): the liezation, a Lie algebra when L is left Leibniz.
inline QuotientAlgebra liezation(const LeibnizAlgebra& a) {
    QuotientAlgebra q = quotient(a, ker_ideal(a), "l");
    if (is_left_leibniz(a) && !is_lie(q.algebra))
        throw std::logic_error("liezation: quotient is not Lie");
    return q;
}

// Restriction of the bracket to a subalgebra, in the coordinates of its
// reduced basis.
inline LeibnizAlgebra restrict_to_subalgebra(const LeibnizAlgebra& a, const Subspace& u,
                                             const std::string& name_prefix = "s") {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < u.dim(); ++i) names.push_back(name_prefix + std::to_string(i));
    LeibnizAlgebra out(u.dim(), names);
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < u.dim(); ++j) {
            auto coords = u.coordinates(a.bracket(u.basis().row(i), u.basis().row(j)));
            if (!coords) throw std::invalid_argument("restrict_to_subalgebra: not closed");
            out.set_bracket(i, j, *coords);
        }
    return out;
}

}  // namespace leibniz
