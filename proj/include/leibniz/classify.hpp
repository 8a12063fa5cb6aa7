#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "leibniz/radicals.hpp"

namespace leibniz {

// Basis-independent invariants, one field per structural computation. Two
// isomorphic algebras always agree on every field; in dimension <= 2 the
// fingerprints of the canonical algebras are pairwise distinct, so agreement
// also pins down the class.
struct Fingerprint {
    std::size_t dim = 0;
    bool lie = false;
    bool left_leibniz = false;
    bool right_leibniz = false;
    std::size_t ker_dim = 0;
    std::size_t left_center_dim = 0;
    std::size_t right_center_dim = 0;
    std::vector<std::size_t> derived_dims;
    std::vector<std::size_t> central_dims;
    bool solvable = false;
    bool nilpotent = false;
    std::size_t radical_dim = 0;
    std::size_t nilradical_dim = 0;
    std::size_t min_gens = 0;

    bool operator==(const Fingerprint&) const = default;
};

// Requires a left Leibniz table; the delegated computations verify their own
// postconditions and throw on anything else.
inline Fingerprint fingerprint(const LeibnizAlgebra& a) {
    Fingerprint f;
    f.dim = a.dim();
    f.lie = is_lie(a);
    f.left_leibniz = is_left_leibniz(a);
    f.right_leibniz = is_right_leibniz(a);
    f.ker_dim = ker_ideal(a).dim();
    f.left_center_dim = left_center(a).dim();
    f.right_center_dim = right_center(a).dim();
    for (const Subspace& t : derived_series(a).terms) f.derived_dims.push_back(t.dim());
    for (const Subspace& t : lower_central_series(a).terms) f.central_dims.push_back(t.dim());
    f.solvable = is_solvable(a);
    f.nilpotent = is_nilpotent(a);
    f.radical_dim = radical(a).dim();
    f.nilradical_dim = nilradical(a).dim();
    f.min_gens = min_generators(a);
    return f;
}

// The complete lists in dimensions 1 and 2, in a fixed order matching
// canonical_names. Basis (a, b) = (e0, e1):
//   a_1, a_2: abelian
//   r_2:  [a,b] = b, [b,a] = -b
//   (i):  [b,b] = a
//   (ii): [b,a] = a, [b,b] = a
inline std::vector<LeibnizAlgebra> canonical_algebras(std::size_t dim) {
    if (dim == 1) return {LeibnizAlgebra(1, {"a"})};
    if (dim != 2) throw std::invalid_argument("canonical_algebras: dimension must be 1 or 2");
    LeibnizAlgebra a2(2, {"a", "b"});
    LeibnizAlgebra r2(2, {"a", "b"});
    r2.set_c(0, 1, 1, Rational(1));
    r2.set_c(1, 0, 1, Rational(-1));
    LeibnizAlgebra l2i(2, {"a", "b"});
    l2i.set_c(1, 1, 0, Rational(1));
    LeibnizAlgebra l2ii(2, {"a", "b"});
    l2ii.set_c(1, 0, 0, Rational(1));
    l2ii.set_c(1, 1, 0, Rational(1));
    return {a2, r2, l2i, l2ii};
}

inline std::vector<std::string> canonical_names(std::size_t dim) {
    if (dim == 1) return {"a_1"};
    if (dim != 2) throw std::invalid_argument("canonical_names: dimension must be 1 or 2");
    return {"a_2", "r_2", "(i)", "(ii)"};
}

struct Classification {
    std::string name;
    std::size_t index = 0;  // into canonical_algebras(dim)
    Matrix iso;             // columns: images of the canonical basis, verified algebra map
};

namespace detail {

// Candidate vectors for the one-parameter searches below. Pairwise
// non-proportional, so a single bad line through the origin rules out at
// most one of them.
inline std::vector<Vec> probe_vectors() {
    Vec e0 = unit_vec(2, 0);
    Vec e1 = unit_vec(2, 1);
    return {e0, e1, vec_add(e0, e1)};
}

// Basis change onto the canonical form of r_2: b' spans [L,L], and a' solves
// [a', b'] = b'. Any solution works; the solver's particular solution keeps
// the construction deterministic.
inline Matrix iso_to_r2(const LeibnizAlgebra& a) {
    Vec w = derived_subalgebra(a).basis().row(0);
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < 2; ++i) cols.push_back(a.bracket(unit_vec(2, i), w));
    auto ap = solve(Matrix::from_columns(cols, 2), w);
    if (!ap) throw std::logic_error("classify: no solution of [x, w] = w in r_2 case");
    return Matrix::from_columns({*ap, w}, 2);
}

// Basis change onto (i): b' is any vector with [b', b'] != 0, and
// a' = [b', b']. The square vanishes only on a line, so one of the three
// probes works.
inline Matrix iso_to_l2i(const LeibnizAlgebra& a) {
    for (const Vec& u : probe_vectors()) {
        Vec s = a.bracket(u, u);
        if (!vec_is_zero(s)) return Matrix::from_columns({s, u}, 2);
    }
    throw std::logic_error("classify: all probes square to zero in (i) case");
}

// Basis change onto (ii): with w spanning [L,L], find u acting on w by a
// nonzero scalar beta, rescale to b' = u / beta, and take a' = [b', b'].
// Each of the two degenerate conditions (beta = 0, a' = 0) cuts out a line,
// so the three probes cannot all fail.
inline Matrix iso_to_l2ii(const LeibnizAlgebra& a) {
    Vec w = derived_subalgebra(a).basis().row(0);
    std::size_t k = 0;
    while (w[k] == 0) ++k;
    for (const Vec& u : probe_vectors()) {
        Vec v = a.bracket(u, w);
        Rational beta = v[k] / w[k];
        if (beta == 0 || v != vec_scale(beta, w)) continue;
        Vec bp = vec_scale(Rational(1) / beta, u);
        Vec ap = a.bracket(bp, bp);
        if (vec_is_zero(ap)) continue;
        return Matrix::from_columns({ap, bp}, 2);
    }
    throw std::logic_error("classify: no probe stabilizes the derived line in (ii) case");
}

}  // namespace detail

// Match against the complete dimension <= 2 lists. The fingerprint picks the
// class; an explicit isomorphism from the canonical form is then constructed
// and verified exactly (invertible algebra map), so the answer carries its
// own certificate. A fingerprint outside the list means the table was not
// left Leibniz or the list is incomplete, both hard errors.
inline Classification classify_dim_le2(const LeibnizAlgebra& a) {
    if (a.dim() < 1 || a.dim() > 2)
        throw std::invalid_argument("classify_dim_le2: dimension must be 1 or 2");
    if (!is_left_leibniz(a)) throw std::invalid_argument("classify_dim_le2: not left Leibniz");

    std::vector<LeibnizAlgebra> canon = canonical_algebras(a.dim());
    std::vector<std::string> names = canonical_names(a.dim());
    Fingerprint fp = fingerprint(a);
    std::size_t idx = canon.size();
    for (std::size_t i = 0; i < canon.size(); ++i) {
        if (fingerprint(canon[i]) == fp) {
            idx = i;
            break;
        }
    }
    if (idx == canon.size()) throw std::logic_error("classify: fingerprint matches no class");

    Matrix t = Matrix::identity(a.dim());
    if (a.dim() == 2) {
        switch (idx) {
            case 0: break;  // abelian: any basis is canonical
            case 1: t = detail::iso_to_r2(a); break;
            case 2: t = detail::iso_to_l2i(a); break;
            default: t = detail::iso_to_l2ii(a); break;
        }
    }
    if (!t.is_invertible() || !is_algebra_map(canon[idx], a, t))
        throw std::logic_error("classify: certificate failed verification");
    return {names[idx], idx, t};
}

}  // namespace leibniz
