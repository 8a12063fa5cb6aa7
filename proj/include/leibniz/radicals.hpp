#pragma once

#include "leibniz/polynomial.hpp"
#include "leibniz/structure.hpp"

namespace leibniz {

struct NotLie : std::runtime_error {
    explicit NotLie(const std::string& what) : std::runtime_error(what) {}
};

struct NilradicalUnverified : std::runtime_error {
    explicit NilradicalUnverified(const std::string& what) : std::runtime_error(what) {}
};

struct NotEngelNilpotent : std::runtime_error {
    explicit NotEngelNilpotent(const std::string& what) : std::runtime_error(what) {}
};

struct NotSplitOverField : std::runtime_error {
    explicit NotSplitOverField(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// {x : tr(l_x l_c) = 0 for all c in the given subspace}.
inline Subspace trace_form_orthogonal(const LeibnizAlgebra& a, const Subspace& against) {
    const std::size_t n = a.dim();
    std::vector<Matrix> l(n);
    for (std::size_t j = 0; j < n; ++j) l[j] = left_mult_matrix(a, unit_vec(n, j));
    Matrix sys(against.dim() == 0 ? 1 : against.dim(), n);
    for (std::size_t i = 0; i < against.dim(); ++i) {
        Matrix lc = left_mult_matrix(a, against.basis().row(i));
        for (std::size_t j = 0; j < n; ++j) sys(i, j) = (l[j] * lc).trace();
    }
    return nullspace(sys);
}

inline bool subspace_nilpotent(const LeibnizAlgebra& a, const Subspace& u) {
    return is_nilpotent(restrict_to_subalgebra(a, u));
}

inline bool subspace_solvable(const LeibnizAlgebra& a, const Subspace& u) {
    return is_solvable(restrict_to_subalgebra(a, u));
}

}  // namespace detail

// Radical of a Lie algebra: the orthogonal complement of [L,L] under the
// Killing form (characteristic zero). Verified to be a solvable ideal whose
// every strict ideal-enlargement by a basis vector is non-solvable.
inline Subspace lie_radical(const LeibnizAlgebra& a) {
    if (!is_lie(a)) throw NotLie("lie_radical requires a Lie algebra");
    Subspace rad = detail::trace_form_orthogonal(a, derived_subalgebra(a));
    if (!is_ideal(a, rad) || !detail::subspace_solvable(a, rad))
        throw std::logic_error("lie_radical: candidate is not a solvable ideal");
    QuotientData q = quotient_data(rad);
    for (std::size_t c : q.complement_cols) {
        Subspace bigger = ideal_closure(a, sum(rad, Subspace::span(a.dim(), {unit_vec(a.dim(), c)})));
        if (detail::subspace_solvable(a, bigger))
            throw std::logic_error("lie_radical: candidate is not maximal");
    }
    return rad;
}

// Radical of a left Leibniz algebra: preimage under the liezation projection
// of the radical of L*. Solvability is closed under extensions, so this is
// the largest solvable ideal.
inline Subspace radical(const LeibnizAlgebra& a) {
    QuotientAlgebra star = liezation(a);
    Subspace rad_star = lie_radical(star.algebra);
    Subspace rad = preimage(star.projection, rad_star);
    if (!is_ideal(a, rad) || !detail::subspace_solvable(a, rad))
        throw std::logic_error("radical: preimage is not a solvable ideal");
    if (!rad.contains(ker_ideal(a))) throw std::logic_error("radical: does not contain Ker");
    return rad;
}

namespace detail {

// Associative (non-unital) matrix algebra generated by the given operators:
// the span of all nonempty products, grown to a fixed point.
inline Subspace operator_algebra(const std::vector<Matrix>& gens, std::size_t n) {
    std::vector<Vec> seed;
    for (const Matrix& g : gens) seed.push_back(g.to_vec());
    Subspace alg = Subspace::span(n * n, seed);
    for (;;) {
        std::vector<Vec> products;
        for (const Matrix& g : gens)
            for (std::size_t i = 0; i < alg.dim(); ++i)
                products.push_back((g * Matrix::from_vec(alg.basis().row(i), n, n)).to_vec());
        Subspace next = sum(alg, Subspace::span(n * n, products));
        if (next == alg) return alg;
        alg = next;
    }
}

}  // namespace detail

// Nilradical (largest nilpotent ideal) of a left Leibniz algebra. The
// liezation preimage of the nilradical of L* can fail to be nilpotent, so
// instead: N = {x in R : l_x lies in the trace-form radical of the
// associative operator algebra generated by left multiplications of R}. The
// candidate is then verified to be a nilpotent two-sided ideal and probed for
// maximality; any mismatch raises NilradicalUnverified rather than returning
// a wrong answer.
inline Subspace nilradical(const LeibnizAlgebra& a) {
    const std::size_t n = a.dim();
    Subspace rad = radical(a);
    Subspace cand = Subspace::zero(n);
    if (rad.dim() > 0) {
        std::vector<Matrix> gens;
        for (std::size_t i = 0; i < rad.dim(); ++i)
            gens.push_back(left_mult_matrix(a, rad.basis().row(i)));
        Subspace op_alg = detail::operator_algebra(gens, n);
        const std::size_t m = op_alg.dim();
        Subspace j_coords(m);
        if (m > 0) {
            Matrix gram(m, m);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t k = 0; k < m; ++k)
                    gram(i, k) = (Matrix::from_vec(op_alg.basis().row(i), n, n) *
                                  Matrix::from_vec(op_alg.basis().row(k), n, n))
                                     .trace();
            j_coords = nullspace(gram);
        }
        // x = sum t_i r_i is in N iff the op-algebra coordinates of l_x lie in J
        Matrix cond(m == 0 ? 1 : m, rad.dim());
        for (std::size_t i = 0; i < rad.dim(); ++i) {
            auto coords = op_alg.coordinates(gens[i].to_vec());
            if (!coords) throw std::logic_error("nilradical: generator escapes operator algebra");
            for (std::size_t k = 0; k < m; ++k) cond(k, i) = (*coords)[k];
        }
        Subspace t_space =
            m == 0 ? Subspace::full(rad.dim()) : preimage(cond, j_coords);
        std::vector<Vec> vectors;
        for (std::size_t i = 0; i < t_space.dim(); ++i) {
            Vec x = vec_zero(n);
            for (std::size_t k = 0; k < rad.dim(); ++k)
                x = vec_add(x, vec_scale(t_space.basis()(i, k), rad.basis().row(k)));
            vectors.push_back(x);
        }
        cand = Subspace::span(n, vectors);
    }

    if (!cand.contains(ker_ideal(a)))
        throw NilradicalUnverified("nilradical candidate misses Ker");
    if (!rad.contains(cand)) throw NilradicalUnverified("nilradical candidate escapes the radical");
    if (!is_ideal(a, cand)) throw NilradicalUnverified("nilradical candidate is not an ideal");
    if (!detail::subspace_nilpotent(a, cand))
        throw NilradicalUnverified("nilradical candidate is not nilpotent");

    // maximality probes: enlarging by any canonical complement vector (or a
    // fixed set of its rational combinations) must break nilpotency
    QuotientData q = quotient_data(cand);
    std::vector<Vec> probes;
    for (std::size_t c : q.complement_cols) probes.push_back(unit_vec(n, c));
    for (std::size_t i = 0; i < q.complement_cols.size(); ++i)
        for (std::size_t k = i + 1; k < q.complement_cols.size(); ++k)
            probes.push_back(vec_add(unit_vec(n, q.complement_cols[i]),
                                     unit_vec(n, q.complement_cols[k])));
    if (cand.dim() > 0)
        for (std::size_t c : q.complement_cols) {
            probes.push_back(vec_add(unit_vec(n, c), cand.basis().row(0)));
            probes.push_back(vec_sub(unit_vec(n, c), cand.basis().row(0)));
        }
    for (const Vec& p : probes) {
        Subspace bigger = ideal_closure(a, sum(cand, Subspace::span(n, {p})));
        if (detail::subspace_nilpotent(a, bigger))
            throw NilradicalUnverified("nilradical candidate is not maximal");
    }
    return cand;
}

// The proof-gap probe: the liezation preimage of nilradical(L*), which the
// computed nilradical is checked against. On L2ii-like inputs the preimage is
// strictly larger and fails nilpotency.
struct NilradicalPreimageProbe {
    Subspace preimage;
    bool preimage_nilpotent = false;
    bool matches_nilradical = false;
};

inline NilradicalPreimageProbe nilradical_preimage_probe(const LeibnizAlgebra& a,
                                                         const Subspace& nilrad) {
    QuotientAlgebra star = liezation(a);
    Subspace n_star = nilradical(star.algebra);
    Subspace pre = preimage(star.projection, n_star);
    bool nilp = detail::subspace_nilpotent(a, pre);
    bool matches = pre == nilrad;
    return NilradicalPreimageProbe{std::move(pre), nilp, matches};
}

struct RadicalChecks {
    bool radical_is_ideal = false;
    bool radical_solvable = false;
    bool radical_contains_ker = false;
    bool nilradical_is_ideal = false;
    bool nilradical_nilpotent = false;
    bool nilradical_in_radical = false;
    bool nilradical_contains_ker = false;
    bool left_center_in_nilradical = false;
    bool right_center_in_nilradical = false;
    bool bracket_full_radical_in_nilradical = false;
    bool bracket_radical_radical_in_nilradical = false;
    bool derived_radical_nilpotent = false;
};

struct RadicalReport {
    Subspace radical;
    Subspace nilradical;
    RadicalChecks checks;
};

// Assembles radical and nilradical together with the inclusion record. Every
// flag is computed, not assumed; in particular right_center_in_nilradical is
// false on some algebras (L2ii) and reported as such.
inline RadicalReport radical_report(const LeibnizAlgebra& a) {
    RadicalReport rep{radical(a), nilradical(a), {}};
    const Subspace& r = rep.radical;
    const Subspace& nil = rep.nilradical;
    Subspace ker = ker_ideal(a);
    rep.checks.radical_is_ideal = is_ideal(a, r);
    rep.checks.radical_solvable = detail::subspace_solvable(a, r);
    rep.checks.radical_contains_ker = r.contains(ker);
    rep.checks.nilradical_is_ideal = is_ideal(a, nil);
    rep.checks.nilradical_nilpotent = detail::subspace_nilpotent(a, nil);
    rep.checks.nilradical_in_radical = r.contains(nil);
    rep.checks.nilradical_contains_ker = nil.contains(ker);
    rep.checks.left_center_in_nilradical = nil.contains(left_center(a));
    rep.checks.right_center_in_nilradical = nil.contains(right_center(a));
    Subspace lr = product_subspace(a, Subspace::full(a.dim()), r);
    Subspace rr = product_subspace(a, r, r);
    rep.checks.bracket_full_radical_in_nilradical = nil.contains(lr);
    rep.checks.bracket_radical_radical_in_nilradical = nil.contains(rr);
    rep.checks.derived_radical_nilpotent = detail::subspace_nilpotent(a, rr);
    return rep;
}

namespace detail {

inline Matrix induced_operator(const Matrix& op, const QuotientData& q) {
    return q.projection * op * q.section;
}

// Basis of the ambient space adapted to the derived series, deepest term
// first; the characteristic polynomials of these generators drive the flag
// eigenvector searches.
inline std::vector<Vec> derived_adapted_generators(const LeibnizAlgebra& a) {
    Series ds = derived_series(a);
    std::vector<Subspace> chain;  // increasing, ending at the full space
    chain.push_back(Subspace::full(a.dim()));
    for (const Subspace& t : ds.terms)
        if (t.dim() > 0 && t.dim() < chain.back().dim()) chain.push_back(t);
    std::vector<Vec> gens;
    std::vector<bool> used(a.dim(), false);
    for (std::size_t idx = chain.size(); idx-- > 0;) {
        const Subspace& t = chain[idx];
        for (std::size_t i = 0; i < t.dim(); ++i) {
            if (used[t.pivots()[i]]) continue;
            used[t.pivots()[i]] = true;
            gens.push_back(t.basis().row(i));
        }
    }
    return gens;
}

// DFS over rational eigenvalues (largest first) of the generator operators,
// intersecting eigenspaces; returns a nonzero joint eigenspace or nothing.
inline std::optional<Subspace> common_eigenspace(const std::vector<Matrix>& ops, std::size_t t,
                                                 const Subspace& w) {
    if (w.dim() == 0) return std::nullopt;
    if (t == ops.size()) return w;
    std::vector<Rational> vals = rational_roots(char_poly(ops[t]));
    for (std::size_t i = vals.size(); i-- > 0;) {
        Matrix shifted = ops[t] - Matrix::identity(ops[t].rows()) * vals[i];
        auto found = common_eigenspace(ops, t + 1, intersect(w, nullspace(shifted)));
        if (found) return found;
    }
    return std::nullopt;
}

}  // namespace detail

// Complete flag invariant under all left multiplications, with every l_x
// strictly upper triangular in the adapted basis. Requires every l_{e_i}
// nilpotent; the flag steps take the lexicographically first canonical basis
// vector of the joint kernel in quotient coordinates.
inline Flag engel_flag(const LeibnizAlgebra& a) {
    const std::size_t n = a.dim();
    std::vector<Matrix> l(n);
    for (std::size_t i = 0; i < n; ++i) {
        l[i] = left_mult_matrix(a, unit_vec(n, i));
        if (!l[i].is_nilpotent())
            throw NotEngelNilpotent("left multiplication by basis element " + std::to_string(i) +
                                    " is not nilpotent");
    }
    Flag flag{n, {Subspace::zero(n)}};
    while (flag.chain.back().dim() < n) {
        const Subspace& v = flag.chain.back();
        QuotientData q = quotient_data(v);
        Subspace kernel = Subspace::full(n - v.dim());
        for (std::size_t i = 0; i < n; ++i)
            kernel = intersect(kernel, nullspace(detail::induced_operator(l[i], q)));
        if (kernel.dim() == 0) throw std::logic_error("engel_flag: empty joint kernel");
        Vec lifted = q.section.apply(kernel.basis().row(0));
        flag.chain.push_back(sum(v, Subspace::span(n, {lifted})));
    }
    if (!flag.is_complete()) throw std::logic_error("engel_flag: chain is not a complete flag");
    Matrix t = flag.adapted_basis();
    Matrix tinv = inverse(t);
    for (std::size_t i = 0; i < n; ++i)
        if (!(tinv * l[i] * t).is_strictly_upper_triangular())
            throw std::logic_error("engel_flag: adapted basis fails strict triangularity");
    return flag;
}

// Confirms the stronger Engel conclusions: all right multiplications are
// nilpotent, strictly upper triangular in the engel_flag basis, and both
// operator families share a common zero-eigenvector.
inline bool strong_engel_check(const LeibnizAlgebra& a) {
    const std::size_t n = a.dim();
    Flag flag = engel_flag(a);
    Matrix t = flag.adapted_basis();
    Matrix tinv = inverse(t);
    Subspace joint = Subspace::full(n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix r = right_mult_matrix(a, unit_vec(n, i));
        if (!r.is_nilpotent()) return false;
        if (!(tinv * r * t).is_strictly_upper_triangular()) return false;
        joint = intersect(joint, nullspace(r));
        joint = intersect(joint, nullspace(left_mult_matrix(a, unit_vec(n, i))));
    }
    return n == 0 || joint.dim() > 0;
}

// Lie-theorem flag over the rationals for a solvable algebra: each step picks
// a joint eigenvector of the induced left multiplications, searching rational
// eigenvalues of a derived-series-adapted generator family, largest
// eigenvalue first. Throws NotSplitOverField when some step has no rational
// joint eigenvector.
inline Flag lie_flag(const LeibnizAlgebra& a) {
    if (!is_solvable(a)) throw std::invalid_argument("lie_flag requires a solvable algebra");
    const std::size_t n = a.dim();
    std::vector<Matrix> l;
    for (const Vec& g : detail::derived_adapted_generators(a))
        l.push_back(left_mult_matrix(a, g));
    Flag flag{n, {Subspace::zero(n)}};
    while (flag.chain.back().dim() < n) {
        const Subspace& v = flag.chain.back();
        QuotientData q = quotient_data(v);
        std::vector<Matrix> induced;
        for (const Matrix& op : l) induced.push_back(detail::induced_operator(op, q));
        auto w = detail::common_eigenspace(induced, 0, Subspace::full(n - v.dim()));
        if (!w)
            throw NotSplitOverField("no rational joint eigenvector above flag step " +
                                    std::to_string(v.dim()));
        Vec lifted = q.section.apply(w->basis().row(0));
        flag.chain.push_back(sum(v, Subspace::span(n, {lifted})));
    }
    if (!flag.is_complete()) throw std::logic_error("lie_flag: chain is not a complete flag");
    Matrix t = flag.adapted_basis();
    Matrix tinv = inverse(t);
    for (std::size_t i = 0; i < n; ++i)
        if (!(tinv * left_mult_matrix(a, unit_vec(n, i)) * t).is_upper_triangular())
            throw std::logic_error("lie_flag: adapted basis fails triangularity");
    return flag;
}

}  // namespace leibniz
