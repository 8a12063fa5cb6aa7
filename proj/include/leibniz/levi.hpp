#pragma once

#include <array>

#include "leibniz/radicals.hpp"

namespace leibniz {

struct SplittingFailed : std::runtime_error {
    explicit SplittingFailed(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Solve f_ij = act_i H e_j - (skew ? act_j H e_i : 0) - H c_ij for the
// correction matrix H (kernel_dim x s_dim), stacking one row per (pair,
// kernel coordinate). Pairs and right-hand sides are supplied by the caller.
struct CocycleSystem {
    std::size_t kernel_dim;
    std::size_t s_dim;
    std::vector<std::array<std::size_t, 2>> pairs;
    std::vector<Vec> rhs;                // kernel coordinates of f_ij per pair
    std::vector<Matrix> action;          // kernel_dim x kernel_dim per s index
    std::vector<Vec> structure;          // c_ij in s coordinates per pair
    bool skew = false;

    std::optional<Matrix> solve_h() const {
        const std::size_t unknowns = kernel_dim * s_dim;
        Matrix sys(pairs.size() * kernel_dim + 1, unknowns == 0 ? 1 : unknowns);
        Vec b(pairs.size() * kernel_dim + 1, Rational(0));
        for (std::size_t t = 0; t < pairs.size(); ++t) {
            const std::size_t i = pairs[t][0], j = pairs[t][1];
            for (std::size_t p = 0; p < kernel_dim; ++p) {
                const std::size_t row = t * kernel_dim + p;
                b[row] = rhs[t][p];
                for (std::size_t pp = 0; pp < kernel_dim; ++pp) {
                    sys(row, pp * s_dim + j) += action[i](p, pp);
                    if (skew) sys(row, pp * s_dim + i) -= action[j](p, pp);
                }
                for (std::size_t q = 0; q < s_dim; ++q) sys(row, p * s_dim + q) -= structure[t][q];
            }
        }
        auto h = solve(sys, b);
        if (!h) return std::nullopt;
        Matrix out(kernel_dim, s_dim);
        for (std::size_t p = 0; p < kernel_dim; ++p)
            for (std::size_t q = 0; q < s_dim; ++q) out(p, q) = (*h)[p * s_dim + q];
        return out;
    }
};

}  // namespace detail

// Levi subalgebra of a Lie algebra, by induction on the derived series of the
// radical: quotient by the last nonzero derived term (an abelian ideal),
// recurse, then lift by solving the abelian-kernel cocycle equation
// f(x,y) = x.h(y) - y.h(x) - h([x,y]).
inline Subspace lie_levi(const LeibnizAlgebra& a) {
    if (!is_lie(a)) throw NotLie("lie_levi requires a Lie algebra");
    const std::size_t n = a.dim();
    Subspace rad = lie_radical(a);
    if (rad.dim() == 0) return Subspace::full(n);
    Subspace abelian = rad;
    for (;;) {
        Subspace next = product_subspace(a, abelian, abelian);
        if (next.dim() == 0) break;
        abelian = next;
    }
    QuotientAlgebra q = quotient(a, abelian);
    Subspace s_bar = lie_levi(q.algebra);
    const std::size_t sd = s_bar.dim();
    if (sd == 0) return Subspace::zero(n);

    std::vector<Vec> sigma(sd);
    for (std::size_t i = 0; i < sd; ++i) sigma[i] = q.section.apply(s_bar.basis().row(i));

    detail::CocycleSystem sys;
    sys.kernel_dim = abelian.dim();
    sys.s_dim = sd;
    sys.skew = true;
    sys.action.resize(sd, Matrix(abelian.dim(), abelian.dim()));
    for (std::size_t i = 0; i < sd; ++i)
        for (std::size_t k = 0; k < abelian.dim(); ++k) {
            auto coords = abelian.coordinates(a.bracket(sigma[i], abelian.basis().row(k)));
            if (!coords) throw std::logic_error("lie_levi: kernel is not invariant");
            sys.action[i].set_column(k, *coords);
        }
    for (std::size_t i = 0; i < sd; ++i)
        for (std::size_t j = i + 1; j < sd; ++j) {
            Vec qbracket = q.algebra.bracket(s_bar.basis().row(i), s_bar.basis().row(j));
            auto c = s_bar.coordinates(qbracket);
            if (!c) throw std::logic_error("lie_levi: recursive Levi is not a subalgebra");
            Vec defect = vec_sub(a.bracket(sigma[i], sigma[j]), q.section.apply(qbracket));
            auto f = abelian.coordinates(defect);
            if (!f) throw std::logic_error("lie_levi: cocycle defect escapes the kernel");
            sys.pairs.push_back({i, j});
            sys.structure.push_back(*c);
            sys.rhs.push_back(*f);
        }
    auto h = sys.solve_h();
    if (!h) throw SplittingFailed("lie_levi: cocycle system inconsistent");

    std::vector<Vec> s_basis(sd);
    for (std::size_t i = 0; i < sd; ++i) {
        Vec corr = vec_zero(n);
        for (std::size_t p = 0; p < abelian.dim(); ++p)
            corr = vec_add(corr, vec_scale((*h)(p, i), abelian.basis().row(p)));
        s_basis[i] = vec_sub(sigma[i], corr);
    }
    Subspace s = Subspace::span(n, s_basis);
    if (s.dim() != sd || !is_subalgebra(a, s) || intersect(s, rad).dim() != 0 ||
        sum(s, rad).dim() != n)
        throw std::logic_error("lie_levi: lifted subalgebra fails verification");
    return s;
}

struct LeviChecks {
    bool s_subalgebra = false;
    bool s_meets_radical_trivially = false;
    bool s_plus_radical_full = false;
    bool s_semisimple_lie = false;
    bool all() const {
        return s_subalgebra && s_meets_radical_trivially && s_plus_radical_full && s_semisimple_lie;
    }
};

struct LeviDecomposition {
    Subspace semisimple_part;
    Subspace radical_part;
    LeviChecks verified;
};

inline bool verify_levi(const LeibnizAlgebra& a, const Subspace& s);

// Leibniz Levi decomposition: lift a Levi subalgebra of the liezation through
// the extension 0 -> Ker -> F -> S* -> 0. Ker is left-central, so the splitting
// condition is the one-sided cocycle equation f(x,y) = x.h(y) - h([x,y]) over
// all ordered pairs.
inline LeviDecomposition levi_decomposition(const LeibnizAlgebra& a) {
    const std::size_t n = a.dim();
    Subspace ker = ker_ideal(a);
    QuotientAlgebra star = liezation(a);
    Subspace s_star = lie_levi(star.algebra);
    const std::size_t sd = s_star.dim();

    std::vector<Vec> sigma(sd);
    for (std::size_t i = 0; i < sd; ++i) sigma[i] = star.section.apply(s_star.basis().row(i));

    Subspace s = Subspace::zero(n);
    if (sd > 0) {
        detail::CocycleSystem sys;
        sys.kernel_dim = ker.dim();
        sys.s_dim = sd;
        sys.skew = false;
        sys.action.resize(sd, Matrix(ker.dim(), ker.dim()));
        for (std::size_t i = 0; i < sd; ++i)
            for (std::size_t k = 0; k < ker.dim(); ++k) {
                auto coords = ker.coordinates(a.bracket(sigma[i], ker.basis().row(k)));
                if (!coords) throw std::logic_error("levi_decomposition: Ker is not invariant");
                sys.action[i].set_column(k, *coords);
            }
        for (std::size_t i = 0; i < sd; ++i)
            for (std::size_t j = 0; j < sd; ++j) {
                Vec qbracket = star.algebra.bracket(s_star.basis().row(i), s_star.basis().row(j));
                auto c = s_star.coordinates(qbracket);
                if (!c) throw std::logic_error("levi_decomposition: S* is not a subalgebra");
                Vec defect = vec_sub(a.bracket(sigma[i], sigma[j]), star.section.apply(qbracket));
                auto f = ker.coordinates(defect);
                if (!f) throw std::logic_error("levi_decomposition: defect escapes Ker");
                sys.pairs.push_back({i, j});
                sys.structure.push_back(*c);
                sys.rhs.push_back(*f);
            }
        auto h = sys.solve_h();
        if (!h) throw SplittingFailed("levi_decomposition: cocycle system inconsistent");
        std::vector<Vec> s_basis(sd);
        for (std::size_t i = 0; i < sd; ++i) {
            Vec corr = vec_zero(n);
            for (std::size_t p = 0; p < ker.dim(); ++p)
                corr = vec_add(corr, vec_scale((*h)(p, i), ker.basis().row(p)));
            s_basis[i] = vec_sub(sigma[i], corr);
        }
        s = Subspace::span(n, s_basis);
        if (s.dim() != sd) throw std::logic_error("levi_decomposition: lifted basis is dependent");
    }

    LeviDecomposition out{s, radical(a), {}};
    out.verified.s_subalgebra = is_subalgebra(a, s);
    out.verified.s_meets_radical_trivially = intersect(s, out.radical_part).dim() == 0;
    out.verified.s_plus_radical_full = sum(s, out.radical_part).dim() == n;
    if (out.verified.s_subalgebra && s.dim() > 0) {
        LeibnizAlgebra induced = restrict_to_subalgebra(a, s);
        out.verified.s_semisimple_lie = is_lie(induced) && lie_radical(induced).dim() == 0;
    } else {
        out.verified.s_semisimple_lie = s.dim() == 0;
    }
    if (!out.verified.all())
        throw std::logic_error("levi_decomposition: verification failed");
    return out;
}

// Independent validity check of a proposed Levi subalgebra. Levi factors are
// not unique, so validity rather than equality is the contract.
inline bool verify_levi(const LeibnizAlgebra& a, const Subspace& s) {
    if (s.ambient() != a.dim()) return false;
    Subspace rad = radical(a);
    if (!is_subalgebra(a, s)) return false;
    if (intersect(s, rad).dim() != 0) return false;
    if (sum(s, rad).dim() != a.dim()) return false;
    if (s.dim() == 0) return rad.dim() == a.dim();
    LeibnizAlgebra induced = restrict_to_subalgebra(a, s);
    return is_lie(induced) && lie_radical(induced).dim() == 0;
}

struct ReductiveReport {
    bool hypothesis_bracket_zero = false;       // [L, Z^l] = 0
    bool hypothesis_quotient_semisimple = false;  // radical(L / Z^l) = 0
    bool applies() const { return hypothesis_bracket_zero && hypothesis_quotient_semisimple; }
    // conclusions, computed only when the hypothesis applies:
    bool confirmed_lie = false;
    bool confirmed_radical_is_center = false;
    bool confirmed_levi_direct = false;
    bool conclusions_hold() const {
        return confirmed_lie && confirmed_radical_is_center && confirmed_levi_direct;
    }
};

// Reductive criterion: if [L, Z^l] = 0 and L/Z^l is a semisimple Lie algebra,
// then L is a reductive Lie algebra; the conclusions are verified, not
// assumed.
inline ReductiveReport reductive_check(const LeibnizAlgebra& a) {
    ReductiveReport rep;
    Subspace zl = left_center(a);
    rep.hypothesis_bracket_zero =
        product_subspace(a, Subspace::full(a.dim()), zl).dim() == 0;
    QuotientAlgebra q = quotient(a, zl);
    rep.hypothesis_quotient_semisimple =
        is_lie(q.algebra) && radical(q.algebra).dim() == 0;
    if (!rep.applies()) return rep;
    rep.confirmed_lie = ker_ideal(a).dim() == 0 && is_lie(a);
    rep.confirmed_radical_is_center = radical(a) == center(a);
    LeviDecomposition ld = levi_decomposition(a);
    rep.confirmed_levi_direct =
        product_subspace(a, ld.semisimple_part, ld.radical_part).dim() == 0 &&
        product_subspace(a, ld.radical_part, ld.semisimple_part).dim() == 0;
    return rep;
}

}  // namespace leibniz
