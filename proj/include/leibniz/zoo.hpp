#pragma once

#include "leibniz/classify.hpp"
#include "leibniz/reps.hpp"

// Standard examples, shared by the bundled corpus and the test suite. Low
// dimensions reuse the canonical tables so there is a single source of truth
// for the structure constants.

namespace leibniz::zoo {

inline LeibnizAlgebra a1() { return canonical_algebras(1)[0]; }
inline LeibnizAlgebra a2() { return canonical_algebras(2)[0]; }
inline LeibnizAlgebra r2() { return canonical_algebras(2)[1]; }
inline LeibnizAlgebra l2i() { return canonical_algebras(2)[2]; }
inline LeibnizAlgebra l2ii() { return canonical_algebras(2)[3]; }

// Heisenberg: [x,y] = z = -[y,x]. Nilpotent of class 2.
inline LeibnizAlgebra heis3() {
    LeibnizAlgebra a(3, {"x", "y", "z"});
    a.set_c(0, 1, 2, Rational(1));
    a.set_c(1, 0, 2, Rational(-1));
    return a;
}

// sl_2: [e,f] = h, [h,e] = 2e, [h,f] = -2f. Simple.
inline LeibnizAlgebra sl2() {
    LeibnizAlgebra a(3, {"e", "f", "h"});
    a.set_c(0, 1, 2, Rational(1));
    a.set_c(1, 0, 2, Rational(-1));
    a.set_c(2, 0, 0, Rational(2));
    a.set_c(0, 2, 0, Rational(-2));
    a.set_c(2, 1, 1, Rational(-2));
    a.set_c(1, 2, 1, Rational(2));
    return a;
}

// Euclidean rotations acting on the plane: [a,x] = y, [a,y] = -x. Solvable,
// but the action of a has no rational (or real) eigenvalue.
inline LeibnizAlgebra rot2() {
    LeibnizAlgebra a(3, {"a", "x", "y"});
    a.set_c(0, 1, 2, Rational(1));
    a.set_c(1, 0, 2, Rational(-1));
    a.set_c(0, 2, 1, Rational(-1));
    a.set_c(2, 0, 1, Rational(1));
    return a;
}

// sl_2 acting on its natural 2-dimensional module span{u, v}:
// e = (0 1; 0 0), f = (0 0; 1 0), h = diag(1, -1). Levi subalgebra sl_2,
// radical = nilradical = span{u, v}.
inline LeibnizAlgebra sl2_semidirect_k2() {
    LeibnizAlgebra a(5, {"e", "f", "h", "u", "v"});
    a.set_c(0, 1, 2, Rational(1));
    a.set_c(1, 0, 2, Rational(-1));
    a.set_c(2, 0, 0, Rational(2));
    a.set_c(0, 2, 0, Rational(-2));
    a.set_c(2, 1, 1, Rational(-2));
    a.set_c(1, 2, 1, Rational(2));
    a.set_c(0, 4, 3, Rational(1));   // [e,v] = u
    a.set_c(4, 0, 3, Rational(-1));
    a.set_c(1, 3, 4, Rational(1));   // [f,u] = v
    a.set_c(3, 1, 4, Rational(-1));
    a.set_c(2, 3, 3, Rational(1));   // [h,u] = u
    a.set_c(3, 2, 3, Rational(-1));
    a.set_c(2, 4, 4, Rational(-1));  // [h,v] = -v
    a.set_c(4, 2, 4, Rational(1));
    return a;
}

// Non-Lie algebra with a nontrivial Levi decomposition.
inline LeibnizAlgebra sl2_oplus_l2ii() { return direct_sum(sl2(), l2ii()); }

// Reductive but not semisimple: sl_2 plus a one-dimensional center.
inline LeibnizAlgebra sl2_plus_center() { return direct_sum(sl2(), a1()); }

inline std::vector<std::pair<std::string, LeibnizAlgebra>> all_algebras() {
    return {
        {"a1", a1()},
        {"a2", a2()},
        {"r2", r2()},
        {"l2i", l2i()},
        {"l2ii", l2ii()},
        {"heis3", heis3()},
        {"sl2", sl2()},
        {"rot2", rot2()},
        {"sl2_semidirect_k2", sl2_semidirect_k2()},
        {"sl2_oplus_l2ii", sl2_oplus_l2ii()},
        {"sl2_plus_center", sl2_plus_center()},
    };
}

namespace detail {
inline Matrix unit_matrix(std::size_t m, std::size_t r, std::size_t c) {
    Matrix e(m, m);
    e(r, c) = Rational(1);
    return e;
}
}  // namespace detail

// Faithful bimodule over the one-dimensional algebra: a acts by a nilpotent
// Jordan block on the left and by zero on the right.
inline Bimodule bimodule_a1() {
    return make_bimodule(a1(), 2, {detail::unit_matrix(2, 0, 1)}, {Matrix(2, 2)});
}

inline Bimodule bimodule_a2() {
    return make_bimodule(a2(), 3, {detail::unit_matrix(3, 0, 2), detail::unit_matrix(3, 1, 2)},
                         {Matrix(3, 3), Matrix(3, 3)});
}

inline Bimodule bimodule_r2() { return regular_bimodule(r2()); }

// Faithful non-regular bimodule over (i). The first axiom forces the left
// action of a = [b,b] to vanish; the right actions stay independent.
inline Bimodule bimodule_l2i() {
    return make_bimodule(l2i(), 3, {Matrix(3, 3), detail::unit_matrix(3, 0, 1)},
                         {detail::unit_matrix(3, 0, 2), detail::unit_matrix(3, 1, 2)});
}

inline Bimodule bimodule_l2ii() { return regular_bimodule(l2ii()); }

inline std::vector<std::pair<std::string, Bimodule>> all_bimodules() {
    return {
        {"a1", bimodule_a1()},
        {"a2", bimodule_a2()},
        {"r2", bimodule_r2()},
        {"l2i", bimodule_l2i()},
        {"l2ii", bimodule_l2ii()},
    };
}

}  // namespace leibniz::zoo
