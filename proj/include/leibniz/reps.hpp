#pragma once

#include "leibniz/structure.hpp"

namespace leibniz {

// Bimodule over a Leibniz algebra: a carrier space with a left and a right
// action matrix per algebra basis element. Actions extend linearly;
// left_of/right_of evaluate them at arbitrary algebra elements.
struct Bimodule {
    LeibnizAlgebra algebra;
    std::size_t carrier_dim = 0;
    std::vector<Matrix> left;   // left[i] : action of e_i on the carrier from the left
    std::vector<Matrix> right;  // right[i] : m -> m.e_i

    Matrix left_of(const Vec& x) const { return combine(left, x); }
    Matrix right_of(const Vec& x) const { return combine(right, x); }

  private:
    Matrix combine(const std::vector<Matrix>& mats, const Vec& x) const {
        if (x.size() != algebra.dim()) throw std::invalid_argument("bimodule: length mismatch");
        Matrix m(carrier_dim, carrier_dim);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0) m = m + mats[i] * x[i];
        return m;
    }
};

inline Bimodule make_bimodule(const LeibnizAlgebra& alg, std::size_t carrier_dim,
                              std::vector<Matrix> left, std::vector<Matrix> right) {
    if (left.size() != alg.dim() || right.size() != alg.dim())
        throw std::invalid_argument("bimodule: one action matrix per basis element required");
    for (const auto& m : left)
        if (m.rows() != carrier_dim || m.cols() != carrier_dim)
            throw std::invalid_argument("bimodule: left action shape mismatch");
    for (const auto& m : right)
        if (m.rows() != carrier_dim || m.cols() != carrier_dim)
            throw std::invalid_argument("bimodule: right action shape mismatch");
    return Bimodule{alg, carrier_dim, std::move(left), std::move(right)};
}

// The three bimodule axioms, as operator identities checked on all basis
// pairs (a,b) of the algebra:
//   a(bm) = [a,b]m + b(am)      L_a L_b = L_[a,b] + L_b L_a
//   a(mb) = (am)b + m[a,b]      L_a R_b = R_b L_a + R_[a,b]
//   m[a,b] = (ma)b + a(mb)      R_[a,b] = R_b R_a + L_a R_b
inline ViolationReport check_bimodule_axioms(const Bimodule& b) {
    ViolationReport rep;
    const std::size_t n = b.algebra.dim();
    auto bracket_action = [&](const std::vector<Matrix>& mats, std::size_t i, std::size_t j) {
        Matrix m(b.carrier_dim, b.carrier_dim);
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& c = b.algebra.c(i, j, k);
            if (c != 0) m = m + mats[k] * c;
        }
        return m;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix lb = bracket_action(b.left, i, j);
            Matrix rb = bracket_action(b.right, i, j);
            Matrix res1 = b.left[i] * b.left[j] - (lb + b.left[j] * b.left[i]);
            if (!res1.is_zero())
                rep.entries.push_back({"a(bm) = [a,b]m + b(am)", {i, j}, res1.to_vec()});
            Matrix res2 = b.left[i] * b.right[j] - (b.right[j] * b.left[i] + rb);
            if (!res2.is_zero())
                rep.entries.push_back({"a(mb) = (am)b + m[a,b]", {i, j}, res2.to_vec()});
            Matrix res3 = rb - (b.right[j] * b.right[i] + b.left[i] * b.right[j]);
            if (!res3.is_zero())
                rep.entries.push_back({"m[a,b] = (ma)b + a(mb)", {i, j}, res3.to_vec()});
        }
    return rep;
}

inline bool is_bimodule(const Bimodule& b) { return check_bimodule_axioms(b).ok(); }

// V = L with x acting by l_x on the left and r_x on the right; satisfies the
// axioms exactly when the algebra is left Leibniz.
inline Bimodule regular_bimodule(const LeibnizAlgebra& alg) {
    std::vector<Matrix> left, right;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        left.push_back(left_mult_matrix(alg, unit_vec(alg.dim(), i)));
        right.push_back(right_mult_matrix(alg, unit_vec(alg.dim(), i)));
    }
    return Bimodule{alg, alg.dim(), std::move(left), std::move(right)};
}

// {x : left_of(x) = 0 and right_of(x) = 0}; for the regular bimodule this
// equals Z^l meet Z^r.
inline Subspace joint_kernel(const Bimodule& b) {
    const std::size_t n = b.algebra.dim();
    const std::size_t m2 = b.carrier_dim * b.carrier_dim;
    Matrix sys(2 * m2 == 0 ? 1 : 2 * m2, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec lv = b.left[i].to_vec();
        Vec rv = b.right[i].to_vec();
        for (std::size_t k = 0; k < m2; ++k) {
            sys(k, i) = lv[k];
            sys(m2 + k, i) = rv[k];
        }
    }
    return nullspace(sys);
}

inline bool is_faithful(const Bimodule& b) { return joint_kernel(b).dim() == 0; }

}  // namespace leibniz
