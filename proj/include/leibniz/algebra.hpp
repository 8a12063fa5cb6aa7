#pragma once

#include <string>
#include <vector>

#include "leibniz/subspace.hpp"

namespace leibniz {

// Finite-dimensional algebra over the rationals given by structure constants:
// [e_i, e_j] = sum_k c(i,j,k) e_k. No axiom is assumed by the container;
// check_left_leibniz / check_right_leibniz / is_lie report what holds.
class LeibnizAlgebra {
  public:
    LeibnizAlgebra() : dim_(0) {}
    LeibnizAlgebra(std::size_t dim, std::vector<std::string> basis_names)
        : dim_(dim), names_(std::move(basis_names)), c_(dim * dim * dim, Rational(0)) {
        if (names_.empty())
            for (std::size_t i = 0; i < dim_; ++i) names_.push_back("e" + std::to_string(i));
        if (names_.size() != dim_)
            throw std::invalid_argument("algebra: basis name count mismatch");
    }
    explicit LeibnizAlgebra(std::size_t dim) : LeibnizAlgebra(dim, {}) {}

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[index(i, j, k)];
    }
    void set_c(std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
        c_[index(i, j, k)] = v;
    }
    // [e_i, e_j] = v
    void set_bracket(std::size_t i, std::size_t j, const Vec& v) {
        if (v.size() != dim_) throw std::invalid_argument("set_bracket: length mismatch");
        for (std::size_t k = 0; k < dim_; ++k) c_[index(i, j, k)] = v[k];
    }

    Vec bracket(const Vec& x, const Vec& y) const {
        if (x.size() != dim_ || y.size() != dim_)
            throw std::invalid_argument("bracket: length mismatch");
        Vec r(dim_, Rational(0));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j] == 0) continue;
                Rational f = x[i] * y[j];
                for (std::size_t k = 0; k < dim_; ++k) {
                    const Rational& cc = c(i, j, k);
                    if (cc != 0) r[k] += f * cc;
                }
            }
        }
        return r;
    }

    Vec bracket_basis(std::size_t i, std::size_t j) const {
        Vec r(dim_);
        for (std::size_t k = 0; k < dim_; ++k) r[k] = c(i, j, k);
        return r;
    }

    bool operator==(const LeibnizAlgebra& o) const {
        return dim_ == o.dim_ && names_ == o.names_ && c_ == o.c_;
    }
    bool operator!=(const LeibnizAlgebra& o) const { return !(*this == o); }

  private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
        if (i >= dim_ || j >= dim_ || k >= dim_) throw std::out_of_range("structure constant index");
        return (i * dim_ + j) * dim_ + k;
    }

    std::size_t dim_;
    std::vector<std::string> names_;
    std::vector<Rational> c_;
};

struct MultOperator {
    enum class Kind { left, right };
    Kind kind;
    Vec element;
    Matrix matrix;  // action on coordinates: left is v -> [x, v], right is v -> [v, x]
};

inline Matrix left_mult_matrix(const LeibnizAlgebra& a, const Vec& x) {
    Matrix m(a.dim(), a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) m.set_column(j, a.bracket(x, unit_vec(a.dim(), j)));
    return m;
}

inline Matrix right_mult_matrix(const LeibnizAlgebra& a, const Vec& x) {
    Matrix m(a.dim(), a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) m.set_column(j, a.bracket(unit_vec(a.dim(), j), x));
    return m;
}

inline MultOperator left_mult(const LeibnizAlgebra& a, const Vec& x) {
    return {MultOperator::Kind::left, x, left_mult_matrix(a, x)};
}

inline MultOperator right_mult(const LeibnizAlgebra& a, const Vec& x) {
    return {MultOperator::Kind::right, x, right_mult_matrix(a, x)};
}

// One violated instance of an identity: which identity, at which basis tuple,
// and the exact nonzero residual.
struct Violation {
    std::string identity;
    std::vector<std::size_t> indices;
    Vec residual;
};

struct ViolationReport {
    std::vector<Violation> entries;
    bool ok() const { return entries.empty(); }
};

// Left Leibniz identity [a,[b,c]] = [[a,b],c] + [b,[a,c]] on all basis
// triples; by trilinearity an empty report is equivalent to the identity on
// the whole algebra.
inline ViolationReport check_left_leibniz(const LeibnizAlgebra& a) {
    ViolationReport rep;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = a.bracket(unit_vec(n, i), a.bracket_basis(j, k));
                Vec rhs = vec_add(a.bracket(a.bracket_basis(i, j), unit_vec(n, k)),
                                  a.bracket(unit_vec(n, j), a.bracket_basis(i, k)));
                Vec res = vec_sub(lhs, rhs);
                if (!vec_is_zero(res))
                    rep.entries.push_back({"[a,[b,c]] = [[a,b],c] + [b,[a,c]]", {i, j, k}, res});
            }
    return rep;
}

// Right Leibniz identity [a,[b,c]] = [[a,b],c] - [[a,c],b] on all basis triples.
inline ViolationReport check_right_leibniz(const LeibnizAlgebra& a) {
    ViolationReport rep;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = a.bracket(unit_vec(n, i), a.bracket_basis(j, k));
                Vec rhs = vec_sub(a.bracket(a.bracket_basis(i, j), unit_vec(n, k)),
                                  a.bracket(a.bracket_basis(i, k), unit_vec(n, j)));
                Vec res = vec_sub(lhs, rhs);
                if (!vec_is_zero(res))
                    rep.entries.push_back({"[a,[b,c]] = [[a,b],c] - [[a,c],b]", {i, j, k}, res});
            }
    return rep;
}

inline bool is_left_leibniz(const LeibnizAlgebra& a) { return check_left_leibniz(a).ok(); }
inline bool is_right_leibniz(const LeibnizAlgebra& a) { return check_right_leibniz(a).ok(); }

// Antisymmetry (including [x,x] = 0) plus the left Leibniz identity, which
// then coincides with Jacobi.
inline bool is_lie(const LeibnizAlgebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (!vec_is_zero(vec_add(a.bracket_basis(i, j), a.bracket_basis(j, i)))) return false;
    return is_left_leibniz(a);
}

// Opposite multiplication x * y = [y, x]; swaps left and right Leibniz.
inline LeibnizAlgebra opposite(const LeibnizAlgebra& a) {
    LeibnizAlgebra o(a.dim(), a.basis_names());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) o.set_bracket(i, j, a.bracket_basis(j, i));
    return o;
}

// The five consequence identities of the left Leibniz axiom, checked on all
// basis tuples (powers up to n = dim for the last one). For a left Leibniz
// input the report is empty.
inline ViolationReport identity_suite(const LeibnizAlgebra& a) {
    ViolationReport rep;
    const std::size_t n = a.dim();
    std::vector<Matrix> l(n), r(n);
    for (std::size_t i = 0; i < n; ++i) {
        l[i] = left_mult_matrix(a, unit_vec(n, i));
        r[i] = right_mult_matrix(a, unit_vec(n, i));
    }
    auto r_of_bracket = [&](std::size_t i, std::size_t j) {
        Matrix m(n, n);
        for (std::size_t k = 0; k < n; ++k)
            if (a.c(i, j, k) != 0) m = m + r[k] * a.c(i, j, k);
        return m;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix rb = r_of_bracket(i, j);
            Matrix res1 = rb - (r[j] * r[i] + l[i] * r[j]);
            if (!res1.is_zero())
                rep.entries.push_back({"r[a,b] = r_b r_a + l_a r_b", {i, j}, res1.to_vec()});
            Matrix res2 = rb - (l[i] * r[j] - r[j] * l[i]);
            if (!res2.is_zero())
                rep.entries.push_back({"r[a,b] = l_a r_b - r_b l_a", {i, j}, res2.to_vec()});
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec res = vec_add(a.bracket(a.bracket_basis(i, j), unit_vec(n, k)),
                                  a.bracket(a.bracket_basis(j, i), unit_vec(n, k)));
                if (!vec_is_zero(res))
                    rep.entries.push_back({"[[a,b],c] = -[[b,a],c]", {i, j, k}, res});
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec res = a.bracket(a.bracket_basis(i, i), unit_vec(n, j));
            if (!vec_is_zero(res)) rep.entries.push_back({"[[a,a],b] = 0", {i, j}, res});
        }
    for (std::size_t i = 0; i < n; ++i) {
        Matrix lpow = Matrix::identity(n);
        Matrix rpow = r[i];
        for (std::size_t e = 1; e <= n; ++e) {
            // residual of (r_x)^e = (-1)^(e-1) r_x (l_x)^(e-1); the base case
            // e = 2 is r_x^2 = -r_x l_x, from [[a,x],x] = -[[x,a],x]
            Matrix rhs = r[i] * lpow;
            if (e % 2 == 0) rhs = -rhs;
            Matrix res = rpow - rhs;
            if (!res.is_zero())
                rep.entries.push_back({"(r_x)^n = (-1)^(n-1) r_x l_x^(n-1)", {i, e}, res.to_vec()});
            if (e < n) {
                lpow = lpow * l[i];
                rpow = rpow * r[i];
            }
        }
    }
    return rep;
}

// Derivations D[x,y] = [Dx,y] + [x,Dy] as a subspace of operator space
// (row-major vectorization). The result is verified to be closed under the
// operator commutator.
inline Subspace derivations(const LeibnizAlgebra& a) {
    const std::size_t n = a.dim();
    Matrix sys(n * n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::size_t row = (i * n + j) * n + k;
                for (std::size_t m = 0; m < n; ++m) {
                    sys(row, k * n + m) += a.c(i, j, m);        // D applied to [e_i,e_j]
                    sys(row, m * n + i) -= a.c(m, j, k);        // [D e_i, e_j]
                    sys(row, m * n + j) -= a.c(i, m, k);        // [e_i, D e_j]
                }
            }
    Subspace der = nullspace(sys);
    for (std::size_t p = 0; p < der.dim(); ++p)
        for (std::size_t q = 0; q < der.dim(); ++q) {
            Matrix dp = Matrix::from_vec(der.basis().row(p), n, n);
            Matrix dq = Matrix::from_vec(der.basis().row(q), n, n);
            if (!der.contains((dp * dq - dq * dp).to_vec()))
                throw std::logic_error("derivations: commutator closure failed");
        }
    return der;
}

inline bool is_derivation(const LeibnizAlgebra& a, const Matrix& d) {
    if (d.rows() != a.dim() || d.cols() != a.dim())
        throw std::invalid_argument("is_derivation: shape mismatch");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vec lhs = d.apply(a.bracket_basis(i, j));
            Vec rhs = vec_add(a.bracket(d.column(i), unit_vec(a.dim(), j)),
                              a.bracket(unit_vec(a.dim(), i), d.column(j)));
            if (!vec_is_zero(vec_sub(lhs, rhs))) return false;
        }
    return true;
}

// Structure constants in the basis given by the columns of t (invertible).
inline LeibnizAlgebra transform_basis(const LeibnizAlgebra& a, const Matrix& t) {
    if (t.rows() != a.dim() || t.cols() != a.dim())
        throw std::invalid_argument("transform_basis: shape mismatch");
    Matrix tinv = inverse(t);
    LeibnizAlgebra out(a.dim(), a.basis_names());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            out.set_bracket(i, j, tinv.apply(a.bracket(t.column(i), t.column(j))));
    return out;
}

inline LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
    std::vector<std::string> names = a.basis_names();
    names.insert(names.end(), b.basis_names().begin(), b.basis_names().end());
    LeibnizAlgebra s(a.dim() + b.dim(), names);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k) s.set_c(i, j, k, a.c(i, j, k));
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            for (std::size_t k = 0; k < b.dim(); ++k)
                s.set_c(a.dim() + i, a.dim() + j, a.dim() + k, b.c(i, j, k));
    return s;
}

// T intertwines: T [x,y]_A = [Tx, Ty]_B on basis pairs.
inline bool is_algebra_map(const LeibnizAlgebra& a, const LeibnizAlgebra& b, const Matrix& t) {
    if (t.rows() != b.dim() || t.cols() != a.dim())
        throw std::invalid_argument("is_algebra_map: shape mismatch");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vec lhs = t.apply(a.bracket_basis(i, j));
            Vec rhs = b.bracket(t.column(i), t.column(j));
            if (!vec_is_zero(vec_sub(lhs, rhs))) return false;
        }
    return true;
}

}  // namespace leibniz
