#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "leibniz/matrix.hpp"

namespace leibniz {

struct RrefResult {
    Matrix mat;                       // reduced row echelon form, zero rows at the bottom
    std::vector<std::size_t> pivots;  // pivot column of row r, for r < rank
    std::size_t rank() const { return pivots.size(); }
};

// Gauss-Jordan to the canonical reduced row echelon form: pivots are 1,
// pivot columns are cleared above and below, rows sorted by pivot column.
inline RrefResult rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t sel = r;
        while (sel < m.rows() && m(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
        Rational inv = Rational(1) / m(r, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, col) == 0) continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

// A linear subspace of k^n held in canonical form: the basis matrix is the
// RREF of any spanning set with zero rows dropped, so two subspaces are equal
// exactly when their representations are identical.
class Subspace {
  public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace zero(std::size_t ambient) { return Subspace(ambient); }

    static Subspace full(std::size_t ambient) {
        return span(Matrix::identity(ambient));
    }

    static Subspace span(const Matrix& rows) {
        Subspace s(rows.cols());
        RrefResult r = rref(rows);
        s.basis_ = Matrix(r.rank(), rows.cols());
        for (std::size_t i = 0; i < r.rank(); ++i) s.basis_.set_row(i, r.mat.row(i));
        s.pivots_ = std::move(r.pivots);
        return s;
    }

    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors) {
        return span(Matrix::from_rows(vectors, ambient));
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    std::vector<Vec> basis_vectors() const {
        std::vector<Vec> rows;
        rows.reserve(dim());
        for (std::size_t i = 0; i < dim(); ++i) rows.push_back(basis_.row(i));
        return rows;
    }

    // Remainder of v after elimination against the RREF basis; zero iff v lies
    // in the subspace.
    Vec reduce(Vec v) const {
        if (v.size() != ambient_) throw std::invalid_argument("subspace: ambient mismatch");
        for (std::size_t i = 0; i < dim(); ++i) {
            const Rational& c = v[pivots_[i]];
            if (c == 0) continue;
            Rational f = c;
            for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * basis_(i, j);
        }
        return v;
    }

    bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw std::invalid_argument("subspace: ambient mismatch");
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

    // Coordinates of v in the basis (rows), if v lies in the subspace.
    std::optional<Vec> coordinates(const Vec& v) const {
        if (v.size() != ambient_) throw std::invalid_argument("subspace: ambient mismatch");
        Vec coeff(dim(), Rational(0));
        Vec w = v;
        for (std::size_t i = 0; i < dim(); ++i) {
            coeff[i] = w[pivots_[i]];
            if (coeff[i] == 0) continue;
            for (std::size_t j = 0; j < ambient_; ++j) w[j] -= coeff[i] * basis_(i, j);
        }
        if (!vec_is_zero(w)) return std::nullopt;
        return coeff;
    }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    std::string to_string() const {
        if (dim() == 0) return "{0}";
        return basis_.to_string();
    }

  private:
    std::size_t ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

inline Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("sum: ambient mismatch");
    return Subspace::span(Matrix::vstack(a.basis(), b.basis()));
}

// Canonical kernel basis: for each free column j (ascending), the vector with
// 1 at j, -R(r, j) at each pivot column, 0 elsewhere; then re-canonicalized.
inline Subspace nullspace(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        Vec v(m.cols(), Rational(0));
        v[j] = 1;
        for (std::size_t row = 0; row < r.rank(); ++row) v[r.pivots[row]] = -r.mat(row, j);
        basis.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), basis);
}

// Intersection of row spaces via the kernel of [A^T | -B^T]: a kernel vector
// (lambda, mu) satisfies lambda*A = mu*B, and those common values span the
// intersection.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("intersect: ambient mismatch");
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient());
    Matrix stacked = Matrix::hstack(a.basis().transpose(), -b.basis().transpose());
    Subspace ker = nullspace(stacked);
    std::vector<Vec> vectors;
    for (std::size_t i = 0; i < ker.dim(); ++i) {
        Vec lm = ker.basis().row(i);
        Vec lambda(lm.begin(), lm.begin() + static_cast<std::ptrdiff_t>(a.dim()));
        vectors.push_back(a.basis().transpose().apply(lambda));
    }
    return Subspace::span(a.ambient(), vectors);
}

// One solution of m*x = rhs with every free variable pinned to zero, so the
// answer is deterministic; nullopt when inconsistent.
inline std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve: length mismatch");
    Matrix aug = Matrix::hstack(m, Matrix::from_columns({rhs}, m.rows()));
    RrefResult r = rref(aug);
    Vec x(m.cols(), Rational(0));
    for (std::size_t row = 0; row < r.rank(); ++row) {
        if (r.pivots[row] == m.cols()) return std::nullopt;  // pivot in the rhs column
        x[r.pivots[row]] = r.mat(row, m.cols());
    }
    return x;
}

// Data of the quotient k^n -> k^n / W. The canonical complement is spanned by
// the coordinate vectors at non-pivot columns of W's basis; `projection` maps
// a vector to its complement coordinates modulo W and `section` embeds them
// back, so projection * section = identity.
struct QuotientData {
    Matrix projection;                        // (n-d) x n
    Matrix section;                           // n x (n-d)
    std::vector<std::size_t> complement_cols; // ascending
};

inline QuotientData quotient_data(const Subspace& w) {
    const std::size_t n = w.ambient();
    const std::size_t d = w.dim();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : w.pivots()) is_pivot[p] = true;
    QuotientData q;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) q.complement_cols.push_back(j);
    q.projection = Matrix(n - d, n);
    for (std::size_t r = 0; r < n - d; ++r) {
        std::size_t j = q.complement_cols[r];
        q.projection(r, j) = 1;
        // subtracting sum_i v[p_i] * basis_i kills the pivot coordinates
        for (std::size_t i = 0; i < d; ++i) q.projection(r, w.pivots()[i]) = -w.basis()(i, j);
    }
    q.section = Matrix(n, n - d);
    for (std::size_t r = 0; r < n - d; ++r) q.section(q.complement_cols[r], r) = 1;
    return q;
}

// {v : map(v) in target}.
inline Subspace preimage(const Matrix& map, const Subspace& target) {
    if (map.rows() != target.ambient()) throw std::invalid_argument("preimage: shape mismatch");
    if (target.dim() == target.ambient()) return Subspace::full(map.cols());
    QuotientData q = quotient_data(target);
    return nullspace(q.projection * map);
}

inline Subspace image(const Matrix& map, const Subspace& source) {
    if (map.cols() != source.ambient()) throw std::invalid_argument("image: shape mismatch");
    std::vector<Vec> vectors;
    for (std::size_t i = 0; i < source.dim(); ++i)
        vectors.push_back(map.apply(source.basis().row(i)));
    return Subspace::span(map.rows(), vectors);
}

// Complete flag 0 = V_0 < V_1 < ... < V_n = k^n.
struct Flag {
    std::size_t ambient = 0;
    std::vector<Subspace> chain;

    bool is_complete() const {
        if (chain.size() != ambient + 1) return false;
        for (std::size_t k = 0; k < chain.size(); ++k) {
            if (chain[k].dim() != k) return false;
            if (k > 0 && !chain[k].contains(chain[k - 1])) return false;
        }
        return true;
    }

    // One new direction per step: the basis row of V_k whose pivot is not a
    // pivot of V_{k-1}; columns of the result are a flag-adapted basis.
    Matrix adapted_basis() const {
        Matrix b(ambient, ambient);
        for (std::size_t k = 1; k <= ambient; ++k) {
            const Subspace& prev = chain[k - 1];
            const Subspace& cur = chain[k];
            std::vector<bool> seen(ambient, false);
            for (std::size_t p : prev.pivots()) seen[p] = true;
            for (std::size_t i = 0; i < cur.dim(); ++i) {
                if (seen[cur.pivots()[i]]) continue;
                b.set_column(k - 1, cur.basis().row(i));
                break;
            }
        }
        return b;
    }
};

inline Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    const std::size_t n = m.rows();
    RrefResult r = rref(Matrix::hstack(m, Matrix::identity(n)));
    if (r.rank() != n || (n > 0 && r.pivots.back() >= n))
        throw std::invalid_argument("inverse: singular matrix");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.mat(i, n + j);
    return inv;
}

}  // namespace leibniz
