#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "leibniz/rational.hpp"

namespace leibniz {

using Vec = std::vector<Rational>;

inline Vec vec_zero(std::size_t n) { return Vec(n, Rational(0)); }

inline Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n, Rational(0));
    v.at(i) = 1;
    return v;
}

inline bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec vec_scale(const Rational& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

// Dense rational matrix, row-major. Degenerate shapes (0 rows or columns)
// are valid and arise naturally from quotients and empty spans.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("matrix: ragged initializer");
            for (const auto& x : row) data_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("matrix: ragged rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw std::invalid_argument("matrix: ragged columns");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) {
        check(i, j);
        return data_[i * cols_ + j];
    }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        check(i, j);
        return data_[i * cols_ + j];
    }

    Vec row(std::size_t i) const {
        Vec r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }
    Vec column(std::size_t j) const {
        Vec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    void set_row(std::size_t i, const Vec& v) {
        if (v.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }
    void set_column(std::size_t j, const Vec& v) {
        if (v.size() != rows_) throw std::invalid_argument("set_column: length mismatch");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o, "add");
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        require_same_shape(o, "sub");
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix mul: shape mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }
    Matrix operator*(const Rational& c) const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = c * data_[i];
        return r;
    }
    friend Matrix operator*(const Rational& c, const Matrix& m) { return m * c; }

    Vec apply(const Vec& v) const {
        if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
        Vec r(rows_, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Rational trace() const {
        if (rows_ != cols_) throw std::invalid_argument("trace: not square");
        Rational t = 0;
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    Matrix pow(std::size_t e) const {
        if (rows_ != cols_) throw std::invalid_argument("pow: not square");
        Matrix result = identity(rows_);
        Matrix base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    Rational determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant: not square");
        Matrix m = *this;
        Rational det = 1;
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t pivot = col;
            while (pivot < rows_ && m(pivot, col) == 0) ++pivot;
            if (pivot == rows_) return Rational(0);
            if (pivot != col) {
                for (std::size_t j = 0; j < cols_; ++j) std::swap(m(pivot, j), m(col, j));
                det = -det;
            }
            det *= m(col, col);
            for (std::size_t i = col + 1; i < rows_; ++i) {
                if (m(i, col) == 0) continue;
                Rational f = m(i, col) / m(col, col);
                for (std::size_t j = col; j < cols_; ++j) m(i, j) -= f * m(col, j);
            }
        }
        return det;
    }

    bool is_invertible() const { return rows_ == cols_ && determinant() != 0; }

    bool is_nilpotent() const {
        if (rows_ != cols_) throw std::invalid_argument("is_nilpotent: not square");
        return pow(rows_ == 0 ? 1 : rows_).is_zero();
    }

    bool is_strictly_upper_triangular() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j <= i && j < cols_; ++j)
                if ((*this)(i, j) != 0) return false;
        return true;
    }

    bool is_upper_triangular() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < i && j < cols_; ++j)
                if ((*this)(i, j) != 0) return false;
        return true;
    }

    // Row-major flattening; inverse of from_vec.
    Vec to_vec() const { return data_; }
    static Matrix from_vec(const Vec& v, std::size_t rows, std::size_t cols) {
        if (v.size() != rows * cols) throw std::invalid_argument("from_vec: length mismatch");
        Matrix m(rows, cols);
        m.data_ = v;
        return m;
    }

    static Matrix vstack(const Matrix& top, const Matrix& bottom) {
        if (top.cols_ != bottom.cols_) throw std::invalid_argument("vstack: width mismatch");
        Matrix r(top.rows_ + bottom.rows_, top.cols_);
        for (std::size_t i = 0; i < top.rows_; ++i)
            for (std::size_t j = 0; j < top.cols_; ++j) r(i, j) = top(i, j);
        for (std::size_t i = 0; i < bottom.rows_; ++i)
            for (std::size_t j = 0; j < bottom.cols_; ++j) r(top.rows_ + i, j) = bottom(i, j);
        return r;
    }

    static Matrix hstack(const Matrix& left, const Matrix& right) {
        if (left.rows_ != right.rows_) throw std::invalid_argument("hstack: height mismatch");
        Matrix r(left.rows_, left.cols_ + right.cols_);
        for (std::size_t i = 0; i < left.rows_; ++i) {
            for (std::size_t j = 0; j < left.cols_; ++j) r(i, j) = left(i, j);
            for (std::size_t j = 0; j < right.cols_; ++j) r(i, left.cols_ + j) = right(i, j);
        }
        return r;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i == 0 ? "[" : " [";
            for (std::size_t j = 0; j < cols_; ++j) {
                s += leibniz::to_string((*this)(i, j));
                if (j + 1 < cols_) s += ", ";
            }
            s += "]";
            if (i + 1 < rows_) s += "\n";
        }
        return s + "]";
    }

  private:
    void check(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    }
    void require_same_shape(const Matrix& o, const char* what) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string("matrix ") + what + ": shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

}  // namespace leibniz
