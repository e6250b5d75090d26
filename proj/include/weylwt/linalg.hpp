#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "weylwt/rational.hpp"

namespace weylwt {

// Dense matrix over the rationals; all elimination is exact.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_)
            throw std::invalid_argument("Matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                if (at(i, k) == 0)
                    continue;
                for (int j = 0; j < o.cols_; ++j)
                    r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        if (int(v.size()) != cols_)
            throw std::invalid_argument("Matrix apply shape mismatch");
        std::vector<Rational> r(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) != 0)
                    r[i] += at(i, j) * v[j];
        return r;
    }

    std::vector<Rational> column(int j) const {
        std::vector<Rational> c(rows_);
        for (int i = 0; i < rows_; ++i)
            c[i] = at(i, j);
        return c;
    }

    void set_column(int j, const std::vector<Rational>& c) {
        for (int i = 0; i < rows_; ++i)
            at(i, j) = c[i];
    }

    static Matrix from_columns(int rows, const std::vector<std::vector<Rational>>& cols) {
        Matrix m(rows, int(cols.size()));
        for (int j = 0; j < int(cols.size()); ++j)
            m.set_column(j, cols[j]);
        return m;
    }

    bool operator==(const Matrix& o) const = default;

private:
    int rows_, cols_;
    std::vector<Rational> data_;
};

namespace detail {

// Row echelon form in place; returns pivot columns.
inline std::vector<int> echelonize(Matrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                pr = i;
                break;
            }
        if (pr < 0)
            continue;
        if (pr != r)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m.at(pr, j), m.at(r, j));
        Rational inv = Rational(1) / m.at(r, c);
        for (int j = c; j < m.cols(); ++j)
            m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0)
                continue;
            Rational f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

inline int rank(Matrix m) { return int(detail::echelonize(m).size()); }

// Basis of the kernel of A, as columns.
inline Matrix nullspace(Matrix a) {
    int n = a.cols();
    std::vector<int> pivots = detail::echelonize(a);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Rational>> cols;
    for (int fc = 0; fc < n; ++fc) {
        if (is_pivot[fc])
            continue;
        std::vector<Rational> v(n);
        v[fc] = 1;
        for (int r = 0; r < int(pivots.size()); ++r)
            v[pivots[r]] = -a.at(r, fc);
        cols.push_back(std::move(v));
    }
    return Matrix::from_columns(n, cols);
}

// A solution of A x = b, if one exists.
inline std::optional<std::vector<Rational>> solve(const Matrix& a,
                                                  const std::vector<Rational>& b) {
    Matrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<int> pivots = detail::echelonize(aug);
    for (int c : pivots)
        if (c == a.cols())
            return std::nullopt;  // inconsistent
    std::vector<Rational> x(a.cols());
    for (int r = 0; r < int(pivots.size()); ++r)
        x[pivots[r]] = aug.at(r, a.cols());
    return x;
}

// Indices of standard basis vectors of Q^n completing col(S) to Q^n.
inline std::vector<int> complement_indices(const Matrix& s, int n) {
    Matrix work(n, s.cols() + n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < s.cols(); ++j)
            work.at(i, j) = s.at(i, j);
        work.at(i, s.cols() + i) = 1;
    }
    std::vector<int> pivots = detail::echelonize(work);
    std::vector<int> out;
    for (int c : pivots)
        if (c >= s.cols())
            out.push_back(c - s.cols());
    return out;
}

}  // namespace weylwt
