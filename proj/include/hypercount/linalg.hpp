#pragma once

#include <vector>

#include "hypercount/bigint.hpp"

namespace hypercount {

// Small dense matrices, exact arithmetic only.
template <class T>
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, T(0)) {}

    T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    Mat<T> operator*(const Mat<T>& o) const {
        if (cols != o.rows) throw DomainError("matrix product dimension mismatch");
        Mat<T> r(rows, o.cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < cols; ++k) {
                const T& v = (*this)(i, k);
                if (v == T(0)) continue;
                for (std::size_t j = 0; j < o.cols; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }

    std::vector<T> mul_vec(const std::vector<T>& v) const {
        if (v.size() != cols) throw DomainError("matrix-vector dimension mismatch");
        std::vector<T> r(rows, T(0));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    bool operator==(const Mat<T>& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

using IMat = Mat<BigInt>;
using QMat = Mat<BigRat>;

inline QMat to_rational(const IMat& m) {
    QMat r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = BigRat(m.a[i]);
    return r;
}

// In-place reduced row echelon form over Q; returns the pivot columns.
inline std::vector<std::size_t> rref(QMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && m(sel, col) == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(row, j));
        BigRat inv = m(row, col);
        for (std::size_t j = col; j < m.cols; ++j) m(row, j) /= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || m(i, col) == 0) continue;
            BigRat f = m(i, col);
            for (std::size_t j = col; j < m.cols; ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(QMat m) { return rref(m).size(); }

// Fraction-free rank of an integer matrix (Bareiss elimination).
inline std::size_t rank_fraction_free(IMat m) {
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
        std::size_t sel = r;
        while (sel < m.rows && m(sel, col) == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(r, j));
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            for (std::size_t j = col + 1; j < m.cols; ++j)
                m(i, j) = (m(r, col) * m(i, j) - m(i, col) * m(r, j)) / prev;
            m(i, col) = 0;
        }
        prev = m(r, col);
        ++r;
    }
    return r;
}

// Basis of the right kernel {x : Mx = 0} over Q, one vector per free column,
// in canonical (RREF-derived) form.
inline std::vector<std::vector<BigRat>> kernel_basis(QMat m) {
    std::size_t n = m.cols;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<BigRat>> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<BigRat> v(n, BigRat(0));
        v[free_col] = 1;
        for (std::size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = -m(pi, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Inverse of a square rational matrix; throws if singular.
inline QMat inverse(const QMat& m) {
    if (m.rows != m.cols) throw DomainError("inverse of a non-square matrix");
    std::size_t n = m.rows;
    QMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1) throw DomainError("matrix is singular");
    QMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

inline BigRat determinant(QMat m) {
    if (m.rows != m.cols) throw DomainError("determinant of a non-square matrix");
    BigRat det(1);
    std::size_t n = m.rows;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m(sel, col) == 0) ++sel;
        if (sel == n) return BigRat(0);
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        BigRat inv = m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            BigRat f = m(i, col) / inv;
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

// Is `v` in the span of `span_vectors` over Q?
inline bool in_span(const std::vector<std::vector<BigRat>>& span_vectors, const std::vector<BigRat>& v) {
    if (span_vectors.empty()) {
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }
    std::size_t n = v.size();
    QMat a(span_vectors.size(), n), b(span_vectors.size() + 1, n);
    for (std::size_t i = 0; i < span_vectors.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = b(i, j) = span_vectors[i][j];
    for (std::size_t j = 0; j < n; ++j) b(span_vectors.size(), j) = v[j];
    return rank(std::move(a)) == rank(std::move(b));
}

} // namespace hypercount
