#pragma once

#include <complex>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace pw {

template <class T>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<T> entries;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, T(0)) {}

    T& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix column(const std::vector<T>& v)
    {
        Matrix m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }

    bool operator==(const Matrix& o) const
    {
        return rows == o.rows && cols == o.cols && entries == o.entries;
    }
};

using RationalMatrix = Matrix<Rational>;
using ComplexMatrix = Matrix<std::complex<double>>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.cols != b.rows) throw DomainError("matrix shapes do not conform");
    Matrix<T> c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a(i, k) == T(0)) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

namespace detail {

// Exact fields take the first nonzero pivot, floating ones the largest modulus.
inline std::size_t pick_pivot(const Matrix<Rational>& m, std::size_t col, std::size_t from)
{
    for (std::size_t r = from; r < m.rows; ++r)
        if (m(r, col) != 0) return r;
    return m.rows;
}

template <class T>
std::size_t pick_pivot(const Matrix<T>& m, std::size_t col, std::size_t from)
{
    std::size_t best = m.rows;
    double mag = 0.0;
    for (std::size_t r = from; r < m.rows; ++r) {
        double a = std::abs(m(r, col));
        if (a > mag) {
            mag = a;
            best = r;
        }
    }
    return best;
}

} // namespace detail

template <class T>
T determinant(Matrix<T> m)
{
    if (m.rows != m.cols) throw DomainError("determinant of a non-square matrix");
    T det(1);
    const std::size_t n = m.rows;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = detail::pick_pivot(m, col, col);
        if (p == n) return T(0);
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col) == T(0)) continue;
            T f = m(r, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return det;
}

// Solves A x = b for every column of b.
template <class T>
Matrix<T> gauss_solve(Matrix<T> a, Matrix<T> b)
{
    if (a.rows != a.cols || b.rows != a.rows) throw DomainError("gauss_solve: shape mismatch");
    Matrix<T> a0, b0;
    if constexpr (std::is_same_v<T, Rational>) {
        a0 = a;
        b0 = b;
    }
    const std::size_t n = a.rows;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = detail::pick_pivot(a, col, col);
        if (p == n) throw SingularMatrix("zero pivot column in elimination");
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(col, j));
            for (std::size_t j = 0; j < b.cols; ++j) std::swap(b(p, j), b(col, j));
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col) == T(0)) continue;
            T f = a(r, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            for (std::size_t j = 0; j < b.cols; ++j) b(r, j) -= f * b(col, j);
        }
    }
    Matrix<T> x(n, b.cols);
    for (std::size_t j = 0; j < b.cols; ++j)
        for (std::size_t i = n; i-- > 0;) {
            T s = b(i, j);
            for (std::size_t k = i + 1; k < n; ++k) s -= a(i, k) * x(k, j);
            x(i, j) = s / a(i, i);
        }
    if constexpr (std::is_same_v<T, Rational>) {
        if (!(a0 * x == b0)) throw SingularMatrix("back-substitution check failed");
    }
    return x;
}

} // namespace pw
