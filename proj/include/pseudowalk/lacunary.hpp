#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <type_traits>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace pw {

namespace detail {

inline double magnitude(const Rational& x) { return std::fabs(x.get_d()); }
inline double magnitude(const std::complex<double>& x) { return std::abs(x); }

template <class T>
constexpr bool is_exact = std::is_same_v<T, Rational>;

template <class T>
T power(const T& x, long n)
{
    T r(1), b = x;
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

} // namespace detail

// Elementary symmetric polynomials e_0..e_n of the nodes, skipping index `omit` when >= 0.
template <class T>
std::vector<T> esym_all(const std::vector<T>& nodes, long omit = -1)
{
    std::vector<T> e{T(1)};
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (long(i) == omit) continue;
        e.push_back(T(0));
        for (std::size_t m = e.size() - 1; m > 0; --m) e[m] += nodes[i] * e[m - 1];
    }
    return e;
}

template <class T>
T esym_at(const std::vector<T>& e, long m)
{
    if (m < 0 || m >= long(e.size())) return T(0);
    return e[m];
}

// Sum_{l in I} x_l u_j^l = rhs_j with I = {0..p-1} u {p+q..p+q+r-1}.
template <class T>
struct LacunarySystem {
    int p = 1, q = 0, r = 1;
    std::vector<T> u;
    std::vector<T> rhs;

    std::vector<long> exponents() const
    {
        std::vector<long> ex;
        for (long l = 0; l < p; ++l) ex.push_back(l);
        for (long l = p + q; l < p + q + r; ++l) ex.push_back(l);
        return ex;
    }
};

template <class T>
void check_nodes(const LacunarySystem<T>& s)
{
    require(s.p >= 1 && s.r >= 1 && s.q >= 0, "lacunary system needs p, r >= 1 and q >= 0");
    require(long(s.u.size()) == s.p + s.r, "lacunary system needs p+r nodes");
    double scale = 1.0;
    for (const T& x : s.u) scale = std::max(scale, detail::magnitude(x));
    for (std::size_t i = 0; i < s.u.size(); ++i)
        for (std::size_t j = i + 1; j < s.u.size(); ++j) {
            bool same;
            if constexpr (detail::is_exact<T>)
                same = s.u[i] == s.u[j];
            else
                same = detail::magnitude(s.u[i] - s.u[j]) <= 1e-12 * scale;
            if (same) throw DegenerateNodes("lacunary system has coinciding nodes");
        }
}

template <class T>
Matrix<T> lacunary_matrix(const LacunarySystem<T>& s)
{
    const auto ex = s.exponents();
    Matrix<T> m(s.u.size(), ex.size());
    for (std::size_t j = 0; j < s.u.size(); ++j)
        for (std::size_t c = 0; c < ex.size(); ++c) m(j, c) = detail::power(s.u[j], ex[c]);
    return m;
}

template <class T>
T lacunary_det_direct(const LacunarySystem<T>& s)
{
    return determinant(lacunary_matrix(s));
}

template <class T>
T vandermonde(const std::vector<T>& u)
{
    T v(1);
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j) v *= u[j] - u[i];
    return v;
}

// det[e_{r+i-j}], 0 <= i,j < q
template <class T>
T schur_block(const std::vector<T>& e, int q, int r)
{
    Matrix<T> m(q, q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) m(i, j) = esym_at(e, r + i - j);
    return q == 0 ? T(1) : determinant(m);
}

template <class T>
T lacunary_det(const LacunarySystem<T>& s)
{
    check_nodes(s);
    return vandermonde(s.u) * schur_block(esym_all(s.u), s.q, s.r);
}

// Cramer solution with symmetric-function minors; entries ordered as exponents().
template <class T>
std::vector<T> lacunary_solve(const LacunarySystem<T>& s)
{
    check_nodes(s);
    require(s.rhs.size() == s.u.size(), "lacunary system needs p+r right-hand sides");
    const int p = s.p, q = s.q, r = s.r;
    const long n = p + r;
    const T big = schur_block(esym_all(s.u), q, r);
    if constexpr (detail::is_exact<T>) {
        if (big == 0) throw SingularSchur("Schur determinant vanishes");
    } else {
        double e_scale = 1.0;
        for (const T& e : esym_all(s.u)) e_scale = std::max(e_scale, detail::magnitude(e));
        if (detail::magnitude(big) <= 1e-13 * std::pow(e_scale, q)) throw SingularSchur("Schur determinant is numerically zero");
    }

    std::vector<std::vector<T>> omitted(n);
    std::vector<T> pk(n, T(1));
    for (long k = 0; k < n; ++k) {
        omitted[k] = esym_all(s.u, k);
        for (long j = 0; j < n; ++j)
            if (j != k) pk[k] *= s.u[k] - s.u[j];
    }

    std::vector<T> x;
    for (long l : s.exponents()) {
        T acc(0);
        for (long k = 0; k < n; ++k) {
            Matrix<T> m(q + 1, q + 1);
            for (int i = 0; i < q; ++i)
                for (int c = 0; c <= q; ++c) m(i, c) = esym_at(omitted[k], r + i - c);
            for (int c = 0; c <= q; ++c) m(q, c) = esym_at(omitted[k], p + q + r - l - 1 - c);
            acc += s.rhs[k] * determinant(m) / pk[k];
        }
        x.push_back(T(parity_sign(l + p + r - 1)) * acc / big);
    }
    return x;
}

template <class T>
std::vector<T> lacunary_solve_naive(const LacunarySystem<T>& s)
{
    check_nodes(s);
    Matrix<T> sol = gauss_solve(lacunary_matrix(s), Matrix<T>::column(s.rhs));
    return sol.entries;
}

template <class T>
std::vector<T> lacunary_apply(const LacunarySystem<T>& s, const std::vector<T>& x)
{
    const Matrix<T> m = lacunary_matrix(s);
    return (m * Matrix<T>::column(x)).entries;
}

} // namespace pw
