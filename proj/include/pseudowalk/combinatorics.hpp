#pragma once

#include <tuple>

#include "matrix.hpp"
#include "rational.hpp"

namespace pw {

// sum_k (-1)^k C(n,k) (k+alpha)!/(k+beta)!, summed term by term
inline Rational alternating_factorial_sum(long alpha, long beta, long n)
{
    require(alpha >= 1 && beta >= 1 && n >= 1, "alternating sum: alpha, beta, n must be positive");
    Rational s = 0;
    for (long k = 0; k <= n; ++k)
        s += parity_sign(k) * binomial(n, k) * Rational(factorial(k + alpha)) / Rational(factorial(k + beta));
    return s;
}

inline Rational alternating_factorial_sum_closed(long alpha, long beta, long n)
{
    require(alpha >= 1 && beta >= 1 && n >= 1, "alternating sum: alpha, beta, n must be positive");
    return Rational(factorial(alpha)) / Rational(factorial(beta + n)) * falling_factorial(beta - alpha + n - 1, n);
}

inline RationalMatrix binomial_block(int N, long alpha)
{
    RationalMatrix a(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) a(i, j) = binomial(j + alpha, i + N);
    return a;
}

inline RationalMatrix binomial_column(int N, long beta)
{
    RationalMatrix b(N, 1);
    for (int i = 0; i < N; ++i) b(i, 0) = binomial(beta, i + N);
    return b;
}

inline RationalMatrix binomial_block_solve(int N, long alpha, long beta)
{
    require(N >= 1, "N must be positive");
    require(alpha > beta, "structured inverse needs alpha > beta");
    require(beta >= N, "structured inverse needs beta >= N");
    RationalMatrix x(N, 1);
    for (int i = 0; i < N; ++i)
        x(i, 0) = parity_sign(i) * make_rational(N, i + alpha - beta) * binomial(beta, N) *
                  binomial(alpha - beta + N - 1, N) * binomial(N - 1, i) / binomial(i + alpha, N);
    return x;
}

struct BinomialBlockFactors {
    RationalMatrix L, U, Linv;
};

inline BinomialBlockFactors binomial_block_factors(int N, long alpha)
{
    require(N >= 1, "N must be positive");
    require(alpha > N, "structured factors need alpha > N");
    BinomialBlockFactors f{RationalMatrix(N, N), RationalMatrix(N, N), RationalMatrix(N, N)};
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (i >= j) {
                f.L(i, j) = binomial(j + alpha, i + N) * falling_factorial(i, j) / falling_factorial(j + alpha - N, j);
                f.Linv(i, j) = parity_sign(i + j) * Rational(factorial(j + N)) * falling_factorial(i + alpha - N, i + 1) /
                               (Rational(factorial(j)) * Rational(factorial(i - j)) * falling_factorial(i + alpha, j + N + 1));
            }
            if (i <= j)
                f.U(i, j) = parity_sign(i + j) * binomial(j, i) * falling_factorial(j + alpha, N) / falling_factorial(i + alpha, N);
        }
    return f;
}

} // namespace pw
