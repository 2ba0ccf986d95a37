#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "differences.hpp"
#include "lacunary.hpp"
#include "matrix.hpp"
#include "oracle.hpp"
#include "polynomial.hpp"
#include "spectral.hpp"
#include "walk.hpp"

namespace pw {

namespace detail {

inline std::vector<cplx> lagrange_denominators(const std::vector<cplx>& x)
{
    std::vector<cplx> pk(x.size(), 1.0);
    for (std::size_t k = 0; k < x.size(); ++k)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (j != k) pk[k] *= x[k] - x[j];
    return pk;
}

} // namespace detail

// E[z^sigma; S = ell] for the first passage above b, ell = b..b+N-1, from a precomputed root set.
inline std::vector<cplx> H_plus_from_roots(const RootSet& r, long b)
{
    const long N = long(r.u.size());
    const auto pk = detail::lagrange_denominators(r.u);
    std::vector<cplx> h(N, 0.0);
    for (long k = 0; k < N; ++k) {
        const auto e = esym_all(r.u, k);
        const cplx top = std::pow(r.u[k], double(b + N - 1)) / pk[k];
        for (long m = 0; m < N; ++m) h[m] += double(parity_sign(m)) * esym_at(e, m) * top;
    }
    return h;
}

inline void check_overshoot_args(const WalkParams& p, long b, long ell)
{
    require(b >= 1, "b must be a positive integer");
    require(ell >= b && ell <= b + p.N - 1, "ell must lie in {b..b+N-1}");
}

inline cplx H_plus(const WalkParams& p, long b, long ell, double z)
{
    check_overshoot_args(p, b, ell);
    return H_plus_from_roots(roots(p, z), b)[ell - b];
}

// Same values from the linear system sum_l H_l v_j^l = 1.
inline std::vector<cplx> H_plus_vandermonde(const WalkParams& p, long b, double z)
{
    require(b >= 1, "b must be a positive integer");
    const RootSet r = roots(p, z);
    ComplexMatrix a(p.N, p.N);
    for (int j = 0; j < p.N; ++j)
        for (int l = 0; l < p.N; ++l) a(j, l) = std::pow(r.v[j], double(b + l));
    return gauss_solve(a, ComplexMatrix::column(std::vector<cplx>(p.N, 1.0))).entries;
}

// Mirror problem below a < 0, by reflection.
inline cplx H_minus(const WalkParams& p, long a, long ell, double z)
{
    require(a <= -1, "a must be a negative integer");
    require(ell <= a && ell >= a - p.N + 1, "ell must lie in {a-N+1..a}");
    return H_plus(p, -a, -ell, z);
}

// Solution of sum_l H_l u_j^l = 1 over l in {a-N+1..a}, written with the u-roots.
inline cplx H_minus_direct(const WalkParams& p, long a, long ell, double z)
{
    require(a <= -1, "a must be a negative integer");
    require(ell <= a && ell >= a - p.N + 1, "ell must lie in {a-N+1..a}");
    const RootSet r = roots(p, z);
    const auto pk = detail::lagrange_denominators(r.u);
    cplx s = 0.0;
    for (int k = 0; k < p.N; ++k)
        s += esym_at(esym_all(r.u, k), a - ell) / pk[k] * std::pow(r.u[k], double(p.N - a - 1));
    return double(parity_sign(a - ell)) * s;
}

// sum_k L_k(zeta) (u_k zeta)^b with L_k the Lagrange basis on the v-roots.
inline cplx H_plus_double_from_roots(const RootSet& r, long b, cplx zeta)
{
    require(b >= 1, "b must be a positive integer");
    const std::size_t N = r.u.size();
    cplx s = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
        cplx l = 1.0;
        for (std::size_t j = 0; j < N; ++j)
            if (j != k) l *= (zeta - r.v[j]) / (r.v[k] - r.v[j]);
        s += l * std::pow(r.u[k] * zeta, double(b));
    }
    return s;
}

inline cplx H_plus_double(const WalkParams& p, long b, double z, cplx zeta)
{
    return H_plus_double_from_roots(roots(p, z), b, zeta);
}

inline cplx H_plus_double_sum(const WalkParams& p, long b, double z, cplx zeta)
{
    const auto h = H_plus_from_roots(roots(p, z), b);
    cplx s = 0.0;
    for (std::size_t m = 0; m < h.size(); ++m) s += h[m] * std::pow(zeta, double(b + long(m)));
    return s;
}

struct OvershootLaw {
    long b = 1;
    std::vector<Rational> masses; // index ell - b

    Rational mass(long ell) const
    {
        return (ell < b || ell >= b + long(masses.size())) ? Rational(0) : masses[ell - b];
    }

    SignedMeasure measure() const
    {
        SignedMeasure m;
        for (std::size_t i = 0; i < masses.size(); ++i) m.add(b + long(i), masses[i]);
        return m;
    }
};

// P{S_b = l} = (-1)^{b+l} (b/l) C(N-1, l-b) C(b+N-1, b)
inline OvershootLaw dist_S_b_plus(int N, long b)
{
    require(N >= 1, "N must be at least 1");
    require(b >= 1, "b must be a positive integer");
    OvershootLaw law;
    law.b = b;
    for (long l = b; l <= b + N - 1; ++l)
        law.masses.push_back(parity_sign(b + l) * make_rational(b, l) * binomial(N - 1, l - b) * binomial(b + N - 1, b));
    return law;
}

// E[(S_b - beta)_n]
inline Rational factorial_moment_shifted(int N, long b, long beta, long n)
{
    require(b >= 1 && n >= 0, "need b >= 1 and n >= 0");
    Rational s = 0;
    if (beta <= b) {
        for (long k = std::max(0L, n + beta - b); k <= std::min<long>(n, N - 1); ++k)
            s += parity_sign(k) * Rational(factorial(k + b - 1)) / Rational(factorial(k + b - beta - n)) * binomial(n, k);
        return s * Rational(factorial(b - beta)) / Rational(factorial(b - 1));
    }
    for (long k = 0; k <= std::min<long>(n, N - 1); ++k)
        s += Rational(factorial(k + b - 1) * factorial(beta - b + n - k - 1)) * binomial(n, k);
    return parity_sign(n) * s / Rational(factorial(b - 1) * factorial(beta - b - 1));
}

inline Rational factorial_moment_shifted_direct(int N, long b, long beta, long n)
{
    return dist_S_b_plus(N, b).measure().expectation([&](long l) { return falling_factorial(l - beta, n); });
}

inline Rational moments_S_b_plus(int N, long b, long n)
{
    require(n >= 1, "n must be positive");
    return dist_S_b_plus(N, b).measure().expectation([&](long l) { return ipow(Rational(l), n); });
}

inline Rational factorial_moments_S_b_plus(int N, long b, long n)
{
    return factorial_moment_shifted_direct(N, b, 0, n);
}

// (-1)^{N-1} C(n-1, N-1) (b+N-1)_n, valid for N <= n <= b+N-1
inline Rational factorial_moment_closed(int N, long b, long n)
{
    require(n >= N && n <= b + N - 1, "closed factorial moment needs N <= n <= b+N-1");
    return parity_sign(N - 1) * binomial(n - 1, N - 1) * falling_factorial(b + N - 1, n);
}

// sum_j (-1)^j C(j+b-1, b-1) (D+)^j f(b)
inline Rational expect_f_S_b_plus(int N, long b, const ValueTable& f)
{
    Rational s = 0;
    for (long j = 0; j < N; ++j) s += parity_sign(j) * binomial(j + b - 1, b - 1) * forward_diff(f, b, j);
    return s;
}

inline Rational expect_f_S_b_plus_direct(int N, long b, const ValueTable& f)
{
    return dist_S_b_plus(N, b).measure().expectation([&](long l) { return f.at(l); });
}

// zeta^b sum_j C(j+b-1, b-1) (1-zeta)^j
inline Rational genfun_S_b_plus(int N, long b, const Rational& zeta)
{
    Rational s = 0;
    for (long j = 0; j < N; ++j) s += binomial(j + b - 1, b - 1) * ipow(1 - zeta, j);
    return ipow(zeta, b) * s;
}

// b C(b+N-1, b) zeta^b int_0^1 x^{b-1} (1 - zeta x)^{N-1} dx
inline Rational genfun_S_b_plus_integral(int N, long b, const Rational& zeta)
{
    Rational s = 0;
    for (long i = 0; i < N; ++i) s += binomial(N - 1, i) * ipow(-zeta, i) / (b + i);
    return b * binomial(b + N - 1, b) * ipow(zeta, b) * s;
}

struct NewtonPolys {
    long b = 0;
    std::vector<Polynomial> polys;
};

// P_{b,j}(x) = (1/j!) prod_{k<j} (x - b - k)
inline NewtonPolys newton_polys(int N, long b)
{
    NewtonPolys np;
    np.b = b;
    for (long j = 0; j < N; ++j) {
        Polynomial pj = Polynomial::constant(1);
        for (long k = 0; k < j; ++k) pj = pj * Polynomial::linear(Rational(-b - k), 1);
        np.polys.push_back(pj * (1 / Rational(factorial(j))));
    }
    return np;
}

inline Rational expect_from_x(int N, long b, long x, const ValueTable& f)
{
    const NewtonPolys np = newton_polys(N, b);
    Rational s = 0;
    for (long j = 0; j < N; ++j) s += np.polys[j](Rational(x)) * forward_diff(f, b, j);
    return s;
}

// E_x[f(S_b)] through the law of the overshoot of b - x.
inline Rational expect_from_x_shifted(int N, long b, long x, const ValueTable& f)
{
    require(x < b, "start must lie below the threshold");
    return dist_S_b_plus(N, b - x).measure().expectation([&](long l) { return f.at(l + x); });
}

struct MarkovReport {
    Rational lhs_exact;    // E_x[f(S_{sigma+n})] from the overshoot law
    Rational rhs_exact;    // boundary-polynomial side
    Rational series_value; // DP series at z
    Rational series_tail;
    double closed_value = 0.0; // sum_l H_l(z) E_l f(S_n)
    bool series_ok = false;
};

inline Rational expect_after(const WalkParams& p, long start, long n, const Polynomial& f)
{
    return walk_pmf_convolution(p, n).expectation([&](long k) { return f(Rational(start + k)); });
}

inline MarkovReport markov_check(const WalkParams& p, long b, long x, long n, const Polynomial& f, const Rational& z, long horizon = 40)
{
    if (n < 0 || n > 8) throw HorizonTooLarge("n must lie in [0, 8]");
    require(x < b, "start must lie below the threshold");
    ValueTable g;
    for (long l = b; l <= b + p.N - 1; ++l) g.set(l, expect_after(p, l, n, f));
    MarkovReport rep;
    rep.lhs_exact = expect_from_x_shifted(p.N, b, x, g);
    rep.rhs_exact = expect_from_x(p.N, b, x, g);

    AbsorbingDP dp{p, std::nullopt, b, horizon, x};
    const auto sv = eval_series(markov_functional_series(dp, n, f), z);
    rep.series_value = sv.value;
    rep.series_tail = sv.tail;
    const auto h = H_plus_from_roots(roots(p, z.get_d()), b - x);
    cplx s = 0.0;
    for (long l = b; l <= b + p.N - 1; ++l) s += h[l - b] * to_double(g.at(l));
    rep.closed_value = s.real();
    rep.series_ok = std::fabs(rep.closed_value - sv.value.get_d()) <= sv.tail.get_d() + 1e-9;
    return rep;
}

} // namespace pw
