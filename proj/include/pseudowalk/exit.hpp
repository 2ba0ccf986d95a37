#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "differences.hpp"
#include "lacunary.hpp"
#include "oracle.hpp"
#include "overshoot.hpp"
#include "polynomial.hpp"
#include "spectral.hpp"
#include "walk.hpp"

namespace pw {

inline void check_interval(long a, long b)
{
    require(a < 0, "a must be a negative integer");
    require(b > 0, "b must be a positive integer");
}

// {a-N+1..a} u {b..b+N-1}
inline std::vector<long> exit_points(int N, long a, long b)
{
    std::vector<long> e;
    for (long l = a - N + 1; l <= a; ++l) e.push_back(l);
    for (long l = b; l <= b + N - 1; ++l) e.push_back(l);
    return e;
}

// Nodes u_1..u_N, v_1..v_N; unknowns H_l at exponent l + N - a - 1; right-hand side x^{N-a-1}.
inline LacunarySystem<cplx> exit_system(const RootSet& r, long a, long b)
{
    const int N = int(r.u.size());
    LacunarySystem<cplx> s;
    s.p = N;
    s.q = int(b - a - 1);
    s.r = N;
    s.u = r.u;
    s.u.insert(s.u.end(), r.v.begin(), r.v.end());
    for (const cplx& x : s.u) s.rhs.push_back(std::pow(x, double(N - a - 1)));
    return s;
}

inline std::map<long, cplx> exit_H_from_roots(const RootSet& r, long a, long b)
{
    check_interval(a, b);
    const auto x = lacunary_solve(exit_system(r, a, b));
    const auto e = exit_points(int(r.u.size()), a, b);
    std::map<long, cplx> h;
    for (std::size_t i = 0; i < e.size(); ++i) h[e[i]] = x[i];
    return h;
}

inline std::map<long, cplx> exit_H_all(const WalkParams& p, long a, long b, double z)
{
    return exit_H_from_roots(roots(p, z), a, b);
}

inline cplx exit_H(const WalkParams& p, long a, long b, long ell, double z)
{
    check_interval(a, b);
    const auto h = exit_H_all(p, a, b, z);
    auto it = h.find(ell);
    require(it != h.end(), "ell must be an exit point of (a,b)");
    return it->second;
}

// Cramer's rule with plain determinants W_l / W.
inline std::map<long, cplx> exit_H_naive(const WalkParams& p, long a, long b, double z)
{
    check_interval(a, b);
    const auto s = exit_system(roots(p, z), a, b);
    const ComplexMatrix m = lacunary_matrix(s);
    const cplx w = determinant(m);
    const auto e = exit_points(p.N, a, b);
    std::map<long, cplx> h;
    for (std::size_t c = 0; c < e.size(); ++c) {
        ComplexMatrix mc = m;
        for (std::size_t j = 0; j < m.rows; ++j) mc(j, c) = s.rhs[j];
        h[e[c]] = determinant(mc) / w;
    }
    return h;
}

// sum_k W(node k -> zeta)/W (zeta/x_k)^{a-N+1}
inline cplx exit_H_double_from_roots(const RootSet& r, long a, long b, cplx zeta)
{
    check_interval(a, b);
    const int N = int(r.u.size());
    const auto s = exit_system(r, a, b);
    const cplx w = lacunary_det(s);
    cplx total = 0.0;
    for (std::size_t k = 0; k < s.u.size(); ++k) {
        auto t = s;
        t.u[k] = zeta;
        total += lacunary_det(t) / w * std::pow(zeta / s.u[k], double(a - N + 1));
    }
    return total;
}

inline cplx exit_H_double(const WalkParams& p, long a, long b, double z, cplx zeta)
{
    return exit_H_double_from_roots(roots(p, z), a, b, zeta);
}

inline cplx exit_H_double_sum(const WalkParams& p, long a, long b, double z, cplx zeta)
{
    cplx s = 0.0;
    for (const auto& [l, h] : exit_H_all(p, a, b, z)) s += h * std::pow(zeta, double(l));
    return s;
}

struct ExitLaw {
    int N = 1;
    long a = -1, b = 1;
    std::vector<Rational> lower; // mass at a - i
    std::vector<Rational> upper; // mass at b + i
    Rational K;

    SignedMeasure measure() const
    {
        SignedMeasure m;
        for (std::size_t i = 0; i < lower.size(); ++i) m.add(a - long(i), lower[i]);
        for (std::size_t i = 0; i < upper.size(); ++i) m.add(b + long(i), upper[i]);
        return m;
    }
};

// C(N-a-1, N) C(N+b-1, N)
inline Rational exit_K(int N, long a, long b)
{
    return binomial(N - a - 1, N) * binomial(N + b - 1, N);
}

// (-1)^N a(a-1)...(a-N+1) b(b+1)...(b+N-1) / N!^2
inline Rational exit_K_product(int N, long a, long b)
{
    Rational r = parity_sign(N) * falling_factorial(a, N) * falling_factorial(b + N - 1, N);
    return r / Rational(factorial(N) * factorial(N));
}

inline ExitLaw dist_S_ab(int N, long a, long b)
{
    require(N >= 1, "N must be at least 1");
    check_interval(a, b);
    ExitLaw law;
    law.N = N;
    law.a = a;
    law.b = b;
    law.K = exit_K(N, a, b);
    for (long l = 0; l < N; ++l) {
        const Rational common = parity_sign(l) * law.K * N * binomial(N - 1, l) / binomial(l + b - a + N - 1, N);
        law.lower.push_back(common / (l - a));
        law.upper.push_back(common / (l + b));
    }
    return law;
}

inline std::pair<Rational, Rational> ruin_probs(int N, long a, long b)
{
    const ExitLaw law = dist_S_ab(N, a, b);
    Rational down = 0, up = 0;
    for (const auto& m : law.lower) down += m;
    for (const auto& m : law.upper) up += m;
    return {down, up};
}

inline Rational moments_S_ab(int N, long a, long b, long n)
{
    require(n >= 1, "n must be positive");
    return dist_S_ab(N, a, b).measure().expectation([&](long s) { return ipow(Rational(s), n); });
}

// -a(a-1)...(a-N+1) b(b+1)...(b+N-1)
inline Rational moment_2N_closed(int N, long a, long b)
{
    return -falling_factorial(a, N) * falling_factorial(b + N - 1, N);
}

enum class Side { lower, upper };

// E[S (S-b)_{n-1}; S on the given side]
inline Rational side_moments(int N, long a, long b, long n, Side side)
{
    require(n >= 1, "n must be positive");
    const ExitLaw law = dist_S_ab(N, a, b);
    Rational s = 0;
    if (side == Side::upper)
        for (long l = 0; l < N; ++l) s += law.upper[l] * (b + l) * falling_factorial(l, n - 1);
    else
        for (long l = 0; l < N; ++l) s += law.lower[l] * (a - l) * falling_factorial(a - l - b, n - 1);
    return s;
}

inline Rational side_moments_closed(int N, long a, long b, long n, Side side)
{
    require(n >= 1, "n must be positive");
    const Rational K = exit_K(N, a, b);
    if (n <= N) {
        const Rational v = K * N / Rational(2 * N - n) * Rational(factorial(N)) / Rational(factorial(N - n)) /
                           binomial(2 * N + b - a - 2, 2 * N - n);
        return side == Side::upper ? parity_sign(n - 1) * v : parity_sign(n) * v;
    }
    if (side == Side::upper || n <= 2 * N - 1) return 0;
    return parity_sign(N + n - 1) * K * N * Rational(factorial(N) * factorial(n - N - 1)) * binomial(n + b - a - 2, n - 2 * N);
}

// B(p, q) for positive integers
inline Rational beta_int(long p, long q)
{
    require(p >= 1 && q >= 1, "beta arguments must be positive");
    return Rational(factorial(p - 1) * factorial(q - 1)) / Rational(factorial(p + q - 1));
}

// Integral of u^al (1-u)^be v^ga (1-v)^de over 0 <= v <= u <= 1.
inline Rational double_integral_upper(long al, long be, long ga, long de)
{
    require(al >= 0 && be >= 0 && ga >= 0 && de >= 0, "double integral exponents must be non-negative");
    Rational s = 0;
    for (long i = 0; i <= de; ++i) s += parity_sign(i) * binomial(de, i) / (ga + i + 1) * beta_int(al + ga + i + 2, be + 1);
    return s;
}

// Same integrand over 0 <= u <= v <= 1.
inline Rational double_integral_lower(long al, long be, long ga, long de)
{
    return double_integral_upper(ga, de, al, be);
}

// E[C(S-b, n); S >= b] or E[C(a-S, n); S <= a] by direct expectation
inline Rational comb_moment(int N, long a, long b, long n, Side side)
{
    const ExitLaw law = dist_S_ab(N, a, b);
    Rational s = 0;
    for (long l = 0; l < N; ++l) s += (side == Side::upper ? law.upper[l] : law.lower[l]) * binomial(l, n);
    return s;
}

inline Rational comb_moment_integral(int N, long a, long b, long n, Side side)
{
    require(n >= 0 && n <= N - 1, "n must lie in {0..N-1}");
    const Rational front = parity_sign(n) * exit_K(N, a, b) * N * N * binomial(N - 1, n);
    if (side == Side::upper) return front * double_integral_upper(-a - 1, N - 1, n + b - 1, N - n - 1);
    return front * double_integral_lower(n - a - 1, N - n - 1, b - 1, N - 1);
}

struct ExitCoeffs {
    std::vector<Rational> minus; // weights of (D-)^j f(a)
    std::vector<Rational> plus;  // weights of (D+)^j f(b)
};

inline ExitCoeffs I_coeffs(int N, long a, long b)
{
    check_interval(a, b);
    ExitCoeffs c;
    const Rational front = exit_K(N, a, b) * N * N;
    for (long j = 0; j < N; ++j) {
        c.plus.push_back(parity_sign(j) * front * binomial(N - 1, j) * double_integral_upper(-a - 1, N - 1, j + b - 1, N - j - 1));
        c.minus.push_back(front * binomial(N - 1, j) * double_integral_lower(j - a - 1, N - j - 1, b - 1, N - 1));
    }
    return c;
}

inline Rational expect_exit(int N, long a, long b, const ValueTable& f)
{
    const ExitCoeffs c = I_coeffs(N, a, b);
    Rational s = 0;
    for (long j = 0; j < N; ++j) s += c.minus[j] * backward_diff(f, a, j) + c.plus[j] * forward_diff(f, b, j);
    return s;
}

inline Rational expect_exit_direct(int N, long a, long b, const ValueTable& f)
{
    return dist_S_ab(N, a, b).measure().expectation([&](long s) { return f.at(s); });
}

// zeta^a sum_j I-_j (1 - 1/zeta)^j + zeta^b sum_j I+_j (zeta - 1)^j
inline Rational genfun_S_ab(int N, long a, long b, const Rational& zeta)
{
    const ExitCoeffs c = I_coeffs(N, a, b);
    Rational lo = 0, hi = 0;
    for (long j = 0; j < N; ++j) {
        lo += c.minus[j] * ipow(1 - 1 / zeta, j);
        hi += c.plus[j] * ipow(zeta - 1, j);
    }
    return ipow(zeta, a) * lo + ipow(zeta, b) * hi;
}

struct BoundaryPolys {
    long a = -1, b = 1;
    std::vector<Polynomial> pminus, pplus;
};

inline BoundaryPolys boundary_polys(int N, long a, long b)
{
    require(N >= 1, "N must be at least 1");
    require(a < b, "a must lie below b");
    BoundaryPolys bp;
    bp.a = a;
    bp.b = b;
    // prod_{k<N} (x - a + k)
    Polynomial left = Polynomial::constant(1);
    for (long k = 0; k < N; ++k) left = left * Polynomial::linear(Rational(k - a), 1);
    std::vector<Polynomial> kt;
    for (long m = 0; m < N; ++m) {
        Polynomial t = left;
        for (long k = 0; k < N; ++k)
            if (k != m) t = t * Polynomial::linear(Rational(b + k), -1);
        kt.push_back(t);
    }
    const Rational scale = 1 / Rational(factorial(N - 1) * factorial(N));
    for (long j = 0; j < N; ++j) {
        Polynomial pj;
        for (long m = j; m < N; ++m)
            pj += kt[m] * (parity_sign(m) * binomial(m, j) * binomial(N - 1, m) / binomial(m + b - a + N - 1, N));
        bp.pplus.push_back(pj * scale);
    }
    for (long j = 0; j < N; ++j)
        bp.pminus.push_back(bp.pplus[j].compose_linear(Rational(a + b), -1) * Rational(parity_sign(j)));
    return bp;
}

inline ValueTable polynomial_table(const Polynomial& p, long lo, long hi)
{
    return ValueTable::from(lo, hi, [&](long x) { return p(Rational(x)); });
}

inline Rational expect_exit_from_x(int N, long a, long b, long x, const ValueTable& f)
{
    const BoundaryPolys bp = boundary_polys(N, a, b);
    Rational s = 0;
    for (long j = 0; j < N; ++j)
        s += bp.pminus[j](Rational(x)) * backward_diff(f, a, j) + bp.pplus[j](Rational(x)) * forward_diff(f, b, j);
    return s;
}

// E_x[f(S_ab)] from the law of the shifted interval (a-x, b-x).
inline Rational expect_exit_from_x_shifted(int N, long a, long b, long x, const ValueTable& f)
{
    require(a < x && x < b, "start must lie strictly inside (a,b)");
    return dist_S_ab(N, a - x, b - x).measure().expectation([&](long s) { return f.at(s + x); });
}

struct LauricellaSolution {
    Polynomial phi;    // the solution extended to all integers
    ValueTable values; // on {a-N+1..b+N-1}
    bool pde_holds = true;
    bool boundary_holds = true;
};

inline LauricellaSolution lauricella_solve(int N, long a, long b, const ValueTable& boundary)
{
    const BoundaryPolys bp = boundary_polys(N, a, b);
    LauricellaSolution sol;
    for (long j = 0; j < N; ++j) {
        sol.phi += bp.pminus[j] * backward_diff(boundary, a, j);
        sol.phi += bp.pplus[j] * forward_diff(boundary, b, j);
    }
    sol.values = polynomial_table(sol.phi, a - N + 1, b + N - 1);
    const ValueTable wide = polynomial_table(sol.phi, a - 2 * N, b + 2 * N);
    for (long x = a + 1; x <= b - 1; ++x)
        if (iterated_laplacian(wide, x, N) != 0) sol.pde_holds = false;
    for (long k = 0; k < N; ++k) {
        if (backward_diff(sol.values, a, k) != backward_diff(boundary, a, k)) sol.boundary_holds = false;
        if (forward_diff(sol.values, b, k) != forward_diff(boundary, b, k)) sol.boundary_holds = false;
    }
    return sol;
}

struct MarkovAbReport {
    Rational lhs_exact;
    Rational rhs_exact;
    Rational series_value;
    Rational series_tail;
    double closed_value = 0.0;
    bool series_ok = false;
};

inline MarkovAbReport markov_ab_check(const WalkParams& p, long a, long b, long x, long n, const Polynomial& f, const Rational& z,
                                      long horizon = 40)
{
    if (n < 0 || n > 8) throw HorizonTooLarge("n must lie in [0, 8]");
    require(a < x && x < b, "start must lie strictly inside (a,b)");
    ValueTable g;
    for (long l : exit_points(p.N, a, b)) g.set(l, expect_after(p, l, n, f));
    MarkovAbReport rep;
    rep.lhs_exact = expect_exit_from_x_shifted(p.N, a, b, x, g);
    rep.rhs_exact = expect_exit_from_x(p.N, a, b, x, g);

    AbsorbingDP dp{p, a, b, horizon, x};
    const auto sv = eval_series(markov_functional_series(dp, n, f), z);
    rep.series_value = sv.value;
    rep.series_tail = sv.tail;
    const auto h = exit_H_all(p, a - x, b - x, z.get_d());
    cplx s = 0.0;
    for (const auto& [l, hl] : h) s += hl * to_double(g.at(l + x));
    rep.closed_value = s.real();
    rep.series_ok = std::fabs(rep.closed_value - sv.value.get_d()) <= sv.tail.get_d() + 1e-9;
    return rep;
}

} // namespace pw
