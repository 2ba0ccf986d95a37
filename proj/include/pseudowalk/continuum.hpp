#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "errors.hpp"
#include "exit.hpp"
#include "matrix.hpp"
#include "overshoot.hpp"
#include "spectral.hpp"

namespace pw {

// Sum over anchors of sum_j coeffs[j] delta^{(j)}_location; <delta^{(j)}, f> = (-1)^j f^{(j)}.
struct DiracComb {
    struct Anchor {
        double location = 0.0;
        std::vector<double> coeffs;
    };
    std::vector<Anchor> anchors;

    double total_mass() const
    {
        double s = 0.0;
        for (const auto& a : anchors) s += a.coeffs.empty() ? 0.0 : a.coeffs[0];
        return s;
    }

    cplx fourier(double mu) const
    {
        cplx s = 0.0;
        for (const auto& a : anchors) {
            cplx t = 0.0, pk = 1.0;
            for (double c : a.coeffs) {
                t += c * pk;
                pk *= cplx(0.0, -mu);
            }
            s += std::exp(cplx(0.0, mu * a.location)) * t;
        }
        return s;
    }
};

inline double continuum_rate(double c, double lam, int N)
{
    return std::pow(lam / c, 1.0 / (2 * N));
}

inline cplx lambda_potential(int N, double c, double lam, double x)
{
    require(N >= 1 && c > 0.0, "need N >= 1 and c > 0");
    require(lam > 0.0, "lambda must be positive");
    const double r = continuum_rate(c, lam, N);
    cplx s = 0.0;
    const ContinuumRoots cr = continuum_phis(N);
    for (const cplx& phi : cr.phi) s += phi * std::exp(-phi * r * std::fabs(x));
    return s / (2.0 * N * std::pow(c, 1.0 / (2 * N)) * std::pow(lam, 1.0 - 1.0 / (2 * N)));
}

// E[exp(-lam tau_b + i mu X_b)]
inline cplx lf_tau_b(int N, double c, double b, double lam, double mu)
{
    require(c > 0.0 && b > 0.0 && lam > 0.0, "need c, b, lambda positive");
    const double r = continuum_rate(c, lam, N);
    const auto phi = continuum_phis(N).phi;
    cplx s = 0.0;
    for (int k = 0; k < N; ++k) {
        cplx term = std::exp(-phi[k] * r * b);
        for (int j = 0; j < N; ++j) {
            if (j == k) continue;
            term *= phi[j] / (phi[j] - phi[k]);
            term *= 1.0 - cplx(0.0, 1.0) * std::conj(phi[j]) * mu / r;
        }
        s += term;
    }
    return std::exp(cplx(0.0, mu * b)) * s;
}

inline DiracComb law_X_b_plus(int N, double b)
{
    require(N >= 1 && b > 0.0, "need N >= 1 and b > 0");
    DiracComb d;
    DiracComb::Anchor an;
    an.location = b;
    double c = 1.0;
    for (int j = 0; j < N; ++j) {
        an.coeffs.push_back(c);
        c *= b / (j + 1);
    }
    d.anchors.push_back(an);
    return d;
}

// e^{i mu b} sum_j (-i mu b)^j / j!
inline cplx fourier_X_b_plus(int N, double b, double mu)
{
    require(N >= 1 && b > 0.0, "need N >= 1 and b > 0");
    cplx s = 0.0, t = 1.0;
    for (int j = 0; j < N; ++j) {
        s += t;
        t *= cplx(0.0, -mu * b) / double(j + 1);
    }
    return std::exp(cplx(0.0, mu * b)) * s;
}

struct BoldCoeffs {
    std::vector<double> minus; // weights of f^{(j)}(a)
    std::vector<double> plus;  // weights of f^{(j)}(b)
};

inline BoldCoeffs bold_I_coeffs(int N, double a, double b)
{
    require(N >= 1, "N must be at least 1");
    require(a < 0.0 && b > 0.0, "need a < 0 < b");
    const double L = b - a;
    BoldCoeffs c;
    double fact = 1.0;
    for (int j = 0; j < N; ++j) {
        if (j > 0) fact *= j;
        double sm = 0.0, sp = 0.0;
        for (int k = 0; k <= N - j - 1; ++k) {
            const double ck = to_double(binomial(k + N - 1, k));
            sm += ck * std::pow(-a / L, k);
            sp += ck * std::pow(b / L, k);
        }
        c.minus.push_back(std::pow(b / L, N) * std::pow(-a, j) / fact * sm);
        c.plus.push_back(std::pow(-a / L, N) * std::pow(-b, j) / fact * sp);
    }
    return c;
}

inline DiracComb law_X_ab(int N, double a, double b)
{
    const BoldCoeffs c = bold_I_coeffs(N, a, b);
    DiracComb d;
    DiracComb::Anchor lo{a, {}}, hi{b, {}};
    for (int j = 0; j < N; ++j) {
        const double s = (j % 2 == 0) ? 1.0 : -1.0;
        lo.coeffs.push_back(s * c.minus[j]);
        hi.coeffs.push_back(s * c.plus[j]);
    }
    d.anchors = {lo, hi};
    return d;
}

// E[exp(-lam tau_ab + i mu X_ab)], nodes phi_1..phi_N and -phi_1..-phi_N.
inline cplx lf_tau_ab(int N, double c, double a, double b, double lam, double mu)
{
    require(c > 0.0 && lam > 0.0, "need c and lambda positive");
    require(a < 0.0 && b > 0.0, "need a < 0 < b");
    const double r = continuum_rate(c, lam, N);
    std::vector<cplx> nodes = continuum_phis(N).phi;
    for (int k = 0; k < N; ++k) nodes.push_back(-nodes[k]);
    const std::size_t n = nodes.size();
    ComplexMatrix d(n, n);
    double scale = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        const cplx e = std::exp(-nodes[j] * r * (b - a));
        double row = 0.0;
        for (int m = 0; m < N; ++m) {
            d(j, m) = std::pow(nodes[j], m);
            d(j, N + m) = e * std::pow(nodes[j], m);
            row += std::abs(d(j, m)) + std::abs(d(j, N + m));
        }
        scale *= row;
    }
    const cplx det = determinant(d);
    if (std::abs(det) < 1e-12 * scale) throw NearSingular("determinant of the continuum exit system is numerically zero");
    const cplx delta = cplx(0.0, -mu / r);
    cplx total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        ComplexMatrix lo = d, hi = d;
        for (int m = 0; m < N; ++m) {
            lo(k, m) = std::pow(delta, m);
            lo(k, N + m) = 0.0;
            hi(k, m) = 0.0;
            hi(k, N + m) = std::pow(delta, m);
        }
        total += std::exp(nodes[k] * r * a) *
                 (std::exp(cplx(0.0, mu * a)) * determinant(lo) + std::exp(cplx(0.0, mu * b)) * determinant(hi));
    }
    return total / det;
}

// Lattice points a_eps = floor(a/eps), b_eps = ceil(b/eps), snapping values within 1e-9 of an integer.
inline long lattice_floor(double x, double eps)
{
    const double q = x / eps;
    return std::fabs(q - std::round(q)) < 1e-9 ? std::lround(q) : long(std::floor(q));
}

inline long lattice_ceil(double x, double eps)
{
    const double q = x / eps;
    return std::fabs(q - std::round(q)) < 1e-9 ? std::lround(q) : long(std::ceil(q));
}

inline void require_continuum_scale(const WalkParams& p)
{
    require(p.c <= 1 / ipow(Rational(2), 2 * p.N - 1), "continuum probes need c <= 1/2^(2N-1)");
}

inline RootSet continuum_roots(const WalkParams& p, double lam, double eps)
{
    const double t = lam * std::pow(eps, 2 * p.N);
    return roots_with_complement(p, std::exp(-t), -std::expm1(-t));
}

// |discrete double generating function at z = e^{-lam eps^{2N}}, zeta = e^{i mu eps}| minus the limit
inline double probe_lf_tau_b(const WalkParams& p, double b, double lam, double mu, double eps)
{
    require_continuum_scale(p);
    const cplx disc = H_plus_double_from_roots(continuum_roots(p, lam, eps), lattice_ceil(b, eps), std::polar(1.0, mu * eps));
    return std::abs(disc - lf_tau_b(p.N, to_double(p.c), b, lam, mu));
}

inline double probe_lf_tau_ab(const WalkParams& p, double a, double b, double lam, double mu, double eps)
{
    require_continuum_scale(p);
    const cplx disc = exit_H_double_from_roots(continuum_roots(p, lam, eps), lattice_floor(a, eps), lattice_ceil(b, eps),
                                               std::polar(1.0, mu * eps));
    return std::abs(disc - lf_tau_ab(p.N, to_double(p.c), a, b, lam, mu));
}

// max_j |eps^j I_j(a_eps, b_eps) - bold I_j(a, b)| over both sides
inline double probe_bold_I(int N, double a, double b, double eps)
{
    const ExitCoeffs disc = I_coeffs(N, lattice_floor(a, eps), lattice_ceil(b, eps));
    const BoldCoeffs cont = bold_I_coeffs(N, a, b);
    double err = 0.0;
    for (int j = 0; j < N; ++j) {
        const double s = std::pow(eps, j);
        err = std::max(err, std::fabs(s * to_double(disc.minus[j]) - cont.minus[j]));
        err = std::max(err, std::fabs(s * to_double(disc.plus[j]) - cont.plus[j]));
    }
    return err;
}

// Fourier transform of eps S_{b_eps} against that of X_b
inline double probe_fourier_X_b_plus(int N, double b, double mu, double eps)
{
    const long be = lattice_ceil(b, eps);
    const cplx one_minus = 1.0 - std::polar(1.0, mu * eps);
    cplx s = 0.0, t = 1.0;
    for (long j = 0; j < N; ++j) {
        s += to_double(binomial(j + be - 1, be - 1)) * t;
        t *= one_minus;
    }
    return std::abs(std::polar(1.0, mu * eps * be) * s - fourier_X_b_plus(N, b, mu));
}

} // namespace pw
