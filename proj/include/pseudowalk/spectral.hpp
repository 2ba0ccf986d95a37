#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "errors.hpp"
#include "walk.hpp"

namespace pw {

using cplx = std::complex<double>;

inline constexpr double kMinZ = 1e-6;

// Roots of P_z(u) = (1-z)u^N - kappa c z (u-1)^{2N}: u_j inside the unit disc, v_j = 1/u_j.
struct RootSet {
    double z = 0.0;
    double w = 0.0;
    std::vector<cplx> u, v, theta;
    std::vector<double> a, b;
    std::vector<int> eps;
};

// one_minus_z is passed separately so that z = exp(-x) with tiny x keeps its digits.
inline RootSet roots_with_complement(const WalkParams& p, double z, double one_minus_z)
{
    require(z >= kMinZ && z < 1.0 && one_minus_z > 0.0, "roots: z must lie in [1e-6, 1)");
    const int N = p.N;
    const double c = to_double(p.c);
    RootSet r;
    r.z = z;
    r.w = std::pow(one_minus_z, 1.0 / N) / (2.0 * std::pow(c * z, 1.0 / N));
    const double sw = std::sqrt(r.w);
    for (int j = 1; j <= N; ++j) {
        const double alpha = (2 * j - 1) * std::numbers::pi / N;
        const double cs = std::cos(alpha);
        const int eps = (2 * j - 1 < N) ? 1 : (2 * j - 1 == N ? 0 : -1);
        const cplx theta = eps == 0 ? cplx(1.0, 0.0) : -std::polar(1.0, alpha);
        const double rad = std::sqrt(r.w * r.w - 4.0 * cs * r.w + 4.0);
        // (rad + t)(rad - t) = 4 sin^2; take the sum without cancellation and divide
        const double t = r.w - 2.0 * cs, sn = std::sin(alpha);
        const double big = rad + std::fabs(t), small = 4.0 * sn * sn / big;
        const double aj = std::sqrt((t >= 0.0 ? big : small) / 2.0);
        const double bj = eps == 0 ? 0.0 : std::sqrt((t >= 0.0 ? small : big) / 2.0);
        const cplx v = 1.0 + theta * r.w + theta * sw * cplx(aj, eps * bj);
        r.theta.push_back(theta);
        r.a.push_back(aj);
        r.b.push_back(bj);
        r.eps.push_back(eps);
        r.v.push_back(v);
        r.u.push_back(1.0 / v);
    }
    return r;
}

inline RootSet roots(const WalkParams& p, double z)
{
    require(z > 0.0 && z < 1.0, "roots: z must lie in (0,1)");
    return roots_with_complement(p, z, 1.0 - z);
}

inline cplx eval_Pz(const WalkParams& p, double z, cplx u)
{
    return (1.0 - z) * std::pow(u, p.N) - double(p.kappa) * to_double(p.c) * z * std::pow(u - 1.0, 2 * p.N);
}

inline cplx G_k_from_roots(const RootSet& r, double one_minus_z, long k)
{
    const std::size_t N = r.u.size();
    cplx s = 0.0;
    for (std::size_t j = 0; j < N; ++j) s += (1.0 - r.u[j]) / (1.0 + r.u[j]) * std::pow(r.u[j], double(std::labs(k)));
    return s / (double(N) * one_minus_z);
}

// sum_n P{S_n = k} z^n
inline cplx G_k(const WalkParams& p, double z, long k)
{
    return G_k_from_roots(roots(p, z), 1.0 - z, k);
}

// sum_n sum_k P{S_n = k} z^n zeta^k on the annulus |u_j| < |zeta| < |v_j|
inline cplx G_double(const WalkParams& p, cplx zeta, double z)
{
    const RootSet r = roots(p, z);
    for (std::size_t j = 0; j < r.u.size(); ++j)
        require(std::abs(r.u[j]) < std::abs(zeta) && std::abs(zeta) < std::abs(r.v[j]),
                "G_double: zeta outside the convergence annulus");
    const double c = to_double(p.c);
    const cplx zn = std::pow(zeta, p.N);
    return zn / ((1.0 - z) * zn - double(p.kappa) * c * z * std::pow(1.0 - zeta, 2 * p.N));
}

inline double G_double_unit_circle(const WalkParams& p, double theta, double z)
{
    return 1.0 / (1.0 - z + to_double(p.c) * std::pow(4.0, p.N) * z * std::pow(std::sin(theta / 2), 2 * p.N));
}

struct ContinuumRoots {
    std::vector<cplx> phi;
};

// phi_j = -i exp(i pi (2j-1)/(2N)), the 2N-th roots of kappa with positive real part
inline ContinuumRoots continuum_phis(int N)
{
    require(N >= 1, "N must be at least 1");
    ContinuumRoots cr;
    for (int j = 1; j <= N; ++j) cr.phi.push_back(cplx(0, -1) * std::polar(1.0, (2 * j - 1) * std::numbers::pi / (2.0 * N)));
    return cr;
}

struct AsymptoticRow {
    double z;
    int j;
    cplx ratio;
};

struct AsymptoticReport {
    std::vector<AsymptoticRow> rows;
    double max_deviation_at_last = 0.0;
};

// (u_j(z) - 1) / (-phi_j (1-z)^{1/2N} c^{-1/2N}) for each z, expected to tend to 1
inline AsymptoticReport root_asymptotic_check(const WalkParams& p, const std::vector<double>& z_grid)
{
    AsymptoticReport rep;
    const ContinuumRoots cr = continuum_phis(p.N);
    const double c = to_double(p.c);
    for (std::size_t i = 0; i < z_grid.size(); ++i) {
        const double z = z_grid[i];
        const RootSet r = roots(p, z);
        for (int j = 0; j < p.N; ++j) {
            const cplx scale = -cr.phi[j] * std::pow(1.0 - z, 1.0 / (2 * p.N)) * std::pow(c, -1.0 / (2 * p.N));
            const cplx ratio = (r.u[j] - 1.0) / scale;
            rep.rows.push_back({z, j + 1, ratio});
            if (i + 1 == z_grid.size()) rep.max_deviation_at_last = std::max(rep.max_deviation_at_last, std::abs(ratio - 1.0));
        }
    }
    return rep;
}

} // namespace pw
