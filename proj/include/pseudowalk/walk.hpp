#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <vector>

#include "differences.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace pw {

struct WalkParams {
    int N = 1;
    Rational c = make_rational(1, 4);
    int kappa = 1;

    WalkParams() = default;
    WalkParams(int order, const Rational& scale) : N(order), c(scale), kappa(order % 2 == 1 ? 1 : -1)
    {
        require(N >= 1, "N must be at least 1");
        require(c > 0, "c must be positive");
    }
};

// Finite signed measure on the integers with exact masses.
class SignedMeasure {
public:
    SignedMeasure() = default;

    static SignedMeasure dirac(long k)
    {
        SignedMeasure m;
        m.add(k, 1);
        return m;
    }

    void add(long k, const Rational& v)
    {
        if (v == 0) return;
        auto& slot = mass_[k];
        slot += v;
        if (slot == 0) mass_.erase(k);
    }

    Rational mass(long k) const
    {
        auto it = mass_.find(k);
        return it == mass_.end() ? Rational(0) : it->second;
    }

    std::vector<long> support() const
    {
        std::vector<long> s;
        for (const auto& [k, v] : mass_) s.push_back(k);
        return s;
    }

    const std::map<long, Rational>& masses() const { return mass_; }

    Rational total_mass() const
    {
        Rational s = 0;
        for (const auto& [k, v] : mass_) s += v;
        return s;
    }

    Rational total_variation() const
    {
        Rational s = 0;
        for (const auto& [k, v] : mass_) s += abs(v);
        return s;
    }

    Rational expectation(const std::function<Rational(long)>& f) const
    {
        Rational s = 0;
        for (const auto& [k, v] : mass_) s += v * f(k);
        return s;
    }

    SignedMeasure shifted(long by) const
    {
        SignedMeasure m;
        for (const auto& [k, v] : mass_) m.add(k + by, v);
        return m;
    }

    bool operator==(const SignedMeasure& o) const { return mass_ == o.mass_; }

private:
    std::map<long, Rational> mass_;
};

inline SignedMeasure convolve(const SignedMeasure& a, const SignedMeasure& b)
{
    SignedMeasure out;
    for (const auto& [i, x] : a.masses())
        for (const auto& [j, y] : b.masses()) out.add(i + j, x * y);
    return out;
}

// p_k = p_{-k} = (-1)^{k-1} c C(2N, k+N), p_0 = 1 - c C(2N, N)
inline SignedMeasure step_pmf(const WalkParams& p)
{
    SignedMeasure m;
    for (long k = -p.N; k <= p.N; ++k) {
        if (k == 0)
            m.add(0, 1 - p.c * binomial(2 * p.N, p.N));
        else
            m.add(k, parity_sign(std::labs(k) - 1) * p.c * binomial(2 * p.N, k + p.N));
    }
    return m;
}

inline Rational step_cdf(const WalkParams& p, long k)
{
    require(std::labs(k) <= p.N, "step_cdf: |k| must not exceed N");
    Rational r = parity_sign(k - 1) * p.c * binomial(2 * p.N - 1, k + p.N);
    if (k >= 0) r += 1;
    return r;
}

struct Bounds {
    Rational m1;
    Rational m_inf;
};

inline Bounds bounds(const WalkParams& p)
{
    const Rational four_n = ipow(Rational(4), p.N);
    const Rational central = binomial(2 * p.N, p.N);
    Bounds b;
    if (p.c <= 1 / central)
        b.m1 = 1 + p.c * (four_n - 2 * central);
    else
        b.m1 = p.c * four_n - 1;
    if (p.c <= 1 / ipow(Rational(2), 2 * p.N - 1))
        b.m_inf = 1;
    else
        b.m_inf = p.c * four_n - 1;
    return b;
}

inline double char_fn(const WalkParams& p, double theta)
{
    return 1.0 - to_double(p.c) * std::pow(4.0, p.N) * std::pow(std::sin(theta / 2), 2 * p.N);
}

// E zeta^{U_1} = 1 + kappa c (1 - zeta)^{2N} / zeta^N
inline std::complex<double> step_genfun(const WalkParams& p, std::complex<double> zeta)
{
    return 1.0 + double(p.kappa) * to_double(p.c) * std::pow(1.0 - zeta, 2 * p.N) / std::pow(zeta, p.N);
}

inline SignedMeasure walk_pmf_convolution(const WalkParams& p, long n)
{
    SignedMeasure law = SignedMeasure::dirac(0);
    const SignedMeasure step = step_pmf(p);
    for (long i = 0; i < n; ++i) law = convolve(law, step);
    return law;
}

inline Rational walk_pmf_closed_at(const WalkParams& p, long n, long k)
{
    if (std::labs(k) > p.N * n) return 0;
    Rational s = 0;
    Rational mc = -p.c, power = 1;
    for (long l = 0; l <= n; ++l) {
        s += power * binomial(n, l) * binomial(2 * p.N * l, k + p.N * l);
        power *= mc;
    }
    return parity_sign(k) * s;
}

inline SignedMeasure walk_pmf_closed(const WalkParams& p, long n)
{
    require(n >= 0, "n must be non-negative");
    SignedMeasure m;
    for (long k = -p.N * n; k <= p.N * n; ++k) m.add(k, walk_pmf_closed_at(p, n, k));
    return m;
}

inline Rational walk_cdf_closed(const WalkParams& p, long n, long k)
{
    require(n >= 0, "n must be non-negative");
    require(std::labs(k) <= p.N * n, "walk_cdf: |k| must not exceed N n");
    Rational s = 0;
    Rational mc = -p.c, power = mc;
    for (long l = 1; l <= n; ++l) {
        s += power * binomial(n, l) * binomial(2 * p.N * l - 1, k + p.N * l);
        power *= mc;
    }
    Rational r = parity_sign(k) * s;
    if (k >= 0) r += 1;
    return r;
}

// sum_k p_k f(j+k) - f(j)
inline Rational generator_apply(const WalkParams& p, const ValueTable& f, long j)
{
    Rational s = -f.at(j);
    const SignedMeasure step = step_pmf(p);
    for (const auto& [k, pk] : step.masses()) s += pk * f.at(j + k);
    return s;
}

} // namespace pw
