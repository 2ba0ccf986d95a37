#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "walk.hpp"

namespace pw {

// Coefficients c_0..c_T of a power series in z; |c_n| <= scale * (n+1)^degree * m1^n.
struct TruncatedSeries {
    std::vector<Rational> coeffs;
    Rational m1 = 1;
    Rational scale = 1;
    int degree = 0;

    long horizon() const { return long(coeffs.size()) - 1; }
};

struct SeriesValue {
    Rational value;
    Rational tail;
};

inline SeriesValue eval_series(const TruncatedSeries& s, const Rational& z)
{
    const Rational q = s.m1 * z;
    require(q < 1, "eval_series: m1 z must be below 1");
    SeriesValue out{0, 0};
    for (std::size_t n = s.coeffs.size(); n-- > 0;) out.value = out.value * z + s.coeffs[n];
    const long t = s.horizon();
    const Rational ratio = q * ipow(make_rational(t + 3, t + 2), s.degree);
    require(ratio < 1, "eval_series: tail bound does not converge");
    out.tail = s.scale * ipow(Rational(t + 2), s.degree) * ipow(q, t + 1) / (1 - ratio);
    return out;
}

// Walk started at `start`, stopped at the first time it is <= lower or >= upper.
struct AbsorbingDP {
    WalkParams params;
    std::optional<long> lower;
    std::optional<long> upper;
    long horizon = 40;
    long start = 0;
};

struct DPRun {
    std::vector<SignedMeasure> absorbed; // absorbed[n] = P{sigma = n, S_sigma = .}, absorbed[0] empty
    bool mass_conserved = true;
};

inline DPRun run_absorbing(const AbsorbingDP& dp)
{
    require(dp.lower || dp.upper, "absorbing DP needs at least one boundary");
    require(!dp.lower || *dp.lower < dp.start, "start must lie above the lower boundary");
    require(!dp.upper || dp.start < *dp.upper, "start must lie below the upper boundary");
    require(dp.horizon >= 0, "horizon must be non-negative");
    const int N = dp.params.N;
    const SignedMeasure step = step_pmf(dp.params);
    DPRun run;
    run.absorbed.resize(dp.horizon + 1);
    std::map<long, Rational> cur{{dp.start, Rational(1)}};
    Rational absorbed_total = 0, dropped = 0;
    for (long n = 1; n <= dp.horizon; ++n) {
        std::map<long, Rational> next;
        for (const auto& [x, m] : cur)
            for (const auto& [k, pk] : step.masses()) {
                const long y = x + k;
                if ((dp.lower && y <= *dp.lower) || (dp.upper && y >= *dp.upper))
                    run.absorbed[n].add(y, m * pk);
                else
                    next[y] += m * pk;
            }
        // A point farther than N(T-n) from the only boundary cannot be absorbed before the horizon.
        const long reach = N * (dp.horizon - n);
        for (auto it = next.begin(); it != next.end();) {
            bool far = (!dp.lower && it->first < *dp.upper - reach) || (!dp.upper && it->first > *dp.lower + reach);
            if (far || it->second == 0) {
                dropped += it->second;
                it = next.erase(it);
            } else {
                ++it;
            }
        }
        cur = std::move(next);
        absorbed_total += run.absorbed[n].total_mass();
        Rational interior = 0;
        for (const auto& [x, m] : cur) interior += m;
        if (interior + absorbed_total + dropped != 1) run.mass_conserved = false;
    }
    return run;
}

inline TruncatedSeries first_passage_series(const AbsorbingDP& dp, const DPRun& run, long ell)
{
    const int N = dp.params.N;
    bool ok = false;
    if (dp.upper && ell >= *dp.upper && ell <= *dp.upper + N - 1) ok = true;
    if (dp.lower && ell <= *dp.lower && ell >= *dp.lower - N + 1) ok = true;
    require(ok, "first_passage_series: ell is not a reachable exit point");
    TruncatedSeries s;
    s.m1 = bounds(dp.params).m1;
    for (const auto& m : run.absorbed) s.coeffs.push_back(m.mass(ell));
    return s;
}

inline TruncatedSeries first_passage_series(const AbsorbingDP& dp, long ell)
{
    return first_passage_series(dp, run_absorbing(dp), ell);
}

// Coefficients of E_x[f(S_{sigma + n_after}); sigma = n]: the absorbed mass keeps walking n_after free steps.
inline TruncatedSeries markov_functional_series(const AbsorbingDP& dp, long n_after, const Polynomial& f)
{
    if (n_after < 0 || n_after > 8) throw HorizonTooLarge("n_after must lie in [0, 8]");
    const DPRun run = run_absorbing(dp);
    const SignedMeasure after = walk_pmf_convolution(dp.params, n_after);
    const Rational m1 = bounds(dp.params).m1;
    TruncatedSeries s;
    s.m1 = m1;
    for (const auto& hit : run.absorbed)
        s.coeffs.push_back(convolve(hit, after).expectation([&](long k) { return f(Rational(k)); }));
    // |f(k)| <= A (1+|k|)^d and 1+|k| <= (1 + |x| + N + N n_after)(n+1) for paths of length n + n_after.
    Rational A = 0;
    for (const auto& a : f.coeffs) A += abs(a);
    const int d = int(std::max(0L, f.degree()));
    s.degree = d;
    s.scale = A * ipow(Rational(1 + std::labs(dp.start) + dp.params.N * (1 + n_after)), d) * ipow(m1, n_after);
    return s;
}

} // namespace pw
