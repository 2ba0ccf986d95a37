#pragma once

#include <functional>
#include <map>
#include <string>

#include "errors.hpp"
#include "rational.hpp"

namespace pw {

// Integer-indexed table of exact values.
struct ValueTable {
    std::map<long, Rational> values;

    ValueTable() = default;
    ValueTable(std::initializer_list<std::pair<const long, Rational>> init) : values(init) {}

    static ValueTable from(long lo, long hi, const std::function<Rational(long)>& f)
    {
        ValueTable t;
        for (long i = lo; i <= hi; ++i) t.values[i] = f(i);
        return t;
    }

    const Rational& at(long i) const
    {
        auto it = values.find(i);
        if (it == values.end()) throw MissingValue("no value at " + std::to_string(i));
        return it->second;
    }

    void set(long i, const Rational& v) { values[i] = v; }
    bool has(long i) const { return values.count(i) != 0; }
};

// (D+)^j f(i) = sum_k (-1)^{j+k} C(j,k) f(i+k)
inline Rational forward_diff(const ValueTable& f, long i, long j)
{
    Rational s = 0;
    for (long k = 0; k <= j; ++k) s += parity_sign(j + k) * binomial(j, k) * f.at(i + k);
    return s;
}

// (D-)^j f(i) = sum_k (-1)^k C(j,k) f(i-k)
inline Rational backward_diff(const ValueTable& f, long i, long j)
{
    Rational s = 0;
    for (long k = 0; k <= j; ++k) s += parity_sign(k) * binomial(j, k) * f.at(i - k);
    return s;
}

// D^N f(i) = sum_{l=-N}^{N} (-1)^{l+N} C(2N, l+N) f(i+l)
inline Rational iterated_laplacian(const ValueTable& f, long i, int N)
{
    Rational s = 0;
    for (long l = -N; l <= N; ++l) s += parity_sign(l + N) * binomial(2 * N, l + N) * f.at(i + l);
    return s;
}

// (D+)^N (D-)^N applied one layer at a time; used to cross-check the stencil.
inline Rational iterated_laplacian_composed(const ValueTable& f, long i, int N)
{
    ValueTable g;
    for (long x = i; x <= i + N; ++x) g.set(x, backward_diff(f, x, N));
    return forward_diff(g, i, N);
}

} // namespace pw
