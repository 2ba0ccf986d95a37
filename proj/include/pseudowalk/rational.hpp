#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace pw {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1)
{
    return make_rational(Integer(num), Integer(den));
}

// Accepts "p/q" or an integer literal. Decimal or exponent notation is rejected.
inline Rational parse_rational(const std::string& text)
{
    if (text.empty()) throw DomainError("empty rational literal");
    auto slash = text.find('/');
    auto valid_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den))
        throw DomainError("expected an exact rational p/q, got '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    return make_rational(Integer(num), Integer(den));
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

inline int sign_of(const Rational& q) { return sgn(q); }

inline Rational abs_of(const Rational& q) { return abs(q); }

inline Rational ipow(const Rational& x, long n)
{
    if (n < 0) return ipow(1 / x, -n);
    Rational r = 1, b = x;
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

inline Integer factorial(long n)
{
    if (n < 0) throw DomainError("factorial of a negative integer");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// (i)_n = i(i-1)...(i-n+1)
inline Rational falling_factorial(long i, long n)
{
    if (n < 0) throw DomainError("falling factorial with negative length");
    Integer r = 1;
    for (long k = 0; k < n; ++k) r *= Integer(i - k);
    return Rational(r);
}

inline Rational falling_factorial(const Rational& x, long n)
{
    if (n < 0) throw DomainError("falling factorial with negative length");
    Rational r = 1;
    for (long k = 0; k < n; ++k) r *= x - k;
    return r;
}

// Zero for k<0 and for 0<=n<k; generalized for negative n.
inline Rational binomial(long n, long k)
{
    if (k < 0) return 0;
    if (n >= 0) {
        if (k > n) return 0;
        Integer r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return Rational(r);
    }
    return falling_factorial(n, k) / Rational(factorial(k));
}

inline long parity_sign(long n) { return (n % 2 == 0) ? 1 : -1; }

} // namespace pw
