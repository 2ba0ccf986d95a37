#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "rational.hpp"

namespace pw {

// Dense polynomial with exact coefficients, lowest degree first.
struct Polynomial {
    std::vector<Rational> coeffs;

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> c) : coeffs(std::move(c)) { trim(); }
    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    // c0 + c1 x
    static Polynomial linear(const Rational& c0, const Rational& c1) { return Polynomial({c0, c1}); }

    void trim()
    {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }

    Rational operator()(const Rational& x) const
    {
        Rational r = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) r = r * x + coeffs[i];
        return r;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.coeffs.size() > coeffs.size()) coeffs.resize(o.coeffs.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Rational& s)
    {
        for (auto& c : coeffs) c *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.coeffs.empty() || b.coeffs.empty()) return {};
        std::vector<Rational> c(a.coeffs.size() + b.coeffs.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
        return Polynomial(std::move(c));
    }

    bool operator==(const Polynomial& o) const { return coeffs == o.coeffs; }

    // p(c0 + c1 x)
    Polynomial compose_linear(const Rational& c0, const Rational& c1) const
    {
        Polynomial r;
        Polynomial lin = linear(c0, c1);
        for (std::size_t i = coeffs.size(); i-- > 0;) r = r * lin + constant(coeffs[i]);
        return r;
    }
};

} // namespace pw
