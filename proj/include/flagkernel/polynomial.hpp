#pragma once

#include "flagkernel/errors.hpp"
#include "flagkernel/numeric.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace flagkernel {

/// Dense univariate polynomial, coefficient i multiplies t^i.
/// Trailing zero coefficients are trimmed, so the zero polynomial has no coefficients.
template <class Coeff>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial constant(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c)}); }

    /// c * t^k
    static Polynomial monomial(Coeff c, std::size_t k)
    {
        std::vector<Coeff> v(k + 1, Coeff(0));
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }
    Coeff leading() const { return coeffs_.empty() ? Coeff(0) : coeffs_.back(); }

    template <class X>
    X evaluate(const X& x) const
    {
        X acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + X(*it);
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Coeff& c)
    {
        for (auto& a : coeffs_)
            a *= c;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Coeff& c) { return a *= c; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Quotient and remainder by a divisor whose leading coefficient divides exactly
    /// (always the case over a field, and for +-1 leading coefficients over the integers).
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b)
    {
        if (b.is_zero())
            throw DomainError("polynomial division by zero");
        std::vector<Coeff> rem = a.coeffs_;
        if (a.degree() < b.degree())
            return {Polynomial{}, a};
        std::vector<Coeff> quot(a.coeffs_.size() - b.coeffs_.size() + 1, Coeff(0));
        const Coeff& lead = b.coeffs_.back();
        for (std::size_t k = quot.size(); k-- > 0;) {
            const Coeff& top = rem[k + b.coeffs_.size() - 1];
            if (top == 0)
                continue;
            Coeff q = top / lead;
            if (q * lead != top)
                throw ConsistencyError("inexact leading-coefficient division");
            quot[k] = q;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                rem[k + j] -= q * b.coeffs_[j];
        }
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

/// Human-readable form in the variable `var`: `1 + t + 2t^2 - t^3`. Zero prints as `0`.
template <class Coeff>
std::string to_text(const Polynomial<Coeff>& p, const std::string& var = "t")
{
    if (p.is_zero())
        return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0)
            continue;
        bool negative = c[i] < 0;
        Coeff mag = negative ? Coeff(-c[i]) : c[i];
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string m = to_string(mag);
        if (i == 0) {
            out += m;
            continue;
        }
        if (mag != 1)
            out += m.find('/') != std::string::npos ? "(" + m + ")" : m;
        out += var;
        if (i > 1)
            out += "^" + std::to_string(i);
    }
    return out;
}

} // namespace flagkernel
