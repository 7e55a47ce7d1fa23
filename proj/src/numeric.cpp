#include "flagkernel/numeric.hpp"

#include "flagkernel/errors.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace flagkernel {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

BigInt pow10(unsigned e)
{
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i)
        r *= 10;
    return r;
}

} // namespace

Rational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw InputError("zero denominator");
    // the two-argument constructor rejects negative denominators
    if (den < 0)
        return Rational(BigInt(-num), BigInt(-den));
    return Rational(num, den);
}

BigInt parse_bigint(std::string_view text)
{
    auto s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw InputError("not an integer: '" + std::string(text) + "'");
    std::string digits(s);
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    BigInt z{digits};
    return negative ? BigInt(-z) : z;
}

Rational parse_rational(std::string_view text)
{
    auto s = trim(text);
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_bigint(s.substr(0, slash));
        BigInt den = parse_bigint(s.substr(slash + 1));
        if (den == 0)
            throw InputError("zero denominator in '" + std::string(text) + "'");
        return make_rational(num, den);
    }

    // decimal: [sign] digits [. digits] [e|E [sign] digits]
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        auto exp_part = s.substr(e + 1);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
            exp_negative = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        if (!all_digits(exp_part) || exp_part.size() > 6)
            throw InputError("bad exponent in '" + std::string(text) + "'");
        exponent = std::stol(std::string(exp_part));
        if (exp_negative)
            exponent = -exponent;
        s = s.substr(0, e);
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part))
        || (!frac_part.empty() && !all_digits(frac_part)))
        throw InputError("not a rational number: '" + std::string(text) + "'");

    std::string digits = std::string(int_part) + std::string(frac_part);
    // a leading zero would make the string constructor read octal
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
    BigInt mantissa{digits.empty() ? std::string("0") : digits};
    exponent -= static_cast<long>(frac_part.size());
    Rational r = exponent >= 0 ? Rational(mantissa * pow10(static_cast<unsigned>(exponent)))
                               : Rational(mantissa, pow10(static_cast<unsigned>(-exponent)));
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r)
{
    const auto& num = boost::multiprecision::numerator(r);
    const auto& den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

std::string to_string(const BigInt& z)
{
    return z.str();
}

double to_double(const Rational& r)
{
    return r.convert_to<double>();
}

double to_double(const BigInt& z)
{
    return z.convert_to<double>();
}

BigInt factorial(unsigned k)
{
    BigInt r = 1;
    for (unsigned i = 2; i <= k; ++i)
        r *= i;
    return r;
}

BigInt binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

} // namespace flagkernel
