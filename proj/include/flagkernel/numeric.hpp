#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace flagkernel {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den in lowest terms; the denominator may be negative. Throws InputError when it is zero.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses `p/q`, a plain integer, or a finite decimal (`3.25`, `-1e-3`) into an exact rational.
/// Throws InputError on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

BigInt parse_bigint(std::string_view text);

/// `p/q`, or `p` when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

double to_double(const Rational& r);
double to_double(const BigInt& z);

BigInt factorial(unsigned k);

/// C(n, k) exactly; zero when k > n.
BigInt binomial(unsigned n, unsigned k);

} // namespace flagkernel
