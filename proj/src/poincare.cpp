#include "flagkernel/poincare.hpp"

#include "flagkernel/errors.hpp"

#include <algorithm>
#include <map>

namespace flagkernel {

namespace {

IntPolynomial one_minus_t_pow(int k)
{
    std::vector<BigInt> c(static_cast<std::size_t>(k) + 1, 0);
    c[0] = 1;
    c[static_cast<std::size_t>(k)] = -1;
    return IntPolynomial(std::move(c));
}

} // namespace

IntPolynomial poincare_from_heights(const std::vector<int>& heights)
{
    // exponent -> (numerator multiplicity - denominator multiplicity)
    std::map<int, int> balance;
    for (int h : heights) {
        if (h < 1)
            throw InputError("root heights must be positive");
        balance[h + 1] += 1;
        balance[h] -= 1;
    }

    IntPolynomial p = IntPolynomial::constant(1);
    for (const auto& [k, mult] : balance)
        for (int i = 0; i < mult; ++i)
            p = p * one_minus_t_pow(k);
    for (const auto& [k, mult] : balance) {
        for (int i = 0; i < -mult; ++i) {
            auto [q, r] = divmod(p, one_minus_t_pow(k));
            if (!r.is_zero())
                throw ConsistencyError("Poincare product left a remainder dividing by 1 - t^" + std::to_string(k));
            p = std::move(q);
        }
    }
    return p;
}

IntPolynomial poincare_polynomial(const PaintedDiagram& d)
{
    IntPolynomial p = poincare_from_heights(heights_multiset(d));
    if (p.degree() != complex_dimension(d) || p.coeff(0) != 1)
        throw ConsistencyError("Poincare polynomial of " + d.name() + " has wrong degree or constant term");
    return p;
}

std::vector<BigInt> betti_numbers(const PaintedDiagram& d)
{
    return poincare_polynomial(d).coeffs();
}

bool is_constant_betti(const IntPolynomial& p)
{
    return !p.is_zero() && std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const BigInt& c) { return c == 1; });
}

bool is_constant_betti(const PaintedDiagram& d)
{
    return is_constant_betti(poincare_polynomial(d));
}

bool is_palindromic(const IntPolynomial& p)
{
    const auto& c = p.coeffs();
    return std::equal(c.begin(), c.end(), c.rbegin());
}

bool is_unimodal(const IntPolynomial& p)
{
    const auto& c = p.coeffs();
    std::size_t i = 1;
    while (i < c.size() && c[i] >= c[i - 1])
        ++i;
    while (i < c.size() && c[i] <= c[i - 1])
        ++i;
    return i >= c.size();
}

} // namespace flagkernel
