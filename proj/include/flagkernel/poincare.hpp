#pragma once

#include "flagkernel/lie.hpp"
#include "flagkernel/polynomial.hpp"

#include <vector>

namespace flagkernel {

/// Poincare polynomial of the flag manifold of `d` in the degree-2 variable t
/// (coefficient of t^j is b_{2j}):
///
///     P(t) = prod over black positive roots alpha of (1 - t^{h(alpha)+1}) / (1 - t^{h(alpha)})
///
/// Equal numerator and denominator factors are cancelled first; the remaining numerators are
/// multiplied out and each denominator divided exactly. A nonzero remainder throws
/// ConsistencyError.
IntPolynomial poincare_polynomial(const PaintedDiagram& d);

/// Same product for an arbitrary multiset of heights.
IntPolynomial poincare_from_heights(const std::vector<int>& heights);

std::vector<BigInt> betti_numbers(const PaintedDiagram& d);

/// True iff every Betti number b_0, b_2, ..., b_{2n} equals 1.
bool is_constant_betti(const PaintedDiagram& d);
bool is_constant_betti(const IntPolynomial& p);

bool is_palindromic(const IntPolynomial& p);

/// Weakly increasing up to some index, weakly decreasing after it.
bool is_unimodal(const IntPolynomial& p);

} // namespace flagkernel
