#pragma once

#include <vector>

namespace flagkernel {

/// Gauss-Legendre rule mapped to [0, 1]. Exact for polynomials of degree <= 2*order - 1.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Nodes by Newton iteration on P_order from the Tricomi initial guesses. Throws InputError for order < 1.
GaussLegendre gauss_legendre_unit(int order);

} // namespace flagkernel
