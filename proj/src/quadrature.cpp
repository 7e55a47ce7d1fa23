#include "flagkernel/quadrature.hpp"

#include "flagkernel/errors.hpp"

#include <cmath>
#include <numbers>

namespace flagkernel {

GaussLegendre gauss_legendre_unit(int order)
{
    if (order < 1)
        throw InputError("Gauss-Legendre order must be positive");
    const auto n = static_cast<std::size_t>(order);
    GaussLegendre rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    // roots are symmetric; solve for the upper half on [-1, 1]
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
                p0 = p1;
                p1 = pk;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // map [-1, 1] -> [0, 1]
        rule.nodes[i] = 0.5 * (1.0 - x);
        rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
        rule.weights[i] = 0.5 * w;
        rule.weights[n - 1 - i] = 0.5 * w;
    }
    return rule;
}

} // namespace flagkernel
