#include "flagkernel/errors.hpp"
#include "flagkernel/kempf.hpp"
#include "flagkernel/numeric.hpp"
#include "flagkernel/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

using namespace flagkernel;

namespace {

constexpr double pi = std::numbers::pi;

// ||z^j||^2 = pi^n j! (m - |j|)! / (m + n)!, a product of beta integrals
double beta_norm(int n, int m, const MultiIndex& j)
{
    double value = std::pow(pi, n) * std::tgamma(m - std::accumulate(j.begin(), j.end(), 0) + 1.0)
                   / std::tgamma(m + n + 1.0);
    for (int v : j)
        value *= std::tgamma(v + 1.0);
    return value;
}

} // namespace

TEST(GaussLegendre, IntegratesPolynomialsExactly)
{
    for (int order : {1, 3, 8, 15}) {
        const auto rule = gauss_legendre_unit(order);
        ASSERT_EQ(rule.nodes.size(), static_cast<std::size_t>(order));
        for (int p = 0; p < 2 * order; ++p) {
            double s = 0.0;
            for (std::size_t q = 0; q < rule.nodes.size(); ++q)
                s += rule.weights[q] * std::pow(rule.nodes[q], p);
            EXPECT_NEAR(s, 1.0 / (p + 1), 1e-14) << order << " " << p;
        }
    }
}

TEST(MonomialNorm, Examples)
{
    EXPECT_NEAR(monomial_norm(1, 1, {0}), pi / 2, 1e-9);
    EXPECT_NEAR(monomial_norm(1, 2, {1}), pi / 6, 1e-9);
    EXPECT_NEAR(monomial_norm(1, 0, {0}), pi, 1e-9);
    EXPECT_NEAR(chart_volume(1), pi, 1e-9);
    EXPECT_NEAR(chart_volume(2), pi * pi / 2, 1e-9);
}

TEST(MonomialNorm, MatchesBetaOracle)
{
    for (int m = 0; m <= 20; ++m)
        for (const auto& s : monomial_basis(1, m)) {
            const double want = beta_norm(1, m, s.multi_index);
            EXPECT_NEAR(monomial_norm(1, m, s.multi_index), want, 1e-9 * want) << m;
        }
    for (int m = 0; m <= 6; ++m)
        for (const auto& s : monomial_basis(2, m)) {
            const double want = beta_norm(2, m, s.multi_index);
            EXPECT_NEAR(monomial_norm(2, m, s.multi_index), want, 1e-9 * want) << m;
        }
}

TEST(MonomialNorm, OffDiagonalInnerProductsVanish)
{
    for (int n : {1, 2})
        for (int m = 1; m <= (n == 1 ? 10 : 4); ++m) {
            const auto basis = monomial_basis(n, m);
            for (const auto& a : basis)
                for (const auto& b : basis) {
                    if (a.multi_index == b.multi_index)
                        continue;
                    const double scale = std::sqrt(monomial_norm(n, m, a.multi_index) * monomial_norm(n, m, b.multi_index));
                    EXPECT_LE(std::abs(monomial_inner_product(n, m, a.multi_index, b.multi_index)), 1e-12 * scale);
                }
        }
}

TEST(MonomialNorm, RefinementChangesLittle)
{
    for (int m = 0; m <= 20; m += 4)
        for (const auto& s : monomial_basis(1, m)) {
            const int order = m / 2 + 4;
            const double coarse = monomial_inner_product_at_order(1, m, s.multi_index, s.multi_index, order).real();
            const double fine = monomial_inner_product_at_order(1, m, s.multi_index, s.multi_index, 2 * order).real();
            EXPECT_LE(std::abs(coarse - fine), 1e-9 * std::abs(fine)) << m;
        }
}

TEST(MonomialNorm, UnderResolvedQuadratureIsReported)
{
    QuadratureOptions opts;
    opts.order = 1;
    EXPECT_THROW(monomial_norm(1, 12, {6}, opts), NumericError);
}

TEST(MonomialNorm, Guards)
{
    EXPECT_THROW(monomial_norm(3, 1, {0, 0, 0}), InputError);
    EXPECT_THROW(monomial_norm(1, 21, {0}), InputError);
    EXPECT_THROW(monomial_norm(1, 2, {3}), InputError);
    EXPECT_THROW(monomial_norm(2, 2, {1}), InputError);
}

TEST(Basis, Sizes)
{
    for (int m = 0; m <= 8; ++m) {
        EXPECT_EQ(monomial_basis(1, m).size(), static_cast<std::size_t>(m + 1));
        EXPECT_EQ(monomial_basis(2, m).size(), static_cast<std::size_t>((m + 1) * (m + 2) / 2));
    }
}

TEST(Distortion, Examples)
{
    const std::vector<ChartPoint> pts{{{0, 0}}, {{1, 0}}, {{2, 1}}};
    for (const auto& s : kempf_distortion(1, 1, pts))
        EXPECT_NEAR(s.value, 2 / pi, 1e-6);
    EXPECT_NEAR(kempf_distortion(1, 5, {{{0, 0}}})[0].value, 6 / pi, 1e-6);
    for (const auto& s : kempf_distortion(1, 0, default_chart_grid(1)))
        EXPECT_NEAR(s.value, 1 / pi, 1e-6);
}

TEST(Constancy, ProjectiveLine)
{
    for (int m = 0; m <= 20; ++m) {
        const auto r = constancy_report(1, m, default_chart_grid(1), 1e-6, 1e-5);
        EXPECT_TRUE(r.pass) << m << " deviation " << r.max_deviation << " tv " << r.tv_error;
        EXPECT_EQ(r.samples.size(), 25u);
        EXPECT_NEAR(r.t_max, (m + 1) / pi, 1e-9);
    }
}

TEST(Constancy, ProjectivePlane)
{
    const auto one = constancy_report(2, 1, default_chart_grid(2), 1e-6, 1e-6);
    EXPECT_TRUE(one.pass);
    EXPECT_NEAR(one.t_max * one.volume, 3.0, 1e-9);
    for (int m = 0; m <= 3; ++m) {
        const auto r = constancy_report(2, m, default_chart_grid(2), 1e-6, 1e-4);
        EXPECT_TRUE(r.pass) << m;
        EXPECT_EQ(r.h0, (m + 1) * (m + 2) / 2);
    }
}

TEST(Constancy, InjectedFaultIsCaught)
{
    const auto table = MonomialNormTable::compute(1, 1);
    const auto bad = table.with_scaled_norm(0, 1.01);
    const auto r = constancy_report(bad, default_chart_grid(1), 1e-6, 1e-5);
    EXPECT_FALSE(r.pass);
    EXPECT_FALSE(r.constant);
    EXPECT_GT(r.max_deviation, 1e-3);
    EXPECT_LT(r.max_deviation, 1e-1);
    EXPECT_THROW(table.with_scaled_norm(5, 2.0), InputError);
}

TEST(Constancy, RejectsEmptyGridAndWrongDimension)
{
    EXPECT_THROW(constancy_report(1, 1, {}, 1e-6, 1e-6), InputError);
    EXPECT_THROW(kempf_distortion(1, 1, {{{0, 0}, {1, 0}}}), InputError);
    EXPECT_THROW(default_chart_grid(3), InputError);
}
