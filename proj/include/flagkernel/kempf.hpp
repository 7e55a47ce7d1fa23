#pragma once

// Numerical check of regular quantization on CP^n, n in {1, 2}, in the affine chart z in C^n.
//
// Conventions: omega_FS = (i/2) del delbar log(1 + |z|^2), so the volume form omega^n / n! is the
// Euclidean measure divided by (1 + |z|^2)^{n+1} and V(CP^n) = pi^n / n!.
// Sections of O(m) are polynomials of degree <= m with pointwise norm |s(z)|^2 (1 + |z|^2)^{-m}.
//
// Integrals are computed with t = |z|^2, u = t / (1 + t) in [0, 1) (radial), w = |z_1|^2 / t in
// [0, 1] (n = 2 only), and the phases theta_i. On the diagonal the integrand in (u, w) is a
// polynomial of degree <= m + 1, so a Gauss-Legendre rule with order >= m/2 + 2 is exact; the
// phase integrals use the trapezoid rule, exact for frequencies below the point count.

#include <complex>
#include <cstddef>
#include <vector>

namespace flagkernel {

using ChartPoint = std::vector<std::complex<double>>;
using MultiIndex = std::vector<int>;

struct MonomialSection {
    MultiIndex multi_index;
    int level = 0;
};

struct QuadratureOptions {
    /// Gauss-Legendre order per axis; 0 picks m/2 + 4.
    int order = 0;
    /// Maximum relative disagreement between order q and order 2q before NumericError.
    double refinement_tol = 1e-9;
    int max_level = 20;
};

/// Monomials z^j of O(m) on CP^n, |j| <= m, in lexicographic order of j.
std::vector<MonomialSection> monomial_basis(int n, int m);

/// <z^j, z^k> against omega^n / n! with weight (1 + |z|^2)^{-m}, at a fixed quadrature order.
std::complex<double> monomial_inner_product_at_order(int n, int m, const MultiIndex& j, const MultiIndex& k, int order);

/// Same, checked against the doubled order. Throws NumericError if the two disagree.
std::complex<double> monomial_inner_product(int n, int m, const MultiIndex& j, const MultiIndex& k,
                                            const QuadratureOptions& opts = {});

/// ||z^j||^2. Throws InputError for n outside {1, 2}, m above the level guard, or |j| > m.
double monomial_norm(int n, int m, const MultiIndex& j, const QuadratureOptions& opts = {});

/// Volume of CP^n from the same quadrature (the m = 0 norm of the constant section).
double chart_volume(int n, const QuadratureOptions& opts = {});

/// All squared norms for one (n, m), computed once.
class MonomialNormTable {
public:
    static MonomialNormTable compute(int n, int m, const QuadratureOptions& opts = {});

    int n() const noexcept { return n_; }
    int level() const noexcept { return m_; }
    const std::vector<MonomialSection>& basis() const noexcept { return basis_; }
    const std::vector<double>& norms() const noexcept { return norms_; }

    /// Copy with one norm multiplied by `factor`; used to inject faults.
    MonomialNormTable with_scaled_norm(std::size_t index, double factor) const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<MonomialSection> basis_;
    std::vector<double> norms_;
};

struct KempfSample {
    ChartPoint point;
    double value = 0.0;
    int level = 0;
};

/// T(z) = sum_j |z^j|^2 / (||z^j||^2 (1 + |z|^2)^m) at each point.
std::vector<KempfSample> kempf_distortion(const MonomialNormTable& norms, const std::vector<ChartPoint>& points);
std::vector<KempfSample> kempf_distortion(int n, int m, const std::vector<ChartPoint>& points,
                                          const QuadratureOptions& opts = {});

struct ConstancyReport {
    int n = 0;
    int level = 0;
    std::vector<KempfSample> samples;
    double t_min = 0.0;
    double t_max = 0.0;
    /// max T - min T over the points
    double max_deviation = 0.0;
    double volume = 0.0;
    /// C(m+n, n)
    double h0 = 0.0;
    /// max over points of |T V - h0|
    double tv_error = 0.0;
    double tolerance = 0.0;
    double tv_tolerance = 0.0;
    bool constant = false;
    bool tv_matches = false;
    bool pass = false;
};

ConstancyReport constancy_report(const MonomialNormTable& norms, const std::vector<ChartPoint>& points,
                                 double tolerance, double tv_tolerance, const QuadratureOptions& opts = {});
ConstancyReport constancy_report(int n, int m, const std::vector<ChartPoint>& points, double tolerance,
                                 double tv_tolerance, const QuadratureOptions& opts = {});

/// 25 chart points: the 5x5 lattice {-2..2} + i{-2..2} for n = 1, a product of two 5-point sets for n = 2.
std::vector<ChartPoint> default_chart_grid(int n);

} // namespace flagkernel
