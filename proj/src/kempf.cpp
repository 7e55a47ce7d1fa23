#include "flagkernel/kempf.hpp"

#include "flagkernel/errors.hpp"
#include "flagkernel/numeric.hpp"
#include "flagkernel/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace flagkernel {

namespace {

void validate(int n, int m, const MultiIndex& j, int max_level)
{
    if (n != 1 && n != 2)
        throw InputError("chart quadrature supports n = 1 or 2 only");
    if (m < 0 || m > max_level)
        throw InputError("level m must lie in 0.." + std::to_string(max_level));
    if (j.size() != static_cast<std::size_t>(n))
        throw InputError("multi-index length must equal n");
    if (std::any_of(j.begin(), j.end(), [](int v) { return v < 0; }))
        throw InputError("multi-index entries must be nonnegative");
    if (std::accumulate(j.begin(), j.end(), 0) > m)
        throw InputError("multi-index degree exceeds the level");
}

int default_order(int m)
{
    return m / 2 + 4;
}

// Trapezoid rule for the integral of exp(i l theta) over [0, 2 pi).
std::complex<double> phase_integral(int frequency, int points)
{
    std::complex<double> acc = 0.0;
    const double h = 2.0 * std::numbers::pi / points;
    for (int p = 0; p < points; ++p)
        acc += std::polar(1.0, frequency * h * p);
    return acc * h;
}

struct OrderResult {
    std::complex<double> value;
    // same integral with the phases replaced by their modulus
    double magnitude;
};

OrderResult integrate(int n, int m, const MultiIndex& j, const MultiIndex& k, int order)
{
    const GaussLegendre rule = gauss_legendre_unit(order);
    const int phase_points = 2 * m + 3;
    const double two_pi = 2.0 * std::numbers::pi;

    if (n == 1) {
        const double s = 0.5 * (j[0] + k[0]);
        double radial = 0.0;
        for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
            const double u = rule.nodes[q];
            radial += rule.weights[q] * std::pow(u, s) * std::pow(1.0 - u, m - s);
        }
        radial *= 0.5;
        return {radial * phase_integral(j[0] - k[0], phase_points), radial * two_pi};
    }

    const double s1 = 0.5 * (j[0] + k[0]);
    const double s2 = 0.5 * (j[1] + k[1]);
    const double a = s1 + s2 + 1.0;
    double radial = 0.0;
    double angular = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        const double u = rule.nodes[q];
        radial += rule.weights[q] * std::pow(u, a) * std::pow(1.0 - u, m - s1 - s2);
        const double w = rule.nodes[q];
        angular += rule.weights[q] * std::pow(w, s1) * std::pow(1.0 - w, s2);
    }
    const double real_part = 0.25 * radial * angular;
    const auto phases = phase_integral(j[0] - k[0], phase_points) * phase_integral(j[1] - k[1], phase_points);
    return {real_part * phases, real_part * two_pi * two_pi};
}

void enumerate(int n, int m, MultiIndex& current, std::vector<MonomialSection>& out)
{
    if (static_cast<int>(current.size()) == n) {
        out.push_back({current, m});
        return;
    }
    const int used = std::accumulate(current.begin(), current.end(), 0);
    for (int v = 0; v <= m - used; ++v) {
        current.push_back(v);
        enumerate(n, m, current, out);
        current.pop_back();
    }
}

double norm_squared(const ChartPoint& z)
{
    double s = 0.0;
    for (const auto& c : z)
        s += std::norm(c);
    return s;
}

} // namespace

std::vector<MonomialSection> monomial_basis(int n, int m)
{
    if (n < 1 || m < 0)
        throw InputError("monomial basis needs n >= 1 and m >= 0");
    std::vector<MonomialSection> out;
    MultiIndex scratch;
    enumerate(n, m, scratch, out);
    return out;
}

std::complex<double> monomial_inner_product_at_order(int n, int m, const MultiIndex& j, const MultiIndex& k, int order)
{
    validate(n, m, j, std::max(m, 0));
    validate(n, m, k, std::max(m, 0));
    return integrate(n, m, j, k, order).value;
}

std::complex<double> monomial_inner_product(int n, int m, const MultiIndex& j, const MultiIndex& k,
                                            const QuadratureOptions& opts)
{
    validate(n, m, j, opts.max_level);
    validate(n, m, k, opts.max_level);
    const int order = opts.order > 0 ? opts.order : default_order(m);
    const OrderResult coarse = integrate(n, m, j, k, order);
    const OrderResult fine = integrate(n, m, j, k, 2 * order);
    if (std::abs(coarse.value - fine.value) > opts.refinement_tol * fine.magnitude)
        throw NumericError("chart quadrature did not converge between orders " + std::to_string(order) + " and "
                           + std::to_string(2 * order));
    return fine.value;
}

double monomial_norm(int n, int m, const MultiIndex& j, const QuadratureOptions& opts)
{
    return monomial_inner_product(n, m, j, j, opts).real();
}

double chart_volume(int n, const QuadratureOptions& opts)
{
    return monomial_norm(n, 0, MultiIndex(static_cast<std::size_t>(std::max(n, 0)), 0), opts);
}

MonomialNormTable MonomialNormTable::compute(int n, int m, const QuadratureOptions& opts)
{
    MonomialNormTable t;
    t.n_ = n;
    t.m_ = m;
    validate(n, m, MultiIndex(static_cast<std::size_t>(std::max(n, 0)), 0), opts.max_level);
    t.basis_ = monomial_basis(n, m);
    for (const auto& s : t.basis_)
        t.norms_.push_back(monomial_norm(n, m, s.multi_index, opts));
    return t;
}

MonomialNormTable MonomialNormTable::with_scaled_norm(std::size_t index, double factor) const
{
    if (index >= norms_.size())
        throw InputError("norm index out of range");
    MonomialNormTable t = *this;
    t.norms_[index] *= factor;
    return t;
}

std::vector<KempfSample> kempf_distortion(const MonomialNormTable& norms, const std::vector<ChartPoint>& points)
{
    std::vector<KempfSample> out;
    out.reserve(points.size());
    for (const ChartPoint& z : points) {
        if (z.size() != static_cast<std::size_t>(norms.n()))
            throw InputError("chart point dimension must equal n");
        double sum = 0.0;
        for (std::size_t b = 0; b < norms.basis().size(); ++b) {
            double mag = 1.0;
            const auto& j = norms.basis()[b].multi_index;
            for (std::size_t i = 0; i < j.size(); ++i)
                mag *= std::pow(std::norm(z[i]), j[i]);
            sum += mag / norms.norms()[b];
        }
        const double value = sum / std::pow(1.0 + norm_squared(z), norms.level());
        out.push_back({z, value, norms.level()});
    }
    return out;
}

std::vector<KempfSample> kempf_distortion(int n, int m, const std::vector<ChartPoint>& points,
                                          const QuadratureOptions& opts)
{
    return kempf_distortion(MonomialNormTable::compute(n, m, opts), points);
}

ConstancyReport constancy_report(const MonomialNormTable& norms, const std::vector<ChartPoint>& points,
                                 double tolerance, double tv_tolerance, const QuadratureOptions& opts)
{
    if (points.empty())
        throw InputError("constancy report needs at least one point");
    ConstancyReport r;
    r.n = norms.n();
    r.level = norms.level();
    r.tolerance = tolerance;
    r.tv_tolerance = tv_tolerance;
    r.samples = kempf_distortion(norms, points);
    auto [lo, hi] = std::minmax_element(r.samples.begin(), r.samples.end(),
                                        [](const KempfSample& a, const KempfSample& b) { return a.value < b.value; });
    r.t_min = lo->value;
    r.t_max = hi->value;
    r.max_deviation = r.t_max - r.t_min;
    r.volume = chart_volume(r.n, opts);
    r.h0 = to_double(binomial(static_cast<unsigned>(r.level + r.n), static_cast<unsigned>(r.n)));
    for (const auto& s : r.samples)
        r.tv_error = std::max(r.tv_error, std::abs(s.value * r.volume - r.h0));
    r.constant = r.max_deviation <= tolerance;
    r.tv_matches = r.tv_error <= tv_tolerance;
    r.pass = r.constant && r.tv_matches;
    return r;
}

ConstancyReport constancy_report(int n, int m, const std::vector<ChartPoint>& points, double tolerance,
                                 double tv_tolerance, const QuadratureOptions& opts)
{
    return constancy_report(MonomialNormTable::compute(n, m, opts), points, tolerance, tv_tolerance, opts);
}

std::vector<ChartPoint> default_chart_grid(int n)
{
    std::vector<ChartPoint> out;
    if (n == 1) {
        for (int x = -2; x <= 2; ++x)
            for (int y = -2; y <= 2; ++y)
                out.push_back({{static_cast<double>(x), static_cast<double>(y)}});
        return out;
    }
    if (n == 2) {
        const std::vector<std::complex<double>> first{{0, 0}, {1, 0}, {-1, 1}, {0, 0.5}, {2, -0.5}};
        const std::vector<std::complex<double>> second{{0, 0}, {0, -1}, {1.5, 1}, {-0.5, 0}, {1, 2}};
        for (const auto& a : first)
            for (const auto& b : second)
                out.push_back({a, b});
        return out;
    }
    throw InputError("chart grids exist for n = 1 or 2 only");
}

} // namespace flagkernel
