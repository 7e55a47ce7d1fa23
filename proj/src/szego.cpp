#include "flagkernel/szego.hpp"

#include "flagkernel/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace flagkernel {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double v)
    {
        double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// C(m, k) = m (m-1) ... (m-k+1) / k! as a polynomial in m.
RatPolynomial falling_binomial(int k)
{
    RatPolynomial p = RatPolynomial::constant(1);
    for (int i = 0; i < k; ++i)
        p = p * RatPolynomial{Rational(-i), Rational(1)};
    return p * Rational(1, factorial(static_cast<unsigned>(k)));
}

void validate_values(HilbertPolynomial& h)
{
    bool integral = true;
    bool positive = true;
    for (long m = 0; m <= std::max(h.n, 0); ++m) {
        Rational v = h.at(m);
        if (boost::multiprecision::denominator(v) != 1)
            integral = false;
        if (v <= 0)
            positive = false;
    }
    if (!integral)
        h.warnings.emplace_back(kNonIntegerValues);
    if (!positive)
        h.warnings.emplace_back(kNonPositiveValues);
}

void check_rho(double rho)
{
    if (!(rho > 0.0 && rho <= 1.0))
        throw DomainError("rho must lie in (0, 1]");
}

void check_rho(const Rational& rho)
{
    if (rho <= 0 || rho > 1)
        throw DomainError("rho must lie in (0, 1]");
}

double log_binomial(double n, double k)
{
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

} // namespace

HilbertPolynomial hilbert_from_values(std::span<const BigInt> values, int n, std::span<const BigInt> extra)
{
    if (n < 0)
        throw InputError("dimension must be nonnegative");
    if (values.size() != static_cast<std::size_t>(n) + 1)
        throw InputError("need exactly n+1 = " + std::to_string(n + 1) + " Hilbert values, got "
                         + std::to_string(values.size()));

    std::vector<BigInt> diffs(values.begin(), values.end());
    RatPolynomial p;
    for (int k = 0; k <= n; ++k) {
        p += falling_binomial(k) * Rational(diffs[0]);
        for (std::size_t i = 0; i + 1 < diffs.size(); ++i)
            diffs[i] = diffs[i + 1] - diffs[i];
        diffs.pop_back();
    }

    HilbertPolynomial h{std::move(p), n, {}};
    if (h.poly.degree() != n)
        h.warnings.emplace_back(kDegreeMismatch);
    validate_values(h);
    for (std::size_t i = 0; i < extra.size(); ++i) {
        long m = n + 1 + static_cast<long>(i);
        if (h.at(m) != Rational(extra[i]))
            throw InputError("Hilbert validation value at m=" + std::to_string(m) + " is " + to_string(extra[i])
                             + " but the interpolant gives " + to_string(h.at(m)));
    }
    return h;
}

HilbertPolynomial hilbert_from_coeffs(std::vector<Rational> coeffs, int n)
{
    HilbertPolynomial h{RatPolynomial(std::move(coeffs)), 0, {}};
    if (h.poly.is_zero())
        throw InputError("Hilbert polynomial must be nonzero");
    h.n = n < 0 ? static_cast<int>(h.poly.degree()) : n;
    if (h.poly.degree() != h.n)
        h.warnings.emplace_back(kDegreeMismatch);
    validate_values(h);
    return h;
}

RatPolynomial shifted_binomial(int k)
{
    RatPolynomial p = RatPolynomial::constant(1);
    for (int i = 1; i <= k; ++i)
        p = p * RatPolynomial{Rational(i), Rational(1)};
    return p * Rational(1, factorial(static_cast<unsigned>(k)));
}

std::vector<Rational> binomial_change(const RatPolynomial& p, int n)
{
    if (n < 0 || p.degree() > n)
        throw InputError("polynomial degree exceeds n = " + std::to_string(n));
    std::vector<Rational> d(static_cast<std::size_t>(n) + 1, Rational(0));
    RatPolynomial rem = p;
    for (int k = n; k >= 0; --k) {
        // C(m+k, k) has leading coefficient 1/k!
        d[static_cast<std::size_t>(k)] = rem.coeff(static_cast<std::size_t>(k)) * Rational(factorial(static_cast<unsigned>(k)));
        rem -= shifted_binomial(k) * d[static_cast<std::size_t>(k)];
    }
    if (!rem.is_zero())
        throw ConsistencyError("binomial-basis elimination left a remainder");
    return d;
}

std::vector<Rational> binomial_change(const HilbertPolynomial& p)
{
    return binomial_change(p.poly, p.n);
}

RatPolynomial reconstruct_from_binomial(std::span<const Rational> d)
{
    RatPolynomial p;
    for (std::size_t k = 0; k < d.size(); ++k)
        p += shifted_binomial(static_cast<int>(k)) * d[k];
    return p;
}

SzegoClosedForm::SzegoClosedForm(Rational volume, std::vector<Rational> d, int n)
    : volume_(std::move(volume)), d_(std::move(d)), n_(n)
{
    if (volume_ <= 0)
        throw InputError("volume must be positive");
    if (n_ < 0 || d_.size() != static_cast<std::size_t>(n_) + 1)
        throw InputError("closed form needs d_0..d_n");
}

RatPolynomial SzegoClosedForm::a_polynomial() const
{
    std::vector<Rational> c(d_.rbegin(), d_.rend());
    return RatPolynomial(std::move(c)) * Rational(1 / volume_);
}

bool SzegoClosedForm::leading_is_factorial() const
{
    return d_.back() == Rational(factorial(static_cast<unsigned>(n_)));
}

SzegoClosedForm make_closed_form(const HilbertPolynomial& h0, const Rational& volume)
{
    return SzegoClosedForm(volume, binomial_change(h0), h0.n);
}

Rational evaluate_closed_form(const SzegoClosedForm& s, const Rational& rho)
{
    check_rho(rho);
    Rational inv = 1 / rho;
    Rational power = inv;
    Rational acc = 0;
    for (const Rational& dk : s.d()) {
        acc += dk * power;
        power *= inv;
    }
    return acc / s.volume();
}

double evaluate_closed_form(const SzegoClosedForm& s, double rho)
{
    check_rho(rho);
    // Horner in u = 1/rho: u (d_0 + u (d_1 + ... ))
    const double u = 1.0 / rho;
    double acc = 0.0;
    for (auto it = s.d().rbegin(); it != s.d().rend(); ++it)
        acc = acc * u + to_double(*it);
    return acc * u / to_double(s.volume());
}

Rational fefferman_a(const SzegoClosedForm& s, const Rational& rho)
{
    check_rho(rho);
    return s.a_polynomial().evaluate(rho);
}

double fefferman_a(const SzegoClosedForm& s, double rho)
{
    check_rho(rho);
    double acc = 0.0;
    for (const Rational& dk : s.d())
        acc = acc * rho + to_double(dk);
    return acc / to_double(s.volume());
}

double szego_partial_sum(const HilbertPolynomial& h0, const Rational& volume, double x, long truncate)
{
    if (!(x >= 0.0 && x < 1.0))
        throw DomainError("x must lie in [0, 1)");
    if (volume <= 0)
        throw InputError("volume must be positive");
    CompensatedSum sum;
    for (long m = 0; m <= truncate; ++m)
        sum.add(to_double(h0.at(m)) * std::pow(x, static_cast<double>(m)));
    return sum.value() / to_double(volume);
}

double szego_partial_sum(std::span<const double> h0_values, double volume, double x, long truncate)
{
    if (!(x >= 0.0 && x < 1.0))
        throw DomainError("x must lie in [0, 1)");
    if (!(volume > 0.0))
        throw InputError("volume must be positive");
    CompensatedSum sum;
    const long last = std::min<long>(truncate, static_cast<long>(h0_values.size()) - 1);
    for (long m = 0; m <= last; ++m)
        sum.add(h0_values[static_cast<std::size_t>(m)] * std::pow(x, static_cast<double>(m)));
    return sum.value() / volume;
}

double series_tail_bound(int k, double x, long truncate)
{
    if (x <= 0.0)
        return 0.0;
    // terms t_m = C(m+k, k) x^m; t_{m+1}/t_m = x (m+k+1)/(m+1) decreases in m
    const double m1 = static_cast<double>(truncate + 1);
    const double ratio = x * (m1 + k + 1.0) / (m1 + 1.0);
    if (ratio >= 1.0)
        return std::numeric_limits<double>::infinity();
    const double log_term = log_binomial(m1 + k, k) + m1 * std::log(x);
    return std::exp(log_term) / (1.0 - ratio);
}

long truncation_for(int k, double x, double tol)
{
    constexpr long kLimit = 50'000'000;
    for (long m = 0; m < kLimit; ++m)
        if (series_tail_bound(k, x, m) <= tol)
            return m;
    throw NumericError("no truncation below the series tail bound");
}

long closed_form_truncation(const SzegoClosedForm& s, double x, double rel_tol)
{
    const double target = rel_tol * std::abs(evaluate_closed_form(s, 1.0 - x));
    const double inv_volume = 1.0 / to_double(s.volume());
    constexpr long kLimit = 50'000'000;
    for (long m = 0; m < kLimit; ++m) {
        double bound = 0.0;
        for (std::size_t k = 0; k < s.d().size(); ++k)
            bound += std::abs(to_double(s.d()[k])) * series_tail_bound(static_cast<int>(k), x, m);
        if (bound * inv_volume <= target)
            return m;
    }
    throw NumericError("no truncation below the series tail bound");
}

double geometric_series_check(int k, double x, long truncate)
{
    if (!(x > 0.0 && x < 1.0))
        throw DomainError("x must lie in (0, 1)");
    if (k < 0)
        throw InputError("k must be nonnegative");
    CompensatedSum sum;
    for (long m = 0; m <= truncate; ++m) {
        double c = to_double(binomial(static_cast<unsigned>(m + k), static_cast<unsigned>(k)));
        sum.add(c * std::pow(x, static_cast<double>(m)));
    }
    return std::abs(sum.value() - std::pow(1.0 - x, -(k + 1.0)));
}

FeffermanFit fit_log_term(std::span<const std::pair<double, double>> samples, int n)
{
    if (n < 0)
        throw InputError("dimension must be nonnegative");
    const auto unknowns = static_cast<Eigen::Index>(n) + 3;
    if (static_cast<Eigen::Index>(samples.size()) < unknowns + 1)
        throw InputError("log-term fit needs at least n+4 = " + std::to_string(n + 4) + " samples");
    std::set<double> seen;
    for (const auto& [rho, value] : samples) {
        if (!(rho > 0.0 && rho <= 0.5))
            throw DomainError("fit samples need rho in (0, 1/2]");
        if (!std::isfinite(value))
            throw DomainError("fit samples must be finite");
        if (!seen.insert(rho).second)
            throw InputError("fit samples need distinct rho values");
    }

    const auto rows = static_cast<Eigen::Index>(samples.size());
    Eigen::MatrixXd design(rows, unknowns);
    Eigen::VectorXd target(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto [rho, value] = samples[static_cast<std::size_t>(i)];
        double power = 1.0;
        for (int j = 0; j <= n + 1; ++j) {
            design(i, j) = power;
            power *= rho;
        }
        const double top = std::pow(rho, n + 1);
        design(i, n + 2) = top * std::log(rho);
        target(i) = value * top;
        // rows weighted by 1/rho so the small-rho end, where the leading terms dominate, drives the fit
        design.row(i) /= rho;
        target(i) /= rho;
    }

    Eigen::VectorXd scale = design.colwise().norm().transpose();
    Eigen::MatrixXd scaled = design * scale.cwiseInverse().asDiagonal();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(scaled);
    const auto& sv = svd.singularValues();
    const double cond = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1) : std::numeric_limits<double>::infinity();
    if (!(cond <= kMaxFitCondition))
        throw FitError("log-term design matrix is rank deficient", cond);

    Eigen::VectorXd coef = scaled.householderQr().solve(target).cwiseQuotient(scale);
    FeffermanFit fit;
    fit.poly_coeffs.assign(coef.data(), coef.data() + n + 2);
    fit.b_est = coef(n + 2);
    fit.residual_norm = (design * coef - target).norm();
    fit.condition_number = cond;
    return fit;
}

std::vector<double> geometric_rho_grid(int j_min, int j_max)
{
    if (j_min < 1 || j_max < j_min || j_max > 40)
        throw InputError("rho grid exponents must satisfy 1 <= j_min <= j_max <= 40");
    std::vector<double> out;
    for (int j = j_min; j <= j_max; ++j)
        out.push_back(std::ldexp(1.0, -j));
    return out;
}

std::vector<std::pair<double, double>> sample_closed_form(const SzegoClosedForm& s, std::span<const double> rhos)
{
    std::vector<std::pair<double, double>> out;
    for (double rho : rhos)
        out.emplace_back(rho, evaluate_closed_form(s, rho));
    return out;
}

std::vector<std::pair<double, double>> harmonic_control_samples(std::span<const double> rhos)
{
    std::vector<std::pair<double, double>> out;
    for (double rho : rhos) {
        check_rho(rho);
        out.emplace_back(rho, -std::log(rho) / (1.0 - rho));
    }
    return out;
}

TyzCoefficients tyz_coefficients(const HilbertPolynomial& h0, const Rational& volume)
{
    if (volume <= 0)
        throw InputError("volume must be positive");
    const auto n = static_cast<std::size_t>(h0.n);
    const Rational lead = h0.poly.coeff(n);
    if (lead == 0)
        throw InputError("Hilbert polynomial has no m^n term");
    TyzCoefficients out;
    for (std::size_t j = 0; j <= n; ++j) {
        const Rational c = h0.poly.coeff(n - j);
        out.raw.push_back(c / volume);
        out.normalized.push_back(c / lead);
    }
    out.vanishing_from = h0.n + 1;
    return out;
}

} // namespace flagkernel
