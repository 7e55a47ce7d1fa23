#pragma once

// Closed-form Szego kernel of the unit disk bundle of a regularly quantized line bundle.
//
// The kernel depends on a point v of the disk bundle only through x = h*(v, v) in [0, 1), and
// rho = 1 - x is the defining function. With a regular quantization the level-m piece is the
// constant h0(m) / V, so
//
//     S(x) = sum_m h0(m) / V * x^m
//          = (1/V) sum_k d_k rho^{-k-1}           where h0(m) = sum_k d_k C(m+k, k)
//          = a(rho) rho^{-n-1},  a(rho) = (1/V) sum_k d_k rho^{n-k}
//
// and a is a polynomial in rho, so the kernel carries no log rho term. Exact arithmetic is used
// for the algebra; the floating-point entry points are separate overloads.

#include "flagkernel/numeric.hpp"
#include "flagkernel/polynomial.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace flagkernel {

/// h0(L^m) as a polynomial in m of nominal degree n.
struct HilbertPolynomial {
    RatPolynomial poly;
    int n = 0;
    /// Validation findings: "degree-mismatch", "non-integer-values", "non-positive-values".
    std::vector<std::string> warnings;

    Rational at(long m) const { return poly.evaluate(Rational(m)); }
};

inline constexpr const char* kDegreeMismatch = "degree-mismatch";
inline constexpr const char* kNonIntegerValues = "non-integer-values";
inline constexpr const char* kNonPositiveValues = "non-positive-values";

/// Interpolates h0 from its values at m = 0..n by forward differences
/// (p(m) = sum_k Delta^k h0(0) C(m, k)). `extra` holds values at m = n+1, n+2, ... that must
/// match exactly, else InputError. Requires exactly n+1 values.
HilbertPolynomial hilbert_from_values(std::span<const BigInt> values, int n, std::span<const BigInt> extra = {});

/// Coefficients in m, constant first. n defaults to the degree.
HilbertPolynomial hilbert_from_coeffs(std::vector<Rational> coeffs, int n = -1);

/// C(m+k, k) as a polynomial in m.
RatPolynomial shifted_binomial(int k);

/// Coordinates d_0..d_n of p in the basis C(m+k, k), found by eliminating from the top degree.
std::vector<Rational> binomial_change(const RatPolynomial& p, int n);
std::vector<Rational> binomial_change(const HilbertPolynomial& p);

RatPolynomial reconstruct_from_binomial(std::span<const Rational> d);

class SzegoClosedForm {
public:
    /// Throws InputError unless volume > 0 and d has n+1 entries.
    SzegoClosedForm(Rational volume, std::vector<Rational> d, int n);

    const Rational& volume() const noexcept { return volume_; }
    const std::vector<Rational>& d() const noexcept { return d_; }
    int n() const noexcept { return n_; }

    /// a(rho) as a polynomial in rho: coefficient of rho^j is d_{n-j} / V.
    RatPolynomial a_polynomial() const;

    /// Whether d_n equals n!, the normalization under which a(rho) = (n! + ...)/V literally.
    bool leading_is_factorial() const;

private:
    Rational volume_;
    std::vector<Rational> d_;
    int n_;
};

SzegoClosedForm make_closed_form(const HilbertPolynomial& h0, const Rational& volume);

/// (1/V) sum_k d_k rho^{-k-1}. DomainError unless 0 < rho <= 1.
Rational evaluate_closed_form(const SzegoClosedForm& s, const Rational& rho);
double evaluate_closed_form(const SzegoClosedForm& s, double rho);

/// (1/V)(d_n + sum_{k<n} d_k rho^{n-k}). DomainError unless 0 < rho <= 1.
Rational fefferman_a(const SzegoClosedForm& s, const Rational& rho);
double fefferman_a(const SzegoClosedForm& s, double rho);

/// sum_{m=0}^{truncate} h0(m)/V x^m, ascending m, Neumaier-compensated. DomainError unless 0 <= x < 1.
double szego_partial_sum(const HilbertPolynomial& h0, const Rational& volume, double x, long truncate);

/// Same with explicit values h0(0), h0(1), ...; the sum stops at the last value or at `truncate`.
double szego_partial_sum(std::span<const double> h0_values, double volume, double x, long truncate);

/// Upper bound on sum_{m > truncate} C(m+k, k) x^m. Infinite when the ratio test has not kicked in yet.
double series_tail_bound(int k, double x, long truncate);

/// Smallest truncation whose tail bound is <= tol.
long truncation_for(int k, double x, double tol);

/// Smallest truncation for which sum_k |d_k| tail_k / V <= rel_tol * |S(x)|.
long closed_form_truncation(const SzegoClosedForm& s, double x, double rel_tol);

/// |sum_{m=0}^{truncate} C(m+k, k) x^m - (1-x)^{-(k+1)}|. DomainError unless 0 < x < 1.
double geometric_series_check(int k, double x, long truncate);

struct FeffermanFit {
    /// Coefficients of 1, rho, ..., rho^{n+1}.
    std::vector<double> poly_coeffs;
    /// Coefficient of rho^{n+1} log rho.
    double b_est = 0.0;
    /// Norm of the weighted residual.
    double residual_norm = 0.0;
    double condition_number = 0.0;
};

/// Above this (column-scaled) condition number the fit is rejected with FitError.
inline constexpr double kMaxFitCondition = 1e13;

/// Least-squares fit of S rho^{n+1} against {1, rho, ..., rho^{n+1}, rho^{n+1} log rho}, rows
/// weighted by 1/rho, solved by Householder QR on column-scaled data. Needs at least n+4 samples with distinct rho in (0, 1/2] and finite S.
FeffermanFit fit_log_term(std::span<const std::pair<double, double>> samples, int n);

/// rho = 2^{-j} for j = j_min..j_max. The default 4..12 resolves the log singularity without
/// letting the pole amplify rounding.
std::vector<double> geometric_rho_grid(int j_min = 4, int j_max = 12);

std::vector<std::pair<double, double>> sample_closed_form(const SzegoClosedForm& s, std::span<const double> rhos);

/// S(x) = sum x^m / (m+1) = -log(1-x)/x: a kernel that does carry a log term (b = -1 at n = 0).
std::vector<std::pair<double, double>> harmonic_control_samples(std::span<const double> rhos);

struct TyzCoefficients {
    /// c_{n-j} / V for j = 0..n, where c_i is the m^i coefficient of h0.
    std::vector<Rational> raw;
    /// c_{n-j} / c_n, so normalized[0] = 1.
    std::vector<Rational> normalized;
    /// All coefficients a_j with j >= vanishing_from are identically zero.
    int vanishing_from = 0;
};

TyzCoefficients tyz_coefficients(const HilbertPolynomial& h0, const Rational& volume);

} // namespace flagkernel
