#include "flagkernel/cli.hpp"

#include "flagkernel/classify.hpp"
#include "flagkernel/errors.hpp"
#include "flagkernel/gysin.hpp"
#include "flagkernel/kempf.hpp"
#include "flagkernel/lie.hpp"
#include "flagkernel/poincare.hpp"
#include "flagkernel/szego.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#ifndef FLAGKERNEL_VERSION
#define FLAGKERNEL_VERSION "dev"
#endif

namespace flagkernel::cli {

using ojson = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------- helpers

ojson json_int(const BigInt& z)
{
    if (z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max())
        return z.convert_to<long long>();
    return z.str();
}

ojson json_ints(const std::vector<BigInt>& v)
{
    ojson a = ojson::array();
    for (const auto& z : v)
        a.push_back(json_int(z));
    return a;
}

ojson json_rationals(const std::vector<Rational>& v)
{
    ojson a = ojson::array();
    for (const auto& r : v)
        a.push_back(to_string(r));
    return a;
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(item);
    if (out.empty())
        throw InputError("empty list");
    return out;
}

std::string bracketed(const std::vector<std::string>& items)
{
    std::string s = "[";
    for (std::size_t i = 0; i < items.size(); ++i)
        s += (i ? ", " : "") + items[i];
    return s + "]";
}

template <class T, class F>
std::vector<std::string> map_strings(const std::vector<T>& v, F f)
{
    std::vector<std::string> out;
    for (const auto& x : v)
        out.push_back(f(x));
    return out;
}

std::string fmt_double(double v)
{
    return fmt::format("{:.17g}", v);
}

struct Outcome {
    RunReport report;
    ExitCode code = ExitCode::Ok;
};

Outcome finish(RunReport r)
{
    Outcome o{std::move(r), ExitCode::Ok};
    o.code = o.report.pass ? ExitCode::Ok : ExitCode::VerificationFailed;
    return o;
}

// ---------------------------------------------------------------- hilbert input

struct HilbertArgs {
    std::string values;
    std::string coeffs;
    std::string validate;
    int dim = -1;
    std::string volume = "1";
};

void add_hilbert_options(CLI::App* sub, HilbertArgs& h)
{
    sub->add_option("--hilbert-values", h.values, "h0(L^m) at m = 0..n, comma separated");
    sub->add_option("--hilbert-coeffs", h.coeffs, "coefficients of h0 in m (constant first), rationals allowed");
    sub->add_option("--validate-values", h.validate, "extra values at m = n+1, n+2, ... that must match");
    sub->add_option("--dim", h.dim, "complex dimension n (defaults to the data)");
    sub->add_option("--volume", h.volume, "volume V(M) as p/q or a decimal")->capture_default_str();
}

HilbertPolynomial read_hilbert(const HilbertArgs& h)
{
    if (h.values.empty() == h.coeffs.empty())
        throw InputError("give exactly one of --hilbert-values or --hilbert-coeffs");
    if (!h.values.empty()) {
        std::vector<BigInt> values;
        for (const auto& s : split_list(h.values))
            values.push_back(parse_bigint(s));
        std::vector<BigInt> extra;
        if (!h.validate.empty())
            for (const auto& s : split_list(h.validate))
                extra.push_back(parse_bigint(s));
        int n = h.dim >= 0 ? h.dim : static_cast<int>(values.size()) - 1;
        return hilbert_from_values(values, n, extra);
    }
    std::vector<Rational> coeffs;
    for (const auto& s : split_list(h.coeffs))
        coeffs.push_back(parse_rational(s));
    return hilbert_from_coeffs(std::move(coeffs), h.dim);
}

ojson hilbert_inputs(const HilbertArgs& h, const HilbertPolynomial& p, const Rational& volume)
{
    ojson in;
    if (!h.values.empty())
        in["hilbert_values"] = split_list(h.values);
    else
        in["hilbert_coeffs"] = split_list(h.coeffs);
    in["n"] = p.n;
    in["volume"] = to_string(volume);
    return in;
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
    int max_rank = 0;
    int black_count = 1;
    unsigned threads = 0;
};

Outcome run_classify(const ClassifyArgs& a)
{
    RunReport r;
    r.command = "classify";
    r.inputs["max_rank"] = a.max_rank;
    r.inputs["black_count"] = a.black_count;

    const ClassificationReport cr = classify(a.max_rank, a.black_count, a.threads);
    ojson hits = ojson::array();
    std::string table = fmt::format("{:<10} {:>4}  {:<40} {}\n", "diagram", "dim", "betti", "identification");
    for (const auto& h : cr.hits) {
        ojson j;
        j["diagram"] = h.diagram.name();
        j["dimension"] = h.dimension;
        j["betti"] = json_ints(h.poincare.coeffs());
        j["identification"] = h.identification ? ojson(*h.identification) : ojson(nullptr);
        j["flags"] = h.flags;
        hits.push_back(std::move(j));

        std::string betti = bracketed(map_strings(h.poincare.coeffs(), [](const BigInt& z) { return z.str(); }));
        std::string ident = h.identification.value_or("-");
        for (const auto& f : h.flags)
            ident += " (" + f + ")";
        table += fmt::format("{:<10} {:>4}  {:<40} {}\n", h.diagram.name(), h.dimension, betti, ident);
    }
    r.results["max_rank"] = cr.max_rank;
    r.results["black_count"] = cr.black_count;
    r.results["diagrams_examined"] = cr.diagrams_examined;
    r.results["hits"] = std::move(hits);
    r.results["equivalence_violations"] = cr.equivalence_violations;
    r.pass = cr.equivalence_violations.empty();
    r.summary = fmt::format("{} constant-Betti diagrams among {}", cr.hits.size(), cr.diagrams_examined);
    r.table = table + r.summary + "\n";
    Outcome o{std::move(r), ExitCode::Ok};
    if (!cr.equivalence_violations.empty())
        o.code = ExitCode::InternalError;
    return o;
}

// ---------------------------------------------------------------- poincare

Outcome run_poincare(const std::string& diagram_text)
{
    const PaintedDiagram d = parse_diagram(diagram_text);
    const IntPolynomial p = poincare_polynomial(d);
    RunReport r;
    r.command = "poincare";
    r.inputs["diagram"] = diagram_text;
    r.results["diagram"] = d.name();
    r.results["dimension"] = complex_dimension(d);
    r.results["heights"] = heights_multiset(d);
    r.results["coeffs"] = json_ints(p.coeffs());
    r.results["text"] = to_text(p);
    r.results["constant_betti"] = is_constant_betti(p);
    r.results["distinct_heights"] = distinct_heights_check(d);
    r.summary = to_text(p);
    r.table = to_text(p) + "\n";
    return finish(std::move(r));
}

// ---------------------------------------------------------------- szego

struct SzegoArgs {
    HilbertArgs hilbert;
    std::string eval_rho = "1/2";
    long truncate = -1;
    int rho_jmin = 4;
    int rho_jmax = 12;
};

Outcome run_szego(const SzegoArgs& a)
{
    const HilbertPolynomial h0 = read_hilbert(a.hilbert);
    const Rational volume = parse_rational(a.hilbert.volume);
    const Rational rho = parse_rational(a.eval_rho);
    const SzegoClosedForm s = make_closed_form(h0, volume);
    const double x = 1.0 - to_double(rho);

    RunReport r;
    r.command = "szego";
    r.inputs = hilbert_inputs(a.hilbert, h0, volume);
    r.inputs["eval_rho"] = to_string(rho);

    const Rational exact = evaluate_closed_form(s, rho);
    const long truncate = a.truncate >= 0 ? a.truncate : closed_form_truncation(s, x, 1e-12);
    const double partial = szego_partial_sum(h0, volume, x, truncate);
    const double closed = to_double(exact);
    const double rel_err = std::abs(partial - closed) / std::abs(closed);
    r.inputs["truncate"] = truncate;

    const auto grid = geometric_rho_grid(a.rho_jmin, a.rho_jmax);
    const FeffermanFit fit = fit_log_term(sample_closed_form(s, grid), s.n());
    const TyzCoefficients tyz = tyz_coefficients(h0, volume);
    const Rational lead = h0.poly.coeff(static_cast<std::size_t>(h0.n));
    const bool leading_identity = s.d().back() == lead * Rational(factorial(static_cast<unsigned>(s.n())));

    ojson notes = ojson::array();
    for (const auto& w : h0.warnings)
        notes.push_back(w);
    if (!s.leading_is_factorial())
        notes.push_back(fmt::format("d_n = {} differs from n! = {}: h0 is not monic in m", to_string(s.d().back()),
                                    factorial(static_cast<unsigned>(s.n())).str()));

    r.results["n"] = s.n();
    r.results["hilbert_coeffs"] = json_rationals(h0.poly.coeffs());
    r.results["d"] = json_rationals(s.d());
    r.results["d_n_equals_n_factorial"] = s.leading_is_factorial();
    r.results["leading_identity"] = leading_identity;
    r.results["a_polynomial"] = ojson{{"coeffs", json_rationals(s.a_polynomial().coeffs())}};
    r.results["closed_form_eval"] = closed;
    r.results["closed_form_exact"] = to_string(exact);
    r.results["fefferman_a"] = to_string(fefferman_a(s, rho));
    r.results["partial_sum"] = partial;
    r.results["partial_sum_relative_error"] = rel_err;
    r.results["tyz"] = ojson{{"raw", json_rationals(tyz.raw)},
                             {"normalized", json_rationals(tyz.normalized)},
                             {"vanishing_from", tyz.vanishing_from}};
    r.results["b_est"] = fit.b_est;
    r.results["residual"] = fit.residual_norm;
    r.results["condition_number"] = fit.condition_number;
    r.results["notes"] = notes;
    r.pass = leading_identity;
    r.summary = fmt::format("S(rho={}) = {}", to_string(rho), to_string(exact));

    std::string t;
    t += fmt::format("n                 = {}\n", s.n());
    t += fmt::format("h0(m)             = {}\n", to_text(h0.poly, "m"));
    t += fmt::format("d                 = {}\n", bracketed(map_strings(s.d(), [](const Rational& q) { return to_string(q); })));
    t += fmt::format("a(rho)            = {}\n", to_text(s.a_polynomial(), "rho"));
    t += fmt::format("closed form       = {} = {}\n", to_string(exact), fmt_double(closed));
    t += fmt::format("partial sum       = {} (M = {}, rel. error {:.3g})\n", fmt_double(partial), truncate, rel_err);
    t += fmt::format("log-term b_est    = {:.3g} (residual {:.3g})\n", fit.b_est, fit.residual_norm);
    t += fmt::format("TYZ normalized    = {}\n",
                     bracketed(map_strings(tyz.normalized, [](const Rational& q) { return to_string(q); })));
    for (const auto& nnote : notes)
        t += "note: " + nnote.get<std::string>() + "\n";
    r.table = t;
    return finish(std::move(r));
}

// ---------------------------------------------------------------- logterm

struct LogtermArgs {
    HilbertArgs hilbert;
    std::string control;
    int rho_jmin = 4;
    int rho_jmax = 12;
    double tol = 1e-6;
    double control_tol = 0.05;
};

Outcome run_logterm(const LogtermArgs& a)
{
    RunReport r;
    r.command = "logterm";
    const auto grid = geometric_rho_grid(a.rho_jmin, a.rho_jmax);
    FeffermanFit fit;
    double expected = 0.0;
    double threshold = a.tol;
    int n = 0;
    if (!a.control.empty()) {
        if (a.control != "harmonic")
            throw InputError("unknown control '" + a.control + "' (expected harmonic)");
        if (!a.hilbert.values.empty() || !a.hilbert.coeffs.empty())
            throw InputError("--control replaces the Hilbert data");
        r.inputs["control"] = a.control;
        fit = fit_log_term(harmonic_control_samples(grid), 0);
        expected = -1.0;
        threshold = a.control_tol;
    } else {
        const HilbertPolynomial h0 = read_hilbert(a.hilbert);
        const Rational volume = parse_rational(a.hilbert.volume);
        r.inputs = hilbert_inputs(a.hilbert, h0, volume);
        const SzegoClosedForm s = make_closed_form(h0, volume);
        n = s.n();
        fit = fit_log_term(sample_closed_form(s, grid), n);
    }
    r.inputs["rho_grid"] = ojson{{"j_min", a.rho_jmin}, {"j_max", a.rho_jmax}};

    const double deviation = std::abs(fit.b_est - expected);
    r.pass = deviation <= threshold;
    r.results["n"] = n;
    r.results["b_est"] = fit.b_est;
    r.results["b_expected"] = expected;
    r.results["threshold"] = threshold;
    r.results["poly_coeffs"] = fit.poly_coeffs;
    r.results["residual"] = fit.residual_norm;
    r.results["condition_number"] = fit.condition_number;
    r.results["pass"] = r.pass;
    r.summary = fmt::format("b_est = {:.6g} (expected {}, |diff| {:.3g} {} {:.3g})", fit.b_est, expected, deviation,
                            r.pass ? "<=" : ">", threshold);
    r.table = fmt::format("{} {}\n", r.pass ? "PASS" : "FAIL", r.summary);
    return finish(std::move(r));
}

// ---------------------------------------------------------------- verify

struct Check {
    std::string suite;
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

Check make_check(std::string suite, std::string name, double value, double threshold)
{
    return Check{std::move(suite), std::move(name), value, threshold, value <= threshold};
}

struct Model {
    const char* name;
    std::vector<long> values;
};

// h0(O(1)) at m = 0..n for CP^1, CP^2, CP^3 and the quadric Q_3
const std::vector<Model>& hilbert_models()
{
    static const std::vector<Model> models{
        {"CP1", {1, 2}}, {"CP2", {1, 3, 6}}, {"CP3", {1, 4, 10, 20}}, {"Q3", {1, 5, 14, 30}}};
    return models;
}

HilbertPolynomial model_polynomial(const Model& m)
{
    std::vector<BigInt> v(m.values.begin(), m.values.end());
    return hilbert_from_values(v, static_cast<int>(v.size()) - 1);
}

std::vector<Check> series_suite(double tol, double rel_tol)
{
    std::vector<Check> out;
    for (int k = 0; k <= 5; ++k) {
        for (int i = 1; i <= 9; ++i) {
            const double x = i / 10.0;
            const long trunc = truncation_for(k, x, tol * 1e-2);
            out.push_back(make_check("series", fmt::format("geometric k={} x={:.1f} M={}", k, x, trunc),
                                     geometric_series_check(k, x, trunc), tol));
        }
    }
    for (const Model& m : hilbert_models()) {
        const HilbertPolynomial h0 = model_polynomial(m);
        const SzegoClosedForm s = make_closed_form(h0, Rational(1));
        for (int denom : {2, 4, 8}) {
            const Rational rho(1, denom);
            const double x = 1.0 - to_double(rho);
            const long trunc = closed_form_truncation(s, x, rel_tol * 1e-2);
            const double closed = to_double(evaluate_closed_form(s, rho));
            const double partial = szego_partial_sum(h0, Rational(1), x, trunc);
            out.push_back(make_check("series", fmt::format("closed-form {} rho=1/{} M={}", m.name, denom, trunc),
                                     std::abs(partial - closed) / std::abs(closed), rel_tol));
        }
    }
    return out;
}

std::vector<Check> logterm_suite(double tol, double control_tol)
{
    std::vector<Check> out;
    const auto grid = geometric_rho_grid();
    for (const Model& m : hilbert_models()) {
        const SzegoClosedForm s = make_closed_form(model_polynomial(m), Rational(1));
        const FeffermanFit fit = fit_log_term(sample_closed_form(s, grid), s.n());
        out.push_back(make_check("logterm", fmt::format("vanishing {}", m.name), std::abs(fit.b_est), tol));
    }
    const FeffermanFit control = fit_log_term(harmonic_control_samples(grid), 0);
    out.push_back(make_check("logterm", fmt::format("harmonic control b_est={:.4f}", control.b_est),
                             std::abs(control.b_est + 1.0), control_tol));
    return out;
}

std::vector<Check> kempf_suite(std::optional<int> n, std::optional<int> m, double tol)
{
    std::vector<Check> out;
    auto run = [&](int dim, int level, double tv_tol) {
        const ConstancyReport rep = constancy_report(dim, level, default_chart_grid(dim), tol, tv_tol);
        out.push_back(make_check("kempf", fmt::format("CP{} m={} max T - min T", dim, level), rep.max_deviation, tol));
        out.push_back(make_check("kempf", fmt::format("CP{} m={} |T V - h0|", dim, level), rep.tv_error, tv_tol));
    };
    if (n || m) {
        if (!n || !m)
            throw InputError("--n and --m go together");
        run(*n, *m, tol);
        return out;
    }
    for (int level = 0; level <= 20; ++level)
        run(1, level, 1e-5);
    for (int level = 0; level <= 3; ++level)
        run(2, level, 1e-4);
    return out;
}

std::vector<Check> gysin_suite()
{
    std::vector<Check> out;
    auto exact = [&](std::string name, bool ok) { out.push_back(Check{"gysin", std::move(name), ok ? 0.0 : 1.0, 0.0, ok}); };
    for (int n = 1; n <= 5; ++n) {
        for (int k = 1; k <= 10; ++k) {
            const auto x = gysin_circle_bundle(model_cohomology(BaseModel::ProjectiveSpace, n, k));
            CohomologyGroup expected{0, k > 1 ? std::vector<BigInt>{k} : std::vector<BigInt>{}};
            exact(fmt::format("cpn n={} e={} H^2 = {}", n, k, to_string(x.degree(2))), x.degree(2) == expected);
        }
    }
    for (int n : {3, 5}) {
        const auto x = gysin_circle_bundle(model_cohomology(BaseModel::OddQuadric, n, 1));
        exact(fmt::format("odd_quadric n={} H^2 = {}", n, to_string(x.degree(2))), x.degree(2) == CohomologyGroup{});
        exact(fmt::format("odd_quadric n={} H^{} = {}", n, n + 1, to_string(x.degree(n + 1))),
              x.degree(n + 1) == CohomologyGroup{0, {2}});
    }
    std::mt19937_64 rng(0x5eed'6751);
    int failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 5)(rng);
        GradedCohomology g;
        g.free_ranks.push_back(1);
        for (int j = 1; j <= n; ++j)
            g.free_ranks.push_back(std::uniform_int_distribution<int>(0, 3)(rng));
        for (int j = 0; j < n; ++j) {
            const auto rows = static_cast<std::size_t>(g.free_ranks[static_cast<std::size_t>(j) + 1]);
            const auto cols = static_cast<std::size_t>(g.free_ranks[static_cast<std::size_t>(j)]);
            IntMatrix e(rows, cols);
            for (std::size_t a = 0; a < rows; ++a)
                for (std::size_t b = 0; b < cols; ++b)
                    e(a, b) = std::uniform_int_distribution<int>(-5, 5)(rng);
            g.cup_maps.push_back(std::move(e));
        }
        if (euler_characteristic(gysin_circle_bundle(g)) != 0)
            ++failures;
    }
    exact(fmt::format("euler characteristic zero on 100 random bases ({} failures)", failures), failures == 0);
    return out;
}

struct VerifyArgs {
    std::string suite = "all";
    std::optional<double> tol;
    std::optional<int> n;
    std::optional<int> m;
};

Outcome run_verify(const VerifyArgs& a)
{
    static const std::vector<std::string> suites{"series", "logterm", "kempf", "gysin"};
    if (a.suite != "all" && std::find(suites.begin(), suites.end(), a.suite) == suites.end())
        throw InputError("unknown suite '" + a.suite + "' (expected kempf, series, logterm, gysin or all)");
    auto wants = [&](const std::string& s) { return a.suite == "all" || a.suite == s; };

    RunReport r;
    r.command = "verify";
    r.inputs["suite"] = a.suite;
    if (a.tol)
        r.inputs["tol"] = *a.tol;

    std::vector<Check> checks;
    auto append = [&](std::vector<Check> more) { checks.insert(checks.end(), more.begin(), more.end()); };
    if (wants("series"))
        append(series_suite(a.tol.value_or(1e-8), 1e-9));
    if (wants("logterm"))
        append(logterm_suite(a.tol.value_or(1e-6), 0.05));
    if (wants("kempf")) {
        if (a.n)
            r.inputs["n"] = *a.n;
        if (a.m)
            r.inputs["m"] = *a.m;
        append(kempf_suite(a.n, a.m, a.tol.value_or(1e-6)));
    }
    if (wants("gysin"))
        append(gysin_suite());

    ojson arr = ojson::array();
    std::string table;
    std::size_t passed = 0;
    for (const Check& c : checks) {
        arr.push_back(ojson{{"suite", c.suite}, {"name", c.name}, {"value", c.value}, {"threshold", c.threshold},
                            {"pass", c.pass}});
        table += fmt::format("{} {:<8} {:<52} {:.3g} (<= {:.3g})\n", c.pass ? "PASS" : "FAIL", c.suite, c.name,
                             c.value, c.threshold);
        passed += c.pass ? 1 : 0;
    }
    r.results["checks"] = std::move(arr);
    r.pass = passed == checks.size();
    r.summary = fmt::format("{}/{} checks passed", passed, checks.size());
    r.table = table + r.summary + "\n";
    return finish(std::move(r));
}

// ---------------------------------------------------------------- gysin

struct GysinArgs {
    std::string model;
    int dim = 0;
    int euler = 1;
    std::string input;
};

Outcome run_gysin(const GysinArgs& a)
{
    RunReport r;
    r.command = "gysin";
    GradedCohomology g;
    if (!a.input.empty()) {
        if (!a.model.empty())
            throw InputError("give either --model or --input, not both");
        std::ifstream f(a.input);
        if (!f)
            throw InputError("cannot read " + a.input);
        std::stringstream ss;
        ss << f.rdbuf();
        g = parse_graded_cohomology(ss.str());
        r.inputs["input"] = a.input;
    } else {
        if (a.model.empty())
            throw InputError("give --model or --input");
        const BaseModel model = parse_base_model(a.model);
        g = model_cohomology(model, a.dim, a.euler);
        r.inputs["model"] = model_name(model);
        r.inputs["dim"] = a.dim;
        r.inputs["euler"] = a.euler;
    }

    const CircleBundleCohomology x = gysin_circle_bundle(g);
    const int n = g.dimension();
    ojson groups = ojson::array();
    std::string table;
    for (int k = 0; k <= 2 * n + 1; ++k) {
        const auto& h = x.degree(k);
        groups.push_back(ojson{{"degree", k}, {"free_rank", h.free_rank}, {"torsion", json_ints(h.torsion)},
                               {"text", to_string(h)}});
        table += fmt::format("H^{} = {}\n", k, to_string(h));
    }
    const int chi = euler_characteristic(x);
    const bool lens = betti_lens_check(x, n);
    r.results["dimension"] = n;
    r.results["groups"] = std::move(groups);
    r.results["euler_characteristic"] = chi;
    r.results["rational_lens_profile"] = lens;
    r.pass = chi == 0;
    r.summary = fmt::format("euler characteristic {}, rational lens-space profile: {}", chi, lens ? "yes" : "no");
    r.table = table + r.summary + "\n";
    return finish(std::move(r));
}

} // namespace

// ---------------------------------------------------------------- reports

ojson to_json(const RunReport& r)
{
    ojson j;
    j["schema"] = kReportSchema;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["results"] = r.results;
    j["summary"] = ojson{{"pass", r.pass}, {"text", r.summary}};
    j["tool_version"] = r.tool_version;
    return j;
}

void emit_report(const RunReport& r, Format format, const std::optional<std::string>& destination, std::ostream& out)
{
    const std::string payload = format == Format::Json ? to_json(r).dump(2) + "\n" : r.table;
    if (!destination) {
        out << payload;
        out.flush();
        return;
    }
    std::ofstream f(*destination, std::ios::binary | std::ios::trunc);
    if (!f)
        throw InputError("cannot write " + *destination);
    f << payload;
    f.close();
    if (!f)
        throw InputError("failed writing " + *destination);
}

DispatchResult dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Flag-manifold classification, closed-form Szego kernels and verification suites", "flagkernel"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key = value file overriding option defaults");

    std::string format = "table";
    std::string output;
    bool timing = false;
    app.add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}))->capture_default_str();
    app.add_option("--output", output, "write the report to this file instead of standard output");
    app.add_flag("--timing", timing, "print wall time on the diagnostic stream");

    ClassifyArgs classify_args;
    auto* classify_cmd = app.add_subcommand("classify", "enumerate painted diagrams with constant Betti numbers");
    classify_cmd->add_option("--max-rank", classify_args.max_rank, "largest rank to enumerate")->required();
    classify_cmd->add_option("--black-count", classify_args.black_count, "number of black nodes")->capture_default_str();
    classify_cmd->add_option("--threads", classify_args.threads, "worker threads, 0 = auto")
        ->envname("FLAGKERNEL_THREADS")
        ->capture_default_str();

    std::string diagram;
    auto* poincare_cmd = app.add_subcommand("poincare", "Poincare polynomial of a painted diagram");
    poincare_cmd->add_option("--diagram", diagram, "painted diagram such as B3:1")->required();

    SzegoArgs szego_args;
    auto* szego_cmd = app.add_subcommand("szego", "closed-form Szego kernel from Hilbert data");
    add_hilbert_options(szego_cmd, szego_args.hilbert);
    szego_cmd->add_option("--eval-rho", szego_args.eval_rho, "evaluation point rho in (0, 1]")->capture_default_str();
    szego_cmd->add_option("--truncate", szego_args.truncate, "series truncation (default: from the tail bound)");
    szego_cmd->add_option("--rho-jmin", szego_args.rho_jmin, "log-term grid starts at rho = 2^-jmin")->capture_default_str();
    szego_cmd->add_option("--rho-jmax", szego_args.rho_jmax, "log-term grid ends at rho = 2^-jmax")->capture_default_str();

    LogtermArgs logterm_args;
    auto* logterm_cmd = app.add_subcommand("logterm", "fit the log-term coefficient of a Szego kernel");
    add_hilbert_options(logterm_cmd, logterm_args.hilbert);
    logterm_cmd->add_option("--control", logterm_args.control, "use a known log-carrying kernel: harmonic");
    logterm_cmd->add_option("--rho-jmin", logterm_args.rho_jmin)->capture_default_str();
    logterm_cmd->add_option("--rho-jmax", logterm_args.rho_jmax)->capture_default_str();
    logterm_cmd->add_option("--tol", logterm_args.tol, "|b_est| threshold")->capture_default_str();
    logterm_cmd->add_option("--control-tol", logterm_args.control_tol, "|b_est + 1| threshold for the control")
        ->capture_default_str();

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suite", verify_args.suite, "kempf, series, logterm, gysin or all")->capture_default_str();
    verify_cmd->add_option("--tol", verify_args.tol, "override the suite tolerance");
    verify_cmd->add_option("--n", verify_args.n, "kempf: single dimension");
    verify_cmd->add_option("--m", verify_args.m, "kempf: single level");

    GysinArgs gysin_args;
    auto* gysin_cmd = app.add_subcommand("gysin", "cohomology of a circle bundle via the Gysin sequence");
    gysin_cmd->add_option("--model", gysin_args.model, "cpn or odd_quadric");
    gysin_cmd->add_option("--dim", gysin_args.dim, "complex dimension of the base");
    gysin_cmd->add_option("--euler", gysin_args.euler, "Euler class multiplier")->capture_default_str();
    gysin_cmd->add_option("--input", gysin_args.input, "JSON file with free_ranks and cup_maps");

    DispatchResult result;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        if (code != 0)
            err << app.help();
        result.exit_code = code == 0 ? ExitCode::Ok : ExitCode::InvalidInput;
        return result;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        Outcome o;
        if (classify_cmd->parsed())
            o = run_classify(classify_args);
        else if (poincare_cmd->parsed())
            o = run_poincare(diagram);
        else if (szego_cmd->parsed())
            o = run_szego(szego_args);
        else if (logterm_cmd->parsed())
            o = run_logterm(logterm_args);
        else if (verify_cmd->parsed())
            o = run_verify(verify_args);
        else
            o = run_gysin(gysin_args);

        o.report.tool_version = FLAGKERNEL_VERSION;
        o.report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        emit_report(o.report, format == "json" ? Format::Json : Format::Table,
                    output.empty() ? std::nullopt : std::optional<std::string>(output), out);
        if (timing)
            err << fmt::format("wall time {:.3f} s\n", o.report.wall_seconds);
        result.exit_code = o.code;
        result.report = std::move(o.report);
    } catch (const ConsistencyError& e) {
        err << "internal consistency error: " << e.what() << "\n";
        result.exit_code = ExitCode::InternalError;
    } catch (const NumericError& e) {
        err << "numeric failure: " << e.what() << "\n";
        result.exit_code = ExitCode::VerificationFailed;
    } catch (const FitError& e) {
        err << "error: " << e.what() << fmt::format(" (condition number {:.3g})\n", e.condition_number());
        result.exit_code = ExitCode::InvalidInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        result.exit_code = ExitCode::InvalidInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        result.exit_code = ExitCode::InternalError;
    }
    return result;
}

} // namespace flagkernel::cli
