#include "flagkernel/classify.hpp"

#include "flagkernel/errors.hpp"
#include "flagkernel/poincare.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <thread>

namespace flagkernel {

namespace {

// All k-subsets of {1..n} in lexicographic order.
void subsets(int n, int k, int start, std::vector<int>& current, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(current.size()) == k) {
        out.push_back(current);
        return;
    }
    for (int i = start; i <= n; ++i) {
        current.push_back(i);
        subsets(n, k, i + 1, current, out);
        current.pop_back();
    }
}

struct Evaluation {
    std::optional<ClassificationHit> hit;
    bool violation = false;
};

Evaluation evaluate(const PaintedDiagram& d)
{
    Evaluation e;
    IntPolynomial p = poincare_polynomial(d);
    bool constant = is_constant_betti(p);
    bool segment = heights_form_initial_segment(d);
    if (constant != segment || (segment && distinct_heights_check(d) != constant))
        e.violation = true;
    if (!constant)
        return e;

    ClassificationHit hit{d, static_cast<int>(p.degree()), std::move(p), identification_label(d), {}};
    if (!hit.identification)
        hit.flags.emplace_back(kUnidentifiedFlag);
    if (d.lie_type() == LieType(Family::B, 2) && d.black_nodes() == std::vector<int>{2})
        hit.flags.emplace_back(kC2AliasFlag);
    e.hit = std::move(hit);
    return e;
}

} // namespace

std::vector<PaintedDiagram> enumerate_painted_diagrams(int max_rank, int black_count)
{
    if (max_rank < 1 || max_rank > kMaxEnumerationRank)
        throw InputError("max rank must lie in 1.." + std::to_string(kMaxEnumerationRank));
    if (black_count < 1)
        throw InputError("black count must be at least 1");

    std::vector<PaintedDiagram> out;
    for (const LieType& t : lie_types_up_to(max_rank)) {
        if (black_count > t.rank())
            continue;
        auto roots = std::make_shared<const RootSystem>(t);
        std::vector<std::vector<int>> blacks;
        std::vector<int> scratch;
        subsets(t.rank(), black_count, 1, scratch, blacks);
        for (auto& b : blacks)
            out.emplace_back(roots, std::move(b));
    }
    return out;
}

bool distinct_heights_check(const PaintedDiagram& d)
{
    auto h = heights_multiset(d);
    return std::adjacent_find(h.begin(), h.end()) == h.end();
}

bool heights_form_initial_segment(const PaintedDiagram& d)
{
    auto h = heights_multiset(d);
    for (std::size_t i = 0; i < h.size(); ++i)
        if (h[i] != static_cast<int>(i) + 1)
            return false;
    return true;
}

std::optional<std::string> identification_label(const PaintedDiagram& d)
{
    const auto& black = d.black_nodes();
    if (black.size() != 1)
        return std::nullopt;
    const int node = black.front();
    const int n = d.lie_type().rank();
    switch (d.lie_type().family()) {
    case Family::A:
        if (node == 1 || node == n)
            return "CP^" + std::to_string(n);
        break;
    case Family::B:
        if (node == 1)
            return "Q_" + std::to_string(2 * n - 1);
        if (n == 2 && node == 2)
            return std::string("CP^3");
        break;
    case Family::C:
        if (node == 1)
            return "CP^" + std::to_string(2 * n - 1);
        break;
    default:
        break;
    }
    return std::nullopt;
}

ClassificationReport classify(int max_rank, int black_count, unsigned threads)
{
    const auto diagrams = enumerate_painted_diagrams(max_rank, black_count);
    std::vector<Evaluation> results(diagrams.size());

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, diagrams.size())));

    if (threads <= 1) {
        for (std::size_t i = 0; i < diagrams.size(); ++i)
            results[i] = evaluate(diagrams[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(threads);
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < threads; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        for (std::size_t i; (i = next.fetch_add(1)) < diagrams.size();)
                            results[i] = evaluate(diagrams[i]);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
        }
        for (auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    ClassificationReport report;
    report.max_rank = max_rank;
    report.black_count = black_count;
    report.diagrams_examined = diagrams.size();
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
        if (results[i].violation)
            report.equivalence_violations.push_back(diagrams[i].name());
        if (results[i].hit)
            report.hits.push_back(std::move(*results[i].hit));
    }
    return report;
}

std::vector<ClassificationHit> classify_constant_betti(int max_rank)
{
    return classify(max_rank, 1, 1).hits;
}

} // namespace flagkernel
