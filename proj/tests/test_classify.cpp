#include "flagkernel/classify.hpp"
#include "flagkernel/errors.hpp"
#include "flagkernel/poincare.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace flagkernel;

namespace {

std::vector<std::string> names(const std::vector<PaintedDiagram>& ds)
{
    std::vector<std::string> out;
    for (const auto& d : ds)
        out.push_back(d.name());
    return out;
}

std::vector<std::string> hit_names(const std::vector<ClassificationHit>& hits)
{
    std::vector<std::string> out;
    for (const auto& h : hits)
        out.push_back(h.diagram.name());
    return out;
}

} // namespace

TEST(Enumerate, SmallCases)
{
    EXPECT_EQ(names(enumerate_painted_diagrams(2, 1)),
              (std::vector<std::string>{"A1:1", "A2:1", "A2:2", "B2:1", "B2:2", "G2:1", "G2:2"}));
    EXPECT_EQ(names(enumerate_painted_diagrams(1, 1)), (std::vector<std::string>{"A1:1"}));
    EXPECT_EQ(names(enumerate_painted_diagrams(2, 2)), (std::vector<std::string>{"A2:1,2", "B2:1,2", "G2:1,2"}));
}

TEST(Enumerate, Guards)
{
    EXPECT_THROW(enumerate_painted_diagrams(0, 1), InputError);
    EXPECT_THROW(enumerate_painted_diagrams(kMaxEnumerationRank + 1, 1), InputError);
    EXPECT_THROW(enumerate_painted_diagrams(3, 0), InputError);
}

TEST(Enumerate, EachDiagramOnce)
{
    const auto ds = enumerate_painted_diagrams(8, 1);
    std::set<std::string> unique;
    for (const auto& d : ds)
        unique.insert(d.name());
    EXPECT_EQ(unique.size(), ds.size());
    // A:36, B:2+..+8=35, C:3+..+8=33, D:4+..+8=30, E:21, F:4, G:2
    EXPECT_EQ(ds.size(), 161u);
}

TEST(DistinctHeights, Examples)
{
    EXPECT_TRUE(distinct_heights_check(parse_diagram("B3:1")));
    EXPECT_FALSE(distinct_heights_check(parse_diagram("D4:1")));
    EXPECT_FALSE(distinct_heights_check(parse_diagram("F4:1")));
}

TEST(Identification, Table)
{
    EXPECT_EQ(identification_label(parse_diagram("A4:1")), "CP^4");
    EXPECT_EQ(identification_label(parse_diagram("A4:4")), "CP^4");
    EXPECT_EQ(identification_label(parse_diagram("B3:1")), "Q_5");
    EXPECT_EQ(identification_label(parse_diagram("B2:2")), "CP^3");
    EXPECT_EQ(identification_label(parse_diagram("C4:1")), "CP^7");
    EXPECT_FALSE(identification_label(parse_diagram("G2:1")).has_value());
}

TEST(Classify, RankTwo)
{
    const auto hits = classify_constant_betti(2);
    ASSERT_EQ(hit_names(hits),
              (std::vector<std::string>{"A1:1", "A2:1", "A2:2", "B2:1", "B2:2", "G2:1", "G2:2"}));
    EXPECT_EQ(hits[0].identification, "CP^1");
    EXPECT_EQ(hits[3].identification, "Q_3");
    EXPECT_EQ(hits[4].identification, "CP^3");
    EXPECT_EQ(hits[4].flags, std::vector<std::string>{kC2AliasFlag});
    for (int i : {5, 6}) {
        EXPECT_FALSE(hits[static_cast<std::size_t>(i)].identification.has_value());
        EXPECT_EQ(hits[static_cast<std::size_t>(i)].flags, std::vector<std::string>{kUnidentifiedFlag});
    }
}

TEST(Classify, RankEightHitSet)
{
    const auto report = classify(8, 1, 1);
    std::set<std::string> expected;
    for (int n = 1; n <= 8; ++n) {
        expected.insert("A" + std::to_string(n) + ":1");
        expected.insert("A" + std::to_string(n) + ":" + std::to_string(n));
    }
    for (int p = 2; p <= 8; ++p)
        expected.insert("B" + std::to_string(p) + ":1");
    expected.insert("B2:2");
    for (int p = 3; p <= 8; ++p)
        expected.insert("C" + std::to_string(p) + ":1");
    expected.insert("G2:1");
    expected.insert("G2:2");

    const auto got = hit_names(report.hits);
    EXPECT_EQ(std::set<std::string>(got.begin(), got.end()), expected);
    EXPECT_EQ(got.size(), expected.size());
    EXPECT_TRUE(report.equivalence_violations.empty());
    for (const auto& h : report.hits) {
        std::vector<int> segment;
        for (int i = 1; i <= h.dimension; ++i)
            segment.push_back(i);
        EXPECT_EQ(heights_multiset(h.diagram), segment) << h.diagram.name();
        for (const auto& b : h.poincare.coeffs())
            EXPECT_EQ(b, 1) << h.diagram.name();
    }
}

TEST(Classify, ExcludedDiagrams)
{
    const auto hits = hit_names(classify_constant_betti(8));
    const std::set<std::string> set(hits.begin(), hits.end());
    EXPECT_FALSE(set.count("A3:2"));
    for (int p = 4; p <= 8; ++p)
        EXPECT_FALSE(set.count("D" + std::to_string(p) + ":1"));
}

TEST(Classify, EquivalenceBothDirections)
{
    for (const auto& d : enumerate_painted_diagrams(8, 1)) {
        const bool constant = is_constant_betti(d);
        const bool heights = distinct_heights_check(d) && heights_form_initial_segment(d);
        EXPECT_EQ(constant, heights) << d.name();
    }
}

TEST(Classify, NoTwoBlackHits)
{
    EXPECT_TRUE(classify(6, 2, 1).hits.empty());
}

TEST(Classify, IndependentOfThreadCount)
{
    const auto one = classify(8, 1, 1);
    for (unsigned threads : {2u, 3u, 8u}) {
        const auto many = classify(8, 1, threads);
        EXPECT_EQ(hit_names(many.hits), hit_names(one.hits)) << threads;
        EXPECT_EQ(many.diagrams_examined, one.diagrams_examined);
    }
}

TEST(Classify, Monotone)
{
    for (int r = 1; r < 8; ++r) {
        const auto small = hit_names(classify_constant_betti(r));
        std::vector<std::string> restricted;
        for (const auto& h : classify_constant_betti(r + 1))
            if (h.diagram.lie_type().rank() <= r)
                restricted.push_back(h.diagram.name());
        EXPECT_EQ(small, restricted) << r;
    }
}
