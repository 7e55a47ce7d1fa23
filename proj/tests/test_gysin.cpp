#include "flagkernel/errors.hpp"
#include "flagkernel/gysin.hpp"
#include "flagkernel/lie.hpp"
#include "flagkernel/poincare.hpp"
#include "flagkernel/smith.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace flagkernel;

namespace {

// Bareiss fraction-free elimination.
BigInt determinant(IntMatrix a)
{
    const std::size_t n = a.rows();
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0)
                ++r;
            if (r == n)
                return 0;
            a.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return n == 0 ? BigInt(1) : sign * a(n - 1, n - 1);
}

void expect_smith_invariants(const IntMatrix& a)
{
    const SmithForm s = smith_normal_form(a);
    EXPECT_EQ(s.u * a * s.v, s.d);
    EXPECT_EQ(abs(determinant(s.u)), 1);
    EXPECT_EQ(abs(determinant(s.v)), 1);
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j)
                EXPECT_EQ(s.d(i, j), 0);
    const auto diag = s.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
        EXPECT_GE(diag[i], 0);
        if (i + 1 < diag.size() && diag[i] != 0)
            EXPECT_EQ(diag[i + 1] % diag[i], 0);
        if (i + 1 < diag.size() && diag[i] == 0)
            EXPECT_EQ(diag[i + 1], 0);
    }
}

GradedCohomology random_base(std::mt19937_64& rng)
{
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    GradedCohomology g;
    g.free_ranks.push_back(1);
    for (int j = 1; j <= n; ++j)
        g.free_ranks.push_back(std::uniform_int_distribution<int>(0, 3)(rng));
    for (int j = 0; j < n; ++j) {
        IntMatrix e(static_cast<std::size_t>(g.free_ranks[static_cast<std::size_t>(j) + 1]),
                    static_cast<std::size_t>(g.free_ranks[static_cast<std::size_t>(j)]));
        for (std::size_t a = 0; a < e.rows(); ++a)
            for (std::size_t b = 0; b < e.cols(); ++b)
                e(a, b) = std::uniform_int_distribution<int>(-6, 6)(rng);
        g.cup_maps.push_back(std::move(e));
    }
    return g;
}

} // namespace

TEST(Smith, Examples)
{
    EXPECT_EQ(smith_normal_form(IntMatrix{{2}}).diagonal(), std::vector<BigInt>{2});
    EXPECT_EQ(smith_normal_form(IntMatrix{{2, 4}, {6, 8}}).diagonal(), (std::vector<BigInt>{2, 4}));
    const auto zero = smith_normal_form(IntMatrix(2, 3));
    EXPECT_EQ(zero.d, IntMatrix(2, 3));
    EXPECT_EQ(zero.rank(), 0u);
}

TEST(Smith, NeedsDivisibilityFix)
{
    // diag(2, 3) is diagonal but not in normal form
    EXPECT_EQ(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).diagonal(), (std::vector<BigInt>{1, 6}));
    expect_smith_invariants(IntMatrix{{2, 0}, {0, 3}});
    expect_smith_invariants(IntMatrix{{4, 0, 0}, {0, 6, 0}, {0, 0, 10}});
}

TEST(Smith, RandomMatricesSatisfyInvariants)
{
    std::mt19937_64 rng(314159);
    for (int trial = 0; trial < 300; ++trial) {
        const auto rows = static_cast<std::size_t>(std::uniform_int_distribution<int>(0, 5)(rng));
        const auto cols = static_cast<std::size_t>(std::uniform_int_distribution<int>(0, 5)(rng));
        IntMatrix a(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                a(i, j) = std::uniform_int_distribution<int>(-20, 20)(rng);
        expect_smith_invariants(a);
        if (rows == cols && rows > 0) {
            BigInt prod = 1;
            for (const auto& d : smith_normal_form(a).diagonal())
                prod *= d;
            EXPECT_EQ(prod, abs(determinant(a)));
        }
    }
}

TEST(Gysin, LensSpaceProfile)
{
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= 10; ++k) {
            const auto x = gysin_circle_bundle(model_cohomology(BaseModel::ProjectiveSpace, n, k));
            EXPECT_EQ(to_string(x.degree(0)), "Z");
            EXPECT_EQ(x.degree(2).free_rank, 0);
            BigInt order = 1;
            for (const auto& t : x.degree(2).torsion)
                order *= t;
            EXPECT_EQ(order, k);
            EXPECT_EQ(x.degree(2), (CohomologyGroup{0, k > 1 ? std::vector<BigInt>{k} : std::vector<BigInt>{}}));
            for (int j = 0; j < n; ++j)
                EXPECT_EQ(x.degree(2 * j + 1), CohomologyGroup{});
            EXPECT_EQ(to_string(x.degree(2 * n + 1)), "Z");
            EXPECT_TRUE(betti_lens_check(x, n));
        }
}

TEST(Gysin, StiefelProfile)
{
    const auto q3 = model_cohomology(BaseModel::OddQuadric, 3, 1);
    ASSERT_EQ(q3.cup_maps.size(), 3u);
    EXPECT_EQ(q3.cup_maps[0], IntMatrix{{1}});
    EXPECT_EQ(q3.cup_maps[1], IntMatrix{{2}});
    EXPECT_EQ(q3.cup_maps[2], IntMatrix{{1}});
    const auto x = gysin_circle_bundle(q3);
    EXPECT_EQ(to_string(x.degree(2)), "0");
    EXPECT_EQ(to_string(x.degree(4)), "Z/2");
    EXPECT_EQ(to_string(x.degree(7)), "Z");
    EXPECT_TRUE(betti_lens_check(x, 3));

    const auto q5 = model_cohomology(BaseModel::OddQuadric, 5, 1);
    std::vector<BigInt> entries;
    for (const auto& e : q5.cup_maps)
        entries.push_back(e(0, 0));
    EXPECT_EQ(entries, (std::vector<BigInt>{1, 1, 2, 1, 1}));
    const auto y = gysin_circle_bundle(q5);
    EXPECT_EQ(to_string(y.degree(2)), "0");
    EXPECT_EQ(to_string(y.degree(6)), "Z/2");
}

TEST(Gysin, ProductBundle)
{
    GradedCohomology g;
    g.free_ranks = {1, 2, 1};
    g.cup_maps = {IntMatrix(2, 1), IntMatrix(1, 2)};
    const auto x = gysin_circle_bundle(g);
    for (int j = 0; j <= 2; ++j) {
        EXPECT_EQ(x.degree(2 * j).free_rank, g.free_ranks[static_cast<std::size_t>(j)]);
        EXPECT_EQ(x.degree(2 * j + 1).free_rank, g.free_ranks[static_cast<std::size_t>(j)]);
    }
    EXPECT_FALSE(betti_lens_check(x, 2));
}

TEST(Gysin, EulerCharacteristicVanishesOnRandomBases)
{
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = random_base(rng);
        EXPECT_EQ(euler_characteristic(gysin_circle_bundle(g)), 0) << trial;
    }
}

TEST(Gysin, TopDegreeOfCupProductIsBaseDegree)
{
    // The composite E_{n-1} ... E_0 sends 1 to x^n = deg(M) [M]: 1 for CP^n, 2 for a quadric.
    for (int n = 1; n <= 9; ++n) {
        BigInt cp = 1;
        for (const auto& e : model_cohomology(BaseModel::ProjectiveSpace, n, 1).cup_maps)
            cp *= e(0, 0);
        EXPECT_EQ(cp, 1);
        if (n >= 3 && n % 2 == 1) {
            BigInt q = 1;
            for (const auto& e : model_cohomology(BaseModel::OddQuadric, n, 1).cup_maps)
                q *= e(0, 0);
            EXPECT_EQ(q, 2);
        }
    }
}

TEST(Gysin, ModelsAgreeWithPoincare)
{
    for (int n = 1; n <= 8; ++n) {
        const auto betti = betti_numbers(PaintedDiagram(LieType(Family::A, n), {1}));
        const auto g = model_cohomology(BaseModel::ProjectiveSpace, n, 1);
        ASSERT_EQ(betti.size(), g.free_ranks.size());
        for (std::size_t j = 0; j < betti.size(); ++j)
            EXPECT_EQ(betti[j], g.free_ranks[j]);
    }
    for (int p = 2; p <= 8; ++p) {
        const auto betti = betti_numbers(PaintedDiagram(LieType(Family::B, p), {1}));
        const auto g = model_cohomology(BaseModel::OddQuadric, 2 * p - 1, 1);
        ASSERT_EQ(betti.size(), g.free_ranks.size());
        for (std::size_t j = 0; j < betti.size(); ++j)
            EXPECT_EQ(betti[j], g.free_ranks[j]);
    }
}

TEST(Gysin, ModelGuards)
{
    EXPECT_THROW(model_cohomology(BaseModel::OddQuadric, 4, 1), InputError);
    EXPECT_THROW(model_cohomology(BaseModel::OddQuadric, 1, 1), InputError);
    EXPECT_THROW(model_cohomology(BaseModel::ProjectiveSpace, 0, 1), InputError);
    EXPECT_THROW(model_cohomology(BaseModel::ProjectiveSpace, 2, 0), InputError);
    EXPECT_THROW(parse_base_model("sphere"), InputError);
    EXPECT_EQ(parse_base_model("odd_quadric"), BaseModel::OddQuadric);
}

TEST(Gysin, ParseJson)
{
    const auto g = parse_graded_cohomology(R"({"free_ranks":[1,1,1],"cup_maps":[[[3]],[["12345678901234567890"]]]})");
    EXPECT_EQ(g.dimension(), 2);
    EXPECT_EQ(g.cup_maps[1](0, 0), BigInt("12345678901234567890"));
    const auto x = gysin_circle_bundle(g);
    EXPECT_EQ(to_string(x.degree(2)), "Z/3");

    const auto empty = parse_graded_cohomology(R"({"free_ranks":[1,0,1],"cup_maps":[[],[[]]]})");
    EXPECT_EQ(gysin_circle_bundle(empty).degree(1).free_rank, 1);

    EXPECT_THROW(parse_graded_cohomology("{"), InputError);
    EXPECT_THROW(parse_graded_cohomology(R"({"free_ranks":[1,1]})"), InputError);
    EXPECT_THROW(parse_graded_cohomology(R"({"free_ranks":[2,1],"cup_maps":[[[1,1]]]})"), InputError);
    EXPECT_THROW(parse_graded_cohomology(R"({"free_ranks":[1,1],"cup_maps":[[[1,2]]]})"), InputError);
    EXPECT_THROW(parse_graded_cohomology(R"({"free_ranks":[1,1],"cup_maps":[[[1.5]]]})"), InputError);
    EXPECT_THROW(parse_graded_cohomology(R"({"free_ranks":[1,1,1],"cup_maps":[[[1]]]})"), InputError);
}

TEST(Gysin, GroupText)
{
    EXPECT_EQ(to_string(CohomologyGroup{}), "0");
    EXPECT_EQ(to_string(CohomologyGroup{1, {}}), "Z");
    EXPECT_EQ(to_string(CohomologyGroup{2, {2, 4}}), "Z^2 ⊕ Z/2 ⊕ Z/4");
}
