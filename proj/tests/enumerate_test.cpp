#include <gtest/gtest.h>

#include <random>

#include "pmolp/enumerate.hpp"
#include "test_util.hpp"

namespace pmolp {
namespace {

using testing::equalizable_matrix;
using testing::edge_matrix;

TEST(CheckFull, Examples) {
    auto e1 = check_full(equalizable_matrix());
    EXPECT_TRUE(e1.full);
    ASSERT_TRUE(e1.certificate.has_value());
    EXPECT_TRUE(verify_certificate(equalizable_matrix(), *e1.certificate, PointClass::randomized(3)));

    auto s3 = check_full(edge_matrix());
    EXPECT_FALSE(s3.full);
    EXPECT_FALSE(s3.certificate.has_value());

    auto bi = CriteriaMatrix::from_rows({{3, 2, 1}, {1, 2, 3}});
    auto b = check_full(bi);
    EXPECT_TRUE(b.full);
    EXPECT_TRUE(verify_certificate(bi, *b.certificate, PointClass::randomized(3)));
}

TEST(EnumerateVertices, Examples) {
    EXPECT_EQ(enumerate_vertices(edge_matrix()), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(enumerate_vertices(equalizable_matrix()), (std::vector<std::size_t>{0, 1, 2}));
    auto dominant = CriteriaMatrix::from_rows({{5, 1, 2, 0}, {3, -1, 2, 2}, {9, 8, 7, 6}});
    EXPECT_EQ(enumerate_vertices(dominant), std::vector<std::size_t>{0});
}

TEST(EnumerateVertices, FullSkipsT2) {
    EfficiencyTester t(equalizable_matrix());
    enumerate_vertices(t);
    EXPECT_EQ(t.solves(), 1u);
}

TEST(EnumerateFaces, Edge) {
    auto s = enumerate_faces(edge_matrix());
    EXPECT_FALSE(s.full);
    EXPECT_EQ(s.vertices, (std::vector<std::size_t>{0, 1}));
    ASSERT_EQ(s.faces.size(), 1u);
    EXPECT_EQ(s.faces[0], SupportPattern({0, 1}, 3));
    EXPECT_TRUE(s.exhaustive);
    EXPECT_EQ(s.scanned_faces, 3u);
}

TEST(EnumerateFaces, EqualizableIsFull) {
    EfficiencyTester t(equalizable_matrix());
    auto s = enumerate_faces(t);
    EXPECT_TRUE(s.full);
    EXPECT_EQ(s.vertices.size(), 3u);
    EXPECT_EQ(s.faces.size(), 3u);
    EXPECT_EQ(t.solves(), 1u);
}

TEST(EnumerateFaces, TwoColumnsHaveNoFaces) {
    auto c = CriteriaMatrix::from_rows({{4, 1}, {2, -3}});
    auto s = enumerate_faces(c);
    EXPECT_EQ(s.vertices, std::vector<std::size_t>{0});
    EXPECT_TRUE(s.faces.empty());
    EXPECT_EQ(s.scanned_faces, 0u);
}

TEST(EnumerateFaces, SizeCap) {
    auto big = CriteriaMatrix(2, 20, std::vector<double>(40, 1.0));
    EXPECT_THROW(enumerate_faces(big), SizeCapExceeded);
    // Override with a support cap keeps the scan small.
    auto s = enumerate_faces(big, {}, {std::size_t{2}, true});
    EXPECT_FALSE(s.exhaustive);
    EXPECT_EQ(s.scanned_faces, 190u);
    EXPECT_EQ(s.warnings.size(), 1u);
    EXPECT_TRUE(s.full);  // identical columns: every point ties
}

TEST(EnumerateFaces, MaxSupportPartialScan) {
    auto c5 = CriteriaMatrix(3, 5, std::vector<double>{1, 4, 2, 0, -1, 3, 0, 1, 2, 5, -2, 1, 1, 0, 3});
    auto s = enumerate_faces(c5, {}, {std::size_t{2}, false});
    EXPECT_FALSE(s.exhaustive);
    EXPECT_EQ(s.scanned_faces, 10u);
    for (const auto& f : s.faces) EXPECT_EQ(f.size(), 2u);
    EXPECT_THROW(enumerate_faces(c5, {}, {std::size_t{1}, false}), InvalidInput);
    auto all = enumerate_faces(c5, {}, {std::size_t{9}, false});
    EXPECT_TRUE(all.exhaustive);
}

TEST(ForEachPattern, CountsBinomials) {
    std::size_t count = 0;
    for_each_pattern(6, 2, 5, [&](const SupportPattern& s) {
        EXPECT_GE(s.size(), 2u);
        EXPECT_LE(s.size(), 5u);
        ++count;
    });
    EXPECT_EQ(count, 64u - 6u - 2u);
}

TEST(BicriterionFullCheck, Examples) {
    EXPECT_TRUE(bicriterion_full_check(CriteriaMatrix::from_rows({{3, 2, 1}, {1, 2, 3}})));
    EXPECT_FALSE(bicriterion_full_check(CriteriaMatrix::from_rows({{1, 2, 3}, {1, 2, 3}})));
    EXPECT_THROW(bicriterion_full_check(CriteriaMatrix::from_rows({{1, 1, 2}, {0, 5, 1}})),
                 InvalidInput);
    EXPECT_THROW(bicriterion_full_check(equalizable_matrix()), DimensionMismatch);
    // Equal but negative ratios.
    EXPECT_FALSE(bicriterion_full_check(CriteriaMatrix::from_rows({{1, 2, 3}, {3, 4, 5}})));
    // Positive but unequal ratios.
    EXPECT_FALSE(bicriterion_full_check(CriteriaMatrix::from_rows({{3, 2, 1}, {1, 2, 4}})));
}

TEST(BicriterionProperty, SoundnessOnConstructedInstances) {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> step(1, 4), start(-9, 9), nd(2, 7), rd(1, 12);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = nd(rng);
        const double r = rd(rng) / 4.0;
        const bool increasing = rng() % 2;
        std::vector<double> row1(n), row2(n);
        row1[0] = start(rng);
        row2[0] = start(rng);
        for (int j = 1; j < n; ++j) {
            row1[j] = row1[j - 1] + (increasing ? step(rng) : -step(rng));
            row2[j] = row2[j - 1] + r * (row1[j - 1] - row1[j]);
        }
        auto c = CriteriaMatrix::from_rows({row1, row2});
        EXPECT_TRUE(bicriterion_full_check(c));
        EXPECT_TRUE(check_full(c).full);
    }
}

TEST(EnumerateProperty, AgreesWithDecideAndFullImpliesEverything) {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 150; ++trial) {
        auto c = testing::random_matrix(rng);
        const std::size_t n = c.columns();
        EfficiencyTester t(c);
        auto s = enumerate_faces(t);
        EfficiencyTester fresh(c);
        for (std::size_t j = 0; j < n; ++j) {
            const bool listed = std::find(s.vertices.begin(), s.vertices.end(), j) != s.vertices.end();
            EXPECT_EQ(fresh.decide(vertex(j, n)).efficient(), listed);
        }
        for_each_pattern(n, 2, n - 1, [&](const SupportPattern& p) {
            const bool listed = std::find(s.faces.begin(), s.faces.end(), p) != s.faces.end();
            EXPECT_EQ(fresh.decide(testing::random_point_on(p, n, rng)).efficient(), listed);
            if (s.full) {
                EXPECT_TRUE(listed);
            }
        });
        if (s.full) {
            EXPECT_EQ(s.vertices.size(), n);
        }
        for (const auto& f : s.faces) {
            EXPECT_GE(f.size(), 2u);
            EXPECT_LE(f.size(), n - 1);
        }
    }
}

}  // namespace
}  // namespace pmolp
