#include <gtest/gtest.h>

#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "pmolp/lp.hpp"

namespace pmolp::lp {
namespace {

// Brute-force oracle for bounded LPs: intersect every choice of m active
// hyperplanes (rows and variable bounds), keep the feasible intersections,
// return the best objective. Returns nullopt when no vertex is feasible.
std::optional<double> brute_force_max(const StandardLp& lp) {
    const std::size_t m = lp.variables();
    std::vector<std::vector<double>> planes;
    std::vector<double> rhs;
    for (const auto& r : lp.rows) {
        planes.push_back(r.coeffs);
        rhs.push_back(r.rhs);
    }
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<double> e(m, 0.0);
        e[j] = 1.0;
        if (std::isfinite(lp.lower[j])) {
            planes.push_back(e);
            rhs.push_back(lp.lower[j]);
        }
        if (std::isfinite(lp.upper[j])) {
            planes.push_back(e);
            rhs.push_back(lp.upper[j]);
        }
    }
    const std::size_t p = planes.size();
    std::optional<double> best;
    std::vector<std::size_t> pick(m);
    for (std::size_t q = 0; q < m; ++q) pick[q] = q;
    if (p < m) return best;
    while (true) {
        std::vector<std::vector<double>> a(m, std::vector<double>(m + 1));
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < m; ++c) a[r][c] = planes[pick[r]][c];
            a[r][m] = rhs[pick[r]];
        }
        bool singular = false;
        for (std::size_t c = 0; c < m && !singular; ++c) {
            std::size_t piv = c;
            for (std::size_t r = c + 1; r < m; ++r) {
                if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
            }
            if (std::abs(a[piv][c]) < 1e-12) {
                singular = true;
                break;
            }
            std::swap(a[c], a[piv]);
            for (std::size_t r = 0; r < m; ++r) {
                if (r == c) continue;
                const double f = a[r][c] / a[c][c];
                for (std::size_t k = c; k <= m; ++k) a[r][k] -= f * a[c][k];
            }
        }
        if (!singular) {
            std::vector<double> v(m);
            for (std::size_t c = 0; c < m; ++c) v[c] = a[c][m] / a[c][c];
            if (is_feasible(lp, v, 1e-9)) {
                double obj = 0.0;
                for (std::size_t j = 0; j < m; ++j) obj += lp.objective[j] * v[j];
                if (!best || obj > *best) best = obj;
            }
        }
        std::size_t q = m;
        while (q > 0 && pick[q - 1] == p - m + q - 1) --q;
        if (q == 0) break;
        ++pick[q - 1];
        for (std::size_t r = q; r < m; ++r) pick[r] = pick[r - 1] + 1;
    }
    return best;
}

TEST(Solve, OneVariableBox) {
    StandardLp lp;
    auto x = lp.add_variable(1.0);
    lp.add_row({{x, 1.0}}, Relation::LessEqual, 1.0);
    auto s = solve(lp);
    ASSERT_EQ(s.status, Status::Optimal);
    EXPECT_NEAR(s.value, 1.0, 1e-12);
    EXPECT_NEAR(s.point[0], 1.0, 1e-12);
}

TEST(Solve, EmptyBoxIsInfeasible) {
    StandardLp lp;
    auto x = lp.add_variable(1.0);
    lp.add_row({{x, 1.0}}, Relation::LessEqual, -1.0);
    EXPECT_EQ(solve(lp).status, Status::Infeasible);
}

TEST(Solve, UnboundedRay) {
    StandardLp lp;
    auto x = lp.add_variable(1.0);
    auto y = lp.add_variable(0.0);
    lp.add_row({{x, 1.0}, {y, -1.0}}, Relation::LessEqual, 1.0);
    EXPECT_EQ(solve(lp).status, Status::Unbounded);
}

TEST(Solve, FreeVariableTakesNegativeValue) {
    StandardLp lp;
    auto x = lp.add_free_variable(-1.0);  // maximize -x
    lp.add_row({{x, 1.0}}, Relation::GreaterEqual, -3.0);
    auto s = solve(lp);
    ASSERT_EQ(s.status, Status::Optimal);
    EXPECT_NEAR(s.point[0], -3.0, 1e-12);
    EXPECT_NEAR(s.value, 3.0, 1e-12);
}

TEST(Solve, FiniteUpperBoundBecomesRow) {
    StandardLp lp;
    lp.add_variable(2.0, 0.0, 4.0);
    lp.add_variable(1.0, -kInf, 1.5);
    auto s = solve(lp);
    ASSERT_EQ(s.status, Status::Optimal);
    EXPECT_NEAR(s.value, 9.5, 1e-12);
}

TEST(Solve, EqualityAndRedundantRows) {
    // x + y = 1 stated twice; maximize x + 2y.
    StandardLp lp;
    auto x = lp.add_variable(1.0);
    auto y = lp.add_variable(2.0);
    lp.add_row({{x, 1.0}, {y, 1.0}}, Relation::Equal, 1.0);
    lp.add_row({{x, 2.0}, {y, 2.0}}, Relation::Equal, 2.0);
    auto s = solve(lp);
    ASSERT_EQ(s.status, Status::Optimal);
    EXPECT_NEAR(s.value, 2.0, 1e-12);
    EXPECT_NEAR(s.point[1], 1.0, 1e-12);
}

// Beale's example cycles under Dantzig pricing with naive tie-breaking.
// Optimum 1.25 at (1, 0, 1, 0), cross-checked with an external solver.
TEST(Solve, BealeCyclingExampleTerminates) {
    StandardLp lp;
    for (double c : {0.75, -20.0, 0.5, -6.0}) lp.add_variable(c);
    lp.add_row({{0, 0.25}, {1, -8.0}, {2, -1.0}, {3, 9.0}}, Relation::LessEqual, 0.0);
    lp.add_row({{0, 0.5}, {1, -12.0}, {2, -0.5}, {3, 3.0}}, Relation::LessEqual, 0.0);
    lp.add_row({{2, 1.0}}, Relation::LessEqual, 1.0);
    auto s = solve(lp);
    ASSERT_EQ(s.status, Status::Optimal);
    EXPECT_NEAR(s.value, 1.25, 1e-12);
}

TEST(Solve, SubTolerancePivotIsBreakdownNotUnbounded) {
    StandardLp lp;
    auto x = lp.add_variable(1.0);
    lp.add_row({{x, 1e-12}}, Relation::LessEqual, 1.0);
    EXPECT_THROW(solve(lp), SolverFailure);
}

TEST(Validate, DimensionAndBoundErrors) {
    StandardLp lp;
    lp.add_variable(1.0);
    lp.rows.push_back({{1.0, 2.0}, Relation::LessEqual, 1.0});
    EXPECT_THROW(solve(lp), DimensionMismatch);

    StandardLp bad_lower;
    bad_lower.add_variable(1.0, 2.0, kInf);
    EXPECT_THROW(solve(bad_lower), InvalidInput);

    StandardLp nan_rhs;
    auto v = nan_rhs.add_variable(1.0);
    nan_rhs.add_row({{v, 1.0}}, Relation::LessEqual, std::nan(""));
    EXPECT_THROW(solve(nan_rhs), InvalidInput);

    StandardLp unknown;
    EXPECT_THROW(unknown.add_row({{0, 1.0}}, Relation::LessEqual, 1.0), DimensionMismatch);
}

StandardLp random_box_lp(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-5, 5), nvars(1, 3), nrows(1, 4), rel(0, 2);
    StandardLp lp;
    const int m = nvars(rng);
    for (int j = 0; j < m; ++j) {
        const bool free = rng() % 3 == 0;
        lp.add_variable(coef(rng), free ? -kInf : 0.0, 4.0 + static_cast<double>(rng() % 4));
        if (free) {
            // keep the region bounded below as well
            lp.add_row({{static_cast<std::size_t>(j), 1.0}}, Relation::GreaterEqual,
                       -static_cast<double>(rng() % 5));
        }
    }
    const int r = nrows(rng);
    for (int i = 0; i < r; ++i) {
        std::vector<std::pair<std::size_t, double>> terms;
        for (int j = 0; j < m; ++j) terms.emplace_back(j, coef(rng));
        const int which = rel(rng);
        const Relation rr = which == 0   ? Relation::LessEqual
                            : which == 1 ? Relation::GreaterEqual
                                         : Relation::Equal;
        lp.add_row(terms, rr, coef(rng));
    }
    return lp;
}

TEST(SolveProperty, MatchesVertexEnumerationOnBoundedLps) {
    std::mt19937_64 rng(2024);
    int optimal = 0, infeasible = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        auto lp = random_box_lp(rng);
        auto expected = brute_force_max(lp);
        auto s = solve(lp);
        if (!expected) {
            EXPECT_EQ(s.status, Status::Infeasible) << "trial " << trial;
            ++infeasible;
            continue;
        }
        ASSERT_EQ(s.status, Status::Optimal) << "trial " << trial;
        EXPECT_NEAR(s.value, *expected, 1e-7 * (1.0 + std::abs(*expected))) << "trial " << trial;
        EXPECT_TRUE(is_feasible(lp, s.point, 1e-9));
        ++optimal;
    }
    // Both branches must actually be exercised.
    EXPECT_GT(optimal, 500);
    EXPECT_GT(infeasible, 100);
}

TEST(SolveProperty, LocalOptimalitySpotCheck) {
    std::mt19937_64 rng(99);
    std::normal_distribution<double> g(0.0, 1.0);
    const double tau = 1e-3;
    for (int trial = 0; trial < 500; ++trial) {
        auto lp = random_box_lp(rng);
        auto s = solve(lp);
        if (s.status != Status::Optimal) continue;
        for (int d = 0; d < 20; ++d) {
            auto v = s.point;
            for (auto& c : v) c += tau * g(rng);
            if (!is_feasible(lp, v, 1e-12)) continue;
            double obj = 0.0;
            for (std::size_t j = 0; j < v.size(); ++j) obj += lp.objective[j] * v[j];
            EXPECT_LE(obj, s.value + 10.0 * Tolerances{}.lp);
        }
    }
}

TEST(SolveProperty, Deterministic) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto lp = random_box_lp(rng);
        auto a = solve(lp);
        auto b = solve(lp);
        EXPECT_EQ(a.status, b.status);
        EXPECT_EQ(a.point, b.point);
        EXPECT_EQ(a.iterations, b.iterations);
    }
}

TEST(SolveProperty, OptimalPointsReproduceTheirValue) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        auto lp = random_box_lp(rng);
        auto s = solve(lp);
        if (s.status != Status::Optimal) continue;
        double obj = 0.0;
        for (std::size_t j = 0; j < s.point.size(); ++j) obj += lp.objective[j] * s.point[j];
        EXPECT_NEAR(obj, s.value, Tolerances{}.lp * (1.0 + std::abs(s.value)));
    }
}

}  // namespace
}  // namespace pmolp::lp
