#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pmolp/core.hpp"
#include "pmolp/efftest.hpp"
#include "pmolp/error.hpp"
#include "pmolp/lp.hpp"

// Efficiency verdicts that do not go through the weight-space test programs.
namespace pmolp::oracle {

/// max sum_i s_i  s.t.  C y - s = C x,  sum_j y_j = 1,  y >= 0,  s >= 0.
///
/// Always feasible (y = x, s = 0) and bounded. A positive optimum means some
/// y improves every criterion weakly and one strictly.
inline lp::StandardLp dominance_program(const CriteriaMatrix& c, const SimplexPoint& x) {
    const std::size_t k = c.criteria();
    const std::size_t n = c.columns();
    if (x.size() != n) throw DimensionMismatch("point dimension does not match matrix");
    lp::StandardLp prog;
    for (std::size_t j = 0; j < n; ++j) prog.add_variable(0.0);
    for (std::size_t i = 0; i < k; ++i) prog.add_variable(1.0);
    const auto cx = c.apply(x.coords());
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::pair<std::size_t, double>> terms;
        for (std::size_t j = 0; j < n; ++j) terms.emplace_back(j, c(i, j));
        terms.emplace_back(n + i, -1.0);
        prog.add_row(terms, lp::Relation::Equal, cx[i]);
    }
    std::vector<std::pair<std::size_t, double>> simplex;
    for (std::size_t j = 0; j < n; ++j) simplex.emplace_back(j, 1.0);
    prog.add_row(simplex, lp::Relation::Equal, 1.0);
    return prog;
}

struct DominanceResult {
    Verdict verdict;
    double slack = 0.0;            ///< optimum of the dominance program
    std::vector<double> improver;  ///< the maximizing y
};

inline DominanceResult dominance_lp(const CriteriaMatrix& c, const SimplexPoint& x,
                                    const Tolerances& tol = {}) {
    const auto prog = dominance_program(c, x);
    auto sol = lp::solve(prog, tol);
    if (sol.status != lp::Status::Optimal) {
        throw SolverFailure(std::string("dominance program reported ") + lp::to_string(sol.status));
    }
    DominanceResult r{sol.value > 10.0 * tol.lp ? Verdict::Dominated : Verdict::Efficient,
                      sol.value,
                      {}};
    r.improver.assign(sol.point.begin(), sol.point.begin() + static_cast<long>(c.columns()));
    return r;
}

inline Verdict dominance_lp_verdict(const CriteriaMatrix& c, const SimplexPoint& x,
                                    const Tolerances& tol = {}) {
    return dominance_lp(c, x, tol).verdict;
}

/// True iff Cy >= Cx componentwise and some criterion is ahead by more than
/// tol.d.
inline bool dominates(const CriteriaMatrix& c, std::span<const double> y,
                      std::span<const double> x, const Tolerances& tol = {}) {
    const auto cy = c.apply(y);
    const auto cx = c.apply(x);
    bool strict = false;
    for (std::size_t i = 0; i < cy.size(); ++i) {
        const double diff = cy[i] - cx[i];
        if (diff < 0.0) return false;
        if (diff > tol.d) strict = true;
    }
    return strict;
}

/// Draws `trials` uniform points of the simplex (normalized exponential
/// spacings) and returns the first that dominates x by more than tol.d.
/// Finding nothing proves nothing.
inline std::optional<SimplexPoint> sample_dominators(const CriteriaMatrix& c,
                                                     const SimplexPoint& x, std::size_t trials,
                                                     std::uint64_t seed,
                                                     const Tolerances& tol = {}) {
    if (trials == 0) throw InvalidInput("trials must be at least 1");
    const std::size_t n = c.columns();
    if (x.size() != n) throw DimensionMismatch("point dimension does not match matrix");
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> y(n);
    for (std::size_t t = 0; t < trials; ++t) {
        double sum = 0.0;
        for (auto& v : y) sum += (v = expo(rng));
        for (auto& v : y) v /= sum;
        if (dominates(c, y, x.coords(), tol)) return SimplexPoint(y);
    }
    return std::nullopt;
}

}  // namespace pmolp::oracle
