#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmolp/core.hpp"
#include "pmolp/error.hpp"
#include "pmolp/lp.hpp"
#include "pmolp/scalarize.hpp"

namespace pmolp {

enum class TestKind { T0, T1, T2 };

inline const char* to_string(TestKind k) {
    switch (k) {
        case TestKind::T0: return "T0";
        case TestKind::T1: return "T1";
        case TestKind::T2: return "T2";
    }
    return "?";
}

/// Where each named quantity lives in a test program's variable vector.
struct VariableMap {
    std::vector<std::size_t> lambda;                         ///< one per criterion
    std::size_t eps = 0;                                     ///< lower bound on every weight
    std::vector<std::pair<std::size_t, std::size_t>> gaps;  ///< (column, gap variable) for j outside the support
    std::optional<std::size_t> eps_min;                      ///< absent for T0
};

/// One of the three auxiliary linear programs, all maximizations whose
/// optimum is either 0 or 1.
///
///  T0      max eps      s.t. (l^T C)_j = (l^T C)_{j+1} for j < n,
///                            l_i >= eps, eps <= 1
///  T1(S)   max eps_m    s.t. (l^T C)_{s1} = (l^T C)_s for s in S,
///                            (l^T C)_{s1} - (l^T C)_j >= eps_j for j not in S,
///                            l_i >= eps, eps_m <= eps_j, eps_m <= eps, eps <= 1
///  T2(j)   T1 with S = {j} (no equalities, n-1 gap rows)
///
/// Every variable is free.
struct TestProgram {
    TestKind kind;
    SupportPattern support;  ///< all of J for T0, S for T1, {j} for T2
    lp::StandardLp lp;
    VariableMap vars;
};

namespace detail {

inline VariableMap add_weights(lp::StandardLp& prog, std::size_t k) {
    VariableMap vars;
    for (std::size_t i = 0; i < k; ++i) vars.lambda.push_back(prog.add_free_variable());
    return vars;
}

// Terms of (l^T C)_a - (l^T C)_b over the weight variables.
inline std::vector<std::pair<std::size_t, double>> column_difference(const CriteriaMatrix& c,
                                                                     const VariableMap& vars,
                                                                     std::size_t a,
                                                                     std::size_t b) {
    std::vector<std::pair<std::size_t, double>> terms;
    for (std::size_t i = 0; i < c.criteria(); ++i) {
        terms.emplace_back(vars.lambda[i], c(i, a) - c(i, b));
    }
    return terms;
}

inline void add_weight_floor(lp::StandardLp& prog, const VariableMap& vars) {
    for (auto l : vars.lambda) {
        prog.add_row({{l, 1.0}, {vars.eps, -1.0}}, lp::Relation::GreaterEqual, 0.0);
    }
}

inline TestProgram build_gap_program(const CriteriaMatrix& c, TestKind kind, SupportPattern s) {
    const std::size_t n = c.columns();
    TestProgram t{kind, std::move(s), {}, {}};
    auto& prog = t.lp;
    t.vars = add_weights(prog, c.criteria());
    t.vars.eps = prog.add_free_variable();
    const auto outside = t.support.complement(n);
    for (auto j : outside) t.vars.gaps.emplace_back(j, prog.add_free_variable());
    t.vars.eps_min = prog.add_free_variable(1.0);
    const std::size_t em = *t.vars.eps_min;

    const auto& idx = t.support.indices();
    for (std::size_t q = 0; q + 1 < idx.size(); ++q) {
        prog.add_row(column_difference(c, t.vars, idx[q], idx[q + 1]), lp::Relation::Equal, 0.0);
    }
    for (auto [j, gap] : t.vars.gaps) {
        auto terms = column_difference(c, t.vars, idx.front(), j);
        terms.emplace_back(gap, -1.0);
        prog.add_row(terms, lp::Relation::GreaterEqual, 0.0);
    }
    add_weight_floor(prog, t.vars);
    for (auto [j, gap] : t.vars.gaps) {
        prog.add_row({{em, 1.0}, {gap, -1.0}}, lp::Relation::LessEqual, 0.0);
    }
    prog.add_row({{em, 1.0}, {t.vars.eps, -1.0}}, lp::Relation::LessEqual, 0.0);
    prog.add_row({{t.vars.eps, 1.0}}, lp::Relation::LessEqual, 1.0);
    return t;
}

}  // namespace detail

inline TestProgram build_t0(const CriteriaMatrix& c) {
    const std::size_t n = c.columns();
    TestProgram t{TestKind::T0, SupportPattern::all(n), {}, {}};
    auto& prog = t.lp;
    t.vars = detail::add_weights(prog, c.criteria());
    t.vars.eps = prog.add_free_variable(1.0);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        prog.add_row(detail::column_difference(c, t.vars, j, j + 1), lp::Relation::Equal, 0.0);
    }
    detail::add_weight_floor(prog, t.vars);
    prog.add_row({{t.vars.eps, 1.0}}, lp::Relation::LessEqual, 1.0);
    return t;
}

inline TestProgram build_t1(const CriteriaMatrix& c, const SupportPattern& s) {
    const std::size_t n = c.columns();
    if (s.size() < 2 || s.size() + 1 > n) {
        throw InvalidInput("T1 needs a support of 2..n-1 indices (got " + std::to_string(s.size()) +
                           ")");
    }
    if (s.indices().back() >= n) throw InvalidInput("support index out of range");
    return detail::build_gap_program(c, TestKind::T1, s);
}

inline TestProgram build_t2(const CriteriaMatrix& c, std::size_t j) {
    const std::size_t n = c.columns();
    if (j >= n) {
        throw InvalidInput("T2 column " + std::to_string(j + 1) + " out of range 1.." +
                           std::to_string(n));
    }
    return detail::build_gap_program(c, TestKind::T2, SupportPattern::single(j, n));
}

/// Optimum values above this count as positive. The optima are 0 or 1, so
/// anything in between is solver noise.
inline constexpr double kPositiveThreshold = 0.5;

/// A solved test program.
struct TestOutcome {
    TestKind kind;
    double value = 0.0;
    std::vector<double> lambda;  ///< weight part of the optimal point
    lp::LpSolution solution;

    bool positive() const noexcept { return value > kPositiveThreshold; }
};

inline TestOutcome run_test(const TestProgram& t, const Tolerances& tol = {}) {
    auto sol = lp::solve(t.lp, tol);
    // All-zero is feasible and the objective is capped by eps <= 1.
    if (sol.status != lp::Status::Optimal) {
        throw SolverFailure(std::string("test program ") + to_string(t.kind) + " reported " +
                            lp::to_string(sol.status));
    }
    TestOutcome out{t.kind, sol.value, {}, {}};
    for (auto l : t.vars.lambda) out.lambda.push_back(sol.point[l]);
    out.solution = std::move(sol);
    return out;
}

/// Rescales positive weights so the smallest is exactly one.
inline WeightVector canonical_certificate(const std::vector<double>& lambda) {
    if (lambda.empty()) throw InvalidInput("empty weight vector");
    const double lo = *std::min_element(lambda.begin(), lambda.end());
    if (!(lo > 0.0)) throw InvalidInput("certificate weights must be strictly positive");
    std::vector<double> w(lambda);
    for (auto& v : w) v /= lo;
    return WeightVector(std::move(w));
}

/// True iff w is strictly positive and J*(w^T C) equals the support the
/// class names: all of J, S, or {j}.
inline bool verify_certificate(const CriteriaMatrix& c, const WeightVector& w,
                               const PointClass& cls, const Tolerances& tol = {}) {
    if (w.size() != c.criteria()) throw DimensionMismatch("certificate length must equal k");
    if (!w.strictly_positive()) return false;
    return argmax_set(weighted_objective(c, w), tol) == cls.support;
}

enum class Verdict { Efficient, Dominated };

inline const char* to_string(Verdict v) {
    return v == Verdict::Efficient ? "efficient" : "dominated";
}

struct EfficiencyReport {
    SimplexPoint point;
    PointClass point_class;
    Verdict verdict;
    TestKind test;  ///< T0 when T0 alone decided (full efficiency or a randomized point)
    double value;
    std::optional<WeightVector> certificate;
    std::optional<SolutionSetDescriptor> face;
    /// Components treated as zero although the input was not exactly zero.
    std::vector<std::size_t> near_zero;

    bool efficient() const noexcept { return verdict == Verdict::Efficient; }

    /// The class whose support the certificate reproduces: Randomized when
    /// the whole simplex was proven efficient, the point's own class otherwise.
    PointClass certified_class() const {
        if (face && face->kind == SolutionSetKind::AllOfX) {
            return PointClass::randomized(point.size());
        }
        return point_class;
    }
};

/// Runs the efficiency decision procedure against one criteria matrix and
/// memoizes test-program results: T0 once per tester, T1 once per support
/// pattern, T2 once per column.
///
/// Thread safety: all member functions may be called concurrently. The cache
/// is guarded by a mutex; solves happen outside the lock, so two threads
/// racing on the same key may both solve, and the first result stored wins.
class EfficiencyTester {
public:
    explicit EfficiencyTester(CriteriaMatrix c, Tolerances tol = {})
        : c_(std::move(c)), tol_(tol) {
        tol_.validate();
    }

    const CriteriaMatrix& matrix() const noexcept { return c_; }
    const Tolerances& tolerances() const noexcept { return tol_; }

    /// Number of LPs actually solved (cache misses).
    std::size_t solves() const {
        std::lock_guard lock(mu_);
        return solves_;
    }

    TestOutcome t0() {
        {
            std::lock_guard lock(mu_);
            if (t0_) return *t0_;
        }
        auto out = run_test(build_t0(c_), tol_);
        std::lock_guard lock(mu_);
        ++solves_;
        if (!t0_) t0_ = std::move(out);
        return *t0_;
    }

    TestOutcome t1(const SupportPattern& s) {
        return cached(t1_, s, [&] { return build_t1(c_, s); });
    }

    TestOutcome t2(std::size_t j) {
        return cached(t2_, j, [&] { return build_t2(c_, j); });
    }

    EfficiencyReport decide(const SimplexPoint& x) {
        const std::size_t n = c_.columns();
        if (x.size() != n) {
            throw DimensionMismatch("point has " + std::to_string(x.size()) +
                                    " components, matrix has " + std::to_string(n) + " columns");
        }
        EfficiencyReport r{x,
                           classify(x, tol_),
                           Verdict::Dominated,
                           TestKind::T0,
                           0.0,
                           std::nullopt,
                           std::nullopt,
                           near_zero_components(x, tol_)};

        const auto full = t0();
        r.value = full.value;
        if (full.positive()) {
            r.verdict = Verdict::Efficient;
            r.certificate = canonical_certificate(full.lambda);
            r.face = SolutionSetDescriptor{SolutionSetKind::AllOfX, SupportPattern::all(n)};
            return r;
        }
        if (r.point_class.kind == PointKind::Randomized) return r;

        const bool partial = r.point_class.kind == PointKind::PartiallyRandomized;
        const auto outcome = partial ? t1(r.point_class.support) : t2(r.point_class.support.front());
        r.test = outcome.kind;
        r.value = outcome.value;
        if (outcome.positive()) {
            r.verdict = Verdict::Efficient;
            r.certificate = canonical_certificate(outcome.lambda);
            r.face = SolutionSetDescriptor{
                partial ? SolutionSetKind::OpenFace : SolutionSetKind::Vertex,
                r.point_class.support};
        }
        return r;
    }

private:
    template <class Key, class Build>
    TestOutcome cached(std::map<Key, TestOutcome>& cache, const Key& key, Build build) {
        {
            std::lock_guard lock(mu_);
            if (auto it = cache.find(key); it != cache.end()) return it->second;
        }
        auto out = run_test(build(), tol_);
        std::lock_guard lock(mu_);
        ++solves_;
        return cache.emplace(key, std::move(out)).first->second;
    }

    CriteriaMatrix c_;
    Tolerances tol_;
    mutable std::mutex mu_;
    std::optional<TestOutcome> t0_;
    std::map<SupportPattern, TestOutcome> t1_;
    std::map<std::size_t, TestOutcome> t2_;
    std::size_t solves_ = 0;
};

/// One-shot decision without a shared cache.
inline EfficiencyReport decide(const CriteriaMatrix& c, const SimplexPoint& x,
                               const Tolerances& tol = {}) {
    return EfficiencyTester(c, tol).decide(x);
}

}  // namespace pmolp
