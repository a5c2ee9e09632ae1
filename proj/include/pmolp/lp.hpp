#pragma once

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "pmolp/core.hpp"
#include "pmolp/error.hpp"

namespace pmolp::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Row {
    std::vector<double> coeffs;
    Relation relation = Relation::LessEqual;
    double rhs = 0.0;
};

/// maximize objective . v  subject to  rows, lower <= v <= upper.
///
/// Lower bounds are either 0 or -inf (free variable); upper bounds are +inf
/// or finite.
struct StandardLp {
    std::vector<double> objective;
    std::vector<double> lower;
    std::vector<double> upper;
    std::vector<Row> rows;

    std::size_t variables() const noexcept { return objective.size(); }

    std::size_t add_variable(double cost, double lo = 0.0, double hi = kInf) {
        objective.push_back(cost);
        lower.push_back(lo);
        upper.push_back(hi);
        for (auto& r : rows) r.coeffs.push_back(0.0);
        return objective.size() - 1;
    }

    std::size_t add_free_variable(double cost = 0.0) { return add_variable(cost, -kInf, kInf); }

    /// Appends a row given as (variable, coefficient) terms; repeated
    /// variables accumulate.
    void add_row(const std::vector<std::pair<std::size_t, double>>& terms, Relation rel,
                 double rhs) {
        Row r{std::vector<double>(variables(), 0.0), rel, rhs};
        for (auto [v, c] : terms) {
            if (v >= variables()) throw DimensionMismatch("row term refers to unknown variable");
            r.coeffs[v] += c;
        }
        rows.push_back(std::move(r));
    }

    void validate() const {
        const std::size_t m = variables();
        if (lower.size() != m || upper.size() != m) {
            throw DimensionMismatch("bounds do not match the objective length");
        }
        for (std::size_t j = 0; j < m; ++j) {
            if (!std::isfinite(objective[j])) throw InvalidInput("objective must be finite");
            if (!(lower[j] == 0.0 || lower[j] == -kInf)) {
                throw InvalidInput("lower bounds must be 0 or -inf");
            }
            if (std::isnan(upper[j]) || upper[j] == -kInf || upper[j] < lower[j]) {
                throw InvalidInput("upper bound must be +inf or a finite value >= lower bound");
            }
        }
        for (const auto& r : rows) {
            if (r.coeffs.size() != m) throw DimensionMismatch("row length does not match variables");
            if (!std::isfinite(r.rhs)) throw InvalidInput("right-hand side must be finite");
            for (double c : r.coeffs) {
                if (!std::isfinite(c)) throw InvalidInput("constraint coefficients must be finite");
            }
        }
    }
};

enum class Status { Optimal, Infeasible, Unbounded };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Optimal: return "optimal";
        case Status::Infeasible: return "infeasible";
        case Status::Unbounded: return "unbounded";
    }
    return "?";
}

struct LpSolution {
    Status status = Status::Infeasible;
    double value = 0.0;         ///< meaningful only when Optimal
    std::vector<double> point;  ///< empty unless Optimal
    std::size_t iterations = 0;
};

/// Largest violation of any row or bound by `v`, each scaled by
/// 1 + |rhs| + sum_j |a_j v_j| so that the check is meaningful for large
/// multipliers.
inline double max_scaled_violation(const StandardLp& lp, const std::vector<double>& v) {
    double worst = 0.0;
    for (const auto& r : lp.rows) {
        double lhs = 0.0;
        double mag = std::abs(r.rhs);
        for (std::size_t j = 0; j < v.size(); ++j) {
            lhs += r.coeffs[j] * v[j];
            mag += std::abs(r.coeffs[j] * v[j]);
        }
        double viol = 0.0;
        switch (r.relation) {
            case Relation::LessEqual: viol = lhs - r.rhs; break;
            case Relation::GreaterEqual: viol = r.rhs - lhs; break;
            case Relation::Equal: viol = std::abs(lhs - r.rhs); break;
        }
        worst = std::max(worst, viol / (1.0 + mag));
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
        double scale = 1.0 + std::abs(v[j]);
        worst = std::max(worst, (lp.lower[j] - v[j]) / scale);
        worst = std::max(worst, (v[j] - lp.upper[j]) / scale);
    }
    return worst;
}

inline bool is_feasible(const StandardLp& lp, const std::vector<double>& v, double tol) {
    return v.size() == lp.variables() && max_scaled_violation(lp, v) <= tol;
}

namespace detail {

// Dense tableau in canonical form with respect to `basis`. The last row holds
// reduced costs (maximization: a positive entry improves) and the last
// column holds the right-hand side.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_((rows + 1) * (cols + 1), 0.0), basis_(rows, 0),
          active_(rows, true) {}

    double& at(std::size_t i, std::size_t j) { return a_[i * (cols_ + 1) + j]; }
    double at(std::size_t i, std::size_t j) const { return a_[i * (cols_ + 1) + j]; }
    double& rhs(std::size_t i) { return at(i, cols_); }
    double rhs(std::size_t i) const { return at(i, cols_); }
    double& cost(std::size_t j) { return at(rows_, j); }
    double cost(std::size_t j) const { return at(rows_, j); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::vector<std::size_t>& basis() noexcept { return basis_; }
    const std::vector<std::size_t>& basis() const noexcept { return basis_; }
    std::vector<bool>& active() noexcept { return active_; }
    const std::vector<bool>& active() const noexcept { return active_; }

    void pivot(std::size_t r, std::size_t c) {
        const double p = at(r, c);
        for (std::size_t j = 0; j <= cols_; ++j) at(r, j) /= p;
        at(r, c) = 1.0;
        for (std::size_t i = 0; i <= rows_; ++i) {
            if (i == r || (i < rows_ && !active_[i])) continue;
            const double f = at(i, c);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= cols_; ++j) at(i, j) -= f * at(r, j);
            at(i, c) = 0.0;
        }
        basis_[r] = c;
    }

    /// Rebuilds the reduced-cost row for `costs` (maximize).
    void price(const std::vector<double>& costs) {
        for (std::size_t j = 0; j <= cols_; ++j) cost(j) = j < cols_ ? costs[j] : 0.0;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (!active_[i]) continue;
            const double cb = costs[basis_[i]];
            if (cb == 0.0) continue;
            for (std::size_t j = 0; j <= cols_; ++j) cost(j) -= cb * at(i, j);
        }
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> a_;
    std::vector<std::size_t> basis_;
    std::vector<bool> active_;
};

enum class PhaseResult { Optimal, Unbounded };

// Primal simplex on a tableau that is already primal feasible. Dantzig
// pricing until 2*(rows+cols) consecutive degenerate pivots, then Bland's
// rule for the rest of the phase.
inline PhaseResult run_phase(Tableau& t, const std::vector<bool>& allowed, double tol,
                             std::size_t& iterations) {
    const std::size_t stall_limit = 2 * (t.rows() + t.cols());
    const std::size_t max_iter = 200 * (t.rows() + t.cols()) + 1000;
    std::size_t stall = 0;
    bool bland = false;
    std::vector<bool> in_basis(t.cols(), false);
    for (std::size_t i = 0; i < t.rows(); ++i) {
        if (t.active()[i]) in_basis[t.basis()[i]] = true;
    }

    for (std::size_t iter = 0;; ++iter) {
        if (iter > max_iter) throw SolverFailure("simplex iteration limit exceeded");

        std::size_t enter = t.cols();
        double best = tol;
        for (std::size_t j = 0; j < t.cols(); ++j) {
            if (!allowed[j] || in_basis[j]) continue;
            const double d = t.cost(j);
            if (d > tol) {
                if (bland) {
                    enter = j;
                    break;
                }
                if (d > best) {
                    best = d;
                    enter = j;
                }
            }
        }
        if (enter == t.cols()) return PhaseResult::Optimal;

        std::size_t leave = t.rows();
        double best_ratio = kInf;
        double col_max = 0.0;
        double col_scale = 0.0;
        for (std::size_t i = 0; i < t.rows(); ++i) {
            if (!t.active()[i]) continue;
            const double a = t.at(i, enter);
            col_max = std::max(col_max, a);
            col_scale = std::max(col_scale, std::abs(a));
            if (a <= tol) continue;
            const double ratio = std::max(t.rhs(i), 0.0) / a;
            bool take = false;
            if (leave == t.rows() || ratio < best_ratio - tol) {
                take = true;
            } else if (ratio <= best_ratio + tol) {
                if (bland) {
                    take = t.basis()[i] < t.basis()[leave];
                } else {
                    const double cur = t.at(leave, enter);
                    take = a > cur || (a == cur && t.basis()[i] < t.basis()[leave]);
                }
            }
            if (take) {
                leave = i;
                best_ratio = std::min(best_ratio, ratio);
            }
        }
        if (leave == t.rows()) {
            // Entries that are positive yet below the pivot tolerance leave the
            // step undecidable: neither a safe pivot nor a certain ray.
            if (col_max > 1e3 * DBL_EPSILON * std::max(1.0, col_scale)) {
                throw SolverFailure("numerical breakdown: only sub-tolerance pivots available");
            }
            return PhaseResult::Unbounded;
        }

        if (best_ratio <= tol) {
            if (++stall >= stall_limit) bland = true;
        } else {
            stall = 0;
        }
        in_basis[t.basis()[leave]] = false;
        t.pivot(leave, enter);
        in_basis[enter] = true;
        ++iterations;
    }
}

}  // namespace detail

/// Two-phase primal simplex over a dense tableau.
///
/// Free variables are split into differences of nonnegative pairs and finite
/// upper bounds become explicit rows. Throws SolverFailure when the result
/// cannot be trusted; never returns a wrong Optimal knowingly.
inline LpSolution solve(const StandardLp& lp, const Tolerances& tolerances = {}) {
    lp.validate();
    const double tol = tolerances.lp;

    // Column layout: structural columns (one or two per variable), then one
    // slack/surplus per inequality row, then artificials.
    const std::size_t m = lp.variables();
    std::vector<std::size_t> pos_col(m), neg_col(m, SIZE_MAX);
    std::size_t ncols = 0;
    for (std::size_t j = 0; j < m; ++j) {
        pos_col[j] = ncols++;
        if (lp.lower[j] == -kInf) neg_col[j] = ncols++;
    }
    const std::size_t structural = ncols;

    std::vector<Row> rows = lp.rows;
    for (std::size_t j = 0; j < m; ++j) {
        if (std::isfinite(lp.upper[j])) {
            Row r{std::vector<double>(m, 0.0), Relation::LessEqual, lp.upper[j]};
            r.coeffs[j] = 1.0;
            rows.push_back(std::move(r));
        }
    }
    const std::size_t nrows = rows.size();

    std::vector<double> sign(nrows, 1.0);
    std::vector<Relation> rel(nrows);
    for (std::size_t i = 0; i < nrows; ++i) {
        rel[i] = rows[i].relation;
        if (rows[i].rhs < 0.0) {
            sign[i] = -1.0;
            if (rel[i] == Relation::LessEqual) {
                rel[i] = Relation::GreaterEqual;
            } else if (rel[i] == Relation::GreaterEqual) {
                rel[i] = Relation::LessEqual;
            }
        }
    }
    std::vector<std::size_t> slack_col(nrows, SIZE_MAX), art_col(nrows, SIZE_MAX);
    for (std::size_t i = 0; i < nrows; ++i) {
        if (rel[i] != Relation::Equal) slack_col[i] = ncols++;
    }
    const std::size_t first_art = ncols;
    for (std::size_t i = 0; i < nrows; ++i) {
        if (rel[i] != Relation::LessEqual) art_col[i] = ncols++;
    }

    detail::Tableau t(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double a = sign[i] * rows[i].coeffs[j];
            t.at(i, pos_col[j]) = a;
            if (neg_col[j] != SIZE_MAX) t.at(i, neg_col[j]) = -a;
        }
        t.rhs(i) = sign[i] * rows[i].rhs;
        if (rel[i] == Relation::LessEqual) {
            t.at(i, slack_col[i]) = 1.0;
            t.basis()[i] = slack_col[i];
        } else {
            if (rel[i] == Relation::GreaterEqual) t.at(i, slack_col[i]) = -1.0;
            t.at(i, art_col[i]) = 1.0;
            t.basis()[i] = art_col[i];
        }
    }

    LpSolution sol;
    std::vector<bool> allowed(ncols, true);

    if (first_art < ncols) {
        std::vector<double> phase1(ncols, 0.0);
        for (std::size_t j = first_art; j < ncols; ++j) phase1[j] = -1.0;
        t.price(phase1);
        detail::run_phase(t, allowed, tol, sol.iterations);

        double infeasibility = 0.0;
        double rhs_scale = 1.0;
        for (std::size_t i = 0; i < nrows; ++i) {
            rhs_scale = std::max(rhs_scale, std::abs(t.rhs(i)));
            if (t.basis()[i] >= first_art) infeasibility += std::max(t.rhs(i), 0.0);
        }
        if (infeasibility > tol * rhs_scale) {
            sol.status = Status::Infeasible;
            return sol;
        }

        // Drive zero-level artificials out of the basis; rows where that is
        // impossible are linearly dependent and are dropped.
        for (std::size_t i = 0; i < nrows; ++i) {
            if (t.basis()[i] < first_art) continue;
            std::size_t c = first_art;
            double best = tol;
            for (std::size_t j = 0; j < first_art; ++j) {
                if (std::abs(t.at(i, j)) > best) {
                    best = std::abs(t.at(i, j));
                    c = j;
                }
            }
            if (c < first_art) {
                t.pivot(i, c);
                ++sol.iterations;
            } else {
                t.active()[i] = false;
            }
        }
        for (std::size_t j = first_art; j < ncols; ++j) allowed[j] = false;
    }

    std::vector<double> costs(ncols, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        costs[pos_col[j]] = lp.objective[j];
        if (neg_col[j] != SIZE_MAX) costs[neg_col[j]] = -lp.objective[j];
    }
    t.price(costs);
    if (detail::run_phase(t, allowed, tol, sol.iterations) == detail::PhaseResult::Unbounded) {
        sol.status = Status::Unbounded;
        return sol;
    }

    std::vector<double> colval(structural, 0.0);
    for (std::size_t i = 0; i < nrows; ++i) {
        if (t.active()[i] && t.basis()[i] < structural) colval[t.basis()[i]] = t.rhs(i);
    }
    sol.point.assign(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        sol.point[j] = colval[pos_col[j]];
        if (neg_col[j] != SIZE_MAX) sol.point[j] -= colval[neg_col[j]];
        if (lp.lower[j] == 0.0 && sol.point[j] < 0.0) sol.point[j] = 0.0;
    }
    sol.value = 0.0;
    for (std::size_t j = 0; j < m; ++j) sol.value += lp.objective[j] * sol.point[j];
    sol.status = Status::Optimal;

    if (!is_feasible(lp, sol.point, tol)) {
        throw SolverFailure("numerical breakdown: optimal basis fails the feasibility re-check");
    }
    return sol;
}

}  // namespace pmolp::lp
