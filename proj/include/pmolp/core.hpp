#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pmolp/error.hpp"

// Multiple-objective linear programs over the probability simplex
//
//     VMAX Cx  subject to  x >= 0, sum_j x_j = 1
//
// where C is a k x n criteria matrix. Column indices are 0-based inside the
// library; the I/O layer converts to 1-based for anything user facing.
namespace pmolp {

/// Numeric thresholds shared by every module.
struct Tolerances {
    double x = 1e-9;   ///< components <= x count as zero
    double d = 1e-7;   ///< objective coefficients within d of the max are ties
    double lp = 1e-9;  ///< simplex pivot / feasibility tolerance

    void validate() const {
        if (!(x > 0.0) || !(d > 0.0) || !(lp > 0.0)) {
            throw InvalidInput("tolerances must be strictly positive");
        }
        if (lp > d) {
            throw InvalidInput("LP tolerance must not exceed the tie tolerance");
        }
    }
};

/// The k x n matrix of criterion coefficients, stored row-major.
class CriteriaMatrix {
public:
    CriteriaMatrix(std::size_t k, std::size_t n, std::vector<double> entries)
        : k_(k), n_(n), entries_(std::move(entries)) {
        if (k_ < 2 || n_ < 2) {
            throw InvalidInput("criteria matrix needs k >= 2 and n >= 2 (got k=" +
                               std::to_string(k_) + ", n=" + std::to_string(n_) + ")");
        }
        if (entries_.size() != k_ * n_) {
            throw DimensionMismatch("criteria matrix has " + std::to_string(entries_.size()) +
                                    " entries, expected " + std::to_string(k_ * n_));
        }
        for (double v : entries_) {
            if (!std::isfinite(v)) throw InvalidInput("criteria matrix entries must be finite");
        }
    }

    static CriteriaMatrix from_rows(const std::vector<std::vector<double>>& rows) {
        if (rows.empty()) throw InvalidInput("criteria matrix has no rows");
        const std::size_t n = rows.front().size();
        std::vector<double> flat;
        flat.reserve(rows.size() * n);
        for (const auto& r : rows) {
            if (r.size() != n) throw DimensionMismatch("criteria matrix rows have unequal length");
            flat.insert(flat.end(), r.begin(), r.end());
        }
        return CriteriaMatrix(rows.size(), n, std::move(flat));
    }

    static CriteriaMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
        std::vector<std::vector<double>> v;
        for (auto r : rows) v.emplace_back(r);
        return from_rows(v);
    }

    std::size_t criteria() const noexcept { return k_; }
    std::size_t columns() const noexcept { return n_; }

    double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    std::span<const double> row(std::size_t i) const {
        return std::span<const double>(entries_).subspan(i * n_, n_);
    }

    std::vector<double> column(std::size_t j) const {
        std::vector<double> c(k_);
        for (std::size_t i = 0; i < k_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    /// Cx, one value per criterion.
    std::vector<double> apply(std::span<const double> x) const {
        if (x.size() != n_) throw DimensionMismatch("point dimension does not match matrix");
        std::vector<double> out(k_, 0.0);
        for (std::size_t i = 0; i < k_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * x[j];
        }
        return out;
    }

    friend bool operator==(const CriteriaMatrix&, const CriteriaMatrix&) = default;

private:
    std::size_t k_;
    std::size_t n_;
    std::vector<double> entries_;
};

/// A sorted, duplicate-free, nonempty set of column indices.
class SupportPattern {
public:
    SupportPattern() = default;

    /// Sorts and deduplicates; rejects empty sets and indices >= n.
    SupportPattern(std::vector<std::size_t> indices, std::size_t n) : idx_(std::move(indices)) {
        std::sort(idx_.begin(), idx_.end());
        idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
        if (idx_.empty()) throw InvalidInput("support pattern must be nonempty");
        if (idx_.back() >= n) {
            throw InvalidInput("support index " + std::to_string(idx_.back() + 1) +
                               " out of range 1.." + std::to_string(n));
        }
    }

    static SupportPattern all(std::size_t n) {
        std::vector<std::size_t> v(n);
        std::iota(v.begin(), v.end(), std::size_t{0});
        return SupportPattern(std::move(v), n);
    }

    static SupportPattern single(std::size_t j, std::size_t n) { return SupportPattern({j}, n); }

    const std::vector<std::size_t>& indices() const noexcept { return idx_; }
    std::size_t size() const noexcept { return idx_.size(); }
    std::size_t front() const { return idx_.front(); }

    bool contains(std::size_t j) const { return std::binary_search(idx_.begin(), idx_.end(), j); }

    /// Indices in 0..n-1 that are not in the pattern.
    std::vector<std::size_t> complement(std::size_t n) const {
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < n; ++j) {
            if (!contains(j)) out.push_back(j);
        }
        return out;
    }

    std::vector<std::size_t> one_based() const {
        std::vector<std::size_t> out(idx_);
        for (auto& j : out) ++j;
        return out;
    }

    friend auto operator<=>(const SupportPattern&, const SupportPattern&) = default;

private:
    std::vector<std::size_t> idx_;
};

/// A feasible point of the probability simplex.
///
/// Components in [-tol.x, 0) are clamped to zero; anything more negative, a
/// non-finite component, or a sum further than n*tol.x from one is rejected.
/// Points are never renormalized.
class SimplexPoint {
public:
    SimplexPoint(std::vector<double> coords, const Tolerances& tol = {}) : x_(std::move(coords)) {
        if (x_.size() < 2) throw InvalidInput("point needs at least two components");
        double sum = 0.0;
        for (std::size_t j = 0; j < x_.size(); ++j) {
            double& v = x_[j];
            if (!std::isfinite(v)) throw InvalidInput("point components must be finite");
            if (v < 0.0) {
                if (v < -tol.x) {
                    throw InvalidInput("point component " + std::to_string(j + 1) +
                                       " is negative");
                }
                v = 0.0;
                clamped_.push_back(j);
            }
            sum += v;
        }
        if (std::abs(sum - 1.0) > static_cast<double>(x_.size()) * tol.x) {
            throw InvalidInput("point components must sum to 1");
        }
    }

    std::size_t size() const noexcept { return x_.size(); }
    double operator[](std::size_t j) const { return x_[j]; }
    std::span<const double> coords() const noexcept { return x_; }

    /// Indices whose negative input values were clamped to zero.
    const std::vector<std::size_t>& clamped() const noexcept { return clamped_; }

    friend bool operator==(const SimplexPoint& a, const SimplexPoint& b) { return a.x_ == b.x_; }

private:
    std::vector<double> x_;
    std::vector<std::size_t> clamped_;
};

/// The unit vector e_j of the simplex.
inline SimplexPoint vertex(std::size_t j, std::size_t n) {
    if (j >= n) {
        throw InvalidInput("vertex index " + std::to_string(j + 1) + " out of range 1.." +
                           std::to_string(n));
    }
    std::vector<double> x(n, 0.0);
    x[j] = 1.0;
    return SimplexPoint(std::move(x));
}

/// Barycenter of the face spanned by a support pattern.
inline SimplexPoint barycenter(const SupportPattern& s, std::size_t n) {
    std::vector<double> x(n, 0.0);
    const double w = 1.0 / static_cast<double>(s.size());
    for (auto j : s.indices()) x[j] = w;
    return SimplexPoint(std::move(x));
}

enum class PointKind { Deterministic, PartiallyRandomized, Randomized };

/// Classification of a point by its support.
///
/// `support` always holds {j : x_j > tol.x}: a single index for
/// Deterministic, 2..n-1 indices for PartiallyRandomized, all of 0..n-1 for
/// Randomized.
struct PointClass {
    PointKind kind;
    SupportPattern support;

    static PointClass deterministic(std::size_t j, std::size_t n) {
        return {PointKind::Deterministic, SupportPattern::single(j, n)};
    }
    static PointClass randomized(std::size_t n) {
        return {PointKind::Randomized, SupportPattern::all(n)};
    }
    static PointClass partially_randomized(SupportPattern s, std::size_t n) {
        if (s.size() < 2 || s.size() + 1 > n) {
            throw InvalidInput("partially randomized support must have 2..n-1 indices");
        }
        return {PointKind::PartiallyRandomized, std::move(s)};
    }

    friend bool operator==(const PointClass&, const PointClass&) = default;
};

inline const char* to_string(PointKind k) {
    switch (k) {
        case PointKind::Deterministic: return "deterministic";
        case PointKind::PartiallyRandomized: return "partial";
        case PointKind::Randomized: return "randomized";
    }
    return "?";
}

/// Indices of components that are positive but at or below the zero threshold.
inline std::vector<std::size_t> near_zero_components(const SimplexPoint& x, const Tolerances& tol) {
    std::vector<std::size_t> out(x.clamped());
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] > 0.0 && x[j] <= tol.x) out.push_back(j);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline PointClass classify(const SimplexPoint& x, const Tolerances& tol = {}) {
    const std::size_t n = x.size();
    std::vector<std::size_t> positive;
    for (std::size_t j = 0; j < n; ++j) {
        if (x[j] > tol.x) positive.push_back(j);
    }
    // Unreachable for a valid SimplexPoint unless tol.x is absurdly large.
    if (positive.empty()) throw InvalidInput("point has no component above the zero threshold");
    if (positive.size() == 1) return PointClass::deterministic(positive.front(), n);
    if (positive.size() == n) return PointClass::randomized(n);
    return PointClass::partially_randomized(SupportPattern(std::move(positive), n), n);
}

}  // namespace pmolp
