#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pmolp/core.hpp"
#include "pmolp/error.hpp"

namespace pmolp {

/// A weight per criterion.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<double> w) : w_(std::move(w)) {}
    WeightVector(std::initializer_list<double> w) : w_(w) {}

    std::size_t size() const noexcept { return w_.size(); }
    double operator[](std::size_t i) const { return w_[i]; }
    const std::vector<double>& values() const noexcept { return w_; }

    /// Membership in the open positive orthant. Exact comparison: certificates
    /// are constructed, not measured.
    bool strictly_positive() const {
        return !w_.empty() && std::all_of(w_.begin(), w_.end(), [](double v) { return v > 0.0; });
    }

    WeightVector scaled(double t) const {
        std::vector<double> out(w_);
        for (auto& v : out) v *= t;
        return WeightVector(std::move(out));
    }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<double> w_;
};

/// d = lambda^T C together with its largest component.
struct ObjectiveVector {
    std::vector<double> coeffs;
    double dmax = 0.0;

    static ObjectiveVector from(std::vector<double> d) {
        if (d.empty()) throw InvalidInput("objective vector must be nonempty");
        ObjectiveVector o{std::move(d), 0.0};
        o.dmax = o.coeffs.front();
        for (double v : o.coeffs) o.dmax = std::max(o.dmax, v);
        return o;
    }
};

inline ObjectiveVector weighted_objective(const CriteriaMatrix& c, const WeightVector& w) {
    if (w.size() != c.criteria()) {
        throw DimensionMismatch("weight vector has " + std::to_string(w.size()) +
                                " components, matrix has " + std::to_string(c.criteria()) +
                                " criteria");
    }
    std::vector<double> d(c.columns(), 0.0);
    for (std::size_t j = 0; j < c.columns(); ++j) {
        for (std::size_t i = 0; i < c.criteria(); ++i) d[j] += w[i] * c(i, j);
    }
    return ObjectiveVector::from(std::move(d));
}

/// J*(d): indices within tol.d of the maximum. Never empty.
inline SupportPattern argmax_set(const ObjectiveVector& d, const Tolerances& tol = {}) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < d.coeffs.size(); ++j) {
        if (d.coeffs[j] >= d.dmax - tol.d) idx.push_back(j);
    }
    return SupportPattern(std::move(idx), d.coeffs.size());
}

enum class SolutionSetKind { AllOfX, Vertex, OpenFace };

/// Optimal solution set of max d.x over the simplex, in closed form.
struct SolutionSetDescriptor {
    SolutionSetKind kind;
    SupportPattern support;  ///< all of J, {j}, or the open face's indices

    static SolutionSetDescriptor from_argmax(SupportPattern s, std::size_t n) {
        if (s.size() == n) return {SolutionSetKind::AllOfX, std::move(s)};
        if (s.size() == 1) return {SolutionSetKind::Vertex, std::move(s)};
        return {SolutionSetKind::OpenFace, std::move(s)};
    }

    friend bool operator==(const SolutionSetDescriptor&, const SolutionSetDescriptor&) = default;
};

inline const char* to_string(SolutionSetKind k) {
    switch (k) {
        case SolutionSetKind::AllOfX: return "all";
        case SolutionSetKind::Vertex: return "vertex";
        case SolutionSetKind::OpenFace: return "open-face";
    }
    return "?";
}

// For n = 2 the OpenFace branch cannot fire: a nonempty argmax set of size
// other than 1 and n does not exist.
inline SolutionSetDescriptor solution_set(const CriteriaMatrix& c, const WeightVector& w,
                                          const Tolerances& tol = {}) {
    return SolutionSetDescriptor::from_argmax(argmax_set(weighted_objective(c, w), tol),
                                              c.columns());
}

}  // namespace pmolp
