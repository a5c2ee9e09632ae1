#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pmolp/core.hpp"
#include "pmolp/efftest.hpp"
#include "pmolp/error.hpp"
#include "pmolp/scalarize.hpp"

namespace pmolp {

/// Largest n for which face enumeration runs without an explicit override.
inline constexpr std::size_t kEnumerationCap = 16;

struct FullCheck {
    bool full = false;
    std::optional<WeightVector> certificate;
};

/// Whether every point of the simplex is efficient, with a certificate whose
/// argmax set is all of J when it is.
inline FullCheck check_full(EfficiencyTester& tester) {
    const auto t0 = tester.t0();
    if (!t0.positive()) return {};
    auto w = canonical_certificate(t0.lambda);
    const auto& c = tester.matrix();
    if (!verify_certificate(c, w, PointClass::randomized(c.columns()), tester.tolerances())) {
        throw SolverFailure("T0 optimum is positive but its weights fail certificate verification");
    }
    return {true, std::move(w)};
}

inline FullCheck check_full(const CriteriaMatrix& c, const Tolerances& tol = {}) {
    EfficiencyTester tester(c, tol);
    return check_full(tester);
}

/// Columns j whose vertex e_j is efficient, ascending. All columns when the
/// whole simplex is efficient, without solving any T2.
inline std::vector<std::size_t> enumerate_vertices(EfficiencyTester& tester) {
    const std::size_t n = tester.matrix().columns();
    std::vector<std::size_t> out;
    const bool full = tester.t0().positive();
    for (std::size_t j = 0; j < n; ++j) {
        if (full || tester.t2(j).positive()) out.push_back(j);
    }
    return out;
}

inline std::vector<std::size_t> enumerate_vertices(const CriteriaMatrix& c,
                                                   const Tolerances& tol = {}) {
    EfficiencyTester tester(c, tol);
    return enumerate_vertices(tester);
}

struct EnumerateOptions {
    std::optional<std::size_t> max_support;  ///< largest face size to scan
    bool allow_large_n = false;              ///< lift kEnumerationCap
};

struct EfficientStructure {
    bool full = false;
    std::vector<std::size_t> vertices;
    std::vector<SupportPattern> faces;  ///< efficient open faces, sizes 2..n-1
    bool exhaustive = true;             ///< false when max_support cut the scan short
    std::size_t scanned_faces = 0;
    std::vector<std::string> warnings;
};

/// Calls fn(pattern) for every support pattern of size lo..hi, ordered by
/// size and then lexicographically.
template <class Fn>
void for_each_pattern(std::size_t n, std::size_t lo, std::size_t hi, Fn&& fn) {
    std::vector<std::size_t> idx;
    for (std::size_t p = lo; p <= hi; ++p) {
        idx.resize(p);
        for (std::size_t q = 0; q < p; ++q) idx[q] = q;
        while (true) {
            fn(SupportPattern(idx, n));
            std::size_t q = p;
            while (q > 0 && idx[q - 1] == n - p + q - 1) --q;
            if (q == 0) break;
            ++idx[q - 1];
            for (std::size_t r = q; r < p; ++r) idx[r] = idx[r - 1] + 1;
        }
    }
}

inline EfficientStructure enumerate_faces(EfficiencyTester& tester,
                                          const EnumerateOptions& opts = {}) {
    const std::size_t n = tester.matrix().columns();
    EfficientStructure out;
    if (n > kEnumerationCap) {
        if (!opts.allow_large_n) {
            throw SizeCapExceeded("face enumeration limited to n <= " +
                                  std::to_string(kEnumerationCap) + " (n = " + std::to_string(n) +
                                  "); pass an override to proceed");
        }
        out.warnings.push_back("n = " + std::to_string(n) +
                               " exceeds the practical enumeration bound of " +
                               std::to_string(kEnumerationCap) + "; face scan is exponential");
    }
    if (opts.max_support && *opts.max_support < 2) {
        throw InvalidInput("max support must be at least 2");
    }

    const std::size_t hi = opts.max_support ? std::min(*opts.max_support, n - 1) : n - 1;
    out.exhaustive = hi >= n - 1;
    out.full = tester.t0().positive();
    out.vertices = enumerate_vertices(tester);
    for_each_pattern(n, 2, hi, [&](const SupportPattern& s) {
        ++out.scanned_faces;
        if (out.full || tester.t1(s).positive()) out.faces.push_back(s);
    });
    return out;
}

inline EfficientStructure enumerate_faces(const CriteriaMatrix& c, const Tolerances& tol = {},
                                          const EnumerateOptions& opts = {}) {
    EfficiencyTester tester(c, tol);
    return enumerate_faces(tester, opts);
}

/// Closed-form sufficient condition for full efficiency with two criteria:
/// all ratios (c2[j+1] - c2[j]) / (c1[j] - c1[j+1]) equal and positive.
/// Ratios are compared to the first one with relative tolerance tol.d.
inline bool bicriterion_full_check(const CriteriaMatrix& c, const Tolerances& tol = {}) {
    if (c.criteria() != 2) {
        throw DimensionMismatch("bicriterion check needs exactly 2 criteria (got " +
                                std::to_string(c.criteria()) + ")");
    }
    const std::size_t n = c.columns();
    for (std::size_t j = 0; j + 1 < n; ++j) {
        if (c(0, j) == c(0, j + 1)) {
            throw InvalidInput("bicriterion check needs c[1," + std::to_string(j + 1) +
                               "] != c[1," + std::to_string(j + 2) + "]");
        }
    }
    auto ratio = [&](std::size_t j) {
        return (c(1, j + 1) - c(1, j)) / (c(0, j) - c(0, j + 1));
    };
    const double first = ratio(0);
    if (!(first > 0.0)) return false;
    for (std::size_t j = 1; j + 1 < n; ++j) {
        if (std::abs(ratio(j) - first) > tol.d * std::abs(first)) return false;
    }
    return true;
}

}  // namespace pmolp
