// Copyright 2026 The cantor-normal Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Orbits T_{Q,m}(x) = q_m ... q_1 x mod 1 and the discrepancy of finite
// point sets.
//
// For an infinite digit stream T_{Q,m}(x) = sum_i E_{m+i}/(q_{m+1}...q_{m+i})
// is never evaluated exactly. The truncation x_m keeps the first d terms and
// carries the certified bound |x_m - T_{Q,m}(x)| <= 1/(q_{m+1}...q_{m+d}).
// The default depth is d = floor(sqrt(r(m))).

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "cantor/digit_sequence.hpp"
#include "cantor/numeric.hpp"
#include "cantor/partition.hpp"
#include "cantor/stats.hpp"

namespace cantor {

struct OrbitPoint {
    Index m = 0;
    unsigned depth = 0;
    Rational value;
    Rational error_bound;
};

/// floor(sqrt(y)).
inline unsigned isqrt(unsigned y) {
    auto s = static_cast<unsigned>(std::sqrt(static_cast<double>(y)));
    while (s * s > y) --s;
    while ((s + 1) * (s + 1) <= y) ++s;
    return s;
}

/// Truncation depth floor(sqrt(r(m))); m = 0 uses r(1).
inline unsigned paper_depth(const PartitionIndex& index, Index m) {
    return isqrt(index.r_of(std::max<Index>(m, 1)));
}

struct DepthPolicy {
    /// nullopt: floor(sqrt(r(m))); otherwise a fixed depth.
    std::optional<unsigned> fixed;

    static DepthPolicy paper() { return {}; }
    static DepthPolicy fixed_depth(unsigned d) {
        if (d == 0) throw ArgumentError("truncation depth must be >= 1");
        return {d};
    }
};

/// x_m at an explicit depth.
inline OrbitPoint orbit_truncated(const DigitSequence& x, Index m, unsigned depth) {
    if (depth == 0) throw ArgumentError("truncation depth must be >= 1");
    const auto digits = x.prefix(m + depth);
    const auto& q = x.basis();
    BigInt num = 0;
    BigInt den = 1;
    for (unsigned i = 1; i <= depth; ++i) {
        const Base b = q.at(m + i);
        num = num * b + digits[m + i - 1];
        den *= b;
    }
    return {m, depth, Rational(num, den), Rational(BigInt(1), den)};
}

inline OrbitPoint orbit_truncated(const PartitionIndex& index, const DigitSequence& x, Index m,
                                  DepthPolicy policy = DepthPolicy::paper()) {
    const unsigned depth = policy.fixed ? *policy.fixed : paper_depth(index, m);
    return orbit_truncated(x, m, depth);
}

/// T_{Q,m}(x) for a rational x.
inline Rational orbit_exact(const BasicSequence& q, const Rational& x, Index m) {
    std::vector<Base> factors;
    factors.reserve(m);
    for (Index i = 1; i <= m; ++i) factors.push_back(q.at(i));
    return mod1_scale(x, factors);
}

/// T_{Q,m}(x) where x has the given digits followed by zeros.
inline Rational orbit_exact_finite(const BasicSequence& q, std::span<const Digit> digits, Index m) {
    return orbit_exact(q, prefix_value(q, digits).lower, m);
}

inline void require_unit_samples(std::span<const double> xs) {
    if (xs.empty()) throw ArgumentError("discrepancy needs at least one point");
    for (double v : xs) {
        if (!(v >= 0.0 && v < 1.0)) {
            throw ArgumentError("sample value " + std::to_string(v) + " is outside [0, 1)");
        }
    }
}

/// D*_N = sup_b |A([0,b))/N - b| via the sorted-points formula.
inline double star_discrepancy(std::span<const double> xs) {
    require_unit_samples(xs);
    std::vector<double> s(xs.begin(), xs.end());
    std::sort(s.begin(), s.end());
    const double n = static_cast<double>(s.size());
    double d = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double k = static_cast<double>(i);
        d = std::max({d, (k + 1) / n - s[i], s[i] - k / n});
    }
    return d;
}

/// D_N = sup_{a<=b} |A([a,b))/N - (b - a)|
///     = 1/N + max_i (i/N - x_(i)) - min_i (i/N - x_(i)).
inline double extreme_discrepancy(std::span<const double> xs) {
    require_unit_samples(xs);
    std::vector<double> s(xs.begin(), xs.end());
    std::sort(s.begin(), s.end());
    const double n = static_cast<double>(s.size());
    double hi = -1.0;
    double lo = 2.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double v = static_cast<double>(i + 1) / n - s[i];
        hi = std::max(hi, v);
        lo = std::min(lo, v);
    }
    return std::min(1.0, 1.0 / n + hi - lo);
}

struct DiscrepancyRow {
    Index n = 0;
    double star = 0.0;
    double extreme = 0.0;
    /// Largest certified truncation error among x_0 .. x_{n-1}.
    Rational max_error;
};

/// Orbit surrogates x_0 .. x_{count-1} as doubles, plus their error bounds.
struct OrbitSample {
    std::vector<double> values;
    std::vector<Rational> errors;
};

inline OrbitSample orbit_sample(const PartitionIndex* index, const DigitSequence& x, Index count,
                                DepthPolicy policy) {
    OrbitSample out;
    out.values.reserve(count);
    out.errors.reserve(count);
    for (Index m = 0; m < count; ++m) {
        unsigned depth = 0;
        if (policy.fixed) {
            depth = *policy.fixed;
        } else if (index != nullptr) {
            depth = paper_depth(*index, m);
        } else {
            throw ArgumentError("the default truncation depth needs the construction's window geometry");
        }
        auto p = orbit_truncated(x, m, depth);
        out.values.push_back(to_double(p.value));
        out.errors.push_back(std::move(p.error_bound));
    }
    return out;
}

/// Star and extreme discrepancy of (x_m)_{m<N} at each checkpoint N.
inline std::vector<DiscrepancyRow> dn_report(const PartitionIndex* index, const DigitSequence& x,
                                             std::span<const Index> checkpoints,
                                             DepthPolicy policy = DepthPolicy::paper()) {
    require_checkpoints(checkpoints);
    const auto sample = orbit_sample(index, x, checkpoints.back(), policy);
    std::vector<DiscrepancyRow> rows;
    Rational worst = 0;
    Index seen = 0;
    for (const auto n : checkpoints) {
        for (; seen < n; ++seen) worst = std::max(worst, sample.errors[seen]);
        const std::span<const double> prefix(sample.values.data(), static_cast<std::size_t>(n));
        rows.push_back({n, star_discrepancy(prefix), extreme_discrepancy(prefix), worst});
    }
    return rows;
}

} // namespace cantor
