// Copyright 2026 The cantor-normal Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// The ladder n_r, N_r and the window geometry of the x_Q construction.
//
//   n_r     smallest n with (q(n)^2 + 1)^r <= n
//   N_1     0
//   N_{r+1} greatest integer < n_{r+1} with r | N_{r+1} - N_r
//
// Positions N_r + 1 .. N_{r+1} are cut into windows of r consecutive bases.

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <string>
#include <vector>

#include "cantor/sequence.hpp"

namespace cantor {

struct ScanLimits {
    Index scan_bound = 1'000'000'000;
    std::size_t counter_capacity = 10'000'000;

    /// Defaults, with scan_bound overridable through CANTOR_SCAN_BOUND.
    static ScanLimits from_environment() {
        ScanLimits limits;
        if (const char* env = std::getenv("CANTOR_SCAN_BOUND")) {
            try {
                limits.scan_bound = std::stoull(env);
            } catch (const std::exception&) {
                throw ArgumentError(std::string("CANTOR_SCAN_BOUND is not an integer: ") + env);
            }
        }
        return limits;
    }
};

/// A window R_{j,r}: r consecutive bases starting at N_r + j r + 1.
struct BaseWindow {
    unsigned r = 0;
    Index j = 0;
    Index start = 0;
    std::vector<Base> bases;
    /// 1-based offset of the queried position inside the window.
    unsigned offset = 0;

    [[nodiscard]] Index end() const { return start + r - 1; }
};

/// base^exponent, saturated at `cap` (returns cap + 1 once it is exceeded).
inline std::uint64_t saturating_pow(std::uint64_t base, unsigned exponent, std::uint64_t cap) {
    std::uint64_t result = 1;
    for (unsigned e = 0; e < exponent; ++e) {
        auto next = checked_mul(result, base);
        if (!next || *next > cap) return cap + 1;
        result = *next;
    }
    return result;
}

/// Cached ladder for one basic sequence. Shareable across threads.
class PartitionIndex {
public:
    explicit PartitionIndex(BasicSequence q, ScanLimits limits = {})
        : q_(std::move(q)), limits_(limits) {}

    [[nodiscard]] const BasicSequence& sequence() const noexcept { return q_; }
    [[nodiscard]] const ScanLimits& limits() const noexcept { return limits_; }

    /// n_r.
    [[nodiscard]] Index ladder_n(unsigned r) const {
        if (r == 0) throw ArgumentError("n_r: r must be >= 1");
        std::lock_guard lock(mutex_);
        extend_n(r);
        return n_[r - 1];
    }

    /// N_r.
    [[nodiscard]] Index ladder_N(unsigned r) const {
        if (r == 0) throw ArgumentError("N_r: r must be >= 1");
        std::lock_guard lock(mutex_);
        extend_N(r);
        return N_[r - 1];
    }

    /// The unique r with N_r < n <= N_{r+1}.
    [[nodiscard]] unsigned r_of(Index n) const {
        if (n == 0) throw ArgumentError("r(n): positions are 1-based; got 0");
        std::lock_guard lock(mutex_);
        while (N_.empty() || N_.back() < n) {
            extend_N(static_cast<unsigned>(N_.size()) + 1);
        }
        // Largest r with N_r < n; N_ is non-decreasing.
        const auto it = std::lower_bound(N_.begin(), N_.end(), n);
        return static_cast<unsigned>(it - N_.begin());
    }

    /// The window containing position n, with n's offset inside it.
    [[nodiscard]] BaseWindow window_at(Index n) const {
        const unsigned r = r_of(n);
        const Index lo = ladder_N(r);
        BaseWindow w;
        w.r = r;
        w.j = (n - lo - 1) / r;
        w.start = lo + w.j * r + 1;
        w.offset = static_cast<unsigned>(n - w.start + 1);
        w.bases.reserve(r);
        for (Index p = w.start; p < w.start + r; ++p) {
            w.bases.push_back(q_.at(p));
        }
        return w;
    }

    /// Number of windows of length r, (N_{r+1} - N_r) / r.
    [[nodiscard]] Index window_count(unsigned r) const {
        return (ladder_N(r + 1) - ladder_N(r)) / r;
    }

private:
    // Callers hold mutex_.
    void extend_n(unsigned r) const {
        while (n_.size() < r) {
            const auto next_r = static_cast<unsigned>(n_.size()) + 1;
            n_.push_back(scan_n(next_r, n_.empty() ? 1 : n_.back()));
        }
    }

    void extend_N(unsigned r) const {
        while (N_.size() < r) {
            if (N_.empty()) {
                N_.push_back(0);
                continue;
            }
            const auto prev_r = static_cast<Index>(N_.size());
            extend_n(static_cast<unsigned>(prev_r + 1));
            const Index target = n_[prev_r] - 1;  // n_{r+1} - 1
            const Index prev = N_.back();
            N_.push_back(target - (target - prev) % prev_r);
        }
    }

    // f(n) = (q(n)^2 + 1)^r is non-decreasing, so if f(n) > n every n' in
    // [n, f(n)) fails as well and the scan may jump straight to f(n).
    Index scan_n(unsigned r, Index from) const {
        const Index bound = limits_.scan_bound;
        Index n = std::max<Index>(from, 1);
        while (n <= bound) {
            const Base m = q_.running_max(n);
            const auto sq = checked_mul(m, m);
            const std::uint64_t f = sq ? saturating_pow(*sq + 1, r, bound) : bound + 1;
            if (f <= n) return n;
            n = f;
        }
        throw ScanBoundError("n_r not found below bound: r = " + std::to_string(r) +
                             ", bound = " + std::to_string(bound) + " (sequence " +
                             q_.describe() + " grows too fast for the ladder)");
    }

    BasicSequence q_;
    ScanLimits limits_;
    mutable std::mutex mutex_;
    mutable std::vector<Index> n_;
    mutable std::vector<Index> N_;
};

} // namespace cantor
