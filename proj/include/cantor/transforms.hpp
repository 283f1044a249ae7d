// Copyright 2026 The cantor-normal Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Digit transforms between basic sequences.
//
// psi_{P,Q} re-reads the digits of x (w.r.t. P) against Q after clamping
// each digit to q_n - 1. Outputs are formal digit sequences: they may end in
// q_n - 1 forever and are never renormalized.

#include <algorithm>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "cantor/construction.hpp"
#include "cantor/digit_sequence.hpp"

namespace cantor {

/// Positions where a transform had to clamp a digit into 0..q_n - 1.
class ClampLog {
public:
    void record(Index position) {
        std::lock_guard lock(mutex_);
        if (positions_.size() < 32) positions_.push_back(position);
        ++count_;
    }

    [[nodiscard]] std::uint64_t count() const {
        std::lock_guard lock(mutex_);
        return count_;
    }

    /// The first few clamped positions.
    [[nodiscard]] std::vector<Index> positions() const {
        std::lock_guard lock(mutex_);
        return positions_;
    }

private:
    mutable std::mutex mutex_;
    std::uint64_t count_ = 0;
    std::vector<Index> positions_;
};

namespace detail {

class PsiSource final : public DigitSource {
public:
    PsiSource(DigitSequence parent, BasicSequence target)
        : parent_(std::move(parent)), target_(std::move(target)) {}

    Digit next() override {
        ++pos_;
        return std::min<Digit>(parent_.at(pos_), target_.at(pos_) - 1);
    }

private:
    DigitSequence parent_;
    BasicSequence target_;
    Index pos_ = 0;
};

// max(E_n, floor(log q_n), 2), clamped to q_n - 1.
class MaxReadingSource final : public DigitSource {
public:
    MaxReadingSource(DigitSequence x, LogBase log_base, std::shared_ptr<ClampLog> clamps)
        : x_(std::move(x)), log_base_(log_base), clamps_(std::move(clamps)) {}

    Digit next() override {
        ++pos_;
        const Base q = x_.basis().at(pos_);
        const Digit v = std::max<Digit>({x_.at(pos_), floor_log(q, log_base_), 2});
        if (v > q - 1) {
            clamps_->record(pos_);
            return q - 1;
        }
        return v;
    }

private:
    DigitSequence x_;
    LogBase log_base_;
    std::shared_ptr<ClampLog> clamps_;
    Index pos_ = 0;
};

} // namespace detail

/// psi_{P,Q}(x) where P = x.basis(): digits min(E_n, q_n - 1) w.r.t. Q.
inline DigitSequence psi(const DigitSequence& x, const BasicSequence& target) {
    auto label = "psi(" + x.label() + " -> " + target.describe() + ")";
    return DigitSequence(target, std::make_unique<detail::PsiSource>(x, target), std::move(label));
}

/// Psi_j = psi_{Q_{j-1},Q_j} o ... o psi_{Q_1,Q_2}, applied left to right.
/// x must be declared against chain.front().
inline DigitSequence psi_chain(std::span<const BasicSequence> chain, const DigitSequence& x) {
    if (chain.size() < 2) {
        throw ArgumentError("psi_chain needs at least two basic sequences");
    }
    if (chain.front().describe() != x.basis().describe()) {
        throw ArgumentError("psi_chain: x is declared against " + x.basis().describe() +
                            ", not the first sequence of the chain " + chain.front().describe());
    }
    DigitSequence current = x;
    for (std::size_t i = 1; i < chain.size(); ++i) {
        current = psi(current, chain[i]);
    }
    return current;
}

inline void require_infinite_in_limit(const BasicSequence& q, const char* construction) {
    if (!q.infinite_in_limit()) {
        throw HypothesisError(std::string(construction) + " needs q_n -> infinity, but " +
                              q.describe() + " is eventually periodic");
    }
}

struct NqNotDnqWitness {
    BasicSequence p;      // p_n = max(floor(log q_n), 2)
    DigitSequence x;      // x_Q
    DigitSequence y;      // psi_{P,Q}(psi_{Q,P}(x_Q)), digits min(E_n, p_n - 1)
    /// The alternative digit formula max(E_n, floor(log q_n), 2), kept only
    /// for comparison with y.
    DigitSequence max_reading;
    std::shared_ptr<ClampLog> max_reading_clamps;
};

/// Normal but not distribution normal: y = psi_{P,Q}(psi_{Q,P}(x_Q)).
inline NqNotDnqWitness build_nq_not_dnq(const BasicSequence& q, LogBase log_base = LogBase::natural,
                                        ScanLimits limits = {}) {
    require_infinite_in_limit(q, "the NQ\\DNQ construction");
    auto p = BasicSequence::derived(DerivedRule::floor_log, q, log_base);
    auto x = build_xq(q, limits);
    auto y = psi(psi(x, p), q);
    auto clamps = std::make_shared<ClampLog>();
    DigitSequence max_reading(q, std::make_unique<detail::MaxReadingSource>(x, log_base, clamps),
                              "nq-not-dnq(max reading)");
    return {std::move(p), std::move(x), std::move(y), std::move(max_reading), std::move(clamps)};
}

struct RnqNotNqWitness {
    BasicSequence p;   // p_n = max(floor(q_n / 2), 2)
    DigitSequence xp;  // x_P
    DigitSequence y;   // psi_{P,Q}(x_P)
};

/// Ratio normal but not normal: y = psi_{P,Q}(x_P).
inline RnqNotNqWitness build_rnq_not_nq(const BasicSequence& q, ScanLimits limits = {}) {
    require_infinite_in_limit(q, "the RNQ\\NQ construction");
    auto p = BasicSequence::derived(DerivedRule::half, q);
    auto xp = build_xq(p, limits);
    auto y = psi(xp, q);
    return {std::move(p), std::move(xp), std::move(y)};
}

} // namespace cantor
