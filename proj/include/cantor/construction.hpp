// Copyright 2026 The cantor-normal Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Digits of x_Q. Each window R_{j,r} receives the next block in the
// lexicographic cycle B_1(R), B_2(R), ... for its base block R, counted
// separately per distinct R.

#include <memory>
#include <unordered_map>
#include <vector>

#include "cantor/blocks.hpp"
#include "cantor/digit_sequence.hpp"
#include "cantor/partition.hpp"

namespace cantor {

struct BaseBlockHash {
    std::size_t operator()(const std::vector<Base>& bases) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto b : bases) {
            h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

/// Occurrence counts J per base block R, in stream order. The length r is
/// implied by R itself.
using OccurrenceCounters = std::unordered_map<std::vector<Base>, std::uint64_t, BaseBlockHash>;

/// Single-pass generator of E_1, E_2, ... for x_Q.
class DigitStream final : public DigitSource {
public:
    explicit DigitStream(std::shared_ptr<const PartitionIndex> index)
        : index_(std::move(index)) {}

    Digit next() override {
        if (cursor_ == block_.size()) {
            open_window(position_ + 1);
        }
        ++position_;
        return block_[cursor_++];
    }

    /// Position of the last digit returned (0 before the first call).
    [[nodiscard]] Index position() const noexcept { return position_; }
    [[nodiscard]] const OccurrenceCounters& counters() const noexcept { return counters_; }

private:
    void open_window(Index start) {
        const BaseWindow w = index_->window_at(start);
        auto [it, inserted] = counters_.try_emplace(w.bases, 0);
        if (inserted && counters_.size() > index_->limits().counter_capacity) {
            throw CapacityError("occurrence counter table exceeded " +
                                std::to_string(index_->limits().counter_capacity) +
                                " distinct windows R_{j,r} at position " + std::to_string(start));
        }
        const auto occurrence = ++it->second;
        block_ = block_from_index(w.bases, cyclic_ordinal(w.bases, occurrence));
        cursor_ = 0;
    }

    std::shared_ptr<const PartitionIndex> index_;
    OccurrenceCounters counters_;
    DigitBlock block_;
    std::size_t cursor_ = 0;
    Index position_ = 0;
};

/// E_n computed without streaming state by rescanning the earlier windows of
/// the same length. O(n) per call; meant as an oracle.
inline Digit digit_at(const PartitionIndex& index, Index n) {
    const BaseWindow w = index.window_at(n);
    const Index region_start = index.ladder_N(w.r) + 1;
    const auto& q = index.sequence();
    std::uint64_t earlier = 0;
    for (Index j = 0; j < w.j; ++j) {
        const Index s = region_start + j * w.r;
        bool same = true;
        for (unsigned t = 0; t < w.r && same; ++t) {
            same = q.at(s + t) == w.bases[t];
        }
        earlier += same ? 1 : 0;
    }
    const auto block = block_from_index(w.bases, cyclic_ordinal(w.bases, earlier + 1));
    return block[w.offset - 1];
}

inline Digit digit_at(const BasicSequence& q, Index n) {
    return digit_at(PartitionIndex(q, ScanLimits::from_environment()), n);
}

/// x_Q as a lazily materialized digit sequence.
inline DigitSequence build_xq(std::shared_ptr<const PartitionIndex> index) {
    auto basis = index->sequence();
    return DigitSequence(std::move(basis), std::make_unique<DigitStream>(std::move(index)), "xq");
}

inline DigitSequence build_xq(const BasicSequence& q, ScanLimits limits = {}) {
    return build_xq(std::make_shared<const PartitionIndex>(q, limits));
}

} // namespace cantor
