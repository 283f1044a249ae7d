// Copyright 2026 The cantor-normal Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Block statistics of a digit sequence against its basic sequence:
//
//   I_i(B)      1 iff B_j < q_{i+j-1} for all j
//   Q_n(B)      sum_{i<=n} I_i(B) / (q_i ... q_{i+k-1})          (exact)
//   N_n^Q(B,x)  number of i <= n with E_{i+j-1} = B_j for all j
//
// The starred variants restrict i to positions whose k bases lie inside a
// single window R_{j,r} of the x_Q construction.

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cantor/blocks.hpp"
#include "cantor/digit_sequence.hpp"
#include "cantor/partition.hpp"
#include "cantor/rational.hpp"

namespace cantor {

inline void require_block(std::span<const Digit> block) {
    if (block.empty()) {
        throw ArgumentError("digit blocks must have length >= 1");
    }
}

/// I_i(B).
inline bool admissible(const BasicSequence& q, std::span<const Digit> block, Index i) {
    require_block(block);
    if (i == 0) throw ArgumentError("admissible: positions are 1-based");
    for (std::size_t j = 0; j < block.size(); ++j) {
        if (block[j] >= q.at(i + j)) return false;
    }
    return true;
}

/// Incremental Q_n(B). Terms are grouped by their denominator
/// q_i ... q_{i+k-1}, so the exact sum costs one rational addition per
/// distinct product rather than per position.
class ExpectedCounter {
public:
    ExpectedCounter(BasicSequence q, DigitBlock block) : q_(std::move(q)), block_(std::move(block)) {
        require_block(block_);
    }

    void advance_to(Index n) {
        for (Index i = n_ + 1; i <= n; ++i) add_position(i);
        if (n > n_) n_ = n;
    }

    [[nodiscard]] Index position() const noexcept { return n_; }

    [[nodiscard]] Rational value() const {
        Rational sum = 0;
        for (const auto& [den, count] : small_) sum += Rational(count, den);
        for (const auto& [den, count] : big_) sum += Rational(BigInt(count), den);
        return sum;
    }

private:
    void add_position(Index i) {
        std::uint64_t product = 1;
        bool overflow = false;
        BigInt big = 1;
        for (std::size_t j = 0; j < block_.size(); ++j) {
            const Base b = q_.at(i + j);
            if (block_[j] >= b) return;
            if (!overflow) {
                if (auto next = checked_mul(product, b)) {
                    product = *next;
                    continue;
                }
                overflow = true;
                big = product;
            }
            big *= b;
        }
        if (overflow) {
            ++big_[big];
        } else {
            ++small_[product];
        }
    }

    BasicSequence q_;
    DigitBlock block_;
    Index n_ = 0;
    std::map<std::uint64_t, std::uint64_t> small_;
    std::map<BigInt, std::uint64_t> big_;
};

/// Q_n(B) as an exact rational.
inline Rational expected_count(const BasicSequence& q, std::span<const Digit> block, Index n) {
    ExpectedCounter counter(q, DigitBlock(block.begin(), block.end()));
    counter.advance_to(n);
    return counter.value();
}

inline bool block_matches(std::span<const Digit> digits, std::span<const Digit> block, Index i) {
    for (std::size_t j = 0; j < block.size(); ++j) {
        if (digits[i - 1 + j] != block[j]) return false;
    }
    return true;
}

inline void require_digits(std::span<const Digit> digits, std::size_t k, Index n) {
    const Index needed = n + k - 1;
    if (digits.size() < needed) {
        throw ArgumentError("block counting to n = " + std::to_string(n) + " needs digits through " +
                            std::to_string(needed) + "; only " + std::to_string(digits.size()) +
                            " available (short by " + std::to_string(needed - digits.size()) + ")");
    }
}

/// N_n^Q(B, x) over an explicit digit buffer E_1, E_2, ... An occurrence
/// counts when it starts at i <= n, so digits must reach n + k - 1.
inline std::uint64_t count_block(std::span<const Digit> digits, std::span<const Digit> block, Index n) {
    require_block(block);
    require_digits(digits, block.size(), n);
    std::uint64_t count = 0;
    for (Index i = 1; i <= n; ++i) {
        count += block_matches(digits, block, i) ? 1 : 0;
    }
    return count;
}

inline std::uint64_t count_block(const DigitSequence& x, std::span<const Digit> block, Index n) {
    require_block(block);
    return count_block(x.prefix(n + block.size() - 1), block, n);
}

/// True when positions i .. i+k-1 fall inside one window R_{j,r}.
inline bool inside_one_window(const PartitionIndex& index, Index i, std::size_t k) {
    const unsigned r = index.r_of(i);
    const Index offset = (i - index.ladder_N(r) - 1) % r + 1;
    return offset + k - 1 <= r;
}

struct StarredCounts {
    Rational expected;        // Q_n^*(B)
    std::uint64_t observed;   // N_n^{Q*}(B, x)
};

inline StarredCounts starred_variants(const PartitionIndex& index, std::span<const Digit> digits,
                                      std::span<const Digit> block, Index n) {
    require_block(block);
    require_digits(digits, block.size(), n);
    const auto& q = index.sequence();
    std::map<BigInt, std::uint64_t> terms;
    std::uint64_t observed = 0;
    for (Index i = 1; i <= n; ++i) {
        if (!inside_one_window(index, i, block.size())) continue;
        if (block_matches(digits, block, i)) ++observed;
        BigInt product = 1;
        bool ok = true;
        for (std::size_t j = 0; j < block.size() && ok; ++j) {
            const Base b = q.at(i + j);
            ok = block[j] < b;
            product *= b;
        }
        if (ok) ++terms[product];
    }
    Rational expected = 0;
    for (const auto& [den, count] : terms) expected += Rational(BigInt(count), den);
    return {expected, observed};
}

inline StarredCounts starred_variants(const PartitionIndex& index, const DigitSequence& x,
                                      std::span<const Digit> block, Index n) {
    require_block(block);
    return starred_variants(index, x.prefix(n + block.size() - 1), block, n);
}

/// Every block of length k admissible at some position i <= upto.
inline std::vector<DigitBlock> admissible_blocks(const BasicSequence& q, std::size_t k, Index upto,
                                                 std::size_t cap = 100'000) {
    if (k == 0) throw ArgumentError("block length must be >= 1");
    std::set<std::vector<Base>> windows;
    for (Index i = 1; i <= upto; ++i) {
        std::vector<Base> w(k);
        for (std::size_t j = 0; j < k; ++j) w[j] = q.at(i + j);
        windows.insert(std::move(w));
    }
    std::set<DigitBlock> blocks;
    for (const auto& w : windows) {
        const auto total = block_count(w);
        if (!total || *total > cap) {
            throw ArgumentError("all:" + std::to_string(k) + " would enumerate more than " +
                                std::to_string(cap) + " blocks");
        }
        for (std::uint64_t o = 1; o <= *total; ++o) {
            blocks.insert(block_from_index(w, o));
            if (blocks.size() > cap) {
                throw ArgumentError("all:" + std::to_string(k) + " would enumerate more than " +
                                    std::to_string(cap) + " blocks");
            }
        }
    }
    return {blocks.begin(), blocks.end()};
}

struct BlockCountRow {
    DigitBlock block;
    Index n = 0;
    std::uint64_t observed = 0;
    Rational expected;
    /// N / Q, undefined when Q_n(B) = 0.
    std::optional<double> ratio;
    std::optional<StarredCounts> starred;
};

struct PairRatioRow {
    DigitBlock first;
    DigitBlock second;
    Index n = 0;
    /// N(first) / N(second), undefined when N(second) = 0.
    std::optional<double> ratio;
};

struct ConvergenceReport {
    std::vector<BlockCountRow> rows;
    std::vector<PairRatioRow> pairs;
};

inline void require_checkpoints(std::span<const Index> checkpoints) {
    if (checkpoints.empty()) throw ArgumentError("at least one checkpoint is required");
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] == 0) throw ArgumentError("checkpoints must be >= 1");
        if (i && checkpoints[i] <= checkpoints[i - 1]) {
            throw ArgumentError("checkpoints must be strictly increasing");
        }
    }
}

struct ReportOptions {
    /// When set, starred variants are computed against this window geometry.
    const PartitionIndex* windows = nullptr;
};

/// N/Q per block and checkpoint, plus N(B1)/N(B2) for every ordered pair of
/// distinct equal-length blocks.
inline ConvergenceReport normality_report(const DigitSequence& x, std::span<const DigitBlock> blocks,
                                          std::span<const Index> checkpoints,
                                          ReportOptions options = {}) {
    require_checkpoints(checkpoints);
    if (blocks.empty()) throw ArgumentError("at least one block is required");
    std::size_t kmax = 0;
    for (const auto& b : blocks) {
        require_block(b);
        kmax = std::max(kmax, b.size());
    }
    const Index last = checkpoints.back();
    const auto digits = x.prefix(last + kmax - 1);
    const auto& q = x.basis();

    ConvergenceReport report;
    // observed[b][c]
    std::vector<std::vector<std::uint64_t>> observed(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        ExpectedCounter expected(q, blocks[b]);
        std::uint64_t count = 0;
        Index i = 0;
        for (const auto n : checkpoints) {
            for (; i < n; ++i) {
                count += block_matches(digits, blocks[b], i + 1) ? 1 : 0;
            }
            expected.advance_to(n);
            BlockCountRow row;
            row.block = blocks[b];
            row.n = n;
            row.observed = count;
            row.expected = expected.value();
            if (row.expected != 0) {
                row.ratio = static_cast<double>(count) / to_double(row.expected);
            }
            if (options.windows) {
                row.starred = starred_variants(*options.windows, digits, blocks[b], n);
            }
            observed[b].push_back(count);
            report.rows.push_back(std::move(row));
        }
    }
    for (std::size_t a = 0; a < blocks.size(); ++a) {
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (a == b || blocks[a].size() != blocks[b].size()) continue;
            for (std::size_t c = 0; c < checkpoints.size(); ++c) {
                PairRatioRow row{blocks[a], blocks[b], checkpoints[c], std::nullopt};
                if (observed[b][c] != 0) {
                    row.ratio = static_cast<double>(observed[a][c]) /
                                static_cast<double>(observed[b][c]);
                }
                report.pairs.push_back(std::move(row));
            }
        }
    }
    return report;
}

inline std::string format_block(std::span<const Digit> block) {
    std::string out = "[";
    for (std::size_t j = 0; j < block.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(block[j]);
    }
    return out + "]";
}

} // namespace cantor
