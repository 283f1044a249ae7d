// Copyright 2026 The cantor-normal Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Lexicographic enumeration of the digit blocks B < R for a base block R.
// B_i(R) is the mixed-radix expansion of i - 1 with radices R_1..R_r, most
// significant digit first, so B_1 = [0,...,0].

#include <optional>
#include <span>
#include <string>

#include "cantor/rational.hpp"
#include "cantor/sequence.hpp"

namespace cantor {

/// R_1 * ... * R_r, or nullopt when it does not fit in 64 bits.
inline std::optional<std::uint64_t> block_count(std::span<const Base> bases) {
    std::uint64_t product = 1;
    for (auto b : bases) {
        auto next = checked_mul(product, b);
        if (!next) return std::nullopt;
        product = *next;
    }
    return product;
}

/// Strict coordinatewise order A < R.
inline bool block_less(std::span<const Digit> block, std::span<const Base> bases) {
    if (block.size() != bases.size()) return false;
    for (std::size_t j = 0; j < block.size(); ++j) {
        if (block[j] >= bases[j]) return false;
    }
    return true;
}

/// The ordinal-th block (1-based) in lexicographic order among B < R.
inline DigitBlock block_from_index(std::span<const Base> bases, std::uint64_t ordinal) {
    if (bases.empty()) {
        throw ArgumentError("block_from_index: base block must be non-empty");
    }
    for (auto b : bases) {
        if (b < 2) throw ArgumentError("block_from_index: bases must be >= 2");
    }
    const auto total = block_count(bases);
    if (ordinal == 0 || (total && ordinal > *total)) {
        throw ArgumentError("block_from_index: ordinal " + std::to_string(ordinal) +
                            " outside 1.." + (total ? std::to_string(*total) : "overflow"));
    }
    DigitBlock block(bases.size());
    std::uint64_t rest = ordinal - 1;
    for (std::size_t j = bases.size(); j-- > 0;) {
        block[j] = rest % bases[j];
        rest /= bases[j];
    }
    return block;
}

/// Inverse of block_from_index.
inline std::uint64_t index_from_block(std::span<const Base> bases, std::span<const Digit> block) {
    if (block.size() != bases.size() || bases.empty()) {
        throw ArgumentError("index_from_block: block length " + std::to_string(block.size()) +
                            " does not match base block length " + std::to_string(bases.size()));
    }
    if (!block_less(block, bases)) {
        throw ArgumentError("index_from_block: block is not admissible under the base block");
    }
    std::uint64_t value = 0;
    for (std::size_t j = 0; j < bases.size(); ++j) {
        auto scaled = checked_mul(value, bases[j]);
        if (!scaled) throw ArgumentError("index_from_block: ordinal overflows 64 bits");
        value = *scaled + block[j];
    }
    return value + 1;
}

/// 1-based cyclic ordinal used for the occurrence-th appearance of a window:
/// ((occurrence - 1) mod R) + 1.
inline std::uint64_t cyclic_ordinal(std::span<const Base> bases, std::uint64_t occurrence) {
    const auto total = block_count(bases);
    if (!total) return occurrence;  // R exceeds any reachable occurrence count
    return (occurrence - 1) % *total + 1;
}

} // namespace cantor
