// Copyright 2026 The cantor-normal Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Empirical check of the growth hypothesis
//     Q_n(B) / (n log q(n) / log n) -> infinity.
// Finitely many terms never decide a limit, so the verdict is only a trend.

#include <cmath>
#include <span>
#include <vector>

#include "cantor/stats.hpp"

namespace cantor {

struct GrowthRow {
    Index n;
    Rational expected;  // Q_n(B)
    double value;       // Q_n(B) / (n log q(n) / log n)
};

struct GrowthDiagnosis {
    std::vector<GrowthRow> rows;
    bool increasing = false;
    static constexpr const char* label = "heuristic";
};

inline GrowthDiagnosis diagnose_growth(const BasicSequence& q, std::span<const Digit> block,
                                       std::span<const Index> checkpoints) {
    require_block(block);
    require_checkpoints(checkpoints);
    GrowthDiagnosis out;
    ExpectedCounter counter(q, DigitBlock(block.begin(), block.end()));
    for (const auto n : checkpoints) {
        if (n == 1) continue;  // log 1 = 0
        counter.advance_to(n);
        const auto expected = counter.value();
        const double scale = static_cast<double>(n) * std::log(static_cast<double>(q.running_max(n))) /
                             std::log(static_cast<double>(n));
        out.rows.push_back({n, expected, to_double(expected) / scale});
    }
    out.increasing = out.rows.size() >= 2;
    for (std::size_t i = 1; i < out.rows.size(); ++i) {
        out.increasing = out.increasing && out.rows[i].value > out.rows[i - 1].value;
    }
    return out;
}

} // namespace cantor
