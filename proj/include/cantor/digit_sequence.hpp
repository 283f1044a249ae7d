// Copyright 2026 The cantor-normal Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cantor/sequence.hpp"

namespace cantor {

/// Sequential producer of E_1, E_2, ...
class DigitSource {
public:
    virtual ~DigitSource() = default;
    virtual Digit next() = 0;
};

/// A digit stream declared against a basic sequence, materialized lazily.
///
/// Copies share one materialization buffer. Not safe for concurrent use;
/// distinct sequences may be materialized on different threads.
class DigitSequence {
public:
    DigitSequence(BasicSequence basis, std::unique_ptr<DigitSource> source, std::string label)
        : basis_(std::move(basis)),
          state_(std::make_shared<State>(State{std::move(source), {}, std::move(label)})) {}

    /// A finite prefix followed by `fill` forever (fill is clamped to q_n - 1).
    static DigitSequence from_digits(BasicSequence basis, std::vector<Digit> digits,
                                     Digit fill = 0, std::string label = "finite") {
        for (std::size_t i = 0; i < digits.size(); ++i) {
            const auto q = basis.at(i + 1);
            if (digits[i] >= q) {
                throw ArgumentError("digit " + std::to_string(digits[i]) + " at position " +
                                    std::to_string(i + 1) + " is not below q_n = " +
                                    std::to_string(q));
            }
        }
        auto source = std::make_unique<FiniteSource>(basis, std::move(digits), fill);
        return DigitSequence(std::move(basis), std::move(source), std::move(label));
    }

    [[nodiscard]] const BasicSequence& basis() const noexcept { return basis_; }
    [[nodiscard]] const std::string& label() const noexcept { return state_->label; }

    /// Ensures E_1..E_count are available.
    void materialize(Index count) const {
        auto& digits = state_->digits;
        if (digits.size() >= count) return;
        if (count > digits.capacity()) digits.reserve(std::max<std::size_t>(count, 2 * digits.capacity()));
        while (digits.size() < count) {
            digits.push_back(state_->source->next());
        }
    }

    /// E_n for n >= 1.
    [[nodiscard]] Digit at(Index n) const {
        if (n == 0) throw ArgumentError("digits are indexed from 1; got 0");
        materialize(n);
        return state_->digits[n - 1];
    }

    /// E_1..E_count.
    [[nodiscard]] std::span<const Digit> prefix(Index count) const {
        materialize(count);
        return {state_->digits.data(), static_cast<std::size_t>(count)};
    }

private:
    class FiniteSource final : public DigitSource {
    public:
        FiniteSource(BasicSequence basis, std::vector<Digit> digits, Digit fill)
            : basis_(std::move(basis)), digits_(std::move(digits)), fill_(fill) {}

        Digit next() override {
            ++pos_;
            if (pos_ <= digits_.size()) return digits_[pos_ - 1];
            return std::min<Digit>(fill_, basis_.at(pos_) - 1);
        }

    private:
        BasicSequence basis_;
        std::vector<Digit> digits_;
        Digit fill_;
        Index pos_ = 0;
    };

    struct State {
        std::unique_ptr<DigitSource> source;
        std::vector<Digit> digits;
        std::string label;
    };

    BasicSequence basis_;
    std::shared_ptr<State> state_;
};

} // namespace cantor
