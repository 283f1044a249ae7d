// Copyright 2026 The cantor-normal Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Exact values of Cantor series prefixes and certified base-b expansion.

#include <span>
#include <string>
#include <vector>

#include "cantor/digit_sequence.hpp"
#include "cantor/rational.hpp"

namespace cantor {

/// lower <= x <= upper.
struct CertifiedInterval {
    Rational lower;
    Rational upper;

    [[nodiscard]] Rational width() const { return upper - lower; }
    [[nodiscard]] bool contains(const Rational& x) const { return lower <= x && x <= upper; }
};

/// Running prefix sum A_m / D_m with D_m = q_1 ... q_m, kept as integers.
class PrefixAccumulator {
public:
    explicit PrefixAccumulator(BasicSequence q) : q_(std::move(q)) {}

    void push(Digit digit) {
        const Base b = q_.at(m_ + 1);
        if (digit >= b) {
            throw ArgumentError("digit " + std::to_string(digit) + " at position " +
                                std::to_string(m_ + 1) + " is not below q_n = " + std::to_string(b));
        }
        numerator_ = numerator_ * b + digit;
        denominator_ *= b;
        ++m_;
    }

    [[nodiscard]] Index size() const noexcept { return m_; }
    [[nodiscard]] const BigInt& numerator() const noexcept { return numerator_; }
    [[nodiscard]] const BigInt& denominator() const noexcept { return denominator_; }

    /// The remaining digits add at most sum (q_i - 1)/(q_1...q_i) = 1/D_m.
    [[nodiscard]] CertifiedInterval interval() const {
        return {Rational(numerator_, denominator_), Rational(numerator_ + 1, denominator_)};
    }

private:
    BasicSequence q_;
    Index m_ = 0;
    BigInt numerator_ = 0;
    BigInt denominator_ = 1;
};

/// [sum E_n/(q_1...q_n), that + 1/(q_1...q_m)] for the digits E_1..E_m.
inline CertifiedInterval prefix_value(const BasicSequence& q, std::span<const Digit> digits) {
    PrefixAccumulator acc(q);
    for (auto d : digits) acc.push(d);
    return acc.interval();
}

/// frac(x * q_1 * ... * q_n).
inline Rational mod1_scale(const Rational& x, std::span<const Base> factors) {
    BigInt product = 1;
    for (auto f : factors) product *= f;
    return frac(x * product);
}

struct BaseExpansion {
    std::string digits;
    /// Cantor digits consumed before the last base-b digit was certified.
    Index cantor_digits_used = 0;
    /// Interval for x after the consumed digits; every emitted digit is
    /// shared by all its points.
    CertifiedInterval interval;
};

inline char digit_char(unsigned d) {
    return static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10));
}

/// The first `count` base-b digits of x in [0, 1), each proven by interval
/// agreement: digit k is emitted once floor(b^k lo) = floor(b^k hi). Between
/// two emitted digits at most `refinement_cap` extra Cantor digits are read.
inline BaseExpansion to_base_b(const DigitSequence& x, unsigned b, std::size_t count,
                               Index refinement_cap = 64) {
    if (b < 2 || b > 36) throw ArgumentError("output base must be in 2..36");
    if (count == 0) throw ArgumentError("digit count must be >= 1");
    PrefixAccumulator acc(x.basis());
    BaseExpansion out;
    BigInt scale = 1;      // b^k
    BigInt emitted = 0;    // floor(b^(k-1) x), digits so far as an integer
    for (std::size_t k = 1; k <= count; ++k) {
        scale *= b;
        Index extra = 0;
        while (true) {
            if (acc.size() > 0) {
                const BigInt lo = scale * acc.numerator() / acc.denominator();
                const BigInt hi = scale * (acc.numerator() + 1) / acc.denominator();
                if (lo == hi) {
                    const BigInt d = lo - emitted * b;
                    out.digits.push_back(digit_char(d.convert_to<unsigned>()));
                    emitted = lo;
                    break;
                }
            }
            if (extra == refinement_cap) {
                throw RefinementError("base-" + std::to_string(b) + " digit " + std::to_string(k) +
                                      " is still ambiguous after " + std::to_string(acc.size()) +
                                      " Cantor digits (x may sit on a digit boundary)");
            }
            acc.push(x.at(acc.size() + 1));
            ++extra;
        }
    }
    out.cantor_digits_used = acc.size();
    out.interval = acc.interval();
    return out;
}

/// Parses a base-b fraction string "d1 d2 ..." as the rational 0.d1d2...
inline Rational parse_base_b_fraction(const std::string& digits, unsigned b) {
    BigInt num = 0;
    BigInt den = 1;
    for (char c : digits) {
        unsigned d = 0;
        if (c >= '0' && c <= '9') {
            d = static_cast<unsigned>(c - '0');
        } else if (c >= 'a' && c <= 'z') {
            d = static_cast<unsigned>(c - 'a') + 10;
        } else {
            throw ArgumentError(std::string("invalid digit character '") + c + "'");
        }
        if (d >= b) throw ArgumentError("digit exceeds the base");
        num = num * b + d;
        den *= b;
    }
    return Rational(num, den);
}

} // namespace cantor
