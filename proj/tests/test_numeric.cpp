// Copyright 2026 The cantor-normal Authors.
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <gtest/gtest.h>

#include "cantor/construction.hpp"
#include "cantor/numeric.hpp"

using namespace cantor;

namespace {

// Base-b digits of num/den by schoolbook long division.
std::string long_division(BigInt num, const BigInt& den, unsigned b, std::size_t count) {
    std::string out;
    for (std::size_t i = 0; i < count; ++i) {
        num *= b;
        const BigInt d = num / den;
        out.push_back(digit_char(d.convert_to<unsigned>()));
        num -= d * den;
    }
    return out;
}

} // namespace

TEST(PrefixValue, Examples) {
    const auto two = BasicSequence::constant(2);
    auto v = prefix_value(two, std::vector<Digit>{1});
    EXPECT_EQ(v.lower, Rational(1, 2));
    EXPECT_EQ(v.upper, Rational(1));
    v = prefix_value(two, std::vector<Digit>{0, 1});
    EXPECT_EQ(v.lower, Rational(1, 4));
    EXPECT_EQ(v.upper, Rational(1, 2));
    v = prefix_value(BasicSequence::periodic({2, 3}), std::vector<Digit>{1, 2});
    EXPECT_EQ(v.lower, Rational(5, 6));
    EXPECT_EQ(v.upper, Rational(1));
    EXPECT_THROW(prefix_value(two, std::vector<Digit>{2}), ArgumentError);
}

TEST(PrefixValue, NestedWithExactWidths) {
    const auto q = BasicSequence::periodic({2, 5, 3});
    const auto x = build_xq(q);
    const auto digits = x.prefix(60);
    PrefixAccumulator acc(q);
    CertifiedInterval prev{0, 1};
    BigInt den = 1;
    for (Index m = 1; m <= 60; ++m) {
        acc.push(digits[m - 1]);
        den *= q.at(m);
        const auto cur = acc.interval();
        EXPECT_EQ(cur.width(), Rational(BigInt(1), den));
        EXPECT_GE(cur.lower, prev.lower);
        EXPECT_LE(cur.upper, prev.upper);
        prev = cur;
    }
}

TEST(ToBaseB, Examples) {
    const auto two = BasicSequence::constant(2);
    const auto half = DigitSequence::from_digits(two, {1});
    EXPECT_EQ(to_base_b(half, 10, 3).digits, "500");
    const auto quarter = DigitSequence::from_digits(two, {0, 1});
    EXPECT_EQ(to_base_b(quarter, 10, 3).digits, "250");
}

TEST(ToBaseB, XqAgainstLongPrefix) {
    const auto q = BasicSequence::constant(2);
    const auto x = build_xq(q);
    const auto out = to_base_b(x, 10, 50);
    ASSERT_EQ(out.digits.size(), 50u);
    // Independent evaluation: the length-200 prefix interval has width 2^-200,
    // far below 10^-50, and x_Q is not near a decimal boundary at that depth.
    const auto digits = x.prefix(200);
    BigInt num = 0;
    BigInt den = 1;
    for (Index i = 0; i < 200; ++i) {
        num = num * 2 + digits[i];
        den *= 2;
    }
    EXPECT_EQ(out.digits, long_division(num, den, 10, 50));
    EXPECT_EQ(long_division(num + 1, den, 10, 50), out.digits);
}

TEST(ToBaseB, OutputLiesWithinInterval) {
    for (unsigned b : {2u, 7u, 10u, 16u}) {
        for (const auto& q : {BasicSequence::periodic({3, 4}), BasicSequence::preset(PresetName::log)}) {
            const auto x = build_xq(q);
            const auto out = to_base_b(x, b, 20);
            const auto s = parse_base_b_fraction(out.digits, b);
            const BigInt step = boost::multiprecision::pow(BigInt(b), 20);
            EXPECT_LE(s, out.interval.lower);
            EXPECT_LT(out.interval.upper, s + Rational(BigInt(1), step));
        }
    }
}

TEST(ToBaseB, BoundaryHitsRefinementCap) {
    // 0.0111... in base 2 is exactly 1/2: every prefix interval straddles 0.5.
    const auto two = BasicSequence::constant(2);
    const auto boundary = DigitSequence::from_digits(two, {0}, 1);
    EXPECT_THROW(to_base_b(boundary, 10, 1, 20), RefinementError);
}

TEST(ToBaseB, Validation) {
    const auto x = DigitSequence::from_digits(BasicSequence::constant(2), {1});
    EXPECT_THROW(to_base_b(x, 1, 3), ArgumentError);
    EXPECT_THROW(to_base_b(x, 10, 0), ArgumentError);
}

TEST(Mod1Scale, Examples) {
    EXPECT_EQ(mod1_scale(Rational(1, 3), std::vector<Base>{2}), Rational(2, 3));
    EXPECT_EQ(mod1_scale(Rational(1, 3), std::vector<Base>{2, 2}), Rational(1, 3));
    EXPECT_EQ(mod1_scale(Rational(5, 6), std::vector<Base>{2, 3}), Rational(0));
}

TEST(Mod1Scale, RangeOnRandomInputs) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const Rational x(BigInt(rng() % 1000), BigInt(rng() % 997 + 1));
        std::vector<Base> f(rng() % 5);
        for (auto& v : f) v = rng() % 9 + 2;
        const auto y = mod1_scale(x, f);
        EXPECT_GE(y, 0);
        EXPECT_LT(y, 1);
    }
}

TEST(ParseFraction, RoundTrip) {
    EXPECT_EQ(parse_base_b_fraction("25", 10), Rational(1, 4));
    EXPECT_EQ(parse_base_b_fraction("f", 16), Rational(15, 16));
    EXPECT_THROW(parse_base_b_fraction("9", 8), ArgumentError);
    EXPECT_THROW(parse_base_b_fraction("-", 10), ArgumentError);
}
