// Copyright 2026 The cantor-normal Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cantor {

using BigInt = boost::multiprecision::cpp_int;
/// Always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& x) { return boost::multiprecision::numerator(x); }
inline BigInt denominator_of(const Rational& x) { return boost::multiprecision::denominator(x); }

/// "num/den", or just "num" for integers.
inline std::string to_fraction_string(const Rational& x) {
    const auto den = denominator_of(x);
    if (den == 1) return numerator_of(x).str();
    return numerator_of(x).str() + "/" + den.str();
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// floor(x) for rationals, rounding toward negative infinity.
inline BigInt floor_of(const Rational& x) {
    const auto num = numerator_of(x);
    const auto den = denominator_of(x);
    BigInt q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

/// x mod 1, in [0, 1).
inline Rational frac(const Rational& x) { return x - Rational(floor_of(x)); }

/// a * b, or nullopt on 64-bit overflow.
inline std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
    return out;
}

} // namespace cantor
