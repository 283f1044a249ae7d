// Copyright 2026 The cantor-normal Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Deterministic uniformly distributed sequences in [0, 1).

#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/errors.hpp"
#include "cantor/sequence.hpp"

namespace cantor {

/// num / den with 0 <= num < den.
struct Fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Base-2 radical inverse: the bits of n mirrored about the binary point.
inline Fraction van_der_corput(Index n) {
    if (n == 0) throw ArgumentError("van der Corput terms are 1-based");
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    for (; n; n >>= 1) {
        num = (num << 1) | (n & 1);
        den <<= 1;
    }
    return {num, den};
}

/// Reduced fractions in [0, 1) by denominator, then numerator:
/// 0/1, 1/2, 1/3, 2/3, 1/4, 3/4, 1/5, ...
class FareyEnumeration {
public:
    Fraction operator()(Index n) {
        if (n == 0) throw ArgumentError("Farey terms are 1-based");
        while (ends_.back() < n) {
            const std::uint64_t d = ends_.size() + 1;
            ends_.push_back(ends_.back() + totient(d));
        }
        // ends_[d-1] = number of terms with denominator <= d
        std::uint64_t d = 1;
        while (ends_[d - 1] < n) ++d;
        if (d == 1) return {0, 1};
        std::uint64_t rank = n - ends_[d - 2];
        for (std::uint64_t a = 1; a < d; ++a) {
            if (std::gcd(a, d) == 1 && --rank == 0) return {a, d};
        }
        throw std::logic_error("Farey enumeration out of step");
    }

private:
    static std::uint64_t totient(std::uint64_t d) {
        std::uint64_t result = d;
        for (std::uint64_t p = 2; p * p <= d; ++p) {
            if (d % p) continue;
            while (d % p == 0) d /= p;
            result -= result / p;
        }
        if (d > 1) result -= result / d;
        return result;
    }

    std::vector<std::uint64_t> ends_{1};
};

enum class UdKind { van_der_corput, farey };

inline std::string to_string(UdKind kind) {
    return kind == UdKind::van_der_corput ? "vdc" : "farey";
}

inline std::optional<UdKind> parse_ud_kind(std::string_view name) {
    if (name == "vdc") return UdKind::van_der_corput;
    if (name == "farey") return UdKind::farey;
    return std::nullopt;
}

/// The driver sequence x_1, x_2, ... of the RNQ∩DNQ\NQ construction.
class UDSource {
public:
    explicit UDSource(UdKind kind = UdKind::van_der_corput) : kind_(kind) {}

    [[nodiscard]] UdKind kind() const noexcept { return kind_; }

    Fraction operator()(Index n) {
        return kind_ == UdKind::van_der_corput ? van_der_corput(n) : farey_(n);
    }

private:
    UdKind kind_;
    FareyEnumeration farey_;
};

} // namespace cantor
