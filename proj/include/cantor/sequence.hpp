// Copyright 2026 The cantor-normal Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Basic sequences Q = (q_n), n >= 1, every q_n >= 2.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cantor/errors.hpp"

namespace cantor {

using Index = std::uint64_t;
using Base = std::uint64_t;
using Digit = std::uint64_t;
using DigitBlock = std::vector<Digit>;

enum class LogBase { natural, binary };

inline std::string to_string(LogBase base) {
    return base == LogBase::natural ? "natural" : "binary";
}

/// floor(log x) for an integer x >= 1.
inline std::uint64_t floor_log(std::uint64_t x, LogBase base) {
    if (x == 0) {
        throw ArgumentError("floor_log: argument must be positive");
    }
    if (base == LogBase::binary) {
        return static_cast<std::uint64_t>(std::bit_width(x) - 1);
    }
    auto m = static_cast<long long>(std::floor(std::log(static_cast<long double>(x))));
    // e^m is never an integer for m > 0, so only rounding noise needs fixing.
    while (std::exp(static_cast<long double>(m + 1)) <= static_cast<long double>(x)) {
        ++m;
    }
    while (m > 0 && std::exp(static_cast<long double>(m)) > static_cast<long double>(x)) {
        --m;
    }
    return static_cast<std::uint64_t>(m);
}

/// ceil(log x) for an integer x >= 1.
inline std::uint64_t ceil_log(std::uint64_t x, LogBase base) {
    if (x == 0) {
        throw ArgumentError("ceil_log: argument must be positive");
    }
    const auto f = floor_log(x, base);
    if (base == LogBase::binary) {
        return std::has_single_bit(x) ? f : f + 1;
    }
    // ln x is an integer only at x = 1.
    return x == 1 ? 0 : f + 1;
}

inline double log_value(double x, LogBase base) {
    return base == LogBase::natural ? std::log(x) : std::log2(x);
}

enum class PresetName {
    log,           // max(2, floor(log2(n + 4)))
    iterated_log,  // max(2, floor(log2 log2(n + 4)))
    linear,        // n + 1
    log_plus_two,  // floor(log n) + 2
};

inline std::string to_string(PresetName name) {
    switch (name) {
    case PresetName::log: return "log";
    case PresetName::iterated_log: return "iterated-log";
    case PresetName::linear: return "linear";
    case PresetName::log_plus_two: return "log-plus-two";
    }
    return "?";
}

inline std::optional<PresetName> parse_preset(std::string_view name) {
    if (name == "log") return PresetName::log;
    if (name == "iterated-log") return PresetName::iterated_log;
    if (name == "linear") return PresetName::linear;
    if (name == "log-plus-two") return PresetName::log_plus_two;
    return std::nullopt;
}

/// Rules deriving a second basic sequence P from Q pointwise.
enum class DerivedRule {
    floor_log,  // p_n = max(floor(log q_n), 2)
    half,       // p_n = max(floor(q_n / 2), 2)
};

/// Immutable description of a basic sequence. Cheap to copy; evaluation is
/// pure and thread-safe.
class BasicSequence {
public:
    struct Constant {
        Base b;
    };
    struct Periodic {
        std::vector<Base> bases;
    };
    struct Preset {
        PresetName name;
        LogBase log_base = LogBase::natural;  // only used by log_plus_two
    };
    /// Finite table; positions past the end repeat the last entry.
    struct Table {
        std::vector<Base> bases;
    };
    struct Derived {
        DerivedRule rule;
        LogBase log_base;
        std::shared_ptr<const BasicSequence> parent;
    };
    using Kind = std::variant<Constant, Periodic, Preset, Table, Derived>;

    static BasicSequence constant(Base b) {
        check_base(b, "constant");
        return BasicSequence(Constant{b});
    }

    static BasicSequence periodic(std::vector<Base> bases) {
        if (bases.empty()) {
            throw ArgumentError("periodic sequence needs at least one base");
        }
        for (auto b : bases) check_base(b, "periodic");
        return BasicSequence(Periodic{std::move(bases)});
    }

    static BasicSequence preset(PresetName name, LogBase log_base = LogBase::natural) {
        return BasicSequence(Preset{name, log_base});
    }

    static BasicSequence table(std::vector<Base> bases) {
        if (bases.empty()) {
            throw ArgumentError("table sequence needs at least one base");
        }
        for (auto b : bases) check_base(b, "table");
        return BasicSequence(Table{std::move(bases)});
    }

    static BasicSequence derived(DerivedRule rule, const BasicSequence& parent,
                                 LogBase log_base = LogBase::natural) {
        return BasicSequence(
            Derived{rule, log_base, std::make_shared<const BasicSequence>(parent)});
    }

    [[nodiscard]] const Kind& kind() const noexcept { return kind_; }

    /// q_n for n >= 1.
    [[nodiscard]] Base at(Index n) const {
        if (n == 0) {
            throw ArgumentError("basic sequences are indexed from 1; got index 0");
        }
        return std::visit([n](const auto& k) { return eval(k, n); }, kind_);
    }

    [[nodiscard]] Base operator()(Index n) const { return at(n); }

    /// q(n) = max_{i <= n} q_i.
    [[nodiscard]] Base running_max(Index n) const {
        if (n == 0) {
            throw ArgumentError("running_max: index must be >= 1");
        }
        return std::visit([n](const auto& k) { return prefix_max(k, n); }, kind_);
    }

    /// True when q_n is non-decreasing in n.
    [[nodiscard]] bool monotone() const {
        return std::visit(
            [](const auto& k) -> bool {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, Constant> || std::is_same_v<K, Preset>) {
                    return true;
                } else if constexpr (std::is_same_v<K, Periodic>) {
                    return std::ranges::all_of(k.bases,
                                               [&](Base b) { return b == k.bases.front(); });
                } else if constexpr (std::is_same_v<K, Table>) {
                    return std::ranges::is_sorted(k.bases);
                } else {
                    return k.parent->monotone();
                }
            },
            kind_);
    }

    /// q_n -> infinity. Presets grow without bound; everything else is
    /// eventually periodic.
    [[nodiscard]] bool infinite_in_limit() const { return !tail().has_value(); }

    /// Eventually periodic structure: q_{n + period} = q_n for n > preperiod.
    struct Tail {
        Index preperiod;
        Index period;
    };

    [[nodiscard]] std::optional<Tail> tail() const {
        return std::visit(
            [](const auto& k) -> std::optional<Tail> {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, Constant>) {
                    return Tail{0, 1};
                } else if constexpr (std::is_same_v<K, Periodic>) {
                    return Tail{0, k.bases.size()};
                } else if constexpr (std::is_same_v<K, Table>) {
                    return Tail{k.bases.size(), 1};
                } else if constexpr (std::is_same_v<K, Preset>) {
                    return std::nullopt;
                } else {
                    return k.parent->tail();
                }
            },
            kind_);
    }

    /// True when the block can occur at infinitely many positions.
    [[nodiscard]] bool eventually_admissible(std::span<const Digit> block) const {
        const auto t = tail();
        if (!t) {
            // Unbounded monotone presets eventually admit any block.
            return true;
        }
        for (Index i = t->preperiod + 1; i <= t->preperiod + t->period; ++i) {
            bool ok = true;
            for (std::size_t j = 0; j < block.size() && ok; ++j) {
                ok = block[j] < at(i + j);
            }
            if (ok) return true;
        }
        return false;
    }

    /// Short human-readable label, e.g. "constant:2" or "preset:log".
    [[nodiscard]] std::string describe() const {
        return std::visit(
            [](const auto& k) -> std::string {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, Constant>) {
                    return "constant:" + std::to_string(k.b);
                } else if constexpr (std::is_same_v<K, Periodic>) {
                    return "periodic:" + join(k.bases);
                } else if constexpr (std::is_same_v<K, Table>) {
                    return "table:" + join(k.bases);
                } else if constexpr (std::is_same_v<K, Preset>) {
                    return "preset:" + to_string(k.name);
                } else {
                    return std::string(k.rule == DerivedRule::floor_log ? "floor-log(" : "half(") +
                           k.parent->describe() + ")";
                }
            },
            kind_);
    }

private:
    explicit BasicSequence(Kind kind) : kind_(std::move(kind)) {}

    static void check_base(Base b, const char* what) {
        if (b < 2) {
            throw ArgumentError(std::string(what) + " sequence: every base must be >= 2, got " +
                                std::to_string(b));
        }
    }

    static std::string join(const std::vector<Base>& bases) {
        std::string out;
        for (std::size_t i = 0; i < bases.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(bases[i]);
        }
        return out;
    }

    static Base eval(const Constant& k, Index) { return k.b; }
    static Base eval(const Periodic& k, Index n) { return k.bases[(n - 1) % k.bases.size()]; }
    static Base eval(const Table& k, Index n) {
        return n <= k.bases.size() ? k.bases[n - 1] : k.bases.back();
    }
    static Base eval(const Preset& k, Index n) {
        switch (k.name) {
        case PresetName::log:
            return std::max<Base>(2, floor_log(n + 4, LogBase::binary));
        case PresetName::iterated_log:
            // floor(log2 y) = floor(log2 floor(y)) for y >= 1.
            return std::max<Base>(2, floor_log(floor_log(n + 4, LogBase::binary), LogBase::binary));
        case PresetName::linear:
            return n + 1;
        case PresetName::log_plus_two:
            return floor_log(n, k.log_base) + 2;
        }
        return 2;
    }
    static Base eval(const Derived& k, Index n) { return apply(k, k.parent->at(n)); }

    static Base apply(const Derived& k, Base q) {
        switch (k.rule) {
        case DerivedRule::floor_log: return std::max<Base>(floor_log(q, k.log_base), 2);
        case DerivedRule::half: return std::max<Base>(q / 2, 2);
        }
        return 2;
    }

    static Base prefix_max(const Constant& k, Index) { return k.b; }
    static Base prefix_max(const Periodic& k, Index n) {
        const auto len = std::min<std::size_t>(n, k.bases.size());
        return *std::max_element(k.bases.begin(), k.bases.begin() + static_cast<std::ptrdiff_t>(len));
    }
    static Base prefix_max(const Table& k, Index n) {
        const auto len = std::min<std::size_t>(n, k.bases.size());
        return *std::max_element(k.bases.begin(), k.bases.begin() + static_cast<std::ptrdiff_t>(len));
    }
    static Base prefix_max(const Preset& k, Index n) { return eval(k, n); }
    // Both derivation rules are non-decreasing maps, so they commute with max.
    static Base prefix_max(const Derived& k, Index n) { return apply(k, k.parent->running_max(n)); }

    Kind kind_;
};

} // namespace cantor
