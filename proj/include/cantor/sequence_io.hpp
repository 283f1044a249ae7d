// Copyright 2026 The cantor-normal Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Sequence spec files (JSON) and the compact `kind:args` command-line form.

#include <charconv>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cantor/sequence.hpp"

namespace cantor {

inline std::uint64_t parse_uint(std::string_view text, std::string_view what) {
    std::uint64_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw ArgumentError(std::string(what) + ": expected a non-negative integer, got '" +
                            std::string(text) + "'");
    }
    return value;
}

inline std::vector<std::uint64_t> parse_uint_list(std::string_view text, std::string_view what,
                                                  char sep = ',') {
    std::vector<std::uint64_t> out;
    while (!text.empty()) {
        const auto pos = text.find(sep);
        out.push_back(parse_uint(text.substr(0, pos), what));
        if (pos == std::string_view::npos) break;
        text.remove_prefix(pos + 1);
    }
    if (out.empty()) {
        throw ArgumentError(std::string(what) + ": empty list");
    }
    return out;
}

inline BasicSequence sequence_from_json(const nlohmann::json& spec) {
    if (!spec.is_object() || !spec.contains("kind")) {
        throw ArgumentError("sequence spec: expected an object with a \"kind\" field");
    }
    const auto kind = spec.at("kind").get<std::string>();
    try {
        if (kind == "constant") {
            return BasicSequence::constant(spec.at("b").get<Base>());
        }
        if (kind == "periodic") {
            return BasicSequence::periodic(spec.at("bases").get<std::vector<Base>>());
        }
        if (kind == "preset") {
            const auto name = spec.at("name").get<std::string>();
            const auto preset = parse_preset(name);
            if (!preset) {
                throw ArgumentError("sequence spec: unknown preset '" + name + "'");
            }
            return BasicSequence::preset(*preset);
        }
        if (kind == "table") {
            const auto extend = spec.value("extend", std::string("repeat-last"));
            if (extend != "repeat-last") {
                throw ArgumentError("sequence spec: unsupported table extension '" + extend + "'");
            }
            return BasicSequence::table(spec.at("bases").get<std::vector<Base>>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("sequence spec: ") + e.what());
    }
    throw ArgumentError("sequence spec: unknown kind '" + kind + "'");
}

inline nlohmann::json sequence_to_json(const BasicSequence& q) {
    return std::visit(
        [](const auto& k) -> nlohmann::json {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, BasicSequence::Constant>) {
                return {{"kind", "constant"}, {"b", k.b}};
            } else if constexpr (std::is_same_v<K, BasicSequence::Periodic>) {
                return {{"kind", "periodic"}, {"bases", k.bases}};
            } else if constexpr (std::is_same_v<K, BasicSequence::Table>) {
                return {{"kind", "table"}, {"bases", k.bases}, {"extend", "repeat-last"}};
            } else if constexpr (std::is_same_v<K, BasicSequence::Preset>) {
                return {{"kind", "preset"}, {"name", to_string(k.name)}};
            } else {
                return {{"kind", "derived"},
                        {"rule", k.rule == DerivedRule::floor_log ? "floor-log" : "half"},
                        {"log_base", to_string(k.log_base)},
                        {"parent", sequence_to_json(*k.parent)}};
            }
        },
        q.kind());
}

/// Parses `constant:b`, `periodic:a,b,c`, `table:a,b,c`, `preset:name` or
/// `file:path` (a JSON spec file).
inline BasicSequence parse_sequence_spec(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw ArgumentError("sequence spec '" + std::string(spec) +
                            "': expected kind:args, e.g. constant:2");
    }
    const auto kind = spec.substr(0, colon);
    const auto args = spec.substr(colon + 1);
    if (kind == "constant") return BasicSequence::constant(parse_uint(args, "constant base"));
    if (kind == "periodic") return BasicSequence::periodic(parse_uint_list(args, "periodic bases"));
    if (kind == "table") return BasicSequence::table(parse_uint_list(args, "table bases"));
    if (kind == "preset") {
        const auto preset = parse_preset(args);
        if (!preset) {
            throw ArgumentError("unknown preset '" + std::string(args) +
                                "' (known: log, iterated-log, linear, log-plus-two)");
        }
        return BasicSequence::preset(*preset);
    }
    if (kind == "file") {
        std::ifstream in{std::string(args)};
        if (!in) {
            throw ArgumentError("cannot open sequence spec file '" + std::string(args) + "'");
        }
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ArgumentError(std::string("sequence spec file: ") + e.what());
        }
        return sequence_from_json(j);
    }
    throw ArgumentError("unknown sequence kind '" + std::string(kind) + "'");
}

} // namespace cantor
