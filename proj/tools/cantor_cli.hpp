// Copyright 2026 The cantor-normal Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// The `cantor` command line: digits/construct, stats, discrepancy, value,
// diagnose and replay.
//
// Exit codes: 0 success, 1 check failed (oracle or replay mismatch),
// 2 usage, argument or hypothesis error, 3 scan bound, refinement or
// capacity error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cantor/cantor.hpp"

#ifndef CANTOR_VERSION
#define CANTOR_VERSION "0.0.0"
#endif

namespace cantor::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_runtime = 3;

inline int exit_code_for(ErrorCode code) {
    return code == ErrorCode::argument || code == ErrorCode::hypothesis ? exit_usage : exit_runtime;
}

inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct Options {
    std::string seq;
    std::string target = "xq";
    std::string source = "construct";
    Index count = 0;
    std::string format;
    Index oracle_check = 0;
    std::string blocks;
    std::string block;
    std::string checkpoints;
    bool starred = false;
    std::string depth = "paper";
    unsigned base = 10;
    std::size_t digits = 0;
    Index exact = 0;
    Index refinement_cap = 64;
    std::string ud = "vdc";
    std::string mod_div = "auto";
    std::string log_base = "natural";
    std::string graph;
    std::string manifest;
    std::string replay_path;
};

inline nlohmann::json options_to_json(const Options& o) {
    return {{"seq", o.seq},           {"target", o.target},     {"source", o.source},
            {"count", o.count},       {"format", o.format},     {"oracle_check", o.oracle_check},
            {"blocks", o.blocks},     {"block", o.block},       {"checkpoints", o.checkpoints},
            {"starred", o.starred},   {"depth", o.depth},       {"base", o.base},
            {"digits", o.digits},     {"exact", o.exact},       {"refinement_cap", o.refinement_cap},
            {"ud", o.ud},             {"mod_div", o.mod_div},   {"log_base", o.log_base}};
}

inline LogBase parse_log_base(const std::string& s) {
    if (s == "natural") return LogBase::natural;
    if (s == "binary") return LogBase::binary;
    throw ArgumentError("--log-base must be natural or binary, got '" + s + "'");
}

/// Digits read from a file; running past the end is an error, not zeros.
class FileDigits final : public DigitSource {
public:
    FileDigits(std::vector<Digit> digits, std::string path) : digits_(std::move(digits)), path_(std::move(path)) {}

    Digit next() override {
        if (pos_ >= digits_.size()) {
            throw ArgumentError("digit file '" + path_ + "' holds only " + std::to_string(digits_.size()) +
                                " digits; more are needed");
        }
        return digits_[pos_++];
    }

private:
    std::vector<Digit> digits_;
    std::string path_;
    std::size_t pos_ = 0;
};

/// Whitespace- or comma-separated digits.
inline DigitSequence read_digit_file(const BasicSequence& q, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open digit file '" + path + "'");
    std::vector<Digit> digits;
    std::string token;
    while (in >> token) {
        std::string_view rest(token);
        while (!rest.empty()) {
            const auto pos = rest.find(',');
            const auto piece = rest.substr(0, pos);
            if (!piece.empty()) {
                const Digit d = parse_uint(piece, "digit file entry");
                const Base b = q.at(digits.size() + 1);
                if (d >= b) {
                    throw ArgumentError("digit file entry " + std::to_string(digits.size() + 1) + " is " +
                                        std::to_string(d) + ", not below q_n = " + std::to_string(b));
                }
                digits.push_back(d);
            }
            if (pos == std::string_view::npos) break;
            rest.remove_prefix(pos + 1);
        }
    }
    return DigitSequence(q, std::make_unique<FileDigits>(std::move(digits), path), "file:" + path);
}

struct Built {
    DigitSequence x;
    nlohmann::json graph;
    std::shared_ptr<ClampLog> clamps;
    std::shared_ptr<Schedule> schedule;
};

inline nlohmann::json node(std::string id, std::string op, nlohmann::json extra = nlohmann::json::object()) {
    extra["id"] = std::move(id);
    extra["op"] = std::move(op);
    return extra;
}

inline Built build_target(const BasicSequence& q, const Options& o, ScanLimits limits) {
    nlohmann::json graph = {{"tool", "cantor"}, {"version", CANTOR_VERSION}, {"target", o.target}};
    const auto qj = sequence_to_json(q);
    if (o.source != "construct") {
        if (!o.source.starts_with("file:")) {
            throw ArgumentError("--source must be 'construct' or 'file:<path>', got '" + o.source + "'");
        }
        auto x = read_digit_file(q, o.source.substr(5));
        graph["nodes"] = {node("x", "file", {{"path", o.source.substr(5)}, {"basis", qj}})};
        graph["output"] = "x";
        return {std::move(x), std::move(graph), nullptr, nullptr};
    }
    const LogBase log_base = parse_log_base(o.log_base);
    if (o.target == "xq") {
        graph["nodes"] = {node("x", "xq", {{"basis", qj}})};
        graph["output"] = "x";
        return {build_xq(q, limits), std::move(graph), nullptr, nullptr};
    }
    if (o.target == "nq-not-dnq") {
        auto w = build_nq_not_dnq(q, log_base, limits);
        const auto pj = sequence_to_json(w.p);
        graph["nodes"] = {node("x", "xq", {{"basis", qj}}), node("u", "psi", {{"input", "x"}, {"to", pj}}),
                          node("y", "psi", {{"input", "u"}, {"to", qj}})};
        graph["output"] = "y";
        return {std::move(w.y), std::move(graph), nullptr, nullptr};
    }
    if (o.target == "rnq-not-nq") {
        auto w = build_rnq_not_nq(q, limits);
        const auto pj = sequence_to_json(w.p);
        graph["nodes"] = {node("x", "xq", {{"basis", pj}}), node("y", "psi", {{"input", "x"}, {"to", qj}})};
        graph["output"] = "y";
        return {std::move(w.y), std::move(graph), nullptr, nullptr};
    }
    if (o.target == "rnq-dnq-not-nq") {
        const auto ud = parse_ud_kind(o.ud);
        if (!ud) throw ArgumentError("--ud must be vdc or farey, got '" + o.ud + "'");
        ScheduleOptions options;
        options.log_base = log_base;
        options.limits = limits;
        auto w = build_rnq_dnq_not_nq(q, parse_modulus_spec(o.mod_div, q, log_base, limits), *ud, options);
        const auto pj = sequence_to_json(w.schedule->p());
        graph["nodes"] = {node("f", "xq", {{"basis", pj}}),
                          node("y", "schedule", {{"donor", "f"},
                                                 {"basis", qj},
                                                 {"mod_div", o.mod_div},
                                                 {"ud", o.ud},
                                                 {"log_base", o.log_base}})};
        graph["output"] = "y";
        return {std::move(w.digits), std::move(graph), std::move(w.clamps), std::move(w.schedule)};
    }
    throw ArgumentError("--target must be xq, nq-not-dnq, rnq-not-nq or rnq-dnq-not-nq, got '" + o.target + "'");
}

inline std::vector<Index> parse_checkpoints(const std::string& s) {
    if (s.empty()) throw ArgumentError("--checkpoints is required");
    auto cp = parse_uint_list(s, "checkpoints");
    require_checkpoints(cp);
    return cp;
}

/// "all:k", or blocks separated by ';' or spaces with digits separated by ','.
inline std::vector<DigitBlock> parse_blocks(const std::string& s, const BasicSequence& q, Index upto) {
    if (s.starts_with("all:")) {
        const auto k = parse_uint(std::string_view(s).substr(4), "all:k block length");
        return admissible_blocks(q, k, upto);
    }
    std::vector<DigitBlock> out;
    std::string_view rest(s);
    while (!rest.empty()) {
        const auto pos = rest.find_first_of("; ");
        const auto piece = rest.substr(0, pos);
        if (!piece.empty()) out.push_back(parse_uint_list(piece, "block"));
        if (pos == std::string_view::npos) break;
        rest.remove_prefix(pos + 1);
    }
    if (out.empty()) throw ArgumentError("--blocks is required, e.g. '0;1' or 'all:2'");
    return out;
}

inline DepthPolicy parse_depth(const std::string& s) {
    if (s == "paper") return DepthPolicy::paper();
    if (s.starts_with("fixed:")) {
        return DepthPolicy::fixed_depth(static_cast<unsigned>(parse_uint(std::string_view(s).substr(6), "depth")));
    }
    throw ArgumentError("--depth must be 'paper' or 'fixed:<d>', got '" + s + "'");
}

inline std::string csv_quote(const std::string& s) {
    return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

inline void report_clamps(const Built& b, std::ostream& err) {
    if (b.clamps && b.clamps->count() > 0) {
        err << "warning: " << b.clamps->count() << " digit(s) clamped to q_n - 1; first at position "
            << b.clamps->positions().front() << "\n";
    }
}

inline int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
    const auto limits = ScanLimits::from_environment();
    const auto q = parse_sequence_spec(o.seq);
    if (o.count == 0) throw ArgumentError("--count must be >= 1");
    const auto built = build_target(q, o, limits);
    const auto digits = built.x.prefix(o.count);

    if (o.oracle_check > 0) {
        if (o.target != "xq" || o.source != "construct") {
            throw ArgumentError("--oracle-check applies to the constructed xq target only");
        }
        const PartitionIndex index(q, limits);
        const auto check = built.x.prefix(o.oracle_check);
        for (Index n = 1; n <= o.oracle_check; ++n) {
            const Digit d = digit_at(index, n);
            if (d != check[n - 1]) {
                err << "oracle check failed at n = " << n << ": stream " << check[n - 1] << ", digit_at " << d
                    << "\n";
                return exit_check_failed;
            }
        }
        err << "oracle check: first " << o.oracle_check << " digits agree with digit_at\n";
    }

    const std::string format = o.format.empty() ? "raw" : o.format;
    if (format == "raw") {
        for (std::size_t i = 0; i < digits.size(); ++i) out << (i ? " " : "") << digits[i];
        out << "\n";
    } else if (format == "csv") {
        for (std::size_t i = 0; i < digits.size(); ++i) out << i + 1 << "," << digits[i] << "\n";
    } else if (format == "json") {
        nlohmann::json j = {{"sequence", sequence_to_json(q)},
                            {"target", o.target},
                            {"count", o.count},
                            {"digits", std::vector<Digit>(digits.begin(), digits.end())}};
        if (built.clamps) j["clamp_events"] = built.clamps->count();
        if (built.schedule) {
            auto rows = nlohmann::json::array();
            for (unsigned n = 1; n <= built.schedule->computed(); ++n) {
                const auto& e = built.schedule->entry(n);
                rows.push_back({{"n", n},
                                {"L", e.value},
                                {"modulus", e.modulus},
                                {"quadratic", e.quadratic},
                                {"nu", e.nu},
                                {"upsilon", e.upsilon}});
            }
            j["schedule"] = rows;
            j["s_count"] = built.schedule->s_count(o.count);
        }
        out << j.dump(2) << "\n";
    } else {
        throw ArgumentError("--format must be raw, csv or json, got '" + format + "'");
    }
    if (!o.graph.empty()) {
        std::ofstream g(o.graph);
        if (!g) throw ArgumentError("cannot write graph file '" + o.graph + "'");
        g << built.graph.dump(2) << "\n";
    }
    report_clamps(built, err);
    return exit_ok;
}

inline int cmd_stats(const Options& o, std::ostream& out, std::ostream& err) {
    const auto limits = ScanLimits::from_environment();
    const auto q = parse_sequence_spec(o.seq);
    const auto checkpoints = parse_checkpoints(o.checkpoints);
    const auto blocks = parse_blocks(o.blocks, q, checkpoints.back());
    const auto built = build_target(q, o, limits);
    std::optional<PartitionIndex> index;
    ReportOptions options;
    if (o.starred) {
        index.emplace(q, limits);
        options.windows = &*index;
    }
    const auto report = normality_report(built.x, blocks, checkpoints, options);

    const std::string format = o.format.empty() ? "csv" : o.format;
    if (format == "csv") {
        out << "block,n,observed,expected_num,expected_den,ratio";
        if (o.starred) out << ",starred_observed,starred_expected_num,starred_expected_den";
        out << "\n";
        for (const auto& r : report.rows) {
            out << csv_quote(format_block(r.block)) << "," << r.n << "," << r.observed << ","
                << numerator_of(r.expected) << "," << denominator_of(r.expected) << ","
                << (r.ratio ? fmt(*r.ratio) : "undefined");
            if (r.starred) {
                out << "," << r.starred->observed << "," << numerator_of(r.starred->expected) << ","
                    << denominator_of(r.starred->expected);
            }
            out << "\n";
        }
    } else if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : report.rows) {
            nlohmann::json row = {{"block", r.block},
                                  {"n", r.n},
                                  {"observed", r.observed},
                                  {"expected", to_fraction_string(r.expected)},
                                  {"expected_float", to_double(r.expected)},
                                  {"ratio", r.ratio ? nlohmann::json(*r.ratio) : nlohmann::json(nullptr)}};
            if (r.starred) {
                row["starred"] = {{"observed", r.starred->observed},
                                  {"expected", to_fraction_string(r.starred->expected)},
                                  {"expected_float", to_double(r.starred->expected)}};
            }
            rows.push_back(std::move(row));
        }
        nlohmann::json pairs = nlohmann::json::array();
        for (const auto& p : report.pairs) {
            pairs.push_back({{"first", p.first},
                             {"second", p.second},
                             {"n", p.n},
                             {"ratio", p.ratio ? nlohmann::json(*p.ratio) : nlohmann::json(nullptr)}});
        }
        out << nlohmann::json{{"sequence", sequence_to_json(q)}, {"target", o.target}, {"rows", rows},
                              {"pairs", pairs}}
                   .dump(2)
            << "\n";
    } else {
        throw ArgumentError("--format must be csv or json, got '" + format + "'");
    }
    report_clamps(built, err);
    return exit_ok;
}

inline int cmd_discrepancy(const Options& o, std::ostream& out, std::ostream& err) {
    const auto limits = ScanLimits::from_environment();
    const auto q = parse_sequence_spec(o.seq);
    const auto checkpoints = parse_checkpoints(o.checkpoints);
    const auto policy = parse_depth(o.depth);
    const auto built = build_target(q, o, limits);
    std::optional<PartitionIndex> index;
    if (!policy.fixed) index.emplace(q, limits);
    const auto rows = dn_report(index ? &*index : nullptr, built.x, checkpoints, policy);

    const std::string format = o.format.empty() ? "csv" : o.format;
    if (format == "csv") {
        out << "n,d_star,d_extreme,max_eps\n";
        for (const auto& r : rows) {
            out << r.n << "," << fmt(r.star) << "," << fmt(r.extreme) << "," << fmt(to_double(r.max_error)) << "\n";
        }
    } else if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows) {
            j.push_back({{"n", r.n},
                         {"d_star", r.star},
                         {"d_extreme", r.extreme},
                         {"max_eps", to_fraction_string(r.max_error)},
                         {"max_eps_float", to_double(r.max_error)}});
        }
        out << nlohmann::json{{"sequence", sequence_to_json(q)}, {"target", o.target}, {"depth", o.depth},
                              {"rows", j}}
                   .dump(2)
            << "\n";
    } else {
        throw ArgumentError("--format must be csv or json, got '" + format + "'");
    }
    report_clamps(built, err);
    return exit_ok;
}

inline int cmd_value(const Options& o, std::ostream& out, std::ostream& err) {
    const auto limits = ScanLimits::from_environment();
    const auto q = parse_sequence_spec(o.seq);
    if (o.digits == 0 && o.exact == 0) throw ArgumentError("value needs --digits N and/or --exact m");
    const auto built = build_target(q, o, limits);
    if (o.digits > 0) {
        const auto e = to_base_b(built.x, o.base, o.digits, o.refinement_cap);
        out << "0." << e.digits << "\n";
        err << "certified with " << e.cantor_digits_used << " Cantor digits\n";
    }
    if (o.exact > 0) {
        const auto v = prefix_value(q, built.x.prefix(o.exact));
        out << "[" << to_fraction_string(v.lower) << ", " << to_fraction_string(v.upper) << "]\n";
    }
    report_clamps(built, err);
    return exit_ok;
}

inline int cmd_diagnose(const Options& o, std::ostream& out, std::ostream& err) {
    const auto q = parse_sequence_spec(o.seq);
    const auto checkpoints = parse_checkpoints(o.checkpoints);
    if (o.block.empty()) throw ArgumentError("--block is required, e.g. --block 0,1");
    const auto block = parse_uint_list(o.block, "block");
    const auto d = diagnose_growth(q, block, checkpoints);
    out << "n,expected_num,expected_den,expected,growth\n";
    for (const auto& r : d.rows) {
        out << r.n << "," << numerator_of(r.expected) << "," << denominator_of(r.expected) << ","
            << fmt(to_double(r.expected)) << "," << fmt(r.value) << "\n";
    }
    err << GrowthDiagnosis::label << ": Q_n(B) / (n log q(n) / log n) is "
        << (d.increasing ? "increasing" : "not increasing") << " across the checkpoints\n";
    return exit_ok;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

inline int cmd_replay(const Options& o, std::ostream& out, std::ostream& err) {
    std::ifstream in(o.replay_path);
    if (!in) throw ArgumentError("cannot open manifest '" + o.replay_path + "'");
    nlohmann::json m;
    try {
        in >> m;
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError("manifest '" + o.replay_path + "' is not valid JSON: " + e.what());
    }
    if (!m.contains("argv") || !m.contains("outputs")) {
        throw ArgumentError("manifest '" + o.replay_path + "' lacks argv or outputs");
    }
    const auto argv = m["argv"].get<std::vector<std::string>>();
    const auto expected = m["outputs"]["stdout"]["fnv1a64"].get<std::string>();
    std::ostringstream captured;
    std::ostringstream ignored;
    const int code = run_cli(argv, captured, ignored);
    const auto actual = hex64(fnv1a64(captured.str()));
    if (code != m.value("exit_code", 0) || actual != expected) {
        err << "replay mismatch: expected " << expected << ", got " << actual << " (exit " << code << ")\n";
        return exit_check_failed;
    }
    out << "replay ok: " << actual << "\n";
    return exit_ok;
}

inline void write_manifest(const std::string& path, const std::string& subcommand, const std::vector<std::string>& argv,
                           const Options& o, const std::string& output, int code) {
    nlohmann::json m = {{"tool", "cantor"},
                        {"version", CANTOR_VERSION},
                        {"subcommand", subcommand},
                        {"argv", argv},
                        {"sequence", o.seq},
                        {"target", o.target},
                        {"parameters", options_to_json(o)},
                        {"exit_code", code},
                        {"outputs", {{"stdout", {{"bytes", output.size()}, {"fnv1a64", hex64(fnv1a64(output))}}}}}};
    if (const char* bound = std::getenv("CANTOR_SCAN_BOUND")) m["environment"]["CANTOR_SCAN_BOUND"] = bound;
    std::ofstream f(path);
    if (!f) throw ArgumentError("cannot write manifest '" + path + "'");
    f << m.dump(2) << "\n";
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Normal numbers for Cantor series expansions", "cantor"};
    app.set_version_flag("--version", CANTOR_VERSION);
    app.require_subcommand(1);
    Options o;

    auto add_seq = [&](CLI::App* sub) {
        sub->add_option("--seq", o.seq, "Basic sequence: constant:b | periodic:a,b | table:a,b | preset:name | file:path")
            ->required();
        sub->add_option("--manifest", o.manifest, "Write a run manifest (JSON) to this path");
    };
    auto add_target = [&](CLI::App* sub) {
        sub->add_option("--target", o.target, "xq | nq-not-dnq | rnq-not-nq | rnq-dnq-not-nq");
        sub->add_option("--source", o.source, "construct | file:<path>");
        sub->add_option("--ud", o.ud, "Driver for rnq-dnq-not-nq: vdc | farey");
        sub->add_option("--mod-div", o.mod_div, "Modulus of divergence: auto | list:t1,t2,...");
        sub->add_option("--log-base", o.log_base, "natural | binary");
    };

    auto* construct = app.add_subcommand("construct", "Emit the digits of a constructed number");
    auto* digits = app.add_subcommand("digits", "Same as construct; the target defaults to xq");
    for (auto* sub : {construct, digits}) {
        add_seq(sub);
        add_target(sub);
        sub->add_option("--count", o.count, "Number of digits")->required();
        sub->add_option("--format", o.format, "raw | csv | json");
        sub->add_option("--oracle-check", o.oracle_check, "Compare the first K digits against digit_at");
        sub->add_option("--graph", o.graph, "Write the transform graph (JSON) to this path");
    }

    auto* stats = app.add_subcommand("stats", "Block counts against expected counts");
    add_seq(stats);
    add_target(stats);
    stats->add_option("--blocks", o.blocks, "all:k, or blocks like '0;1;0,1'")->required();
    stats->add_option("--checkpoints", o.checkpoints, "Increasing list, e.g. 100,1000")->required();
    stats->add_option("--format", o.format, "csv | json");
    stats->add_flag("--starred", o.starred, "Add the single-window (starred) variants");

    auto* disc = app.add_subcommand("discrepancy", "Discrepancy of the truncated orbit");
    add_seq(disc);
    add_target(disc);
    disc->add_option("--checkpoints", o.checkpoints, "Increasing list, e.g. 1000,10000")->required();
    disc->add_option("--depth", o.depth, "paper | fixed:d");
    disc->add_option("--format", o.format, "csv | json");

    auto* value = app.add_subcommand("value", "Proven base-b digits and exact prefix values");
    add_seq(value);
    add_target(value);
    value->add_option("--base", o.base, "Output base, 2..36");
    value->add_option("--digits", o.digits, "Number of base-b digits");
    value->add_option("--exact", o.exact, "Print the exact interval after m Cantor digits");
    value->add_option("--refinement-cap", o.refinement_cap, "Extra Cantor digits allowed per base-b digit");

    auto* diagnose = app.add_subcommand("diagnose", "Growth of Q_n(B) against n log q(n) / log n");
    add_seq(diagnose);
    diagnose->add_option("--block", o.block, "Digits, e.g. 0,1")->required();
    diagnose->add_option("--checkpoints", o.checkpoints, "Increasing list")->required();

    auto* replay = app.add_subcommand("replay", "Re-run a manifest and compare output digests");
    replay->add_option("manifest", o.replay_path, "Manifest path")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    std::string name;
    for (auto* sub : app.get_subcommands()) name = sub->get_name();

    std::ostringstream buffer;
    int code = exit_ok;
    try {
        if (name == "construct" || name == "digits") code = cmd_construct(o, buffer, err);
        else if (name == "stats") code = cmd_stats(o, buffer, err);
        else if (name == "discrepancy") code = cmd_discrepancy(o, buffer, err);
        else if (name == "value") code = cmd_value(o, buffer, err);
        else if (name == "diagnose") code = cmd_diagnose(o, buffer, err);
        else if (name == "replay") code = cmd_replay(o, buffer, err);
    } catch (const Error& e) {
        out << buffer.str();
        err << "error[" << code_name(e.code()) << "]: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    const auto output = buffer.str();
    out << output;
    if (!o.manifest.empty()) {
        std::vector<std::string> argv;
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (args[i] == "--manifest") {
                ++i;
                continue;
            }
            if (args[i].starts_with("--manifest=")) continue;
            argv.push_back(args[i]);
        }
        try {
            write_manifest(o.manifest, name, argv, o, output, code);
        } catch (const Error& e) {
            err << "error[" << code_name(e.code()) << "]: " << e.what() << "\n";
            return exit_code_for(e.code());
        }
    }
    return code;
}

} // namespace cantor::cli
