// Copyright 2026 The cantor-normal Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// The L_n schedule behind a number that is ratio normal and distribution
// normal but not normal, and the digit sequence built on it.
//
//   nu_n        min t with (q_{L+1} ... q_{L+n})^n < q_{L+1} ... q_t, L = L_{n-1}
//   upsilon_nk  min t with n Q_n(B) < sum_{i<=t} P_{i-k+1}(B) for every
//               length-k block B with Q_n(B) > 0 and P_m(B) -> infinity
//   L_n         max(mod_div(n), L_{n-1} + n^2, L_{n-1} + nu_n, max_k upsilon_nk)
//   i(m)        max{j : L_j <= m}
//   S           union of {L_n, ..., L_n + n - 1}
//
// Both scan predicates are monotone in t, so a minimal t is certified by
// "false at t - 1, true at t".

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "cantor/blocks.hpp"
#include "cantor/construction.hpp"
#include "cantor/sequence_io.hpp"
#include "cantor/stats.hpp"
#include "cantor/transforms.hpp"
#include "cantor/ud.hpp"

namespace cantor {

/// mod_div(n) = t with log q_j > n for every j >= t.
using ModulusOfDivergence = std::function<Index(unsigned)>;

/// log q > n, decided exactly.
inline bool log_exceeds(Base q, unsigned n, LogBase base) {
    if (n == 0) return true;
    if (base == LogBase::binary) return n < 64 && q > (std::uint64_t{1} << n);
    // e^n is irrational, so ln q > n iff floor(ln q) >= n.
    return floor_log(q, LogBase::natural) >= n;
}

/// First j with log q_j > n. Needs a monotone Q, where that j works for all
/// later positions too.
inline ModulusOfDivergence scanned_modulus(const BasicSequence& q, LogBase base, ScanLimits limits = {}) {
    if (!q.monotone()) {
        throw ArgumentError("mod-div auto needs a monotone basic sequence; " + q.describe() +
                            " is not, so pass the modulus explicitly");
    }
    return [q, base, limits](unsigned n) -> Index {
        auto ok = [&](Index j) { return log_exceeds(q.at(j), n, base); };
        if (ok(1)) return 1;
        Index lo = 1;
        Index hi = 2;
        while (!ok(hi)) {
            lo = hi;
            if (hi > limits.scan_bound / 2) {
                throw ScanBoundError("mod-div scan for n = " + std::to_string(n) + " passed the bound " +
                                     std::to_string(limits.scan_bound));
            }
            hi *= 2;
        }
        while (hi - lo > 1) {
            const Index mid = lo + (hi - lo) / 2;
            (ok(mid) ? hi : lo) = mid;
        }
        return hi;
    };
}

inline ModulusOfDivergence listed_modulus(std::vector<Index> values) {
    for (auto v : values) {
        if (v == 0) throw ArgumentError("mod-div positions are 1-based");
    }
    return [values = std::move(values)](unsigned n) -> Index {
        if (n == 0 || n > values.size()) {
            throw ArgumentError("mod-div list has no entry for n = " + std::to_string(n));
        }
        return values[n - 1];
    };
}

/// "auto" or "list:t1,t2,...".
inline ModulusOfDivergence parse_modulus_spec(std::string_view spec, const BasicSequence& q, LogBase base,
                                              ScanLimits limits = {}) {
    if (spec == "auto") return scanned_modulus(q, base, limits);
    if (spec.starts_with("list:")) return listed_modulus(parse_uint_list(spec.substr(5), "mod-div list"));
    throw ArgumentError("mod-div must be 'auto' or 'list:t1,t2,...', got '" + std::string(spec) + "'");
}

inline BigInt nu_target(const BasicSequence& q, unsigned n, Index base) {
    BigInt num = 1;
    for (Index j = base + 1; j <= base + n; ++j) num *= q.at(j);
    return boost::multiprecision::pow(num, n);
}

/// (q_{L+1} ... q_{L+n})^n < q_{L+1} ... q_t, i.e. the log-sum ratio is below 1/n.
inline bool nu_holds(const BasicSequence& q, unsigned n, Index base, Index t) {
    BigInt den = 1;
    for (Index j = base + 1; j <= t; ++j) den *= q.at(j);
    return nu_target(q, n, base) < den;
}

/// nu_n given L_{n-1} = base: the first t where nu_holds.
inline Index nu_scan(const BasicSequence& q, unsigned n, Index base, ScanLimits limits = {}) {
    if (n == 0) throw ArgumentError("schedule indices start at n = 1");
    const BigInt target = nu_target(q, n, base);
    BigInt den = 1;
    for (Index j = base + 1;; ++j) {
        if (j - base > limits.scan_bound) {
            throw ScanBoundError("nu_" + std::to_string(n) + " scan passed the bound " +
                                 std::to_string(limits.scan_bound));
        }
        den *= q.at(j);
        if (target < den) return j;
    }
}

enum class UpsilonBlocks {
    automatic,    // dominating when Q and P are monotone, exhaustive otherwise
    exhaustive,   // every block admissible in Q at some i <= n
    dominating,   // C^a_j = min(q_{a+j-1} - 1, sup p - 1), a = 1..n
};

struct ScheduleOptions {
    LogBase log_base = LogBase::natural;
    UpsilonBlocks blocks = UpsilonBlocks::automatic;
    std::size_t enumeration_cap = 200'000;
    ScanLimits limits;
};

/// The four terms whose maximum is L_n.
struct LadderEntry {
    Index modulus = 0;
    Index quadratic = 0;   // L_{n-1} + n^2
    Index nu = 0;          // L_{n-1} + nu_n
    Index upsilon = 0;     // max_k upsilon_nk
    Index value = 0;       // L_n
};

/// Lazily extended schedule. Not thread-safe: the steps depend on each other
/// serially.
class Schedule {
public:
    Schedule(BasicSequence q, BasicSequence p, ModulusOfDivergence mod_div, ScheduleOptions options = {})
        : q_(std::move(q)), p_(std::move(p)), mod_div_(std::move(mod_div)), options_(options) {}

    [[nodiscard]] const BasicSequence& q() const noexcept { return q_; }
    [[nodiscard]] const BasicSequence& p() const noexcept { return p_; }
    [[nodiscard]] const ScheduleOptions& options() const noexcept { return options_; }
    [[nodiscard]] unsigned computed() const noexcept { return static_cast<unsigned>(entries_.size()); }

    Index L(unsigned n) { return n == 0 ? 0 : entry(n).value; }

    const LadderEntry& entry(unsigned n) {
        if (n == 0) throw ArgumentError("L_0 = 0 has no ladder entry");
        while (entries_.size() < n) extend();
        return entries_[n - 1];
    }

    bool nu_predicate(unsigned n, Index t) {
        require_n(n);
        return nu_holds(q_, n, L(n - 1), t);
    }

    Index nu(unsigned n) {
        require_n(n);
        if (auto it = nu_.find(n); it != nu_.end()) return it->second;
        return nu_[n] = nu_scan(q_, n, L(n - 1), options_.limits);
    }

    /// Blocks the upsilon_nk predicate quantifies over.
    const std::vector<DigitBlock>& upsilon_blocks(unsigned n, unsigned k) {
        require_nk(n, k);
        auto& slot = blocks_[{n, k}];
        if (!slot.empty()) return slot;
        auto mode = options_.blocks;
        if (mode == UpsilonBlocks::automatic) {
            mode = q_.monotone() && p_.monotone() ? UpsilonBlocks::dominating : UpsilonBlocks::exhaustive;
        }
        std::set<DigitBlock> found = mode == UpsilonBlocks::dominating ? dominating_blocks(n, k)
                                                                       : exhaustive_blocks(n, k);
        for (const auto& b : found) {
            if (p_.eventually_admissible(b)) slot.push_back(b);
        }
        if (slot.empty()) {
            throw HypothesisError("no length-" + std::to_string(k) +
                                  " block is admissible in both Q (before n = " + std::to_string(n) +
                                  ") and P");
        }
        return slot;
    }

    /// sum_{i=1}^{t} P_{i-k+1}(B) = sum_{s <= t-k+1} (t - k + 2 - s) w_s with
    /// w_s = I^P_s(B) / (p_s ... p_{s+k-1}).
    Rational cumulative_weight(const DigitBlock& block, Index t) {
        require_block(block);
        const std::size_t k = block.size();
        if (t + 1 < k + 1) return 0;
        const Index upper = t - k + 1;
        auto& runs = runs_[block];
        extend_runs(runs, block, upper);
        const BigInt top = BigInt(upper) + 1;
        Rational sum = 0;
        for (const auto& run : runs.runs) {
            if (run.first > upper) break;
            const Index last = std::min(run.last, upper);
            const BigInt count = BigInt(last - run.first + 1);
            const BigInt coef = count * (2 * top - run.first - last) / 2;
            sum += Rational(coef, run.product);
        }
        return sum;
    }

    bool upsilon_predicate(unsigned n, unsigned k, Index t) {
        const auto& blocks = upsilon_blocks(n, k);
        const auto& expected = expected_for(n, k);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (expected[b] == 0) continue;
            if (!(expected[b] * n < cumulative_weight(blocks[b], t))) return false;
        }
        return true;
    }

    Index upsilon(unsigned n, unsigned k) {
        require_nk(n, k);
        if (auto it = upsilon_.find({n, k}); it != upsilon_.end()) return it->second;
        if (upsilon_predicate(n, k, 1)) return upsilon_[{n, k}] = 1;
        Index lo = 1;
        Index hi = 2;
        while (!upsilon_predicate(n, k, hi)) {
            lo = hi;
            if (hi > options_.limits.scan_bound / 2) {
                throw ScanBoundError("upsilon_" + std::to_string(n) + "," + std::to_string(k) +
                                     " scan passed the bound " + std::to_string(options_.limits.scan_bound));
            }
            hi *= 2;
        }
        while (hi - lo > 1) {
            const Index mid = lo + (hi - lo) / 2;
            (upsilon_predicate(n, k, mid) ? hi : lo) = mid;
        }
        return upsilon_[{n, k}] = hi;
    }

    /// max{j : L_j <= m}.
    unsigned i_of(Index m) {
        while (entries_.empty() || entries_.back().value <= m) extend();
        unsigned j = 0;
        while (j < entries_.size() && entries_[j].value <= m) ++j;
        return j;
    }

    bool in_s(Index m) {
        const unsigned i = i_of(m);
        return i >= 1 && m <= L(i) + i - 1;
    }

    /// |S ∩ [1, n]|.
    Index s_count(Index n) {
        i_of(n);
        Index count = 0;
        for (unsigned i = 1; i <= entries_.size() && entries_[i - 1].value <= n; ++i) {
            count += std::min<Index>(i, n - entries_[i - 1].value + 1);
        }
        return count;
    }

private:
    struct Run {
        Index first;
        Index last;
        BigInt product;
    };
    struct Runs {
        Index scanned = 0;
        std::vector<Run> runs;   // admissible positions only
    };

    static void require_n(unsigned n) {
        if (n == 0) throw ArgumentError("schedule indices start at n = 1");
    }

    static void require_nk(unsigned n, unsigned k) {
        require_n(n);
        if (k == 0 || k > n) {
            throw ArgumentError("upsilon_{n,k} needs 1 <= k <= n, got n = " + std::to_string(n) +
                                ", k = " + std::to_string(k));
        }
    }

    void extend() {
        const unsigned n = static_cast<unsigned>(entries_.size()) + 1;
        const Index prev = n == 1 ? 0 : entries_.back().value;
        LadderEntry e;
        e.modulus = checked_modulus(n);
        e.quadratic = prev + Index{n} * n;
        e.nu = prev + nu(n);
        for (unsigned k = 1; k <= n; ++k) e.upsilon = std::max(e.upsilon, upsilon(n, k));
        e.value = std::max({e.modulus, e.quadratic, e.nu, e.upsilon});
        entries_.push_back(e);
    }

    Index checked_modulus(unsigned n) {
        const Index t = mod_div_(n);
        if (t == 0) throw ArgumentError("mod-div returned position 0");
        for (Index j = t; j < t + 64; ++j) {
            if (!log_exceeds(q_.at(j), n, options_.log_base)) {
                throw ArgumentError("mod-div(" + std::to_string(n) + ") = " + std::to_string(t) +
                                    " is inconsistent with " + q_.describe() + ": log q_" +
                                    std::to_string(j) + " = log " + std::to_string(q_.at(j)) +
                                    " does not exceed " + std::to_string(n));
            }
        }
        return t;
    }

    const std::vector<Rational>& expected_for(unsigned n, unsigned k) {
        auto& slot = expected_[{n, k}];
        if (slot.empty()) {
            for (const auto& b : upsilon_blocks(n, k)) slot.push_back(expected_count(q_, b, n));
        }
        return slot;
    }

    std::set<DigitBlock> exhaustive_blocks(unsigned n, unsigned k) const {
        std::set<DigitBlock> found;
        for (Index i = 1; i <= n; ++i) {
            std::vector<Base> w(k);
            for (unsigned j = 0; j < k; ++j) w[j] = q_.at(i + j);
            const auto total = block_count(w);
            if (!total || *total + found.size() > options_.enumeration_cap) {
                throw CapacityError("upsilon_" + std::to_string(n) + "," + std::to_string(k) +
                                    " would enumerate more than " +
                                    std::to_string(options_.enumeration_cap) + " blocks");
            }
            for (std::uint64_t o = 1; o <= *total; ++o) found.insert(block_from_index(w, o));
        }
        return found;
    }

    // For monotone Q and P, Q_n(B) depends only on the first Q-admissible
    // position a and D_t(B) only on the first P-admissible position. Any B
    // first admissible at a satisfies B <= C^a, so C^a has a Q_n at least as
    // large and a D_t at most as large.
    std::set<DigitBlock> dominating_blocks(unsigned n, unsigned k) const {
        if (!q_.monotone() || !p_.monotone()) {
            throw ArgumentError("dominating upsilon blocks need monotone Q and P");
        }
        std::optional<Digit> cap;
        if (const auto t = p_.tail()) cap = p_.at(t->preperiod + 1) - 1;
        std::set<DigitBlock> found;
        for (Index a = 1; a <= n; ++a) {
            DigitBlock b(k);
            for (unsigned j = 0; j < k; ++j) {
                b[j] = q_.at(a + j) - 1;
                if (cap) b[j] = std::min(b[j], *cap);
            }
            found.insert(std::move(b));
        }
        return found;
    }

    void extend_runs(Runs& runs, const DigitBlock& block, Index upper) const {
        for (Index s = runs.scanned + 1; s <= upper; ++s) {
            BigInt product = 1;
            bool ok = true;
            for (std::size_t j = 0; j < block.size() && ok; ++j) {
                const Base b = p_.at(s + j);
                ok = block[j] < b;
                product *= b;
            }
            if (!ok) continue;
            if (!runs.runs.empty() && runs.runs.back().last + 1 == s && runs.runs.back().product == product) {
                runs.runs.back().last = s;
            } else {
                runs.runs.push_back({s, s, std::move(product)});
            }
        }
        runs.scanned = std::max(runs.scanned, upper);
    }

    BasicSequence q_;
    BasicSequence p_;
    ModulusOfDivergence mod_div_;
    ScheduleOptions options_;
    std::vector<LadderEntry> entries_;
    std::map<unsigned, Index> nu_;
    std::map<std::pair<unsigned, unsigned>, Index> upsilon_;
    std::map<std::pair<unsigned, unsigned>, std::vector<DigitBlock>> blocks_;
    std::map<std::pair<unsigned, unsigned>, std::vector<Rational>> expected_;
    std::map<DigitBlock, Runs> runs_;
};

namespace detail {

class RnqDnqSource final : public DigitSource {
public:
    RnqDnqSource(std::shared_ptr<Schedule> schedule, DigitSequence donor, UDSource ud,
                 std::shared_ptr<ClampLog> clamps)
        : schedule_(std::move(schedule)), donor_(std::move(donor)), ud_(ud), clamps_(std::move(clamps)) {}

    Digit next() override {
        ++m_;
        const Base q = schedule_->q().at(m_);
        const unsigned i = schedule_->i_of(m_);
        Digit v = 0;
        if (i >= 1 && m_ <= schedule_->L(i) + i - 1) {
            v = donor_.at(m_ - schedule_->L(i) + 1);
        } else {
            const Fraction x = ud_(m_);
            const auto scaled = static_cast<unsigned __int128>(x.num) * q / x.den;
            // ceil(log 0) is taken as 0 before L_1.
            const Digit floor_term = static_cast<Digit>(scaled);
            v = std::max<Digit>(floor_term, i == 0 ? 0 : ceil_log(i, schedule_->options().log_base));
        }
        if (v > q - 1) {
            clamps_->record(m_);
            v = q - 1;
        }
        return v;
    }

private:
    std::shared_ptr<Schedule> schedule_;
    DigitSequence donor_;
    UDSource ud_;
    std::shared_ptr<ClampLog> clamps_;
    Index m_ = 0;
};

} // namespace detail

struct RnqDnqWitness {
    std::shared_ptr<Schedule> schedule;
    DigitSequence donor;   // F: x_P over p_i = floor(log i) + 2
    DigitSequence digits;
    std::shared_ptr<ClampLog> clamps;
};

/// Ratio normal and distribution normal but not normal.
inline RnqDnqWitness build_rnq_dnq_not_nq(const BasicSequence& q, ModulusOfDivergence mod_div,
                                          UdKind ud = UdKind::van_der_corput, ScheduleOptions options = {}) {
    require_infinite_in_limit(q, "the RNQ∩DNQ\\NQ construction");
    auto p = BasicSequence::preset(PresetName::log_plus_two, options.log_base);
    auto schedule = std::make_shared<Schedule>(q, p, std::move(mod_div), options);
    auto donor = build_xq(p, options.limits);
    auto clamps = std::make_shared<ClampLog>();
    DigitSequence digits(q, std::make_unique<detail::RnqDnqSource>(schedule, donor, UDSource(ud), clamps),
                         "rnq-dnq-not-nq");
    return {std::move(schedule), std::move(donor), std::move(digits), std::move(clamps)};
}

} // namespace cantor
