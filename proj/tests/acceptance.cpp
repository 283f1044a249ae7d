// Copyright 2026 The cantor-normal Authors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "cantor/cantor.hpp"

using namespace cantor;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// --- independent oracles ---------------------------------------------------

// First n with (q(n)^2 + 1)^r <= n, scanning n one at a time.
Index brute_n_r(const BasicSequence& q, unsigned r) {
    for (Index n = 1;; ++n) {
        unsigned __int128 v = 1;
        const unsigned __int128 m = q.running_max(n);
        bool over = false;
        for (unsigned e = 0; e < r && !over; ++e) {
            v *= m * m + 1;
            over = v > n;
        }
        if (!over) return n;
    }
}

std::size_t count_below(const std::vector<double>& s, double v) {
    return static_cast<std::size_t>(std::lower_bound(s.begin(), s.end(), v) - s.begin());
}

std::size_t count_at_most(const std::vector<double>& s, double v) {
    return static_cast<std::size_t>(std::upper_bound(s.begin(), s.end(), v) - s.begin());
}

// sup over [0,b) with b ranging over the sample points and 1, both sides.
double brute_star(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    auto candidates = xs;
    candidates.push_back(1.0);
    for (double b : candidates) {
        d = std::max(d, b - static_cast<double>(count_below(xs, b)) / n);
        d = std::max(d, static_cast<double>(count_at_most(xs, b)) / n - b);
    }
    return d;
}

std::vector<Digit> take(const DigitSequence& x, Index n) {
    const auto s = x.prefix(n);
    return {s.begin(), s.end()};
}

std::string long_division(BigInt num, const BigInt& den, std::size_t count) {
    std::string out;
    for (std::size_t i = 0; i < count; ++i) {
        num *= 10;
        const BigInt d = num / den;
        out.push_back(static_cast<char>('0' + d.convert_to<unsigned>()));
        num -= d * den;
    }
    return out;
}

// --- criteria ----------------------------------------------------------------

Outcome oracle_equivalence() {
    const auto t0 = Clock::now();
    const std::vector<BasicSequence> seqs = {BasicSequence::constant(2), BasicSequence::constant(10),
                                             BasicSequence::periodic({2, 3}),
                                             BasicSequence::preset(PresetName::iterated_log)};
    Index checked = 0;
    for (const auto& q : seqs) {
        const PartitionIndex index(q);
        const auto x = build_xq(q);
        const auto stream = take(x, 20'000);
        for (Index n = 1; n <= 20'000; n += (n < 2000 ? 1 : 37)) {
            const Digit d = digit_at(index, n);
            if (d != stream[n - 1]) {
                return {false, q.describe() + " differs at n = " + std::to_string(n)};
            }
            ++checked;
        }
    }
    const double s = seconds_since(t0);
    return {s < 60.0, std::to_string(checked) + " positions agree across 4 sequences in " + num(s) + " s"};
}

Outcome construction_ladder() {
    const auto q = BasicSequence::constant(2);
    const PartitionIndex index(q);
    Index pow5 = 1;
    for (unsigned r = 1; r <= 8; ++r) {
        pow5 *= 5;
        const Index brute = brute_n_r(q, r);
        if (index.ladder_n(r) != pow5 || brute != pow5) {
            return {false, "n_" + std::to_string(r) + ": index " + std::to_string(index.ladder_n(r)) + ", brute " +
                               std::to_string(brute) + ", expected " + std::to_string(pow5)};
        }
    }
    // N_1 = 0 and N_{r+1} = largest m < n_{r+1} with r | (m - N_r), by walking down.
    const std::vector<Index> expected = {0, 24, 124, 622};
    Index prev = 0;
    for (unsigned r = 1; r <= 4; ++r) {
        Index brute = 0;
        if (r > 1) {
            for (Index m = brute_n_r(q, r) - 1;; --m) {
                if ((m - prev) % (r - 1) == 0) {
                    brute = m;
                    break;
                }
            }
        }
        if (index.ladder_N(r) != expected[r - 1] || brute != expected[r - 1]) {
            return {false, "N_" + std::to_string(r) + " = " + std::to_string(index.ladder_N(r)) + ", brute " +
                               std::to_string(brute)};
        }
        prev = brute;
    }
    return {true, "n_r = 5^r for r <= 8; (N_1..N_4) = (0, 24, 124, 622); brute-force scan agrees"};
}

Outcome cycling_completeness() {
    const auto q = BasicSequence::constant(2);
    const PartitionIndex index(q);
    const auto digits = take(build_xq(q), 100'000);
    std::size_t runs = 0;
    for (unsigned r = 2; r <= 3; ++r) {
        const Index lo = index.ladder_N(r);
        const Index hi = std::min<Index>(index.ladder_N(r + 1), 100'000);
        const std::size_t total = std::size_t{1} << r;
        std::set<DigitBlock> seen;
        for (Index start = lo + 1; start + r - 1 <= hi; start += r) {
            seen.insert(DigitBlock(digits.begin() + static_cast<std::ptrdiff_t>(start - 1),
                                   digits.begin() + static_cast<std::ptrdiff_t>(start - 1 + r)));
            const Index occurrence = (start - lo - 1) / r + 1;
            if (occurrence % total == 0) {
                if (seen.size() != total) {
                    return {false, "r = " + std::to_string(r) + " run ending at window " + std::to_string(occurrence) +
                                       " has " + std::to_string(seen.size()) + " distinct blocks"};
                }
                seen.clear();
                ++runs;
            }
        }
    }
    return {runs > 0, std::to_string(runs) + " complete runs (r = 2, 3) each emit all 2^r blocks once"};
}

Outcome normality_trend() {
    const auto q = BasicSequence::constant(2);
    const auto x = build_xq(q);
    const std::vector<DigitBlock> blocks = {{0}, {1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}};
    const std::vector<Index> cp = {10'000, 100'000, 1'000'000};
    const auto report = normality_report(x, blocks, cp);
    bool pass = true;
    std::ostringstream d;
    double length_one = 0.0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        d << format_block(blocks[b]) << ":";
        double prev = 2.0;
        for (std::size_t c = 0; c < cp.size(); ++c) {
            const double dev = std::abs(*report.rows[b * cp.size() + c].ratio - 1.0);
            d << " " << num(dev);
            if (dev > prev) pass = false;
            prev = dev;
        }
        if (blocks[b].size() == 1) length_one = std::max(length_one, prev);
        d << "; ";
    }
    pass = pass && length_one <= 0.02;
    d << "length-1 deviation at 1e6 = " << num(length_one);
    return {pass, "|N/Q - 1| at 1e4, 1e5, 1e6 -> " + d.str()};
}

Outcome distribution_trend() {
    const auto q = BasicSequence::constant(2);
    const PartitionIndex index(q);
    const auto x = build_xq(q);
    const std::vector<Index> cp = {1000, 10'000, 100'000};
    const auto rows = dn_report(&index, x, cp);
    bool pass = rows[0].star > rows[1].star && rows[1].star > rows[2].star && rows[2].star <= 0.05;
    std::ostringstream d;
    d << "D* (default depth) = " << num(rows[0].star) << ", " << num(rows[1].star) << ", " << num(rows[2].star)
      << "; max eps = " << to_fraction_string(rows[2].max_error);
    const auto fixed = dn_report(nullptr, x, cp, DepthPolicy::fixed_depth(32));
    d << "; info only, depth 32: " << num(fixed[0].star) << ", " << num(fixed[1].star) << ", "
      << num(fixed[2].star);
    return {pass, d.str()};
}

Outcome discrepancy_engine() {
    std::mt19937_64 rng(20'261'018);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        std::vector<double> xs(rng() % 200 + 1);
        for (auto& v : xs) v = t % 4 == 0 ? static_cast<double>(rng() % 32) / 32.0 : u(rng);
        const double star = star_discrepancy(xs);
        const double extreme = extreme_discrepancy(xs);
        worst = std::max(worst, std::abs(star - brute_star(xs)));
        if (!(star <= extreme + 1e-15 && extreme <= 2 * star + 1e-15)) {
            return {false, "D* <= D <= 2D* violated on sample " + std::to_string(t) + ": " + num(star) + " " + num(extreme) + " n=" + std::to_string(xs.size())};
        }
    }
    if (worst > 1e-12) return {false, "max |D* - brute| = " + num(worst)};
    double grid_gap = 0.0;
    for (std::size_t n : {1u, 10u, 100u, 1000u}) {
        std::vector<double> grid;
        for (std::size_t i = 1; i <= n; ++i) grid.push_back((static_cast<double>(i) - 0.5) / static_cast<double>(n));
        grid_gap = std::max(grid_gap, std::abs(star_discrepancy(grid) - 1.0 / (2.0 * static_cast<double>(n))));
        if (grid_gap > 1e-15) {
            return {false, "midpoint grid N = " + std::to_string(n) + " gives " + num(star_discrepancy(grid))};
        }
    }
    return {true, "100 samples match brute force (max diff " + num(worst) +
                      "); D* <= D <= 2D*; midpoint grids give 1/(2N) within " + num(grid_gap)};
}

Outcome psi_laws() {
    for (const auto& q : {BasicSequence::constant(2), BasicSequence::periodic({3, 5}),
                          BasicSequence::preset(PresetName::log)}) {
        const auto x = build_xq(q);
        const auto a = take(x, 5000);
        const auto b = take(psi(x, q), 5000);
        if (!std::equal(a.begin(), a.end(), b.begin())) return {false, "psi_{Q,Q} not identity on " + q.describe()};
    }
    const auto wide = build_xq(BasicSequence::periodic({7, 4, 9}));
    const auto narrow = psi(wide, BasicSequence::periodic({3, 5}));
    const auto wa = take(wide, 5000);
    const auto na = take(narrow, 5000);
    for (std::size_t i = 0; i < 5000; ++i) {
        if (na[i] > wa[i]) return {false, "psi increased a digit at n = " + std::to_string(i + 1)};
    }
    const std::vector<BasicSequence> chain = {BasicSequence::constant(3), BasicSequence::constant(4)};
    const auto x = build_xq(chain[0]);
    const auto y = psi_chain(chain, x);
    const auto xs = take(x, 10'001);
    const auto ys = take(y, 10'001);
    std::uint64_t worst = 0;
    std::vector<DigitBlock> blocks;
    for (Digit p = 0; p < 4; ++p) {
        blocks.push_back({p});
        for (Digit s = 0; s < 4; ++s) blocks.push_back({p, s});
    }
    for (const auto& b : blocks) {
        std::uint64_t cx = 0;
        std::uint64_t cy = 0;
        for (Index n = 1; n <= 10'000; ++n) {
            cx += block_matches(xs, b, n) ? 1 : 0;
            cy += block_matches(ys, b, n) ? 1 : 0;
            worst = std::max(worst, cx > cy ? cx - cy : cy - cx);
        }
    }
    constexpr std::uint64_t recorded = 0;
    return {worst <= recorded, "idempotent, monotone; count-stability max |dN| over n <= 1e4 = " +
                                   std::to_string(worst) + " (recorded constant " + std::to_string(recorded) + ")"};
}

Outcome nq_not_dnq_witness() {
    const auto w = build_nq_not_dnq(BasicSequence::preset(PresetName::log));
    std::vector<OrbitPoint> pts;
    for (Index n : {1000u, 10'000u, 100'000u}) pts.push_back(orbit_truncated(w.y, n, 32));
    bool pass = true;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        pass = pass && pts[i].value + pts[i].error_bound < pts[i - 1].value;
    }
    pass = pass && pts.back().value + pts.back().error_bound <= Rational(1, 4);
    std::ostringstream d;
    d << "T_{Q,n}(y) at 1e3, 1e4, 1e5 = " << num(to_double(pts[0].value)) << ", " << num(to_double(pts[1].value))
      << ", " << num(to_double(pts[2].value)) << " (depth 32, eps <= " << num(to_double(pts[0].error_bound)) << ")";
    return {pass, d.str()};
}

Outcome rnq_dnq_schedule() {
    const auto q = BasicSequence::preset(PresetName::linear);
    auto w = build_rnq_dnq_not_nq(q, scanned_modulus(q, LogBase::natural));
    const auto digits = take(w.digits, 10'000);
    auto& s = *w.schedule;
    std::ostringstream d;
    Index prev = 0;
    for (unsigned n = 1; n <= s.computed(); ++n) {
        const Index nu = s.nu(n);
        if (s.nu_predicate(n, nu - 1) || !s.nu_predicate(n, nu)) {
            return {false, "nu_" + std::to_string(n) + " minimality certificate failed"};
        }
        for (unsigned k = 1; k <= n; ++k) {
            const Index t = s.upsilon(n, k);
            if ((t > 1 && s.upsilon_predicate(n, k, t - 1)) || !s.upsilon_predicate(n, k, t)) {
                return {false, "upsilon_" + std::to_string(n) + "," + std::to_string(k) + " certificate failed"};
            }
        }
        const auto& e = s.entry(n);
        const Index ups = e.upsilon;
        if (e.value < e.modulus || e.value < prev + Index{n} * n || e.value < prev + nu || e.value < ups) {
            return {false, "L_" + std::to_string(n) + " violates a max-clause"};
        }
        prev = e.value;
        d << (n == 1 ? "L = " : ", ") << e.value;
    }
    double prev_density = 2.0;
    double prev_disc = 2.0;
    bool trends = true;
    d << "; |S|/N, D*:";
    for (Index n : {100u, 1000u, 10'000u}) {
        std::vector<double> v;
        for (Index m = 1; m <= n; ++m) v.push_back(static_cast<double>(digits[m - 1]) / static_cast<double>(q.at(m)));
        const double density = static_cast<double>(s.s_count(n)) / static_cast<double>(n);
        const double disc = star_discrepancy(v);
        trends = trends && density < prev_density && disc < prev_disc;
        prev_density = density;
        prev_disc = disc;
        d << " " << num(density) << "/" << num(disc);
    }
    bool bounded = true;
    for (Index m = 1; m <= 10'000; ++m) bounded = bounded && digits[m - 1] < q.at(m);
    d << "; clamp events " << w.clamps->count();
    return {trends && bounded && w.clamps->count() == 0, d.str()};
}

Outcome computability_demo() {
    const auto t0 = Clock::now();
    const auto x = build_xq(BasicSequence::constant(2));
    const auto e = to_base_b(x, 10, 50);
    const double s = seconds_since(t0);
    if (e.digits.size() != 50) return {false, "emitted " + std::to_string(e.digits.size()) + " digits"};
    const auto value = parse_base_b_fraction(e.digits, 10);
    const Rational ulp(BigInt(1), boost::multiprecision::pow(BigInt(10), 50));
    if (!(value <= e.interval.lower && e.interval.upper < value + ulp)) {
        return {false, "final interval is not inside the emitted digit cell"};
    }
    const Index longer = 4 * e.cantor_digits_used;
    const auto digits = take(x, longer);
    BigInt n = 0;
    BigInt den = 1;
    for (Index i = 0; i < longer; ++i) {
        n = n * 2 + digits[i];
        den *= 2;
    }
    const bool same = long_division(n, den, 50) == e.digits && long_division(n + 1, den, 50) == e.digits;
    return {same && s < 5.0, "0." + e.digits.substr(0, 12) + "... from " + std::to_string(e.cantor_digits_used) +
                                 " Cantor digits in " + num(s) + " s; " + std::to_string(longer) +
                                 "-digit prefix " + (same ? "reproduces" : "does not reproduce") + " all 50"};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"oracle equivalence", oracle_equivalence},
        {"construction ladder", construction_ladder},
        {"cycling completeness", cycling_completeness},
        {"Q-normality trend", normality_trend},
        {"distribution-normality trend", distribution_trend},
        {"discrepancy engine", discrepancy_engine},
        {"psi laws", psi_laws},
        {"NQ\\DNQ witness", nq_not_dnq_witness},
        {"RNQ∩DNQ\\NQ schedule", rnq_dnq_schedule},
        {"computability demo", computability_demo},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
