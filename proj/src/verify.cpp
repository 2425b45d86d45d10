#include "klr/verify.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <functional>
#include <sstream>
#include <thread>
#include <utility>

namespace klr {

namespace {

constexpr std::size_t kMismatchCap = 100;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Accum {
    long long checked = 0;
    std::map<std::string, long long> skipped;
    long long mismatch_count = 0;
    std::vector<Mismatch> mismatches;

    void skip(const std::string& reason, long long count = 1) { skipped[reason] += count; }

    void add_mismatch(Mismatch m) {
        ++mismatch_count;
        if (mismatches.size() < kMismatchCap) mismatches.push_back(std::move(m));
    }

    void merge(Accum&& other) {
        checked += other.checked;
        for (auto& [reason, count] : other.skipped) skipped[reason] += count;
        mismatch_count += other.mismatch_count;
        for (auto& m : other.mismatches) {
            if (mismatches.size() < kMismatchCap) mismatches.push_back(std::move(m));
        }
    }

    long long skipped_total() const {
        long long total = 0;
        for (const auto& [reason, count] : skipped) total += count;
        return total;
    }
};

// Processes items [0, n_items) with `jobs` workers over contiguous chunks.
// Each worker gets its own state from `make_state`; chunk results merge in
// chunk order, so the outcome is identical for every jobs value.
template <typename MakeState, typename CheckItem>
Accum run_items(std::size_t n_items, int jobs, MakeState make_state, CheckItem check) {
    Accum total;
    if (n_items == 0) return total;
    jobs = std::max(1, std::min({jobs, static_cast<int>(n_items), 16}));
    if (jobs == 1) {
        auto state = make_state();
        for (std::size_t idx = 0; idx < n_items; ++idx) check(state, idx, total);
        return total;
    }
    std::vector<Accum> parts(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    const std::size_t chunk = (n_items + static_cast<std::size_t>(jobs) - 1) /
                              static_cast<std::size_t>(jobs);
    for (int w = 0; w < jobs; ++w) {
        const std::size_t begin = static_cast<std::size_t>(w) * chunk;
        const std::size_t end = std::min(n_items, begin + chunk);
        if (begin >= end) break;
        workers.emplace_back([&, w, begin, end] {
            auto state = make_state();
            for (std::size_t idx = begin; idx < end; ++idx) check(state, idx, parts[static_cast<std::size_t>(w)]);
        });
    }
    for (auto& t : workers) t.join();
    for (auto& part : parts) total.merge(std::move(part));
    return total;
}

using PairIdx = std::pair<int, int>;  // (index of u, index of v)

// Comparable ordered pairs (u <= v), grouped by v for memo locality.
std::vector<PairIdx> comparable_pairs(const std::vector<Permutation>& quotient) {
    std::vector<PairIdx> out;
    for (std::size_t vi = 0; vi < quotient.size(); ++vi) {
        for (std::size_t ui = 0; ui < quotient.size(); ++ui) {
            if (bruhat_leq(quotient[ui], quotient[vi])) {
                out.emplace_back(static_cast<int>(ui), static_cast<int>(vi));
            }
        }
    }
    return out;
}

std::string excluded_flag(const ParabolicInterval& interval) {
    return "--excluded " + interval.to_string();
}

std::string subset_flag(const GeneratorSubset& J) {
    if (J.is_empty()) return "--J none";
    std::string out = "--J ";
    const auto& idx = J.indices();
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
        if (pos > 0) out += ",";
        out += std::to_string(idx[pos]);
    }
    return out;
}

std::string rerun_compute(int n, const Permutation& u, const Permutation& v,
                          const std::string& scope_flag, const char* x) {
    std::ostringstream out;
    out << "compute --n " << n << " --u " << u.to_string() << " --v " << v.to_string() << " "
        << scope_flag << " --x " << x << " --method both";
    return out.str();
}

// One interval's closed-vs-recursion run, merged into `accum`.
struct FamilyCase {
    ParabolicInterval interval;
    std::function<IntPolynomial(const Permutation&, const Permutation&)> closed;
    std::function<bool(const Permutation&)> v_condition;
};

void run_family_case(const FamilyCase& fc, int jobs, Accum& accum) {
    const int n = fc.interval.n;
    const std::vector<Permutation> quotient = enumerate_quotient(n, fc.interval);
    std::vector<char> v_ok(quotient.size(), 1);
    for (std::size_t vi = 0; vi < quotient.size(); ++vi) {
        v_ok[vi] = fc.v_condition(quotient[vi]) ? 1 : 0;
    }

    std::vector<PairIdx> pairs;
    for (std::size_t vi = 0; vi < quotient.size(); ++vi) {
        for (std::size_t ui = 0; ui < quotient.size(); ++ui) {
            if (!bruhat_leq(quotient[ui], quotient[vi])) continue;
            if (!v_ok[vi]) {
                accum.skip("v-condition");
                continue;
            }
            pairs.emplace_back(static_cast<int>(ui), static_cast<int>(vi));
        }
    }

    const GeneratorSubset J = fc.interval.to_subset();
    Accum sub = run_items(
        pairs.size(), jobs,
        [&] { return RContext(n, J, XMode::Q); },
        [&](RContext& ctx, std::size_t idx, Accum& acc) {
            const auto [ui, vi] = pairs[idx];
            const Permutation& u = quotient[static_cast<std::size_t>(ui)];
            const Permutation& v = quotient[static_cast<std::size_t>(vi)];
            const IntPolynomial actual = ctx.r_poly(u, v);
            ++acc.checked;
            Mismatch m;
            m.u = u.to_string();
            m.v = v.to_string();
            m.scope = excluded_flag(fc.interval);
            m.x = "q";
            m.actual = actual;
            m.rerun = rerun_compute(n, u, v, excluded_flag(fc.interval), "q");
            try {
                IntPolynomial expected = fc.closed(u, v);
                if (expected == actual) return;
                m.expected = std::move(expected);
                m.note = "closed formula disagrees with recursion";
            } catch (const Error& err) {
                m.note = std::string("closed formula raised: ") + err.what();
            }
            acc.add_mismatch(std::move(m));
        });
    accum.merge(std::move(sub));
}

FamilyCase make_family_case(int n, Family family, int k, int i) {
    switch (family) {
        case Family::Single:
            return FamilyCase{ParabolicInterval(n, i, i),
                              [i](const Permutation& u, const Permutation& v) {
                                  return brenti_single(u, v, i);
                              },
                              [](const Permutation&) { return true; }};
        case Family::Double:
            return FamilyCase{ParabolicInterval(n, i - 1, i),
                              [i](const Permutation& u, const Permutation& v) {
                                  return brenti_double(u, v, i);
                              },
                              [](const Permutation&) { return true; }};
        case Family::Triple: {
            ParabolicInterval interval(n, i - 2, i);
            return FamilyCase{interval,
                              [i](const Permutation& u, const Permutation& v) {
                                  return triple_formula(u, v, i);
                              },
                              [interval](const Permutation& v) {
                                  return increasing_condition_holds(v, interval);
                              }};
        }
        case Family::Conjecture: {
            ParabolicInterval interval(n, k, i);
            return FamilyCase{interval,
                              [interval](const Permutation& u, const Permutation& v) {
                                  return conjecture_formula(PairContext::make(u, v, interval));
                              },
                              [interval](const Permutation& v) {
                                  return increasing_condition_holds(v, interval);
                              }};
        }
    }
    throw DomainError("unknown family");
}

// Admissible i range for a family at degree n; empty when none.
std::pair<int, int> family_i_range(int n, Family family) {
    switch (family) {
        case Family::Single: return {1, n - 1};
        case Family::Double: return {2, n - 1};
        case Family::Triple: return {3, n - 1};
        case Family::Conjecture: return {1, n - 1};
    }
    throw DomainError("unknown family");
}

VerificationReport finish_report(VerificationReport report, Accum&& accum,
                                 Clock::time_point start) {
    report.pairs_checked = accum.checked;
    report.skipped = accum.skipped_total();
    report.skipped_reasons = std::move(accum.skipped);
    report.mismatch_count = accum.mismatch_count;
    report.mismatches = std::move(accum.mismatches);
    report.pass = report.mismatch_count == 0;
    report.elapsed_seconds = seconds_since(start);
    return report;
}

}  // namespace

const char* to_string(Family family) {
    switch (family) {
        case Family::Single: return "single";
        case Family::Double: return "double";
        case Family::Triple: return "triple";
        case Family::Conjecture: return "conjecture";
    }
    return "?";
}

VerificationReport verify_family(int n, Family family, std::optional<int> i,
                                 std::optional<int> k, int jobs) {
    if (n < 2) throw DomainError("verification requires n >= 2");
    const auto start = Clock::now();
    VerificationReport report;
    report.suite = std::string("family-") + to_string(family);
    report.n = n;

    Accum accum;
    if (family == Family::Conjecture) {
        if (i.has_value() != k.has_value()) {
            throw DomainError("the conjecture family takes both k and i, or neither");
        }
        if (i) {
            report.scope = ParabolicInterval(n, *k, *i).to_string();
            run_family_case(make_family_case(n, family, *k, *i), jobs, accum);
        } else {
            report.scope = "all";
            for (int ii = 1; ii <= n - 1; ++ii) {
                for (int kk = 1; kk <= ii; ++kk) {
                    run_family_case(make_family_case(n, family, kk, ii), jobs, accum);
                }
            }
        }
    } else {
        const auto [lo, hi] = family_i_range(n, family);
        if (i) {
            if (*i < lo || *i > hi) {
                throw DomainError("i = " + std::to_string(*i) + " out of admissible range " +
                                  std::to_string(lo) + ".." + std::to_string(hi));
            }
            const FamilyCase fc = make_family_case(n, family, 0, *i);
            report.scope = fc.interval.to_string();
            run_family_case(fc, jobs, accum);
        } else {
            report.scope = "all";
            for (int ii = lo; ii <= hi; ++ii) {
                run_family_case(make_family_case(n, family, 0, ii), jobs, accum);
            }
        }
    }
    return finish_report(std::move(report), std::move(accum), start);
}

VerificationReport verify_duality(int n, const GeneratorSubset& J, int jobs) {
    if (n < 2) throw DomainError("verification requires n >= 2");
    const auto start = Clock::now();
    VerificationReport report;
    report.suite = "duality";
    report.n = n;
    report.scope = J.to_string();

    const std::vector<Permutation> quotient = enumerate_quotient(n, J);
    const std::vector<PairIdx> pairs = comparable_pairs(quotient);

    struct State {
        RContext ctx_q;
        RContext ctx_m;
    };
    Accum accum = run_items(
        pairs.size(), jobs,
        [&] { return State{RContext(n, J, XMode::Q), RContext(n, J, XMode::MinusOne)}; },
        [&](State& st, std::size_t idx, Accum& acc) {
            const auto [ui, vi] = pairs[idx];
            const Permutation& u = quotient[static_cast<std::size_t>(ui)];
            const Permutation& v = quotient[static_cast<std::size_t>(vi)];
            const IntPolynomial r_q = st.ctx_q.r_poly(u, v);
            const IntPolynomial r_m = st.ctx_m.r_poly(u, v);
            const int L = v.length() - u.length();
            const IntPolynomial rhs = (L % 2 != 0) ? -r_m : r_m;
            ++acc.checked;
            Mismatch m;
            m.u = u.to_string();
            m.v = v.to_string();
            m.scope = subset_flag(J);
            m.x = "q vs -1";
            m.expected = rhs;
            m.rerun = rerun_compute(n, u, v, subset_flag(J), "-1");
            try {
                IntPolynomial lhs = r_q.reversed(L);
                if (lhs == rhs) return;
                m.actual = std::move(lhs);
                m.note = "reversal of the x=q polynomial disagrees with the signed x=-1 value";
            } catch (const DegreeBoundError& err) {
                m.actual = r_q;
                m.note = std::string("degree bound violated: ") + err.what();
            }
            acc.add_mismatch(std::move(m));
        });
    return finish_report(std::move(report), std::move(accum), start);
}

VerificationReport verify_descent_independence(int n, const GeneratorSubset& J, int jobs) {
    if (n < 2) throw DomainError("verification requires n >= 2");
    const auto start = Clock::now();
    VerificationReport report;
    report.suite = "descent-independence";
    report.n = n;
    report.scope = J.to_string();

    const std::vector<Permutation> quotient = enumerate_quotient(n, J);
    const std::vector<PairIdx> pairs = comparable_pairs(quotient);

    struct State {
        RContext small_q;
        RContext large_q;
        RContext small_m;
        RContext large_m;
    };
    Accum accum = run_items(
        pairs.size(), jobs,
        [&] {
            return State{RContext(n, J, XMode::Q, DescentPolicy::smallest()),
                         RContext(n, J, XMode::Q, DescentPolicy::largest()),
                         RContext(n, J, XMode::MinusOne, DescentPolicy::smallest()),
                         RContext(n, J, XMode::MinusOne, DescentPolicy::largest())};
        },
        [&](State& st, std::size_t idx, Accum& acc) {
            const auto [ui, vi] = pairs[idx];
            const Permutation& u = quotient[static_cast<std::size_t>(ui)];
            const Permutation& v = quotient[static_cast<std::size_t>(vi)];
            ++acc.checked;
            const std::pair<RContext*, RContext*> sides[2] = {{&st.small_q, &st.large_q},
                                                              {&st.small_m, &st.large_m}};
            const char* xs[2] = {"q", "-1"};
            for (int which = 0; which < 2; ++which) {
                IntPolynomial lhs = sides[which].first->r_poly(u, v);
                IntPolynomial rhs = sides[which].second->r_poly(u, v);
                if (lhs == rhs) continue;
                Mismatch m;
                m.u = u.to_string();
                m.v = v.to_string();
                m.scope = subset_flag(J);
                m.x = xs[which];
                m.expected = std::move(lhs);
                m.actual = std::move(rhs);
                m.note = "smallest- and largest-descent recursions disagree";
                m.rerun = rerun_compute(n, u, v, subset_flag(J), xs[which]);
                acc.add_mismatch(std::move(m));
            }
        });
    return finish_report(std::move(report), std::move(accum), start);
}

VerificationReport verify_branch_overlap(int n, std::optional<int> i, int jobs) {
    if (n < 3) throw DomainError("the two-generator family requires n >= 3");
    const auto start = Clock::now();
    VerificationReport report;
    report.suite = "branch-overlap";
    report.n = n;

    std::vector<int> is;
    if (i) {
        if (*i < 2 || *i > n - 1) throw DomainError("i out of admissible range 2..n-1");
        is.push_back(*i);
        report.scope = ParabolicInterval(n, *i - 1, *i).to_string();
    } else {
        for (int ii = 2; ii <= n - 1; ++ii) is.push_back(ii);
        report.scope = "all";
    }

    Accum accum;
    for (int ii : is) {
        const ParabolicInterval interval(n, ii - 1, ii);
        const std::vector<Permutation> quotient = enumerate_quotient(n, interval);
        std::vector<PairIdx> pairs;
        for (const auto& [ui, vi] : comparable_pairs(quotient)) {
            const Permutation& u = quotient[static_cast<std::size_t>(ui)];
            const Permutation& v = quotient[static_cast<std::size_t>(vi)];
            if (u.inverse().at(ii) == v.inverse().at(ii)) {
                pairs.emplace_back(ui, vi);
            } else {
                accum.skip("no-overlap");
            }
        }
        Accum sub = run_items(
            pairs.size(), jobs, [] { return 0; },
            [&](int&, std::size_t idx, Accum& acc) {
                const auto [ui, vi] = pairs[idx];
                const Permutation& u = quotient[static_cast<std::size_t>(ui)];
                const Permutation& v = quotient[static_cast<std::size_t>(vi)];
                const IntPolynomial plain = brenti_double_branch(u, v, ii, DoubleBranch::Plain);
                const IntPolynomial tilde = brenti_double_branch(u, v, ii, DoubleBranch::Tilde);
                ++acc.checked;
                if (plain == tilde) return;
                Mismatch m;
                m.u = u.to_string();
                m.v = v.to_string();
                m.scope = excluded_flag(interval);
                m.x = "q";
                m.expected = plain;
                m.actual = tilde;
                m.note = "plain and tilde branches disagree at u^-1(i) = v^-1(i)";
                m.rerun = rerun_compute(n, u, v, excluded_flag(interval), "q");
                acc.add_mismatch(std::move(m));
            });
        accum.merge(std::move(sub));
    }
    return finish_report(std::move(report), std::move(accum), start);
}

namespace {

// splitmix64: tiny, seedable, splittable; plenty for reproducible sampling.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound) by rejecting the wraparound tail.
    std::uint64_t bounded(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }
};

}  // namespace

VerificationReport conjecture_scan(int n, std::optional<SampleSpec> sample, int jobs) {
    if (n < 2) throw DomainError("verification requires n >= 2");
    if (!sample) {
        VerificationReport report = verify_family(n, Family::Conjecture, std::nullopt,
                                                  std::nullopt, jobs);
        report.suite = "conjecture-scan";
        return report;
    }

    const auto start = Clock::now();
    VerificationReport report;
    report.suite = "conjecture-scan";
    report.n = n;
    report.scope = "all";
    report.sample_seed = sample->seed;
    report.sample_count = sample->count;

    struct IntervalData {
        ParabolicInterval interval;
        std::vector<Permutation> quotient;
        std::vector<int> valid_v;  // quotient indices satisfying the v-condition
        std::uint64_t weight = 0;  // |valid_v| * |quotient|
        std::vector<PairIdx> items;  // accepted draws, in draw order
    };
    std::vector<IntervalData> data;
    std::uint64_t total_weight = 0;
    for (int i = 1; i <= n - 1; ++i) {
        for (int k = 1; k <= i; ++k) {
            IntervalData d{ParabolicInterval(n, k, i), {}, {}, 0, {}};
            d.quotient = enumerate_quotient(n, d.interval);
            for (std::size_t vi = 0; vi < d.quotient.size(); ++vi) {
                if (increasing_condition_holds(d.quotient[vi], d.interval)) {
                    d.valid_v.push_back(static_cast<int>(vi));
                }
            }
            d.weight = static_cast<std::uint64_t>(d.valid_v.size()) * d.quotient.size();
            total_weight += d.weight;
            data.push_back(std::move(d));
        }
    }

    // Draw phase: uniform over the (interval, valid v, u) product space,
    // rejecting incomparable pairs, until `count` pairs are accepted.
    Accum accum;
    SplitMix64 rng(sample->seed);
    std::uint64_t accepted = 0;
    while (accepted < sample->count) {
        std::uint64_t r = rng.bounded(total_weight);
        std::size_t which = 0;
        while (r >= data[which].weight) {
            r -= data[which].weight;
            ++which;
        }
        IntervalData& d = data[which];
        const int vi = d.valid_v[static_cast<std::size_t>(r / d.quotient.size())];
        const int ui = static_cast<int>(r % d.quotient.size());
        if (!bruhat_leq(d.quotient[static_cast<std::size_t>(ui)],
                        d.quotient[static_cast<std::size_t>(vi)])) {
            accum.skip("incomparable");
            continue;
        }
        d.items.emplace_back(ui, vi);
        ++accepted;
    }

    // Check phase, grouped by interval so each memo context dies with its
    // interval instead of all staying resident.
    for (IntervalData& d : data) {
        if (d.items.empty()) continue;
        const GeneratorSubset J = d.interval.to_subset();
        Accum sub = run_items(
            d.items.size(), jobs,
            [&] { return RContext(n, J, XMode::Q); },
            [&](RContext& ctx, std::size_t idx, Accum& acc) {
                const auto [ui, vi] = d.items[idx];
                const Permutation& u = d.quotient[static_cast<std::size_t>(ui)];
                const Permutation& v = d.quotient[static_cast<std::size_t>(vi)];
                const IntPolynomial actual = ctx.r_poly(u, v);
                ++acc.checked;
                Mismatch m;
                m.u = u.to_string();
                m.v = v.to_string();
                m.scope = excluded_flag(d.interval);
                m.x = "q";
                m.actual = actual;
                m.rerun = rerun_compute(n, u, v, excluded_flag(d.interval), "q");
                try {
                    IntPolynomial expected =
                        conjecture_formula(PairContext::make(u, v, d.interval));
                    if (expected == actual) return;
                    m.expected = std::move(expected);
                    m.note = "general formula disagrees with recursion";
                } catch (const Error& err) {
                    m.note = std::string("general formula raised: ") + err.what();
                }
                acc.add_mismatch(std::move(m));
            });
        accum.merge(std::move(sub));
        d.quotient.clear();
    }
    return finish_report(std::move(report), std::move(accum), start);
}

namespace {

nlohmann::json poly_json(const std::optional<IntPolynomial>& p) {
    if (!p) return nullptr;
    nlohmann::json j;
    try {
        j["coeffs"] = p->coeffs_int64();
    } catch (const Error&) {
        // out of 64-bit range; the text form still captures the value
    }
    j["text"] = p->to_string();
    return j;
}

}  // namespace

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["n"] = n;
    j["interval"] = scope;
    if (sample_seed) {
        j["sample"] = {{"seed", *sample_seed}, {"count", *sample_count}};
    } else {
        j["sample"] = nullptr;
    }
    j["pairs_checked"] = pairs_checked;
    j["skipped"] = skipped;
    j["skipped_reasons"] = skipped_reasons;
    j["mismatch_count"] = mismatch_count;
    nlohmann::json marr = nlohmann::json::array();
    for (const Mismatch& m : mismatches) {
        marr.push_back({{"u", m.u},
                        {"v", m.v},
                        {"scope", m.scope},
                        {"x", m.x},
                        {"expected", poly_json(m.expected)},
                        {"actual", poly_json(m.actual)},
                        {"note", m.note},
                        {"rerun", m.rerun}});
    }
    j["mismatches"] = marr;
    j["elapsed_seconds"] = elapsed_seconds;
    j["pass"] = pass;
    return j.dump(2);
}

std::string VerificationReport::summary_line() const {
    std::ostringstream out;
    out << (pass ? "[PASS] " : "[FAIL] ") << suite << " n=" << n << " scope=" << scope;
    if (sample_seed) out << " seed=" << *sample_seed << " count=" << *sample_count;
    out << " checked=" << pairs_checked << " skipped=" << skipped
        << " mismatches=" << mismatch_count << " (" << elapsed_seconds << "s)";
    return out.str();
}

}  // namespace klr
