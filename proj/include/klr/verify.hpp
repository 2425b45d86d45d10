#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klr/closed_form.hpp"
#include "klr/deodhar.hpp"
#include "klr/polynomial.hpp"
#include "klr/quotient.hpp"

namespace klr {

/// Which closed-formula family a verification run exercises.
enum class Family { Single, Double, Triple, Conjecture };

const char* to_string(Family family);

/// One disagreement found by a suite. Carries enough to rerun the pair
/// standalone through the CLI.
struct Mismatch {
    std::string u;
    std::string v;
    std::string scope;  // "--excluded k..i" or "--J ..." form
    std::string x;      // "q" or "-1"
    std::optional<IntPolynomial> expected;
    std::optional<IntPolynomial> actual;
    std::string note;   // error text or which identity side failed
    std::string rerun;  // ready-to-paste CLI invocation
};

/// Machine-readable outcome of a verification suite. Deterministic given
/// (n, parameters, seed) regardless of the worker count; elapsed_seconds is
/// the only field outside that guarantee.
struct VerificationReport {
    std::string suite;
    int n = 0;
    std::string scope;  // "k..i", "all", or a subset rendering "{2,4}"
    std::optional<std::uint64_t> sample_seed;
    std::optional<std::uint64_t> sample_count;
    long long pairs_checked = 0;
    long long skipped = 0;
    std::map<std::string, long long> skipped_reasons;
    long long mismatch_count = 0;
    std::vector<Mismatch> mismatches;  // truncated to the first 100
    double elapsed_seconds = 0.0;
    bool pass = true;

    std::string to_json() const;
    std::string summary_line() const;
};

/// Closed formula vs recursion (x = q) over every comparable ordered pair of
/// the family's quotient; pairs whose v fails the family condition count as
/// skipped. With i absent, all admissible i run and aggregate (for the
/// conjecture family, all intervals k..i; an explicit conjecture interval
/// takes both k and i).
VerificationReport verify_family(int n, Family family, std::optional<int> i = std::nullopt,
                                 std::optional<int> k = std::nullopt, int jobs = 1);

/// Reversal identity between the x = q and x = -1 tables on every comparable
/// quotient pair; a degree-bound violation in the reversal is recorded as a
/// finding, not raised.
VerificationReport verify_duality(int n, const GeneratorSubset& J, int jobs = 1);

/// Smallest- vs largest-descent recursion policies on every comparable
/// quotient pair, for both x values.
VerificationReport verify_descent_independence(int n, const GeneratorSubset& J, int jobs = 1);

/// Both displayed branches of the two-generator formula on every comparable
/// pair with u^-1(i) = v^-1(i); other pairs are skipped. With i absent, all
/// i in 2..n-1 run and aggregate.
VerificationReport verify_branch_overlap(int n, std::optional<int> i = std::nullopt,
                                         int jobs = 1);

/// Seed and draw count for sampled scans. Draws are uniform over the valid
/// (interval, u, v) triples via rejection from a splitmix64 stream, so a
/// report is reproducible from the seed alone.
struct SampleSpec {
    std::uint64_t seed = 0;
    std::uint64_t count = 0;
};

/// The general-formula scan: exhaustive over all intervals (k, i) when no
/// sample spec is given, otherwise the seeded sampled mode (count accepted
/// pairs; rejected draws are recorded as skipped).
VerificationReport conjecture_scan(int n, std::optional<SampleSpec> sample = std::nullopt,
                                   int jobs = 1);

}  // namespace klr
