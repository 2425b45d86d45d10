#include <doctest.h>

#include <nlohmann/json.hpp>

#include "klr/verify.hpp"

using klr::Family;
using klr::GeneratorSubset;
using klr::SampleSpec;
using klr::VerificationReport;

TEST_CASE("single family on the three-element quotient") {
    const VerificationReport report = klr::verify_family(3, Family::Single, 1);
    CHECK(report.suite == "family-single");
    CHECK(report.scope == "1..1");
    CHECK(report.pairs_checked == 6);  // three reflexive + three strict pairs
    CHECK(report.skipped == 0);
    CHECK(report.mismatch_count == 0);
    CHECK(report.pass);
}

TEST_CASE("family runs aggregate over admissible i") {
    const VerificationReport report = klr::verify_family(4, Family::Triple);
    CHECK(report.scope == "all");  // i = 3 is the only admissible index
    CHECK(report.pass);
    CHECK(report.pairs_checked > 0);
    CHECK(report.skipped_reasons.count("v-condition") == 1);

    const VerificationReport single_i = klr::verify_family(4, Family::Triple, 3);
    CHECK(single_i.pairs_checked == report.pairs_checked);
    CHECK(single_i.skipped == report.skipped);

    CHECK_THROWS_AS(klr::verify_family(4, Family::Triple, 5), klr::DomainError);
    CHECK_THROWS_AS(klr::verify_family(4, Family::Conjecture, 2), klr::DomainError);
}

TEST_CASE("checked plus skipped covers every comparable pair") {
    for (int n : {3, 4, 5}) {
        for (int i = 3; i <= n - 1; ++i) {
            const klr::ParabolicInterval interval(n, i - 2, i);
            const auto quotient = klr::enumerate_quotient(n, interval);
            long long comparable = 0;
            for (const auto& u : quotient) {
                for (const auto& v : quotient) {
                    if (klr::bruhat_leq(u, v)) ++comparable;
                }
            }
            const VerificationReport report = klr::verify_family(n, Family::Triple, i);
            CHECK(report.pairs_checked + report.skipped == comparable);
        }
    }
}

TEST_CASE("duality over the three-element quotient") {
    const VerificationReport report = klr::verify_duality(3, GeneratorSubset::of(3, {2}));
    CHECK(report.suite == "duality");
    CHECK(report.pairs_checked == 6);
    CHECK(report.pass);
}

TEST_CASE("duality across all intervals up to n = 4") {
    for (int n = 2; n <= 4; ++n) {
        for (int i = 1; i <= n - 1; ++i) {
            for (int k = 1; k <= i; ++k) {
                const auto J = klr::ParabolicInterval(n, k, i).to_subset();
                CHECK(klr::verify_duality(n, J).pass);
            }
        }
    }
}

TEST_CASE("descent independence on the full S_3") {
    const VerificationReport report =
        klr::verify_descent_independence(3, GeneratorSubset::empty(3));
    CHECK(report.pass);
    CHECK(report.pairs_checked == 19);  // ordered comparable pairs of S_3
}

TEST_CASE("branch overlap") {
    const VerificationReport all = klr::verify_branch_overlap(4);
    CHECK(all.suite == "branch-overlap");
    CHECK(all.scope == "all");
    CHECK(all.pass);
    CHECK(all.pairs_checked > 0);
    CHECK(all.skipped_reasons.count("no-overlap") == 1);

    const VerificationReport one = klr::verify_branch_overlap(3, 2);
    CHECK(one.scope == "1..2");
    CHECK(one.pass);
}

TEST_CASE("exhaustive conjecture scan at small degrees") {
    for (int n = 2; n <= 4; ++n) {
        const VerificationReport report = klr::conjecture_scan(n);
        CHECK(report.suite == "conjecture-scan");
        CHECK(report.scope == "all");
        CHECK(report.pass);
        CHECK(report.pairs_checked > 0);
    }
}

TEST_CASE("sampled conjecture scan is seeded and deterministic") {
    const SampleSpec spec{1, 400};
    const VerificationReport first = klr::conjecture_scan(5, spec);
    CHECK(first.pass);
    CHECK(first.pairs_checked == 400);
    CHECK(first.sample_seed == 1);
    CHECK(first.sample_count == 400);

    const VerificationReport again = klr::conjecture_scan(5, spec);
    CHECK(again.pairs_checked == first.pairs_checked);
    CHECK(again.skipped == first.skipped);
    CHECK(again.skipped_reasons == first.skipped_reasons);

    const VerificationReport other_seed = klr::conjecture_scan(5, SampleSpec{99, 400});
    CHECK(other_seed.pass);
    CHECK(other_seed.pairs_checked == 400);
}

TEST_CASE("worker count does not change the report") {
    const VerificationReport serial = klr::verify_family(5, Family::Double, 3, std::nullopt, 1);
    const VerificationReport parallel = klr::verify_family(5, Family::Double, 3, std::nullopt, 4);
    CHECK(serial.pairs_checked == parallel.pairs_checked);
    CHECK(serial.skipped == parallel.skipped);
    CHECK(serial.mismatch_count == parallel.mismatch_count);
    CHECK(serial.pass == parallel.pass);

    const VerificationReport s2 = klr::conjecture_scan(5, SampleSpec{7, 300}, 1);
    const VerificationReport p2 = klr::conjecture_scan(5, SampleSpec{7, 300}, 3);
    CHECK(s2.pairs_checked == p2.pairs_checked);
    CHECK(s2.skipped == p2.skipped);
    CHECK(s2.pass == p2.pass);
}

TEST_CASE("report serialization") {
    VerificationReport report = klr::verify_family(3, Family::Single, 1);
    const nlohmann::json j = nlohmann::json::parse(report.to_json());
    CHECK(j.at("suite") == "family-single");
    CHECK(j.at("n") == 3);
    CHECK(j.at("interval") == "1..1");
    CHECK(j.at("pairs_checked") == 6);
    CHECK(j.at("skipped") == 0);
    CHECK(j.at("mismatch_count") == 0);
    CHECK(j.at("mismatches").is_array());
    CHECK(j.at("mismatches").empty());
    CHECK(j.at("elapsed_seconds").is_number());
    CHECK(j.at("pass") == true);
    CHECK(j.at("sample").is_null());

    CHECK(report.summary_line().rfind("[PASS] family-single", 0) == 0);

    // a hand-built failing report round-trips its mismatch payload
    VerificationReport failing;
    failing.suite = "duality";
    failing.n = 3;
    failing.scope = "{2}";
    klr::Mismatch m;
    m.u = "1,2,3";
    m.v = "2,3,1";
    m.scope = "--J 2";
    m.x = "q";
    m.expected = klr::IntPolynomial::one();
    m.actual = klr::IntPolynomial::zero();
    m.note = "synthetic";
    m.rerun = "compute --n 3 --u 1,2,3 --v 2,3,1 --J 2 --x q --method both";
    failing.mismatches.push_back(m);
    failing.mismatch_count = 1;
    failing.pairs_checked = 1;
    failing.pass = false;
    const nlohmann::json jf = nlohmann::json::parse(failing.to_json());
    CHECK(jf.at("pass") == false);
    CHECK(jf.at("mismatches").size() == 1);
    CHECK(jf.at("mismatches")[0].at("u") == "1,2,3");
    CHECK(jf.at("mismatches")[0].at("expected").at("coeffs") == std::vector<long long>{1});
    CHECK(jf.at("mismatches")[0].at("rerun") ==
          "compute --n 3 --u 1,2,3 --v 2,3,1 --J 2 --x q --method both");
    CHECK(failing.summary_line().rfind("[FAIL]", 0) == 0);
}

TEST_CASE("sample draws stay inside the requested count") {
    const VerificationReport report = klr::conjecture_scan(4, SampleSpec{42, 50});
    CHECK(report.pairs_checked == 50);
    // rejected draws, if any, are all accounted as incomparable
    long long reasons_total = 0;
    for (const auto& [reason, count] : report.skipped_reasons) {
        CHECK(reason == "incomparable");
        reasons_total += count;
    }
    CHECK(reasons_total == report.skipped);
}
