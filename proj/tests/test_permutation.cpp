#include <doctest.h>

#include <set>

#include "klr/permutation.hpp"
#include "klr/quotient.hpp"

#include "test_support.hpp"

using klr::Permutation;

namespace {

Permutation perm(const std::string& text) { return Permutation::parse(text); }

// every element of S_n, for the small exhaustive checks
std::vector<Permutation> whole_group(int n) {
    return klr::enumerate_quotient(n, klr::GeneratorSubset::empty(n));
}

}  // namespace

TEST_CASE("identity") {
    const Permutation e = Permutation::identity(3);
    CHECK(e.one_line() == std::vector<int>{1, 2, 3});
    CHECK(Permutation::identity(5).length() == 0);
    CHECK_THROWS_AS(Permutation::identity(0), klr::DomainError);

    const Permutation u = perm("4132");
    CHECK(Permutation::identity(4).compose(u) == u);
    CHECK(u.compose(Permutation::identity(4)) == u);
}

TEST_CASE("parsing and formatting") {
    CHECK(perm("4,1,6,2,7,3,8,5,9") == perm("416273859"));
    CHECK(perm("4 1 6 2 7 3 8 5 9") == perm("416273859"));
    CHECK(perm("416273859").to_string() == "4,1,6,2,7,3,8,5,9");
    CHECK(perm("1").degree() == 1);

    CHECK_THROWS_AS(perm(""), klr::ParseError);
    CHECK_THROWS_AS(perm("1,2,2"), klr::ParseError);
    CHECK_THROWS_AS(perm("1,3"), klr::ParseError);
    CHECK_THROWS_AS(perm("120"), klr::ParseError);
    CHECK_THROWS_AS(perm("1,2,x"), klr::ParseError);

    // round-trip on random permutations, including degrees above 9
    klr_test::Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Permutation u = klr_test::random_perm(rng, rng.int_in(1, 12));
        CHECK(Permutation::parse(u.to_string()) == u);
    }
}

TEST_CASE("composition") {
    CHECK(perm("213").compose(perm("132")) == perm("231"));
    CHECK_THROWS_AS(perm("12").compose(perm("123")), klr::DegreeMismatchError);

    klr_test::Rng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const Permutation u = klr_test::random_perm(rng, 7);
        CHECK(u.compose(u.inverse()) == Permutation::identity(7));
        CHECK(u.inverse().compose(u) == Permutation::identity(7));
    }
}

TEST_CASE("composition is associative on all of S_3") {
    const auto s3 = whole_group(3);
    for (const auto& a : s3)
        for (const auto& b : s3)
            for (const auto& c : s3)
                CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
}

TEST_CASE("inverse") {
    CHECK(perm("231").inverse() == perm("312"));
    CHECK(Permutation::identity(6).inverse() == Permutation::identity(6));

    klr_test::Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const Permutation u = klr_test::random_perm(rng, 9);
        CHECK(u.inverse().inverse() == u);
        CHECK(u.length() == u.inverse().length());
    }
}

TEST_CASE("length counts inversions") {
    CHECK(perm("416273859").length() == 9);
    CHECK(perm("671489253").length() == 19);
    CHECK(Permutation::identity(8).length() == 0);
    CHECK(perm("321").length() == 3);
    CHECK(perm("4321").length() == 6);  // longest element of S_4
}

TEST_CASE("right descents") {
    CHECK(perm("671489253").right_descents() == std::vector<int>{2, 6, 8});
    CHECK(Permutation::identity(5).right_descents().empty());
    CHECK(perm("321").right_descents() == std::vector<int>{1, 2});

    // empty descent set characterizes the identity (all of S_4)
    for (const auto& u : whole_group(4)) {
        CHECK(u.right_descents().empty() == (u == Permutation::identity(4)));
    }
}

TEST_CASE("adjacent right multiplication") {
    CHECK(perm("123").right_mult_adjacent(2) == perm("132"));
    CHECK_THROWS_AS(perm("123").right_mult_adjacent(3), klr::DomainError);
    CHECK_THROWS_AS(perm("123").right_mult_adjacent(0), klr::DomainError);

    for (const auto& u : whole_group(4)) {
        for (int j = 1; j <= 3; ++j) {
            const Permutation us = u.right_mult_adjacent(j);
            CHECK(us.right_mult_adjacent(j) == u);  // involution
            const int diff = us.length() - u.length();
            CHECK(std::abs(diff) == 1);
            CHECK((diff == -1) == u.is_right_descent(j));

            // right_mult_adjacent agrees with composing by the transposition
            std::vector<int> s_line(4);
            for (int t = 0; t < 4; ++t) s_line[static_cast<std::size_t>(t)] = t + 1;
            std::swap(s_line[static_cast<std::size_t>(j - 1)], s_line[static_cast<std::size_t>(j)]);
            CHECK(us == u.compose(Permutation::from_one_line(s_line)));
        }
    }
}
