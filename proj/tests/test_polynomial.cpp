#include <doctest.h>

#include "klr/polynomial.hpp"

#include "test_support.hpp"

using klr::IntPolynomial;
using Coeff = IntPolynomial::Coeff;

namespace {

IntPolynomial poly(std::initializer_list<long long> coeffs) {
    std::vector<Coeff> cs;
    for (long long c : coeffs) cs.emplace_back(c);
    return IntPolynomial(std::move(cs));
}

}  // namespace

TEST_CASE("construction and canonical form") {
    CHECK(IntPolynomial::zero().is_zero());
    CHECK_FALSE(IntPolynomial::zero().degree().has_value());
    CHECK(IntPolynomial::one().degree() == 0);
    CHECK(poly({0, 0, 0}).is_zero());
    CHECK(poly({1, -2, 0, 1}).degree() == 3);
    CHECK(poly({5, 7, 0, 0}).degree() == 1);  // trailing zeros stripped
    CHECK(IntPolynomial::monomial(3, 4).coeff(4) == 3);
    CHECK(IntPolynomial::monomial(0, 4).is_zero());
}

TEST_CASE("addition") {
    const IntPolynomial one_minus_q = poly({1, -1});
    CHECK((one_minus_q + poly({-1, 1})).is_zero());
    CHECK(one_minus_q + IntPolynomial::zero() == one_minus_q);
    CHECK(one_minus_q + poly({0, 0, 1}) == poly({1, -1, 1}));
}

TEST_CASE("multiplication") {
    CHECK(poly({1, -1}) * poly({1, 1}) == poly({1, 0, -1}));
    CHECK((poly({1, -1}) * IntPolynomial::zero()).is_zero());

    // the worked-example product (1-q)^3 (1-q^2) (1-q+q^2), expanded by hand
    const IntPolynomial one_minus_q = poly({1, -1});
    IntPolynomial product = one_minus_q * one_minus_q * one_minus_q;
    product *= poly({1, 0, -1});
    product *= poly({1, -1, 1});
    CHECK(product == poly({1, -4, 6, -3, -3, 6, -4, 1}));
    CHECK(product.degree() == 7);
    CHECK(product.eval_at(1) == 0);  // (1-q) divides it
}

TEST_CASE("reversal") {
    CHECK(poly({1, -1}).reversed(2) == poly({0, -1, 1}));  // q^2 - q
    CHECK(IntPolynomial::zero().reversed(5).is_zero());
    CHECK_THROWS_AS(poly({1, 0, 0, 1}).reversed(2), klr::DegreeBoundError);

    klr_test::Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const IntPolynomial p = klr_test::random_poly(rng);
        const int bound = p.degree().value_or(0) + static_cast<int>(rng.bounded(3));
        CHECK(p.reversed(bound).reversed(bound) == p);
    }
}

TEST_CASE("evaluation") {
    CHECK(poly({1, -1}).eval_at(2) == -1);
    CHECK(poly({7, 3, 9}).eval_at(0) == 7);
    CHECK(poly({1, -1, 1}).eval_at(1) == 1);
    CHECK(IntPolynomial::zero().eval_at(12345) == 0);
}

TEST_CASE("ring axioms on random polynomials") {
    klr_test::Rng rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const IntPolynomial a = klr_test::random_poly(rng);
        const IntPolynomial b = klr_test::random_poly(rng);
        const IntPolynomial c = klr_test::random_poly(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == IntPolynomial::zero());

        const Coeff x = rng.int_in(-5, 5);
        CHECK((a * b).eval_at(x) == a.eval_at(x) * b.eval_at(x));
        CHECK((a + b).eval_at(x) == a.eval_at(x) + b.eval_at(x));

        // canonical form is preserved: top coefficient nonzero unless zero
        for (const IntPolynomial& p : {a + b, a * b, a - c}) {
            if (!p.is_zero()) CHECK(p.coeffs().back() != 0);
        }
        if (!a.is_zero() && !b.is_zero()) {
            CHECK(*(a * b).degree() == *a.degree() + *b.degree());
        }
    }
}

TEST_CASE("coefficients do not wrap at machine width") {
    // (1+q)^80 has the central binomial coefficient C(80,40) > 2^63;
    // cross-check against an independent multiplicative evaluation.
    IntPolynomial p = IntPolynomial::one();
    const IntPolynomial one_plus_q = poly({1, 1});
    for (int rep = 0; rep < 80; ++rep) p *= one_plus_q;

    Coeff binom = 1;
    for (int r = 1; r <= 40; ++r) {
        binom *= (80 - 40 + r);
        binom /= r;
    }
    CHECK(p.coeff(40) == binom);
    CHECK(binom > Coeff("9223372036854775807"));
    CHECK_THROWS_AS(p.coeffs_int64(), klr::Error);  // loud, not truncated
}

TEST_CASE("text rendering") {
    CHECK(IntPolynomial::zero().to_string() == "0");
    CHECK(IntPolynomial::one().to_string() == "1");
    CHECK(poly({-1}).to_string() == "-1");
    CHECK(poly({1, -2, 0, 1}).to_string() == "1 - 2*q + q^3");
    CHECK(poly({0, -1, 1}).to_string() == "-q + q^2");
    CHECK(poly({0, 0, 3}).to_string() == "3*q^2");
    CHECK(poly({1, -4, 6, -3, -3, 6, -4, 1}).to_string() ==
          "1 - 4*q + 6*q^2 - 3*q^3 - 3*q^4 + 6*q^5 - 4*q^6 + q^7");
}

TEST_CASE("json coefficient array") {
    CHECK(poly({1, -2, 0, 1}).coeffs_int64() == std::vector<long long>{1, -2, 0, 1});
    CHECK(IntPolynomial::zero().coeffs_int64().empty());
}

TEST_CASE("factor helper") {
    CHECK(klr::one_minus_q_pow(0).is_zero());
    CHECK(klr::one_minus_q_pow(1) == poly({1, -1}));
    CHECK(klr::one_minus_q_pow(3) == poly({1, 0, 0, -1}));
}
