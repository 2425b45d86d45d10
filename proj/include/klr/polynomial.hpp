#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

#include "klr/errors.hpp"

namespace klr {

/// Univariate polynomial in q with arbitrary-precision integer coefficients.
///
/// Values are immutable in spirit: all arithmetic returns fresh polynomials.
/// The coefficient vector is kept canonical at all times -- the highest-index
/// entry is nonzero, and the zero polynomial is the empty vector (its degree
/// is "none", distinct from degree 0).
class IntPolynomial {
public:
    using Coeff = boost::multiprecision::cpp_int;

    /// The zero polynomial.
    IntPolynomial() = default;

    /// Builds from a coefficient vector (index = degree); trailing zeros are
    /// stripped so the result is canonical.
    explicit IntPolynomial(std::vector<Coeff> coeffs);

    static IntPolynomial zero() { return IntPolynomial{}; }
    static IntPolynomial one() { return constant(1); }
    static IntPolynomial constant(Coeff c);
    /// c * q^d
    static IntPolynomial monomial(Coeff c, int d);
    /// The indeterminate q itself.
    static IntPolynomial variable() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree, or nullopt for the zero polynomial.
    std::optional<int> degree() const;

    /// Coefficient of q^d (zero outside the stored range).
    Coeff coeff(int d) const;

    const std::vector<Coeff>& coeffs() const { return coeffs_; }

    IntPolynomial operator-() const;
    IntPolynomial operator+(const IntPolynomial& rhs) const;
    IntPolynomial operator-(const IntPolynomial& rhs) const;
    IntPolynomial operator*(const IntPolynomial& rhs) const;
    IntPolynomial operator*(const Coeff& scalar) const;
    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);

    bool operator==(const IntPolynomial& rhs) const = default;

    /// q^L * p(1/q): coefficient of q^d in the result is the coefficient of
    /// q^(L-d) in p. Requires deg p <= L (throws DegreeBoundError otherwise;
    /// the duality suite reports that as a finding rather than crashing).
    IntPolynomial reversed(int L) const;

    /// Exact Horner evaluation.
    Coeff eval_at(const Coeff& x) const;

    /// Ascending-degree human form, e.g. "1 - 2*q + q^3"; "0" for zero.
    std::string to_string() const;

    /// JSON-ready coefficient array (index = degree). Coefficients must fit
    /// a 64-bit integer; anything larger throws rather than truncating.
    std::vector<long long> coeffs_int64() const;

private:
    void normalize();

    std::vector<Coeff> coeffs_;  // coeffs_[d] = coefficient of q^d
};

/// Convenience: 1 - q^a (a >= 0). A frequent closed-formula factor.
IntPolynomial one_minus_q_pow(int a);

}  // namespace klr
