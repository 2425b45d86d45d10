#include "klr/polynomial.hpp"

#include <limits>
#include <sstream>
#include <utility>

namespace klr {

IntPolynomial::IntPolynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

IntPolynomial IntPolynomial::constant(Coeff c) {
    IntPolynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPolynomial IntPolynomial::monomial(Coeff c, int d) {
    if (d < 0) throw DomainError("monomial degree must be nonnegative");
    IntPolynomial p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(d) + 1, Coeff(0));
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<int> IntPolynomial::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

IntPolynomial::Coeff IntPolynomial::coeff(int d) const {
    if (d < 0 || static_cast<std::size_t>(d) >= coeffs_.size()) return 0;
    return coeffs_[static_cast<std::size_t>(d)];
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
    IntPolynomial r = *this;
    r += rhs;
    return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Coeff(0));
    for (std::size_t d = 0; d < rhs.coeffs_.size(); ++d) coeffs_[d] += rhs.coeffs_[d];
    normalize();
    return *this;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
    IntPolynomial r = *this;
    r -= rhs;
    return r;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Coeff(0));
    for (std::size_t d = 0; d < rhs.coeffs_.size(); ++d) coeffs_[d] -= rhs.coeffs_[d];
    normalize();
    return *this;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return zero();
    std::vector<Coeff> out(coeffs_.size() + rhs.coeffs_.size() - 1, Coeff(0));
    for (std::size_t a = 0; a < coeffs_.size(); ++a) {
        if (coeffs_[a] == 0) continue;
        for (std::size_t b = 0; b < rhs.coeffs_.size(); ++b) {
            out[a + b] += coeffs_[a] * rhs.coeffs_[b];
        }
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const Coeff& scalar) const {
    if (scalar == 0) return zero();
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c *= scalar;
    return r;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

IntPolynomial IntPolynomial::reversed(int L) const {
    if (L < 0) throw DomainError("reversal bound must be nonnegative");
    if (is_zero()) return zero();
    const int d = *degree();
    if (d > L) {
        std::ostringstream msg;
        msg << "cannot reverse degree-" << d << " polynomial at bound " << L;
        throw DegreeBoundError(msg.str());
    }
    std::vector<Coeff> out(static_cast<std::size_t>(L) + 1, Coeff(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out[static_cast<std::size_t>(L) - k] = coeffs_[k];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial::Coeff IntPolynomial::eval_at(const Coeff& x) const {
    Coeff acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        const Coeff& c = coeffs_[d];
        if (c == 0) continue;
        const bool negative = c < 0;
        Coeff mag = negative ? Coeff(-c) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (d == 0) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str() << "*";
            out << "q";
            if (d > 1) out << "^" << d;
        }
    }
    return out.str();
}

std::vector<long long> IntPolynomial::coeffs_int64() const {
    std::vector<long long> out;
    out.reserve(coeffs_.size());
    const Coeff lo = std::numeric_limits<long long>::min();
    const Coeff hi = std::numeric_limits<long long>::max();
    for (const auto& c : coeffs_) {
        if (c < lo || c > hi) {
            throw Error("coefficient " + c.str() + " exceeds 64-bit range; refusing to truncate");
        }
        out.push_back(c.convert_to<long long>());
    }
    return out;
}

IntPolynomial one_minus_q_pow(int a) {
    if (a < 0) throw DomainError("exponent in 1 - q^a must be nonnegative");
    if (a == 0) return IntPolynomial::zero();  // 1 - q^0 = 0
    std::vector<IntPolynomial::Coeff> coeffs(static_cast<std::size_t>(a) + 1, IntPolynomial::Coeff(0));
    coeffs[0] = 1;
    coeffs.back() = -1;
    return IntPolynomial(std::move(coeffs));
}

}  // namespace klr
