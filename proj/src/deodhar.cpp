#include "klr/deodhar.hpp"

#include <algorithm>

namespace klr {

namespace {

// Lehmer-code rank of u within S_n, a bijection onto 0..n!-1. O(n^2) is
// plenty at desk scale.
std::uint64_t lehmer_rank(const Permutation& u) {
    const int n = u.degree();
    std::uint64_t rank = 0;
    std::uint64_t suffix_fact = 1;
    // Horner-style accumulation from the right: rank = sum c_t * (n-t)!
    for (int t = n; t >= 1; --t) {
        int smaller_after = 0;
        for (int r = t + 1; r <= n; ++r) {
            if (u.at(r) < u.at(t)) ++smaller_after;
        }
        rank += static_cast<std::uint64_t>(smaller_after) * suffix_fact;
        suffix_fact *= static_cast<std::uint64_t>(n - t + 1);
    }
    return rank;
}

std::uint64_t factorial64(int n) {
    std::uint64_t f = 1;
    for (int x = 2; x <= n; ++x) f *= static_cast<std::uint64_t>(x);
    return f;
}

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

DescentPolicy DescentPolicy::smallest() {
    return DescentPolicy("smallest", [](const Permutation& v) {
        for (int j = 1; j < v.degree(); ++j) {
            if (v.is_right_descent(j)) return j;
        }
        throw DomainError("identity permutation has no right descent");
    });
}

DescentPolicy DescentPolicy::largest() {
    return DescentPolicy("largest", [](const Permutation& v) {
        for (int j = v.degree() - 1; j >= 1; --j) {
            if (v.is_right_descent(j)) return j;
        }
        throw DomainError("identity permutation has no right descent");
    });
}

DescentPolicy DescentPolicy::preference(std::vector<int> order) {
    return DescentPolicy("preference", [order = std::move(order)](const Permutation& v) {
        for (int j : order) {
            if (v.is_right_descent(j)) return j;
        }
        for (int j = 1; j < v.degree(); ++j) {
            if (v.is_right_descent(j)) return j;
        }
        throw DomainError("identity permutation has no right descent");
    });
}

int DescentPolicy::choose(const Permutation& v) const { return chooser_(v); }

std::size_t RContext::KeyHash::operator()(std::uint64_t k) const {
    return static_cast<std::size_t>(mix64(k));
}

RContext::RContext(int n, GeneratorSubset J, XMode x, DescentPolicy policy)
    : n_(n), J_(std::move(J)), x_(x), policy_(std::move(policy)) {
    if (n < 1) throw DomainError("group degree must be at least 1");
    if (n > 12) throw DomainError("recursion contexts are limited to n <= 12");
    if (J_.degree() != n) {
        throw DegreeMismatchError("subset degree does not match context degree");
    }
    rank_base_ = factorial64(n);
}

std::uint64_t RContext::key_of(const Permutation& u, const Permutation& v) const {
    return lehmer_rank(u) * rank_base_ + lehmer_rank(v);
}

IntPolynomial RContext::r_poly(const Permutation& u, const Permutation& v) {
    if (u.degree() != n_ || v.degree() != n_) {
        throw DegreeMismatchError("pair degree does not match context degree");
    }
    if (!is_minimal_rep(u, J_)) {
        throw QuotientMembershipError("u = " + u.to_string() +
                                      " is not a minimal representative for J = " +
                                      J_.to_string());
    }
    if (!is_minimal_rep(v, J_)) {
        throw QuotientMembershipError("v = " + v.to_string() +
                                      " is not a minimal representative for J = " +
                                      J_.to_string());
    }
    return compute(u, v);
}

const IntPolynomial& RContext::compute(const Permutation& u, const Permutation& v) {
    const std::uint64_t key = key_of(u, v);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    IntPolynomial result;
    if (u == v) {
        result = IntPolynomial::one();
    } else if (!bruhat_leq(u, v)) {
        result = IntPolynomial::zero();
    } else {
        const int j = policy_.choose(v);
        const Permutation vs = v.right_mult_adjacent(j);
        if (u.is_right_descent(j)) {
            result = compute(u.right_mult_adjacent(j), vs);
        } else {
            const Permutation us = u.right_mult_adjacent(j);
            if (is_minimal_rep(us, J_)) {
                static const IntPolynomial q = IntPolynomial::variable();
                static const IntPolynomial q_minus_1 =
                    IntPolynomial::variable() - IntPolynomial::one();
                result = q * compute(us, vs) + q_minus_1 * compute(u, vs);
            } else {
                // (q - 1 - x): collapses to -1 for x = q, to q for x = -1.
                const IntPolynomial factor = (x_ == XMode::Q)
                                                 ? IntPolynomial::constant(-1)
                                                 : IntPolynomial::variable();
                result = factor * compute(u, vs);
            }
        }
    }
    auto [it, inserted] = memo_.emplace(key, std::move(result));
    return it->second;
}

std::map<std::pair<int, int>, IntPolynomial> RContext::r_table(
    const std::vector<Permutation>& quotient) {
    std::map<std::pair<int, int>, IntPolynomial> table;
    for (std::size_t a = 0; a < quotient.size(); ++a) {
        for (std::size_t b = 0; b < quotient.size(); ++b) {
            if (!bruhat_leq(quotient[a], quotient[b])) continue;
            table.emplace(std::pair<int, int>(static_cast<int>(a), static_cast<int>(b)),
                          r_poly(quotient[a], quotient[b]));
        }
    }
    return table;
}

}  // namespace klr
