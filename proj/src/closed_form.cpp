#include "klr/closed_form.hpp"

#include <numeric>

namespace klr {

namespace {

// (1 - q + delta * q^(1+a)); the delta = 0 case is just 1 - q, kept as
// written rather than pre-simplified.
IntPolynomial delta_factor(bool delta, int a_at_qt) {
    IntPolynomial f = IntPolynomial::one() - IntPolynomial::variable();
    if (delta) f += IntPolynomial::monomial(1, 1 + a_at_qt);
    return f;
}

IntPolynomial apply_sign(IntPolynomial p, int length_difference) {
    return (length_difference % 2 != 0) ? -std::move(p) : p;
}

std::vector<int> initial_segment(int m) {
    std::vector<int> seg(static_cast<std::size_t>(m));
    std::iota(seg.begin(), seg.end(), 1);
    return seg;
}

void require_members(const Permutation& u, const Permutation& v,
                     const ParabolicInterval& interval) {
    const GeneratorSubset J = interval.to_subset();
    if (!is_minimal_rep(u, J)) {
        throw QuotientMembershipError("u = " + u.to_string() +
                                      " is not in the quotient for excluded run " +
                                      interval.to_string());
    }
    if (!is_minimal_rep(v, J)) {
        throw QuotientMembershipError("v = " + v.to_string() +
                                      " is not in the quotient for excluded run " +
                                      interval.to_string());
    }
}

void require_comparable(const Permutation& u, const Permutation& v) {
    if (!bruhat_leq(u, v)) {
        throw NotComparableError("u = " + u.to_string() + " is not below v = " +
                                 v.to_string() + " in the Bruhat order");
    }
}

// Common tail of every displayed product: prod_{j in D} (1 - q^(a_j)).
IntPolynomial d_product(const std::vector<int>& D, const std::vector<int>& a) {
    IntPolynomial prod = IntPolynomial::one();
    for (int j : D) {
        prod *= one_minus_q_pow(a[static_cast<std::size_t>(j)]);
    }
    return prod;
}

}  // namespace

bool increasing_condition_holds(const Permutation& v, const ParabolicInterval& interval) {
    // values k+1..i in increasing order; vacuous when the run has <= 1 value
    const Permutation inv = v.inverse();
    for (int t = interval.k + 1; t < interval.i; ++t) {
        if (inv.at(t) > inv.at(t + 1)) return false;
    }
    return true;
}

IntPolynomial conjecture_formula(const PairContext& ctx) {
    if (!increasing_condition_holds(ctx.v, ctx.interval)) {
        throw IncreasingOrderError("v = " + ctx.v.to_string() + " does not carry the values " +
                                   std::to_string(ctx.interval.k + 1) + ".." +
                                   std::to_string(ctx.interval.i) + " in increasing order");
    }
    require_comparable(ctx.u, ctx.v);

    IntPolynomial prod = IntPolynomial::one();
    for (int t = ctx.interval.k + 1; t <= ctx.interval.i; ++t) {
        const bool delta = ctx.p[static_cast<std::size_t>(t)] == ctx.q[static_cast<std::size_t>(t)];
        const int pos = ctx.q[static_cast<std::size_t>(t)];
        prod *= delta_factor(delta, ctx.a[static_cast<std::size_t>(pos)]);
    }
    prod *= d_product(ctx.D, ctx.a);
    return apply_sign(std::move(prod), ctx.v.length() - ctx.u.length());
}

IntPolynomial brenti_single(const Permutation& u, const Permutation& v, int i) {
    const int n = u.degree();
    if (i < 1 || i > n - 1) throw DomainError("generator index i out of range 1..n-1");
    const ParabolicInterval interval(n, i, i);
    require_members(u, v, interval);
    require_comparable(u, v);

    const std::vector<int> B = initial_segment(i);
    const std::vector<int> a = a_vector_for(u, v, B);
    const std::vector<int> D = d_set_for(u, v, B);
    return apply_sign(d_product(D, a), v.length() - u.length());
}

IntPolynomial brenti_double_branch(const Permutation& u, const Permutation& v, int i,
                                   DoubleBranch branch) {
    const int n = u.degree();
    if (i < 2 || i > n - 1) throw DomainError("generator index i out of range 2..n-1");
    const ParabolicInterval interval(n, i - 1, i);
    require_members(u, v, interval);
    require_comparable(u, v);

    const int p_i = u.inverse().at(i);
    const int q_i = v.inverse().at(i);
    if (branch == DoubleBranch::Plain && p_i < q_i) {
        throw DomainError("plain branch requires u^-1(i) >= v^-1(i)");
    }
    if (branch == DoubleBranch::Tilde && p_i > q_i) {
        throw DomainError("tilde branch requires u^-1(i) <= v^-1(i)");
    }

    const std::vector<int> B = initial_segment(branch == DoubleBranch::Plain ? i : i - 1);
    const std::vector<int> a = a_vector_for(u, v, B);
    const std::vector<int> D = d_set_for(u, v, B);
    IntPolynomial prod = delta_factor(p_i == q_i, a[static_cast<std::size_t>(q_i)]);
    prod *= d_product(D, a);
    return apply_sign(std::move(prod), v.length() - u.length());
}

IntPolynomial brenti_double(const Permutation& u, const Permutation& v, int i) {
    const int p_i = u.inverse().at(i);
    const int q_i = v.inverse().at(i);
    return brenti_double_branch(u, v, i,
                                p_i >= q_i ? DoubleBranch::Plain : DoubleBranch::Tilde);
}

IntPolynomial triple_formula(const Permutation& u, const Permutation& v, int i) {
    const int n = u.degree();
    if (i < 3 || i > n - 1) throw DomainError("generator index i out of range 3..n-1");
    const ParabolicInterval interval(n, i - 2, i);
    require_members(u, v, interval);
    if (v.inverse().at(i) < v.inverse().at(i - 1)) {
        throw IncreasingOrderError("v = " + v.to_string() + " has " + std::to_string(i) +
                                   " before " + std::to_string(i - 1) +
                                   "; the three-generator formula needs " + std::to_string(i) +
                                   " after " + std::to_string(i - 1));
    }
    require_comparable(u, v);

    const PairContext ctx = PairContext::make(u, v, interval);
    IntPolynomial prod =
        delta_factor(ctx.p[static_cast<std::size_t>(i - 1)] == ctx.q[static_cast<std::size_t>(i - 1)],
                     ctx.a[static_cast<std::size_t>(ctx.q[static_cast<std::size_t>(i - 1)])]);
    prod *= delta_factor(ctx.p[static_cast<std::size_t>(i)] == ctx.q[static_cast<std::size_t>(i)],
                         ctx.a[static_cast<std::size_t>(ctx.q[static_cast<std::size_t>(i)])]);
    prod *= d_product(ctx.D, ctx.a);
    return apply_sign(std::move(prod), v.length() - u.length());
}

IntPolynomial r_closed(const Permutation& u, const Permutation& v,
                       const ParabolicInterval& interval) {
    require_members(u, v, interval);
    if (!bruhat_leq(u, v)) return IntPolynomial::zero();
    return conjecture_formula(PairContext::make(u, v, interval));
}

}  // namespace klr
