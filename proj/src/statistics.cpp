#include "klr/statistics.hpp"

#include <algorithm>

namespace klr {

int b_stat(const Permutation& u, const Permutation& v, int t, int j) {
    const int n = u.degree();
    if (n != v.degree()) {
        throw DegreeMismatchError("b_stat requires equal degrees");
    }
    if (t < 1 || t > n || j < 1 || j > n) {
        throw DomainError("b_stat indices out of range");
    }
    const Permutation pu = u.inverse();
    const Permutation pv = v.inverse();
    int count = 0;
    for (int val = 1; val <= t; ++val) {
        if (pu.at(val) < j) ++count;
        if (pv.at(val) < j) --count;
    }
    return count;
}

namespace {

std::vector<bool> value_mask(int n, const std::vector<int>& B) {
    std::vector<bool> mask(static_cast<std::size_t>(n) + 1, false);
    for (int val : B) {
        if (val < 1 || val > n) throw DomainError("B contains value out of range 1..n");
        mask[static_cast<std::size_t>(val)] = true;
    }
    return mask;
}

}  // namespace

std::vector<int> a_vector_for(const Permutation& u, const Permutation& v,
                              const std::vector<int>& B) {
    const int n = u.degree();
    if (n != v.degree()) throw DegreeMismatchError("a-vector requires equal degrees");
    const std::vector<bool> in_b = value_mask(n, B);
    std::vector<int> a(static_cast<std::size_t>(n) + 1, 0);
    int cu = 0;
    int cv = 0;
    for (int j = 1; j <= n; ++j) {
        a[static_cast<std::size_t>(j)] = cu - cv;  // counts over positions r < j
        if (in_b[static_cast<std::size_t>(u.at(j))]) ++cu;
        if (in_b[static_cast<std::size_t>(v.at(j))]) ++cv;
    }
    return a;
}

std::vector<int> d_set_for(const Permutation& u, const Permutation& v,
                           const std::vector<int>& B) {
    const int n = u.degree();
    if (n != v.degree()) throw DegreeMismatchError("D-set requires equal degrees");
    const std::vector<bool> in_b = value_mask(n, B);
    std::vector<int> out;
    for (int r = 1; r <= n; ++r) {
        if (in_b[static_cast<std::size_t>(v.at(r))] && !in_b[static_cast<std::size_t>(u.at(r))]) {
            out.push_back(r);
        }
    }
    return out;
}

PairContext PairContext::make(Permutation u, Permutation v, ParabolicInterval interval) {
    if (u.degree() != interval.n || v.degree() != interval.n) {
        throw DegreeMismatchError("pair degree does not match interval degree");
    }
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

    PairContext ctx(std::move(u), std::move(v), interval);
    const int n = interval.n;
    ctx.p.assign(static_cast<std::size_t>(n) + 1, 0);
    ctx.q.assign(static_cast<std::size_t>(n) + 1, 0);
    const Permutation pu = ctx.u.inverse();
    const Permutation pv = ctx.v.inverse();
    for (int t = 1; t <= n; ++t) {
        ctx.p[static_cast<std::size_t>(t)] = pu.at(t);
        ctx.q[static_cast<std::size_t>(t)] = pv.at(t);
    }

    for (int t = interval.k + 1; t <= interval.i; ++t) {
        if (ctx.p[static_cast<std::size_t>(t)] >= ctx.q[static_cast<std::size_t>(t)]) {
            ctx.A.push_back(t);
        }
    }
    for (int val = 1; val <= interval.k; ++val) ctx.B.push_back(val);
    ctx.B.insert(ctx.B.end(), ctx.A.begin(), ctx.A.end());
    std::sort(ctx.B.begin(), ctx.B.end());

    ctx.a = a_vector_for(ctx.u, ctx.v, ctx.B);
    ctx.D = d_set_for(ctx.u, ctx.v, ctx.B);
    return ctx;
}

}  // namespace klr
