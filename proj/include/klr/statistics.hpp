#pragma once

#include <vector>

#include "klr/permutation.hpp"
#include "klr/quotient.hpp"

namespace klr {

/// Prefix-count difference over a value threshold:
///   b_stat(u, v, t, j) = |{r in u^-1([t]) : r < j}| - |{r in v^-1([t]) : r < j}|,
/// i.e. how many of the values 1..t sit before position j in u, minus the
/// same count in v. Nonnegativity over t in the interval characterizes
/// Bruhat comparability inside the quotient (see bruhat_leq_quotient).
int b_stat(const Permutation& u, const Permutation& v, int t, int j);

/// a-vector relative to an explicit value set B:
///   a_j = |{r in u^-1(B) : r < j}| - |{r in v^-1(B) : r < j}|, 1-based,
/// returned with index 0 unused so a[j] reads as the paper-style a_j.
std::vector<int> a_vector_for(const Permutation& u, const Permutation& v,
                              const std::vector<int>& B);

/// D-set relative to an explicit value set B: positions holding B-values in
/// v but not in u (v^-1(B) \ u^-1(B)), ascending.
std::vector<int> d_set_for(const Permutation& u, const Permutation& v,
                           const std::vector<int>& B);

/// Cached pair statistics for (u, v) relative to an interval quotient.
///
/// One generic (k, i)-parameterized engine: the value set B is {1..k}
/// together with A = {t in k+1..i : u^-1(t) >= v^-1(t)}. The single- and
/// two-generator product formulas are the k = i and k = i-1 specializations
/// (for k = i the range k+1..i is empty, so B = [i] unconditionally), and the
/// position-equality tie goes to the plain branch (t enters A at equality).
/// All fields are computed eagerly at construction and never mutated.
struct PairContext {
    Permutation u;
    Permutation v;
    ParabolicInterval interval;

    std::vector<int> p;  // p[t] = position of value t in u (index 0 unused)
    std::vector<int> q;  // q[t] = position of value t in v (index 0 unused)
    std::vector<int> A;  // subset of {k+1..i}, ascending
    std::vector<int> B;  // {1..k} union A, ascending
    std::vector<int> a;  // a[j] for positions j = 1..n (index 0 unused)
    std::vector<int> D;  // positions, ascending

    /// Validates quotient membership of both u and v, then computes all
    /// statistics. Throws QuotientMembershipError on a violation.
    static PairContext make(Permutation u, Permutation v, ParabolicInterval interval);

private:
    PairContext(Permutation u_, Permutation v_, ParabolicInterval interval_)
        : u(std::move(u_)), v(std::move(v_)), interval(interval_) {}
};

}  // namespace klr
