#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "klr/permutation.hpp"
#include "klr/polynomial.hpp"
#include "klr/quotient.hpp"

namespace klr {

/// The parameter x of the recursion: either q or -1.
enum class XMode { Q, MinusOne };

inline const char* to_string(XMode x) { return x == XMode::Q ? "q" : "-1"; }

/// Strategy for choosing which right descent of v drives a recursion step.
/// The recursion's result is independent of the choice (that uniqueness is
/// itself verified by the descent-independence suite), so the policy is a
/// first-class parameter rather than a hard-coded pick.
class DescentPolicy {
public:
    /// Least j with v(j) > v(j+1). The default.
    static DescentPolicy smallest();
    /// Greatest such j.
    static DescentPolicy largest();
    /// First descent found in the given preference order, falling back to
    /// the smallest descent when none of the listed generators applies.
    static DescentPolicy preference(std::vector<int> order);

    /// Chooses a right descent of v; v must not be the identity.
    int choose(const Permutation& v) const;

    const std::string& name() const { return name_; }

private:
    DescentPolicy(std::string name, std::function<int(const Permutation&)> chooser)
        : name_(std::move(name)), chooser_(std::move(chooser)) {}

    std::string name_;
    std::function<int(const Permutation&)> chooser_;
};

/// Computation context for parabolic R-polynomials over a fixed (J, x):
/// holds the memo table keyed by the ordered pair (u, v). Entries follow
/// the defining recursion:
///   (i)  u not <= v            -> 0
///   (ii) u = v                 -> 1
///   (iii) otherwise, for a chosen s in D_R(v):
///        s in D_R(u)                       -> R(us, vs)
///        s not in D_R(u), us in W^J        -> q R(us, vs) + (q-1) R(u, vs)
///        s not in D_R(u), us not in W^J    -> (q-1-x) R(u, vs)
/// where (q-1-x) is -1 for x = q and q for x = -1. Bruhat tests inside the
/// recursion use the general dominance comparator, keeping this oracle
/// independent of the b-statistic machinery it is later checked against.
///
/// A context is internally sequential; distinct contexts may run fully in
/// parallel. Results are deterministic for a fixed policy.
class RContext {
public:
    RContext(int n, GeneratorSubset J, XMode x,
             DescentPolicy policy = DescentPolicy::smallest());

    int degree() const { return n_; }
    const GeneratorSubset& subset() const { return J_; }
    XMode x() const { return x_; }

    /// R(u, v) for u, v in the quotient; throws QuotientMembershipError on
    /// non-members. Incomparable pairs yield the zero polynomial (rule i).
    IntPolynomial r_poly(const Permutation& u, const Permutation& v);

    /// Fills the memo for every comparable ordered pair of the given
    /// quotient enumeration and returns the table keyed by (index of u,
    /// index of v). Incomparable pairs are absent from the result.
    std::map<std::pair<int, int>, IntPolynomial> r_table(
        const std::vector<Permutation>& quotient);

    std::size_t memo_size() const { return memo_.size(); }

private:
    const IntPolynomial& compute(const Permutation& u, const Permutation& v);
    std::uint64_t key_of(const Permutation& u, const Permutation& v) const;

    int n_;
    GeneratorSubset J_;
    XMode x_;
    DescentPolicy policy_;
    std::uint64_t rank_base_;  // n!, for packing (rank u, rank v) into 64 bits

    struct KeyHash {
        std::size_t operator()(std::uint64_t k) const;
    };
    std::unordered_map<std::uint64_t, IntPolynomial, KeyHash> memo_;
};

}  // namespace klr
