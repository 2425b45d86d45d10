#pragma once

#include <string>
#include <vector>

#include "klr/errors.hpp"
#include "klr/permutation.hpp"

namespace klr {

/// A subset J of the simple generators {s_1, ..., s_{n-1}} of S_n.
class GeneratorSubset {
public:
    /// J from explicit indices; each must lie in 1..n-1. Duplicates collapse.
    static GeneratorSubset of(int n, std::vector<int> indices);
    static GeneratorSubset empty(int n) { return of(n, {}); }
    /// The full generating set S.
    static GeneratorSubset full(int n);

    int degree() const { return n_; }
    const std::vector<int>& indices() const { return indices_; }
    bool contains(int j) const;
    bool is_empty() const { return indices_.empty(); }

    std::string to_string() const;

    bool operator==(const GeneratorSubset& rhs) const = default;

private:
    GeneratorSubset(int n, std::vector<int> indices)
        : n_(n), indices_(std::move(indices)) {}

    int n_ = 0;
    std::vector<int> indices_;  // sorted, unique
};

/// The interval family J = S \ {s_k, s_{k+1}, ..., s_i}. The closed product
/// formulas are stated for these J; 1 <= k <= i <= n-1.
struct ParabolicInterval {
    int n;
    int k;
    int i;

    ParabolicInterval(int n_, int k_, int i_);

    /// All generator indices except k..i.
    GeneratorSubset to_subset() const;

    /// "k..i" (CLI notation for the excluded run).
    std::string to_string() const;

    bool operator==(const ParabolicInterval& rhs) const = default;
};

/// Minimal-coset-representative test: u lies in (S_n)^J iff l(s u) > l(u)
/// for every s in J, i.e. iff the value j appears before j+1 in u for every
/// s_j in J. (This follows the left-multiplication characterization; the
/// recursion then acts by right multiplication.)
bool is_minimal_rep(const Permutation& u, const GeneratorSubset& J);
bool is_minimal_rep(const Permutation& u, const ParabolicInterval& interval);

/// All of (S_n)^J in lexicographic one-line order, by filtering the n!
/// permutations. Guarded to n <= 10; the desk-scale workloads stop well
/// before that.
std::vector<Permutation> enumerate_quotient(int n, const GeneratorSubset& J);
std::vector<Permutation> enumerate_quotient(int n, const ParabolicInterval& interval);

/// Bruhat order via the dominance criterion: u <= v iff for all t, j the
/// first t positions of u hold at least as many values < j as those of v.
/// O(n^2) counting tables per pair; this is the general-purpose comparator
/// and the oracle the b-statistic shortcut is checked against.
bool bruhat_leq(const Permutation& u, const Permutation& v);

/// Bruhat test for quotient pairs via b-statistics: u <= v iff
/// b_stat(u, v, t, j) >= 0 for every t in {k, ..., i} and every position j.
/// For k = i-2 this is exactly the three-statistic criterion; the general
/// interval form follows from the same descent argument (descents of u^-1
/// all lie in {k, ..., i}), which is a derived extension of the published
/// three-generator statement. Both arguments must lie in the quotient.
bool bruhat_leq_quotient(const Permutation& u, const Permutation& v,
                         const ParabolicInterval& interval);

/// n! / (k! * (n-i)!) as a 64-bit count: the cardinality of the interval
/// quotient, used by the structural-invariant checks.
long long interval_quotient_size(const ParabolicInterval& interval);

}  // namespace klr
