#pragma once

#include <string>
#include <vector>

#include "klr/errors.hpp"

namespace klr {

/// Element of the symmetric group S_n in one-line notation.
///
/// Positions and values are 1-based throughout, matching the usual
/// combinatorics conventions; the 0-based adjustment happens only inside
/// this class. Instances are immutable values: every operation returns a
/// fresh permutation, so they are safe memo keys and freely shareable
/// across threads.
class Permutation {
public:
    /// Identity of S_n. n must be at least 1.
    static Permutation identity(int n);

    /// Builds from one-line notation (entries[i-1] = u(i)); validates that
    /// the entries are a rearrangement of 1..n.
    static Permutation from_one_line(std::vector<int> entries);

    /// Parses either a separated value list ("4,1,6,2,7,3,8,5,9", spaces
    /// also accepted) or a compact digit string ("416273859", n <= 9 only).
    static Permutation parse(const std::string& text);

    int degree() const { return static_cast<int>(entries_.size()); }

    /// Value at position i (1-based).
    int at(int i) const;
    int operator()(int i) const { return at(i); }

    const std::vector<int>& one_line() const { return entries_; }

    /// Pointwise product: (u*v)(i) = u(v(i)). Degrees must match.
    Permutation compose(const Permutation& v) const;

    Permutation inverse() const;

    /// Inversion count |{(i,j) : i < j, u(i) > u(j)}|.
    int length() const;

    /// Generator indices j with u(j) > u(j+1), ascending.
    std::vector<int> right_descents() const;

    /// True iff u(j) > u(j+1).
    bool is_right_descent(int j) const;

    /// u * s_j: entries at positions j and j+1 swapped. 1 <= j <= n-1.
    Permutation right_mult_adjacent(int j) const;

    /// Canonical text form: comma-separated values ("4,1,6,2,7,3,8,5,9").
    std::string to_string() const;

    bool operator==(const Permutation& rhs) const = default;
    /// Lexicographic order on one-line notation.
    bool operator<(const Permutation& rhs) const { return entries_ < rhs.entries_; }

private:
    explicit Permutation(std::vector<int> entries) : entries_(std::move(entries)) {}

    std::vector<int> entries_;  // entries_[i-1] = u(i), a rearrangement of 1..n
};

}  // namespace klr
