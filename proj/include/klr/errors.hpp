#pragma once

#include <stdexcept>
#include <string>

namespace klr {

/// Base class for all library errors; every failure mode below is a
/// distinct type so callers can react to (or report) them individually.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (permutation strings, interval syntax, ...).
struct ParseError : Error {
    using Error::Error;
};

/// A value violates a documented precondition (n = 0, index out of range).
struct DomainError : Error {
    using Error::Error;
};

/// Binary operation on permutations of different degrees.
struct DegreeMismatchError : Error {
    using Error::Error;
};

/// A permutation is not a minimal coset representative for the given J.
struct QuotientMembershipError : Error {
    using Error::Error;
};

/// u is not below v in the Bruhat order where the operation requires it.
struct NotComparableError : Error {
    using Error::Error;
};

/// v lacks the increasing-order condition required by a closed formula.
struct IncreasingOrderError : Error {
    using Error::Error;
};

/// Polynomial degree exceeds the reversal bound; in the duality check this
/// is a reportable finding, never a silent clamp.
struct DegreeBoundError : Error {
    using Error::Error;
};

}  // namespace klr
