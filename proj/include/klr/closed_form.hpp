#pragma once

#include "klr/polynomial.hpp"
#include "klr/statistics.hpp"

namespace klr {

/// Which displayed branch of the two-generator formula to evaluate.
/// Plain uses statistics over [i], Tilde over [i-1]; the branches apply when
/// u^-1(i) >= v^-1(i) and u^-1(i) <= v^-1(i) respectively, overlapping at
/// equality (where the overlap suite checks they coincide).
enum class DoubleBranch { Plain, Tilde };

/// General interval product formula
///   (-1)^(l(v)-l(u)) * prod_{t=k+1..i} (1 - q + delta_{p_t,q_t} q^(1+a_{q_t}))
///                    * prod_{j in D}   (1 - q^(a_j))
/// for u <= v in the quotient, where v carries the values k+1..i in
/// increasing order. Built in factored form and expanded exactly.
/// Throws NotComparableError / IncreasingOrderError on precondition
/// violations -- never a silent zero.
IntPolynomial conjecture_formula(const PairContext& ctx);

/// Single-generator quotient formula (J = S \ {s_i}):
///   (-1)^(l(v)-l(u)) * prod_{j in D} (1 - q^(a_j)),
/// statistics taken over the value set [i].
IntPolynomial brenti_single(const Permutation& u, const Permutation& v, int i);

/// Two-generator quotient formula (J = S \ {s_{i-1}, s_i}), i >= 2: selects
/// the plain branch when u^-1(i) >= v^-1(i) and the tilde branch otherwise.
IntPolynomial brenti_double(const Permutation& u, const Permutation& v, int i);

/// A specific branch of the two-generator formula, for the overlap check.
/// Requires the branch's own applicability condition to hold.
IntPolynomial brenti_double_branch(const Permutation& u, const Permutation& v, int i,
                                   DoubleBranch branch);

/// Three-generator quotient formula (J = S \ {s_{i-2}, s_{i-1}, s_i}),
/// i >= 3, valid when i appears after i-1 in v:
///   (-1)^(l(v)-l(u)) * (1 - q + delta q^(1+a_{q_{i-1}}))
///                    * (1 - q + delta q^(1+a_{q_i}))
///                    * prod_{j in D} (1 - q^(a_j)).
IntPolynomial triple_formula(const Permutation& u, const Permutation& v, int i);

/// Harness-friendly dispatcher: returns zero when u is not below v
/// (mirroring rule (i) of the recursion) and otherwise evaluates the
/// general formula, propagating its other precondition errors.
IntPolynomial r_closed(const Permutation& u, const Permutation& v,
                       const ParabolicInterval& interval);

/// True iff the values k+1..i appear in increasing order in v (vacuous for
/// k = i). This is the admissibility condition of the general formula.
bool increasing_condition_holds(const Permutation& v, const ParabolicInterval& interval);

}  // namespace klr
