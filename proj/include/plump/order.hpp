#ifndef PLUMP_ORDER_HPP
#define PLUMP_ORDER_HPP

#include "plump/wtree.hpp"

namespace plump {

// The plump ordering is the smallest pair of relations closed under
//
//     exists b_1..b_n in children(v), n >= 1:  u <= join_i v.child(b_i)
//     ------------------------------------------------------------------
//                              u covered v
//
//     forall b in children(u):  u.child(b) covered v
//     -----------------------------------------------
//                        u <= v
//
// le() and covered() decide them with one derived shortcut: every subset
// join is bounded above by the join of all of v's children, and le is
// transitive, so the full child set is an optimal existential witness.
// covered(u, v) therefore reduces to le(u, joinN(children(v))), which makes
// the procedures polynomial. le_naive()/covered_naive() enumerate witness
// subsets literally and exist to cross-validate that reduction.
//
// Termination: le recurses on (child of u, v) and covered recurses on
// (u, joinN(children(v))) with size(joinN(children(v))) < size(v), so
// size(u) + size(v) strictly decreases on every recursive call.

/// u <= v. Vacuously true when u has no children.
bool le(const Tree& u, const Tree& v);

/// u covered-by v (strictly below). False when v has no children.
bool covered(const Tree& u, const Tree& v);

/// Rule-literal references: covered_naive enumerates every non-empty subset
/// of v's child indices (distinct indices, ascending order) and tests
/// le_naive against the subset join. Exponential in child counts; intended
/// for small trees.
bool le_naive(const Tree& u, const Tree& v);
bool covered_naive(const Tree& u, const Tree& v);

/// Drops the memo table of the calling thread. Results are unaffected;
/// le/covered are pure.
void clear_memo();

/// Turns memoization on or off for the calling thread (on by default).
/// Exists so tests can compare memoized and memo-free runs.
void set_memo_enabled(bool enabled);

}  // namespace plump

#endif
