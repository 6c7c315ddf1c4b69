#ifndef PLUMP_LISTORDER_HPP
#define PLUMP_LISTORDER_HPP

#include <algorithm>
#include <functional>
#include <span>
#include <vector>

#include "plump/errors.hpp"
#include "plump/wtree.hpp"

namespace plump {

/// A strict-order predicate on elements. Not validated at construction; the
/// list ordering below is only meaningful when `lt` is a strict order.
template <typename T>
struct ElemOrder {
  std::function<bool(const T&, const T&)> lt;
};

/// The auxiliary list ordering: xs is below ys iff ys is non-empty and every
/// element of xs is lt-below some element of ys. The witnessing map is
/// unconstrained (it need not be injective), so the check decomposes
/// pointwise in O(|xs|*|ys|).
template <typename T>
bool list_lt(std::span<const T> xs, std::span<const T> ys, const ElemOrder<T>& ord) {
  if (ys.empty()) return false;
  for (const T& x : xs) {
    bool dominated = false;
    for (const T& y : ys) {
      if (ord.lt(x, y)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return false;
  }
  return true;
}

template <typename T>
bool list_lt(const std::vector<T>& xs, const std::vector<T>& ys, const ElemOrder<T>& ord) {
  return list_lt(std::span<const T>(xs), std::span<const T>(ys), ord);
}

/// Whether list_lt gives the same answer on (xs, ys) and on permutations of
/// the two sides. Always true for a correct list_lt; the permutation
/// arguments are validated and a mismatch throws Error.
template <typename T>
bool check_perm_invariance(const std::vector<T>& xs, const std::vector<T>& ys,
                           const std::vector<T>& perm_xs, const std::vector<T>& perm_ys,
                           const ElemOrder<T>& ord) {
  if (!std::is_permutation(xs.begin(), xs.end(), perm_xs.begin(), perm_xs.end()) ||
      !std::is_permutation(ys.begin(), ys.end(), perm_ys.begin(), perm_ys.end())) {
    throw Error("check_perm_invariance: arguments are not permutations");
  }
  return list_lt(xs, ys, ord) == list_lt(perm_xs, perm_ys, ord);
}

/// The canonical strictly descending chain from u: each step replaces the
/// current tree with the join of all its children (its greatest guaranteed
/// covered-predecessor) until a childless tree is reached. Returns the whole
/// chain [u, ..., last]; consecutive entries satisfy covered(next, current)
/// and strictly decrease in size, so the chain is finite.
std::vector<Tree> greedy_descend(const Tree& u);

}  // namespace plump

#endif
