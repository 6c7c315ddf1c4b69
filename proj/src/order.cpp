#include "plump/order.hpp"

#include <cassert>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "plump/errors.hpp"

namespace plump {

namespace {

struct PairKey {
  Tree u;
  Tree v;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const {
    std::size_t h = k.u.hash();
    h ^= k.v.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Keys compare by structure, not by hash, so a hash collision cannot turn
// into a wrong answer.
struct PairKeyEq {
  bool operator()(const PairKey& a, const PairKey& b) const {
    return a.u == b.u && a.v == b.v;
  }
};

using Memo = std::unordered_map<PairKey, bool, PairKeyHash, PairKeyEq>;

thread_local Memo le_memo;
thread_local bool memo_enabled = true;

bool le_impl(const Tree& u, const Tree& v, std::uint64_t caller_measure);

// measure = size(u) + size(v); every recursive call strictly decreases it.
bool covered_impl(const Tree& u, const Tree& v, std::uint64_t caller_measure) {
  const std::uint64_t measure = u.size() + v.size();
  assert(measure < caller_measure);
  (void)caller_measure;
  if (v.children().empty()) return false;
  Tree all = joinN(v.children());
  return le_impl(u, all, measure);
}

bool le_impl(const Tree& u, const Tree& v, std::uint64_t caller_measure) {
  const std::uint64_t measure = u.size() + v.size();
  assert(measure < caller_measure);
  (void)caller_measure;
  if (u.children().empty()) return true;
  if (memo_enabled) {
    auto it = le_memo.find(PairKey{u, v});
    if (it != le_memo.end()) return it->second;
  }
  bool result = true;
  for (const Tree& c : u.children()) {
    if (!covered_impl(c, v, measure)) {
      result = false;
      break;
    }
  }
  if (memo_enabled) le_memo.emplace(PairKey{u, v}, result);
  return result;
}

}  // namespace

bool le(const Tree& u, const Tree& v) {
  return le_impl(u, v, u.size() + v.size() + 1);
}

bool covered(const Tree& u, const Tree& v) {
  return covered_impl(u, v, u.size() + v.size() + 1);
}

bool le_naive(const Tree& u, const Tree& v) {
  for (const Tree& c : u.children()) {
    if (!covered_naive(c, v)) return false;
  }
  return true;
}

bool covered_naive(const Tree& u, const Tree& v) {
  const auto& kids = v.children();
  const std::size_t n = kids.size();
  if (n == 0) return false;
  if (n > 62) {
    throw Error("covered_naive: " + std::to_string(n) +
                " children exceed the subset-enumeration limit");
  }
  std::vector<Tree> selected;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    selected.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) selected.push_back(kids[i]);
    }
    if (le_naive(u, joinN(selected))) return true;
  }
  return false;
}

void clear_memo() { le_memo.clear(); }

void set_memo_enabled(bool enabled) {
  memo_enabled = enabled;
  if (!enabled) le_memo.clear();
}

}  // namespace plump
