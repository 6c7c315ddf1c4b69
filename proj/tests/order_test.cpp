#include <doctest.h>

#include <random>
#include <thread>
#include <utility>
#include <vector>

#include "plump/laws.hpp"
#include "plump/order.hpp"
#include "plump/wtree.hpp"

using namespace plump;

namespace {

BaseSignature sig_sp() {
  BaseSignature sig;
  sig.add_shape("s", 1);
  sig.add_shape("p", 2);
  return sig;
}

GenConfig cfg_with(std::uint64_t seed, std::uint32_t budget) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.size_budget = budget;
  cfg.signature = sig_sp();
  return cfg;
}

}  // namespace

TEST_CASE("le base cases") {
  BaseSignature sig = sig_sp();
  Tree z = zero(sig);
  Tree one = nat_tree(sig, 1);
  Tree two = nat_tree(sig, 2);
  Tree three = nat_tree(sig, 3);

  CHECK(le(z, z));
  CHECK(le(z, one));
  CHECK(le(z, make_node(sig, Shape{{"p"}}, {two, z})));
  CHECK(le(two, two));
  CHECK_FALSE(le(three, two));
  CHECK(le(join2(one, one), one));
}

TEST_CASE("covered base cases") {
  BaseSignature sig = sig_sp();
  Tree z = zero(sig);
  Tree one = nat_tree(sig, 1);
  Tree two = nat_tree(sig, 2);

  CHECK_FALSE(covered(z, z));
  CHECK_FALSE(covered(one, z));
  CHECK_FALSE(covered(join2(one, two), z));
  CHECK(covered(one, two));
  CHECK_FALSE(covered(two, two));

  // The join of all children is covered by the parent.
  for (const Tree& v : {two, join2(one, two), make_node(sig, Shape{{"p"}}, {one, one})}) {
    REQUIRE_FALSE(v.children().empty());
    CHECK(covered(joinN(v.children()), v));
  }
}

TEST_CASE("naive oracle base cases") {
  BaseSignature sig = sig_sp();
  Tree z = zero(sig);
  Tree one = nat_tree(sig, 1);
  Tree two = nat_tree(sig, 2);

  CHECK(covered_naive(z, one));
  CHECK(le_naive(one, one));
  CHECK_FALSE(covered_naive(z, z));
  CHECK_FALSE(covered_naive(two, z));
  CHECK(covered_naive(one, two));
  CHECK_FALSE(covered_naive(two, two));
  CHECK(le_naive(join2(one, one), one));
  CHECK_FALSE(le_naive(nat_tree(sig, 3), two));
}

TEST_CASE("naturals model: le is m<=n, covered is m<n") {
  BaseSignature sig = sig_sp();
  std::vector<Tree> nats;
  for (std::uint64_t n = 0; n <= 12; ++n) nats.push_back(nat_tree(sig, n));
  for (std::uint64_t m = 0; m <= 12; ++m) {
    for (std::uint64_t n = 0; n <= 12; ++n) {
      CHECK(le(nats[m], nats[n]) == (m <= n));
      CHECK(covered(nats[m], nats[n]) == (m < n));
    }
  }
  // The rule-literal oracle agrees on a smaller square.
  for (std::uint64_t m = 0; m <= 7; ++m) {
    for (std::uint64_t n = 0; n <= 7; ++n) {
      CHECK(le_naive(nats[m], nats[n]) == (m <= n));
      CHECK(covered_naive(nats[m], nats[n]) == (m < n));
    }
  }
}

TEST_CASE("optimized procedures agree with the rule-literal oracle") {
  GenConfig cfg = cfg_with(7001, 8);
  std::mt19937_64 rng(cfg.seed);
  for (int i = 0; i < 600; ++i) {
    Tree u = random_tree(cfg, rng);
    Tree v = random_tree(cfg, rng);
    CAPTURE(i);
    CHECK(le(u, v) == le_naive(u, v));
    CHECK(covered(u, v) == covered_naive(u, v));
  }
}

TEST_CASE("memoization does not change results") {
  GenConfig cfg = cfg_with(555, 10);
  std::mt19937_64 rng(cfg.seed);
  std::vector<std::pair<Tree, Tree>> pairs;
  for (int i = 0; i < 300; ++i) {
    Tree u = random_tree(cfg, rng);
    Tree v = random_tree(cfg, rng);
    pairs.emplace_back(u, v);
  }

  clear_memo();  // no-op on fresh state
  std::vector<std::pair<bool, bool>> with_memo;
  for (const auto& [u, v] : pairs) with_memo.emplace_back(le(u, v), covered(u, v));

  set_memo_enabled(false);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    CHECK(le(pairs[i].first, pairs[i].second) == with_memo[i].first);
    CHECK(covered(pairs[i].first, pairs[i].second) == with_memo[i].second);
  }
  set_memo_enabled(true);

  // Same answers after dropping the table mid-stream.
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i % 7 == 0) clear_memo();
    CHECK(le(pairs[i].first, pairs[i].second) == with_memo[i].first);
  }
  clear_memo();
}

TEST_CASE("le/covered relational laws on random triples") {
  GenConfig cfg = cfg_with(90210, 12);
  std::mt19937_64 rng(cfg.seed);
  for (int i = 0; i < 400; ++i) {
    Tree u = random_tree(cfg, rng);
    Tree v = random_tree(cfg, rng);
    Tree w = random_tree(cfg, rng);

    CHECK(le(u, u));
    CHECK_FALSE(covered(u, u));
    if (covered(u, v)) {
      CHECK(le(u, v));
      CHECK_FALSE(covered(v, u));
    }
    if (le(u, v) && le(v, w)) CHECK(le(u, w));
    if (covered(u, v) && covered(v, w)) CHECK(covered(u, w));
    if (le(u, v) && covered(v, w)) CHECK(covered(u, w));
    if (covered(u, v) && le(v, w)) CHECK(covered(u, w));
  }
}

TEST_CASE("concurrent callers see memo-free semantics") {
  GenConfig cfg = cfg_with(1812, 10);
  std::mt19937_64 rng(cfg.seed);
  std::vector<std::pair<Tree, Tree>> pairs;
  for (int i = 0; i < 200; ++i) {
    pairs.emplace_back(random_tree(cfg, rng), random_tree(cfg, rng));
  }
  std::vector<std::pair<bool, bool>> expected;
  for (const auto& [u, v] : pairs) expected.emplace_back(le(u, v), covered(u, v));

  std::vector<std::vector<std::pair<bool, bool>>> got(4);
  std::vector<std::thread> workers;
  for (auto& slot : got) {
    workers.emplace_back([&pairs, &slot] {
      for (const auto& [u, v] : pairs) slot.emplace_back(le(u, v), covered(u, v));
    });
  }
  for (auto& t : workers) t.join();
  for (const auto& slot : got) CHECK(slot == expected);
}

TEST_CASE("duplicate witnesses add no power") {
  GenConfig cfg = cfg_with(8088, 10);
  std::mt19937_64 rng(cfg.seed);
  for (int i = 0; i < 300; ++i) {
    Tree u = random_tree(cfg, rng);
    Tree w = random_tree(cfg, rng);
    Tree uu = join2(u, u);
    CHECK(le(u, uu));
    CHECK(le(uu, u));
    CHECK(le(w, uu) == le(w, u));
  }
}
