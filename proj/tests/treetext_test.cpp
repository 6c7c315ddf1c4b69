#include <doctest.h>

#include <random>

#include "plump/errors.hpp"
#include "plump/laws.hpp"
#include "plump/treetext.hpp"

using namespace plump;

namespace {

BaseSignature sig_sp() {
  BaseSignature sig;
  sig.add_shape("s", 1);
  sig.add_shape("p", 2);
  return sig;
}

}  // namespace

TEST_CASE("parse_tree sugar and basic forms") {
  BaseSignature sig = sig_sp();
  CHECK(parse_tree("zero", sig) == zero(sig));
  CHECK(parse_tree("(w [])", sig) == zero(sig));
  CHECK(parse_tree("(w [s] zero)", sig) == nat_tree(sig, 1));
  CHECK(parse_tree("(nat 0)", sig) == zero(sig));
  CHECK(parse_tree("(nat 3)", sig) == nat_tree(sig, 3));
  CHECK(parse_tree("(w [p] (nat 1) zero)", sig) ==
        make_node(sig, Shape{{"p"}}, {nat_tree(sig, 1), zero(sig)}));
}

TEST_CASE("parse_tree is whitespace-insensitive") {
  BaseSignature sig = sig_sp();
  CHECK(parse_tree("(w[s]zero)", sig) == nat_tree(sig, 1));
  CHECK(parse_tree("  ( w  [ s s ]\n zero\tzero )  ", sig) ==
        join2(nat_tree(sig, 1), nat_tree(sig, 1)));
}

TEST_CASE("parse_tree errors") {
  BaseSignature sig = sig_sp();
  CHECK_THROWS_AS(parse_tree("(w [s])", sig), ArityMismatch);
  CHECK_THROWS_AS(parse_tree("(w [q])", sig), InvalidShape);
  CHECK_THROWS_AS(parse_tree("", sig), ParseError);
  CHECK_THROWS_AS(parse_tree("(w []", sig), ParseError);
  CHECK_THROWS_AS(parse_tree("(w [] zero", sig), ParseError);
  CHECK_THROWS_AS(parse_tree("w []", sig), ParseError);
  CHECK_THROWS_AS(parse_tree("(v [])", sig), ParseError);
  CHECK_THROWS_AS(parse_tree("(nat x)", sig), ParseError);
  CHECK_THROWS_AS(parse_tree("(w []) zero", sig), ParseError);
  CHECK_THROWS_AS(parse_tree("(w [] $)", sig), ParseError);

  try {
    parse_tree("(w [] $)", sig);
  } catch (const ParseError& e) {
    CHECK(e.column == 7);
  }

  BaseSignature no_s;
  no_s.add_shape("p", 2);
  CHECK_THROWS_AS(parse_tree("(nat 1)", no_s), ConfigError);
}

TEST_CASE("print_tree canonical form") {
  BaseSignature sig = sig_sp();
  CHECK(print_tree(zero(sig)) == "(w [])");
  CHECK(print_tree(nat_tree(sig, 1)) == "(w [s] (w []))");
  CHECK(print_tree(join2(nat_tree(sig, 1), nat_tree(sig, 1))) == "(w [s s] (w []) (w []))");
}

TEST_CASE("parse/print round-trip on random trees") {
  GenConfig cfg;
  cfg.seed = 31337;
  cfg.size_budget = 12;
  cfg.signature = sig_sp();
  std::mt19937_64 rng(cfg.seed);
  for (int i = 0; i < 1000; ++i) {
    Tree u = random_tree(cfg, rng);
    Tree back = parse_tree(print_tree(u), cfg.signature);
    CHECK(back == u);
  }
}
