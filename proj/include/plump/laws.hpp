#ifndef PLUMP_LAWS_HPP
#define PLUMP_LAWS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "plump/container.hpp"
#include "plump/wtree.hpp"

namespace plump {

struct GenConfig {
  std::uint64_t seed = 42;
  std::uint32_t size_budget = 12;  // max total nodes per generated tree
  std::uint32_t cases = 1000;
  BaseSignature signature;

  /// Throws ConfigError unless size_budget >= 1 and cases >= 1.
  void validate() const;
};

/// Draws a valid tree with size() <= cfg.size_budget. The tag is grown one
/// base shape at a time while it fits the remaining budget (extend
/// probability 1/2, at most 4 names); the child budgets are uniform splits
/// of what is left. Arity-0 tags (in particular the empty tag) come out
/// often, so vacuous and non-vacuous rule branches are both exercised.
/// Deterministic given the rng state.
Tree random_tree(const GenConfig& cfg, std::mt19937_64& rng);

// One executable checker per law. Each returns true on every input when the
// order procedures are correct; a false return is a counterexample.

/// u <= u.
bool check_refl(const Tree& u);

/// Transitivity of both relations plus the two mixed forms:
/// le-le -> le, covered-covered -> covered, le-covered -> covered,
/// covered-le -> covered.
bool check_trans_flex(const Tree& u, const Tree& v, const Tree& w);

/// covered(u, v) implies le(u, v).
bool check_cov_implies_le(const Tree& u, const Tree& v);

/// joinN(us) <= v iff every us[i] <= v; and if every us[i] is covered by v
/// then so is joinN(us). `us` must be non-empty.
bool check_lub_universal(std::span<const Tree> us, const Tree& v);

/// If u and v are both covered by w then so is join2(u, v).
bool check_directed(const Tree& u, const Tree& v, const Tree& w);

/// zero <= u.
bool check_least(const Tree& u);

/// Every child of u is covered by u (u is an upper bound of its own family).
bool check_upper_bound(const Tree& u);

/// Refutable consequences of well-foundedness: not covered(u, u), and never
/// covered(u, v) and covered(v, u) together.
bool check_wf_consequences(const Tree& u, const Tree& v);

/// The optimized procedures agree with the rule-literal oracles on (u, v).
bool check_oracle_agreement(const Tree& u, const Tree& v);

struct LawResult {
  std::string name;
  std::uint64_t attempted = 0;
  std::uint64_t passed = 0;
  std::optional<std::string> counterexample;  // first failing instance, as tree exprs
};

struct LawReport {
  std::uint64_t seed = 0;
  std::vector<LawResult> laws;
  double elapsed_seconds = 0.0;

  bool all_passed() const;
  std::string to_text() const;
};

/// Runs every checker over cfg.cases randomized instances drawn from
/// cfg.signature. Deterministic given cfg.seed; counterexamples are recorded
/// in the tree expression grammar so they can be replayed.
LawReport run_suite(const GenConfig& cfg);

}  // namespace plump

#endif
