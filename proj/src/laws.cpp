#include "plump/laws.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>
#include <utility>

#include "plump/errors.hpp"
#include "plump/order.hpp"
#include "plump/treetext.hpp"

namespace plump {

namespace {

// Generator bias constants; echoed in the report so runs are interpretable.
constexpr std::size_t kMaxTagLen = 4;
// Tag extension proceeds while (rng() & 1), i.e. probability 1/2 per step.

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  // n is tiny here (tag choices, budget splits); modulo bias is irrelevant.
  return rng() % n;
}

Tree gen_tree(const BaseSignature& sig, std::uint64_t budget, std::mt19937_64& rng) {
  const std::uint64_t avail = budget - 1;  // nodes left for children
  Shape tag;
  std::uint64_t total_arity = 0;
  if (sig.base_count() > 0) {
    while (tag.names.size() < kMaxTagLen && (rng() & 1) != 0) {
      const auto& [name, ar] = sig.base_at(uniform_below(rng, sig.base_count()));
      if (total_arity + ar > avail) break;
      tag.names.push_back(name);
      total_arity += ar;
    }
  }
  std::vector<Tree> children;
  children.reserve(total_arity);
  std::uint64_t remaining = avail;
  for (std::uint64_t i = 0; i < total_arity; ++i) {
    const std::uint64_t reserve_rest = total_arity - 1 - i;  // one node per later child
    const std::uint64_t max_budget = remaining - reserve_rest;
    const std::uint64_t child_budget = 1 + uniform_below(rng, max_budget);
    children.push_back(gen_tree(sig, child_budget, rng));
    remaining -= child_budget;
  }
  return make_node(sig, std::move(tag), std::move(children));
}

std::string join_exprs(std::span<const Tree> trees) {
  std::string out;
  for (const Tree& t : trees) {
    if (!out.empty()) out += ' ';
    out += print_tree(t);
  }
  return out;
}

}  // namespace

void GenConfig::validate() const {
  if (size_budget < 1) throw ConfigError("GenConfig: size_budget must be >= 1");
  if (cases < 1) throw ConfigError("GenConfig: cases must be >= 1");
}

Tree random_tree(const GenConfig& cfg, std::mt19937_64& rng) {
  cfg.validate();
  return gen_tree(cfg.signature, cfg.size_budget, rng);
}

bool check_refl(const Tree& u) { return le(u, u); }

bool check_trans_flex(const Tree& u, const Tree& v, const Tree& w) {
  const bool le_uv = le(u, v), le_vw = le(v, w);
  const bool cov_uv = covered(u, v), cov_vw = covered(v, w);
  if (le_uv && le_vw && !le(u, w)) return false;
  if (cov_uv && cov_vw && !covered(u, w)) return false;
  if (le_uv && cov_vw && !covered(u, w)) return false;   // left flex
  if (cov_uv && le_vw && !covered(u, w)) return false;   // right flex
  return true;
}

bool check_cov_implies_le(const Tree& u, const Tree& v) {
  return !covered(u, v) || le(u, v);
}

bool check_lub_universal(std::span<const Tree> us, const Tree& v) {
  Tree big = joinN(us);
  bool each_le = true;
  bool each_cov = true;
  for (const Tree& u : us) {
    if (!le(u, v)) each_le = false;
    if (!covered(u, v)) each_cov = false;
  }
  if (le(big, v) != each_le) return false;
  if (each_cov && !covered(big, v)) return false;
  return true;
}

bool check_directed(const Tree& u, const Tree& v, const Tree& w) {
  if (!covered(u, w) || !covered(v, w)) return true;
  return covered(join2(u, v), w);
}

bool check_least(const Tree& u) { return le(zero(), u); }

bool check_upper_bound(const Tree& u) {
  for (const Tree& c : u.children()) {
    if (!covered(c, u)) return false;
  }
  return true;
}

bool check_wf_consequences(const Tree& u, const Tree& v) {
  if (covered(u, u)) return false;
  if (covered(u, v) && covered(v, u)) return false;
  return true;
}

bool check_oracle_agreement(const Tree& u, const Tree& v) {
  return le(u, v) == le_naive(u, v) && covered(u, v) == covered_naive(u, v);
}

bool LawReport::all_passed() const {
  for (const auto& law : laws) {
    if (law.passed != law.attempted) return false;
  }
  return true;
}

std::string LawReport::to_text() const {
  std::ostringstream out;
  out << "seed " << seed << '\n';
  for (const auto& law : laws) {
    out << law.name << ' ' << law.passed << '/' << law.attempted;
    if (law.counterexample) out << " counterexample: " << *law.counterexample;
    out << '\n';
  }
  out << "elapsed: " << std::fixed << std::setprecision(3) << elapsed_seconds << "s\n";
  out << "gen: extend-prob=1/2 max-tag-len=" << kMaxTagLen << " child-budget=uniform-split\n";
  out << "note: well-foundedness is not decidable; the suite checks its refutable "
         "consequences (covered-irreflexivity, covered-asymmetry) only\n";
  return out.str();
}

LawReport run_suite(const GenConfig& cfg) {
  cfg.validate();
  const auto started = std::chrono::steady_clock::now();

  LawReport report;
  report.seed = cfg.seed;
  const char* names[] = {"refl",       "trans-flex",      "cov-implies-le",
                         "lub-universal", "directed",     "least",
                         "upper-bound", "wf-consequences", "oracle-agreement"};
  for (const char* name : names) report.laws.push_back(LawResult{name, 0, 0, std::nullopt});

  auto record = [&report](std::size_t idx, bool ok, auto&& witness_fn) {
    LawResult& law = report.laws[idx];
    ++law.attempted;
    if (ok) {
      ++law.passed;
    } else if (!law.counterexample) {
      law.counterexample = witness_fn();
    }
  };

  std::mt19937_64 rng(cfg.seed);
  for (std::uint32_t i = 0; i < cfg.cases; ++i) {
    Tree u = random_tree(cfg, rng);
    Tree v = random_tree(cfg, rng);
    Tree w = random_tree(cfg, rng);
    std::vector<Tree> us;
    const std::uint64_t n_us = 1 + uniform_below(rng, 3);
    us.reserve(n_us);
    for (std::uint64_t k = 0; k < n_us; ++k) us.push_back(random_tree(cfg, rng));

    auto one = [&u] { return print_tree(u); };
    auto uv = [&u, &v] { return join_exprs(std::vector<Tree>{u, v}); };
    auto uvw = [&u, &v, &w] { return join_exprs(std::vector<Tree>{u, v, w}); };

    record(0, check_refl(u), one);
    record(1, check_trans_flex(u, v, w), uvw);
    record(2, check_cov_implies_le(u, v), uv);
    record(3, check_lub_universal(us, v),
           [&us, &v] { return join_exprs(us) + " " + print_tree(v); });
    record(4, check_directed(u, v, w), uvw);
    record(5, check_least(u), one);
    record(6, check_upper_bound(u), one);
    record(7, check_wf_consequences(u, v), uv);
    record(8, check_oracle_agreement(u, v), uv);
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace plump
