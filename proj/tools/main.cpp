#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plump/container.hpp"
#include "plump/errors.hpp"
#include "plump/laws.hpp"
#include "plump/listorder.hpp"
#include "plump/order.hpp"
#include "plump/treetext.hpp"
#include "plump/wtree.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;  // a law failed / oracles disagreed
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;  // bad signature/tree/list input

plump::BaseSignature load_signature(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw plump::Error("cannot read signature file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return plump::parse_signature(buf.str());
}

// "1,2,3" -> {1,2,3}; "" -> {}. Spaces around numbers are allowed.
std::vector<std::uint64_t> parse_nat_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::string trimmed;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  }
  if (trimmed.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = trimmed.find(',', start);
    std::string field = trimmed.substr(start, comma - start);
    if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos) {
      throw plump::ParseError("invalid number list entry '" + field + "'");
    }
    out.push_back(std::stoull(field));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct SuiteFlags {
  std::string sig_path;
  std::uint64_t seed = 42;
  std::uint32_t cases = 1000;
  std::uint32_t size = 12;
};

int run_check_laws(const SuiteFlags& flags) {
  plump::GenConfig cfg;
  cfg.seed = flags.seed;
  cfg.cases = flags.cases;
  cfg.size_budget = flags.size;
  cfg.signature = load_signature(flags.sig_path);
  plump::LawReport report = plump::run_suite(cfg);
  std::cout << report.to_text();
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

int run_oracle_compare(const SuiteFlags& flags) {
  plump::GenConfig cfg;
  cfg.seed = flags.seed;
  cfg.cases = flags.cases;
  cfg.size_budget = flags.size;
  cfg.signature = load_signature(flags.sig_path);
  cfg.validate();

  std::mt19937_64 rng(cfg.seed);
  std::uint64_t le_agree = 0, covered_agree = 0;
  std::string first_disagreement;
  for (std::uint32_t i = 0; i < cfg.cases; ++i) {
    plump::Tree u = plump::random_tree(cfg, rng);
    plump::Tree v = plump::random_tree(cfg, rng);
    const bool le_ok = plump::le(u, v) == plump::le_naive(u, v);
    const bool cov_ok = plump::covered(u, v) == plump::covered_naive(u, v);
    if (le_ok) ++le_agree;
    if (cov_ok) ++covered_agree;
    if (!(le_ok && cov_ok) && first_disagreement.empty()) {
      first_disagreement = plump::print_tree(u) + " " + plump::print_tree(v);
    }
  }
  std::cout << "seed " << cfg.seed << '\n';
  std::cout << "le-agree " << le_agree << '/' << cfg.cases << '\n';
  std::cout << "covered-agree " << covered_agree << '/' << cfg.cases << '\n';
  if (!first_disagreement.empty()) {
    std::cout << "first-disagreement: " << first_disagreement << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

void add_suite_flags(CLI::App* cmd, SuiteFlags& flags) {
  cmd->add_option("--sig", flags.sig_path, "signature file")->required();
  cmd->add_option("--seed", flags.seed, "RNG seed");
  cmd->add_option("--cases", flags.cases, "number of randomized cases")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--size", flags.size, "max nodes per generated tree")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"directed plump ordering on W-types: comparisons, joins, descents, law suite"};
  app.require_subcommand(1);

  std::string sig_path;
  bool use_naive = false;
  std::string lhs_expr, rhs_expr;
  std::vector<std::string> join_exprs;
  std::string chain_expr;
  std::string xs_text, ys_text;
  SuiteFlags laws_flags;
  SuiteFlags oracle_flags;
  oracle_flags.seed = 7;
  oracle_flags.cases = 500;
  oracle_flags.size = 8;

  auto* le_cmd = app.add_subcommand("le", "decide lhs <= rhs; prints true/false");
  le_cmd->add_option("--sig", sig_path, "signature file")->required();
  le_cmd->add_flag("--naive", use_naive, "use the rule-literal oracle");
  le_cmd->add_option("lhs", lhs_expr, "tree expression")->required();
  le_cmd->add_option("rhs", rhs_expr, "tree expression")->required();

  auto* covered_cmd = app.add_subcommand("covered", "decide lhs covered-by rhs; prints true/false");
  covered_cmd->add_option("--sig", sig_path, "signature file")->required();
  covered_cmd->add_flag("--naive", use_naive, "use the rule-literal oracle");
  covered_cmd->add_option("lhs", lhs_expr, "tree expression")->required();
  covered_cmd->add_option("rhs", rhs_expr, "tree expression")->required();

  auto* join_cmd = app.add_subcommand("join", "print the n-ary join of the arguments");
  join_cmd->add_option("--sig", sig_path, "signature file")->required();
  join_cmd->add_option("exprs", join_exprs, "tree expressions (two or more)");

  auto* chain_cmd = app.add_subcommand("chain", "print the greedy descent chain");
  chain_cmd->add_option("--sig", sig_path, "signature file")->required();
  chain_cmd->add_option("expr", chain_expr, "tree expression")->required();

  auto* listlt_cmd =
      app.add_subcommand("listlt", "list ordering over numeric <; args like \"1,2,3\"");
  listlt_cmd->add_option("--sig", sig_path, "ignored; accepted for uniformity");
  listlt_cmd->add_option("xs", xs_text, "comma-separated naturals")->required();
  listlt_cmd->add_option("ys", ys_text, "comma-separated naturals")->required();

  auto* laws_cmd = app.add_subcommand("check-laws", "run the randomized law suite");
  add_suite_flags(laws_cmd, laws_flags);

  auto* oracle_cmd =
      app.add_subcommand("oracle-compare", "cross-validate le/covered against the naive oracle");
  add_suite_flags(oracle_cmd, oracle_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*le_cmd || *covered_cmd) {
      plump::BaseSignature sig = load_signature(sig_path);
      plump::Tree lhs = plump::parse_tree(lhs_expr, sig);
      plump::Tree rhs = plump::parse_tree(rhs_expr, sig);
      bool result;
      if (*le_cmd) {
        result = use_naive ? plump::le_naive(lhs, rhs) : plump::le(lhs, rhs);
      } else {
        result = use_naive ? plump::covered_naive(lhs, rhs) : plump::covered(lhs, rhs);
      }
      std::cout << (result ? "true" : "false") << '\n';
      return kExitOk;
    }
    if (*join_cmd) {
      if (join_exprs.size() < 2) {
        std::cerr << "join: expected at least two tree expressions\n";
        return kExitUsage;
      }
      plump::BaseSignature sig = load_signature(sig_path);
      std::vector<plump::Tree> trees;
      trees.reserve(join_exprs.size());
      for (const auto& expr : join_exprs) trees.push_back(plump::parse_tree(expr, sig));
      std::cout << plump::print_tree(plump::joinN(trees)) << '\n';
      return kExitOk;
    }
    if (*chain_cmd) {
      plump::BaseSignature sig = load_signature(sig_path);
      plump::Tree start = plump::parse_tree(chain_expr, sig);
      std::vector<plump::Tree> chain = plump::greedy_descend(start);
      for (const plump::Tree& t : chain) std::cout << plump::print_tree(t) << '\n';
      std::cout << "steps: " << chain.size() - 1 << '\n';
      return kExitOk;
    }
    if (*listlt_cmd) {
      std::vector<std::uint64_t> xs = parse_nat_list(xs_text);
      std::vector<std::uint64_t> ys = parse_nat_list(ys_text);
      plump::ElemOrder<std::uint64_t> numeric{
          [](const std::uint64_t& a, const std::uint64_t& b) { return a < b; }};
      std::cout << (plump::list_lt(xs, ys, numeric) ? "true" : "false") << '\n';
      return kExitOk;
    }
    if (*laws_cmd) return run_check_laws(laws_flags);
    if (*oracle_cmd) return run_oracle_compare(oracle_flags);
  } catch (const plump::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}
