// bnf: Birkhoff normal forms of polynomial Hamiltonians.
//
// Exit codes: 0 success, 1 a check or structure constraint failed, 2 usage or
// parse error.

#include "bnf/driver.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct GlobalFlags {
  std::optional<int> order;
  std::string method = "lie";
  std::string output;
  int max_leaves = bnf::kDefaultMaxLeaves;
  std::uint64_t seed = bnf::kDefaultSeed;
  bool literal_recursion = false;
};

bnf::ProblemSpec load(const std::string& input, const GlobalFlags& g) {
  bnf::ProblemSpec spec = input == "-" ? bnf::parse_spec(std::cin) : bnf::parse_spec_file(input);
  if (g.order) {
    if (*g.order < 3) throw bnf::UsageError("--order must be at least 3");
    spec.order = *g.order;
  }
  return spec;
}

bnf::DriverOptions options_from(const GlobalFlags& g) {
  bnf::DriverOptions o;
  o.seed = g.seed;
  o.max_leaves = g.max_leaves;
  if (g.literal_recursion) o.inner = bnf::InnerTerm::kFullPhi;
  return o;
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw bnf::UsageError("cannot write " + path);
  out << text;
}

void write_json(const bnf::Json& doc, const std::string& path) { write_text(doc.dump(2) + "\n", path); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Birkhoff normal forms by Lie series, tree formulas and the 1-DOF functional"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--order", g.order, "truncation order M (overrides the spec)");
  app.add_option("--method", g.method, "lie, trees or onedof")->check(CLI::IsMember({"lie", "trees", "onedof"}));
  app.add_option("--output", g.output, "write the result here instead of stdout");
  app.add_option("--max-leaves", g.max_leaves, "largest tree size the tree pipeline may enumerate")
      ->check(CLI::Range(1, 24));
  app.add_option("--seed", g.seed, "seed for randomized checks");
  app.add_flag("--literal-recursion", g.literal_recursion,
               "wrap the subtracted brackets around Phi_j instead of (I - A) Phi_j (plain tree forms)");

  std::string input;
  auto* compute = app.add_subcommand("compute", "normal form of a spec");
  compute->add_option("--input,input", input, "spec JSON file, - for stdin")->required();

  auto* check = app.add_subcommand("check", "cross-validate all pipelines on a spec");
  check->add_option("--input,input", input, "spec JSON file, - for stdin")->required();

  auto* sseries = app.add_subcommand("s-series", "coefficients of S[H] for n = 1");
  sseries->add_option("--input,input", input, "spec JSON file, - for stdin")->required();

  int max_support = bnf::StructureLimits{}.max_support;
  int max_order = bnf::StructureLimits{}.max_order;
  auto* structure = app.add_subcommand("structure", "symbolic normal form and its monomial constraints");
  structure->add_option("--input,input", input, "spec JSON file, - for stdin")->required();
  structure->add_option("--max-support", max_support, "largest support handled symbolically");
  structure->add_option("--max-order", max_order, "largest order handled symbolically");

  auto* trees = app.add_subcommand("trees", "full binary trees");
  trees->require_subcommand(1);
  int leaves = 1;
  bool codes = false;
  bool mus = false;
  auto* enumerate = trees->add_subcommand("enumerate", "list every tree with the given number of leaves");
  enumerate->add_option("--leaves", leaves, "number of leaves s")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--codes", codes, "print backslash codes");
  enumerate->add_flag("--mu", mus, "print mu_t");
  auto* musum = trees->add_subcommand("mu-sum", "sum of mu_t over trees with 1..s leaves");
  musum->add_option("--leaves", leaves, "largest s")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    auto opts = options_from(g);
    if (compute->parsed()) {
      write_json(bnf::run_compute(load(input, g), bnf::parse_method(g.method), opts), g.output);
      return 0;
    }
    if (check->parsed()) {
      auto report = bnf::run_check(load(input, g), opts);
      write_json(report, g.output);
      return report.at("pass").get<bool>() ? 0 : kExitFail;
    }
    if (sseries->parsed()) {
      write_json(bnf::run_s_series(load(input, g), opts), g.output);
      return 0;
    }
    if (structure->parsed()) {
      opts.structure.max_support = max_support;
      opts.structure.max_order = max_order;
      auto report = bnf::run_structure(load(input, g), opts);
      write_json(report, g.output);
      return report.at("pass").get<bool>() ? 0 : kExitFail;
    }
    if (enumerate->parsed()) {
      if (leaves > g.max_leaves)
        throw bnf::UsageError("--leaves " + std::to_string(leaves) + " exceeds --max-leaves " +
                              std::to_string(g.max_leaves));
      bnf::TreeCatalog catalog(g.max_leaves);
      std::string text;
      for (const auto& t : catalog.trees(leaves)) {
        text += t.str();
        if (codes) text += " " + bnf::to_code(t).str();
        if (mus) text += " " + bnf::mu(t).str();
        text += "\n";
      }
      write_text(text, g.output);
      return 0;
    }
    if (musum->parsed()) {
      if (leaves > g.max_leaves)
        throw bnf::UsageError("--leaves " + std::to_string(leaves) + " exceeds --max-leaves " +
                              std::to_string(g.max_leaves));
      std::string text;
      for (int s = 1; s <= leaves; ++s) text += std::to_string(s) + " " + bnf::mu_sum(s, g.max_leaves).str() + "\n";
      write_text(text, g.output);
      return 0;
    }
  } catch (const bnf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bnf::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
