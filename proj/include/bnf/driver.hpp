#pragma once

// Entry points behind the command-line tool. Every function returns a JSON
// document with sorted keys, so identical inputs give byte-identical output.

#include "bnf/onedof.hpp"
#include "bnf/spec_io.hpp"
#include "bnf/structure.hpp"

#include <cstdint>
#include <string_view>

namespace bnf {

enum class Method { kLie, kTrees, kOnedof };

/// "lie", "trees" or "onedof"; throws UsageError otherwise.
Method parse_method(std::string_view name);
std::string_view method_name(Method m);

inline constexpr std::uint64_t kDefaultSeed = 20240607;

struct DriverOptions {
  std::uint64_t seed = kDefaultSeed;
  int max_leaves = kDefaultMaxLeaves;
  StructureLimits structure{};
  /// Random instances per operator identity inside run_check.
  int identity_samples = 20;
  SConvention convention = SConvention::kOracleValidated;
  /// kFullPhi reproduces the literal recursion and plain tree forms.
  InnerTerm inner = InnerTerm::kNonresonantPart;
  /// Largest pair count the resonance scan will enumerate.
  std::uint64_t resonance_scan_limit = 2'000'000;
};

/// {"method", "normal_form", "order", "resonant_pairs", "warnings"} plus
/// "generator" (lie), "breakdown" (trees) or "S" (onedof).
Json run_compute(const ProblemSpec& spec, Method method, const DriverOptions& options = {});

/// {"checks": [{"name", "pass", "detail"}], "normal_form", "agreement", "pass"}.
Json run_check(const ProblemSpec& spec, const DriverOptions& options = {});

/// {"S": [["2", c2], ...], "linearizable_up_to": L}; n must be 1.
Json run_s_series(const ProblemSpec& spec, const DriverOptions& options = {});

/// The structure report of the spec's support at the spec's lambda and order.
Json run_structure(const ProblemSpec& spec, const DriverOptions& options = {});

Json structure_report_to_json(const StructureReport& report);

/// Highest degree through which a 1-DOF normal form with this S is linear:
/// 2j - 1 for the first nonzero S_j, the order when S vanishes.
int linearizable_up_to(const UniSeries<GaussianRational>& s, int order);

}  // namespace bnf
