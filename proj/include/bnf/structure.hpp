#pragma once

// Symbolic normalization and the structure check on the coefficients of the
// normal form.
//
// Every input coefficient H_{gd} becomes an indeterminate h_{gd}. For a
// resonant (alpha, beta), each monomial M = c prod h_{a(j) b(j)} of N_{alpha beta}
// must satisfy
//
//   1 <= s = deg M <= |alpha| + |beta| - 2,
//   T = w(M) - (alpha, beta) >= 0 componentwise,
//   delta T = T_beta - T_alpha = 0,
//   |T| = 2s - 2,
//
// where w(M) is the sum of the factors' exponent pairs.

#include "bnf/lie.hpp"
#include "bnf/treeforms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bnf {

struct StructureLimits {
  int max_order = 6;
  int max_support = 12;
};

/// H = H_2 + sum over the support of h_{gd} x^g y^d.
PolySeries<SymScalar> symbolic_hamiltonian(const std::vector<ExponentPair>& support, const FreqVector& lambda,
                                           int order);

struct SymbolicNormalForm {
  int n;
  int order;
  /// N - H_2 with symbolic coefficients, keyed by (alpha, beta).
  PolySeries<SymScalar> tail;
};

/// Runs the Lie normalization over symbolic coefficients. Throws UsageError
/// when a support pair has degree outside [3, order] or limits are exceeded.
SymbolicNormalForm normalize_symbolic(const std::vector<ExponentPair>& support, const FreqVector& lambda,
                                      int order, const StructureLimits& limits = {},
                                      InnerTerm inner = InnerTerm::kNonresonantPart);

struct MonomialCheck {
  std::string coefficient;
  std::string factors;
  int degree;
  ExponentPair weight;
  std::vector<int> t_vector;  // length 2n: T_alpha then T_beta
  bool degree_ok;
  bool t_nonnegative;
  bool delta_t_zero;
  bool t_norm_ok;
  [[nodiscard]] bool pass() const { return degree_ok && t_nonnegative && delta_t_zero && t_norm_ok; }
};

struct StructureEntry {
  ExponentPair pair;
  std::vector<MonomialCheck> monomials;
};

struct StructureReport {
  int n;
  int order;
  std::vector<StructureEntry> entries;
  std::size_t monomials_checked = 0;
  std::size_t violations = 0;
  std::optional<std::string> first_violation;
  [[nodiscard]] bool pass() const { return violations == 0; }
};

/// Evaluates the four constraints on every monomial of every coefficient.
StructureReport check_structure(const SymbolicNormalForm& nf);

/// Checks one monomial of the coefficient at `pair`.
MonomialCheck check_monomial(const SymMonomial& m, const GaussianRational& coeff, const ExponentPair& pair, int n);

}  // namespace bnf
