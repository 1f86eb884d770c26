#include "bnf/structure.hpp"

#include <cstdlib>

namespace bnf {

PolySeries<SymScalar> symbolic_hamiltonian(const std::vector<ExponentPair>& support, const FreqVector& lambda,
                                           int order) {
  auto h = PolySeries<SymScalar>::quadratic(order, lambda.values());
  for (const auto& e : support) {
    if (e.degree() < 3 || e.degree() > order)
      throw UsageError("support pair " + e.monomial_str(lambda.n()) + " has degree outside [3, " +
                       std::to_string(order) + "]");
    if (e.used_dim() > lambda.n()) throw UsageError("support pair has more variables than n");
    if (!h.coefficient(e).is_zero()) continue;
    h.add_term(e, SymScalar::indeterminate(e));
  }
  return h;
}

SymbolicNormalForm normalize_symbolic(const std::vector<ExponentPair>& support, const FreqVector& lambda, int order,
                                      const StructureLimits& limits, InnerTerm inner) {
  if (order > limits.max_order)
    throw UsageError("symbolic order " + std::to_string(order) + " exceeds the limit " +
                     std::to_string(limits.max_order));
  if (static_cast<int>(support.size()) > limits.max_support)
    throw UsageError("support size " + std::to_string(support.size()) + " exceeds the limit " +
                     std::to_string(limits.max_support));
  auto h = symbolic_hamiltonian(support, lambda, order);
  auto result = lie_normalize(h, lambda, order, inner);
  auto tail = result.normal_form - PolySeries<SymScalar>::quadratic(order, lambda.values());
  return {lambda.n(), order, std::move(tail)};
}

MonomialCheck check_monomial(const SymMonomial& m, const GaussianRational& coeff, const ExponentPair& pair, int n) {
  MonomialCheck c;
  c.coefficient = coeff.str();
  c.factors = m.str(n);
  c.degree = m.degree();
  c.weight = m.weight();
  c.t_vector.resize(static_cast<std::size_t>(2 * n));
  int norm = 0;
  c.t_nonnegative = true;
  c.delta_t_zero = true;
  for (int j = 0; j < n; ++j) {
    int ta = c.weight.alpha(j) - pair.alpha(j);
    int tb = c.weight.beta(j) - pair.beta(j);
    c.t_vector[static_cast<std::size_t>(j)] = ta;
    c.t_vector[static_cast<std::size_t>(n + j)] = tb;
    if (ta < 0 || tb < 0) c.t_nonnegative = false;
    if (ta != tb) c.delta_t_zero = false;
    norm += ta + tb;
  }
  c.degree_ok = c.degree >= 1 && c.degree <= pair.degree() - 2;
  c.t_norm_ok = norm == 2 * c.degree - 2;
  return c;
}

StructureReport check_structure(const SymbolicNormalForm& nf) {
  StructureReport report{nf.n, nf.order, {}, 0, 0, std::nullopt};
  for (const auto& [pair, coeff] : nf.tail.terms()) {
    StructureEntry entry{pair, {}};
    for (const auto& [mono, c] : coeff.terms()) {
      auto check = check_monomial(mono, c, pair, nf.n);
      ++report.monomials_checked;
      if (!check.pass()) {
        ++report.violations;
        if (!report.first_violation) {
          std::string what = !check.degree_ok       ? "degree bound"
                             : !check.t_nonnegative ? "T >= 0"
                             : !check.delta_t_zero  ? "delta T = 0"
                                                    : "|T| = 2s - 2";
          report.first_violation = "N at " + pair.monomial_str(nf.n) + ": monomial " + check.coefficient + " * " +
                                   check.factors + " violates " + what;
        }
      }
      entry.monomials.push_back(std::move(check));
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace bnf
