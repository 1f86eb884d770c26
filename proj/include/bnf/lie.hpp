#pragma once

// Classical normalization by a Lie-series generator.
//
// With F = F_3 + F_4 + ... and exp({F, .}) H = H_2 + N_*, the homogeneous
// pieces obey N_m = A Phi_m, F_m = B Phi_m, where Phi_3 = H_3 and for m >= 4
//
//   Phi_m =  sum_{k>=0}  1/k!     sum {B Phi_j1, {... {B Phi_jk, H_j}}}
//          - sum_{k>=1}  1/(k+1)! sum {B Phi_j1, {... {B Phi_jk, (I - A) Phi_j}}}
//
// the inner sums running over j_1 + ... + j_{k+1} = m + 2k with every j >= 3.
// The inner (I - A) Phi_j is -{F_j, H_2}. Writing Phi_j there instead drops
// the resonant part N_j; that variant (InnerTerm::kFullPhi) agrees with the
// plain tree forms but not with exp({F, .}) H once some N_j != 0 feeds a
// higher degree.

#include "bnf/random.hpp"
#include "bnf/split_ops.hpp"

#include <cstdint>
#include <vector>

namespace bnf {

template <CoefficientRing K>
struct NormalizationResult {
  PolySeries<K> normal_form;    // H_2 + sum_m N_m
  PolySeries<K> generator;      // sum_m F_m
  std::vector<PolySeries<K>> phi;  // phi[m] = Phi_m, m = 0..M (zero below 3)
  int order;
};

/// Checks that H has no terms below degree 2 and that its quadratic part is
/// sum lambda_j x_j y_j; returns H truncated at `order`.
template <CoefficientRing K>
PolySeries<K> prepare_hamiltonian(const PolySeries<K>& h, const FreqVector& lambda, int order) {
  if (h.n() != lambda.n()) throw UsageError("Hamiltonian dimension does not match lambda");
  if (order < 3) throw UsageError("truncation order must be at least 3");
  if (h.order() < order)
    throw UsageError("Hamiltonian is truncated at " + std::to_string(h.order()) + " < requested order " +
                     std::to_string(order));
  if (!h.is_zero() && h.min_degree() < 2) throw UsageError("Hamiltonian has terms of degree < 2");
  PolySeries<K> hh = h.with_order(order);
  if (hh.homogeneous_part(2) != PolySeries<K>::quadratic(order, lambda.values()))
    throw UsageError("quadratic part is not sum lambda_j x_j y_j");
  return hh;
}

/// What the subtracted nested brackets wrap around.
enum class InnerTerm {
  kNonresonantPart,  // (I - A) Phi_j = -{F_j, H_2}; gives exp({F, .}) H = H_2 + N_*
  kFullPhi,          // Phi_j
};

/// Phi_3..Phi_M of the normalization recursion, indexed by degree.
template <CoefficientRing K>
std::vector<PolySeries<K>> phi_recursion(const PolySeries<K>& hamiltonian, const FreqVector& lambda, int order,
                                         InnerTerm inner = InnerTerm::kNonresonantPart) {
  const PolySeries<K> h = prepare_hamiltonian(hamiltonian, lambda, order);
  const int n = h.n();
  const PolySeries<K> zero(n, order);
  const auto M = static_cast<std::size_t>(order);

  std::vector<PolySeries<K>> hgrade(M + 1, zero);
  for (int d = 3; d <= order; ++d) hgrade[static_cast<std::size_t>(d)] = h.homogeneous_part(d);

  std::vector<PolySeries<K>> phi(M + 1, zero);
  std::vector<PolySeries<K>> gen(M + 1, zero);  // F_j = B Phi_j
  // nested_h[k][d]: sum over compositions of k generators wrapped around H,
  // landing in degree d. nested_phi likewise around the inner term.
  std::vector<std::vector<PolySeries<K>>> nested_h(M + 1, std::vector<PolySeries<K>>(M + 1, zero));
  std::vector<std::vector<PolySeries<K>>> nested_phi(M + 1, std::vector<PolySeries<K>>(M + 1, zero));

  auto wrap = [&](const std::vector<PolySeries<K>>& inner, int d) {
    PolySeries<K> acc = zero;
    for (int j = 3; j <= d - 1; ++j) {
      int dd = d - j + 2;
      const auto& f = gen[static_cast<std::size_t>(j)];
      const auto& g = inner[static_cast<std::size_t>(dd)];
      if (f.is_zero() || g.is_zero()) continue;
      acc += poisson(f, g);
    }
    return acc;
  };

  for (int m = 3; m <= order; ++m) {
    const auto um = static_cast<std::size_t>(m);
    nested_h[0][um] = hgrade[um];
    PolySeries<K> value = hgrade[um];
    Rational fact(1);
    for (int k = 1; k <= m - 3; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      nested_h[uk][um] = wrap(nested_h[uk - 1], m);
      nested_phi[uk][um] = wrap(nested_phi[uk - 1], m);
      fact *= Rational(k);
      value += nested_h[uk][um].divided(field_const<K>(fact));
      value -= nested_phi[uk][um].divided(field_const<K>(fact * Rational(k + 1)));
    }
    phi[um] = value;
    nested_phi[0][um] = inner == InnerTerm::kFullPhi ? value : value - op_A(value, lambda);
    gen[um] = op_B(value, lambda);
  }
  return phi;
}

template <CoefficientRing K>
NormalizationResult<K> lie_normalize(const PolySeries<K>& hamiltonian, const FreqVector& lambda, int order,
                                     InnerTerm inner = InnerTerm::kNonresonantPart) {
  auto phi = phi_recursion(hamiltonian, lambda, order, inner);
  const int n = lambda.n();
  PolySeries<K> normal = PolySeries<K>::quadratic(order, lambda.values());
  PolySeries<K> generator(n, order);
  for (int m = 3; m <= order; ++m) {
    const auto& p = phi[static_cast<std::size_t>(m)];
    normal += op_A(p, lambda);
    generator += op_B(p, lambda);
  }
  return {std::move(normal), std::move(generator), std::move(phi), order};
}

/// exp({F, .}) H = H + {F,H} + {F,{F,H}}/2! + ..., truncated at `order`.
/// F must have no terms of degree < 3.
template <CoefficientRing K>
PolySeries<K> exp_lie(const PolySeries<K>& f, const PolySeries<K>& h, int order) {
  if (!f.is_zero() && f.min_degree() < 3) throw UsageError("Lie generator has terms of degree < 3");
  if (f.order() < order || h.order() < order) throw UsageError("operands truncated below requested order");
  const PolySeries<K> ff = f.with_order(order);
  PolySeries<K> term = h.with_order(order);
  PolySeries<K> result = term;
  for (int k = 1; !term.is_zero() && !ff.is_zero(); ++k) {
    term = poisson(ff, term).divided(field_const<K>(Rational(k)));
    result += term;
  }
  return result;
}

/// H composed with the time-one map of a seeded random generator whose
/// terms have degrees 3..M. max_terms = 0 gives the identity map.
template <CoefficientRing K>
PolySeries<K> random_symplectic_conjugate(const PolySeries<K>& h, std::uint64_t seed, int max_terms = 6) {
  SeriesRng rng(seed);
  PolySeries<K> gen(h.n(), h.order());
  if (h.order() >= 3 && max_terms > 0) gen = random_series<K>(rng, h.n(), h.order(), 3, h.order(), max_terms);
  return exp_lie(gen, h, h.order());
}

}  // namespace bnf
