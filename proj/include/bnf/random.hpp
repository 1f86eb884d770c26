#pragma once

// Reproducible pseudo-random series for tests and invariance checks.
//
// Only raw std::mt19937_64 output is used (its sequence is fixed by the
// standard); coefficients come from a fixed table of small rationals, so a
// seed gives the same series on every platform.

#include "bnf/poly_series.hpp"

#include <array>
#include <cstdint>
#include <random>

namespace bnf {

class SeriesRng {
public:
  explicit SeriesRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  bool coin() { return (engine_() >> 17) & 1u; }

  Rational small_rational() {
    static const std::array<Rational, 12> kTable = {
        Rational(1),     Rational(-1),    Rational(2),     Rational(-2),
        Rational(1, 2),  Rational(-1, 2), Rational(3),     Rational(-1, 3),
        Rational(2, 3),  Rational(-3, 2), Rational(1, 4),  Rational(5)};
    return kTable[below(kTable.size())];
  }

  /// A random exponent pair of total degree d in 2n slots.
  ExponentPair exponents(int n, int d) {
    ExponentPair e;
    for (int k = 0; k < d; ++k) {
      int slot = static_cast<int>(below(static_cast<std::uint64_t>(2 * n)));
      if (slot < n) {
        e.set_alpha(slot, e.alpha(slot) + 1);
      } else {
        e.set_beta(slot - n, e.beta(slot - n) + 1);
      }
    }
    return e;
  }

  std::mt19937_64& engine() { return engine_; }

private:
  std::mt19937_64 engine_;
};

/// Up to max_terms random terms with degrees in [min_deg, max_deg].
template <CoefficientRing K>
PolySeries<K> random_series(SeriesRng& rng, int n, int order, int min_deg, int max_deg, int max_terms) {
  PolySeries<K> p(n, order);
  int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
  for (int k = 0; k < count; ++k) {
    int d = min_deg + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg - min_deg + 1)));
    ExponentPair e = rng.exponents(n, d);
    p.add_term(e, K(field_const<K>(rng.small_rational())));
  }
  return p;
}

}  // namespace bnf
