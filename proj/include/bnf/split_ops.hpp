#pragma once

// The homological operator D F = {H_2, F}, the averaging projection A onto
// Ker D, and the partial inverse B of D, all diagonal on monomials with
// eigenvalue <alpha - beta, lambda>. Resonance is an exact zero test.

#include "bnf/poly_series.hpp"

#include <vector>

namespace bnf {

/// Frequencies lambda_1..lambda_n of H_2 = sum lambda_j x_j y_j; all nonzero.
class FreqVector {
public:
  explicit FreqVector(std::vector<GaussianRational> lambda) : lambda_(std::move(lambda)) {
    if (lambda_.empty() || lambda_.size() > static_cast<std::size_t>(kMaxDim))
      throw UsageError("frequency vector length out of range");
    for (std::size_t j = 0; j < lambda_.size(); ++j)
      if (lambda_[j].is_zero()) throw UsageError("lambda_" + std::to_string(j + 1) + " is zero");
  }

  [[nodiscard]] int n() const { return static_cast<int>(lambda_.size()); }
  [[nodiscard]] const std::vector<GaussianRational>& values() const { return lambda_; }
  [[nodiscard]] const GaussianRational& operator[](int j) const { return lambda_[static_cast<std::size_t>(j)]; }

  /// <alpha - beta, lambda>, the eigenvalue of D on x^alpha y^beta.
  [[nodiscard]] GaussianRational eigenvalue(const ExponentPair& e) const {
    GaussianRational v;
    for (int j = 0; j < n(); ++j) {
      int k = e.alpha(j) - e.beta(j);
      if (k != 0) v += lambda_[static_cast<std::size_t>(j)] * GaussianRational(Rational(k));
    }
    return v;
  }
  [[nodiscard]] bool is_resonant(const ExponentPair& e) const { return eigenvalue(e).is_zero(); }

  friend bool operator==(const FreqVector&, const FreqVector&) = default;

private:
  std::vector<GaussianRational> lambda_;
};

/// A monomial together with <lambda, beta - alpha>.
struct ResonanceClass {
  ExponentPair pair;
  GaussianRational value;  // <lambda, beta - alpha>
  [[nodiscard]] bool resonant() const { return value.is_zero(); }
};

/// Every (alpha, beta) with alpha != beta, 3 <= |alpha|+|beta| <= order, that
/// is resonant. These are the terms a normal form may keep besides the
/// diagonal ones.
std::vector<ResonanceClass> nontrivial_resonances(const FreqVector& lambda, int order);

namespace detail {
inline void check_dim(int n, const FreqVector& lambda) {
  if (n != lambda.n()) throw UsageError("series dimension does not match lambda");
}
}  // namespace detail

template <CoefficientRing K>
PolySeries<K> op_D(const PolySeries<K>& f, const FreqVector& lambda) {
  detail::check_dim(f.n(), lambda);
  return f.map_terms([&](const ExponentPair& e, const K& c) {
    auto ev = lambda.eigenvalue(e);
    return ev.is_zero() ? K() : c * RingTraits<K>::field_from(ev);
  });
}

template <CoefficientRing K>
PolySeries<K> op_A(const PolySeries<K>& f, const FreqVector& lambda) {
  detail::check_dim(f.n(), lambda);
  return f.map_terms([&](const ExponentPair& e, const K& c) { return lambda.is_resonant(e) ? c : K(); });
}

template <CoefficientRing K>
PolySeries<K> op_B(const PolySeries<K>& f, const FreqVector& lambda) {
  detail::check_dim(f.n(), lambda);
  return f.map_terms([&](const ExponentPair& e, const K& c) {
    auto ev = lambda.eigenvalue(e);
    return ev.is_zero() ? K() : c / RingTraits<K>::field_from(ev);
  });
}

}  // namespace bnf
