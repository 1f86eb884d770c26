#pragma once

// Polynomials in the indeterminates h_{gamma delta}, one per coefficient
// H_{gamma delta} of an input Hamiltonian. Used to run the normalization
// with symbolic coefficients.

#include "bnf/exponents.hpp"
#include "bnf/gaussian.hpp"

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bnf {

/// A product of indeterminates, stored as (pair, multiplicity) sorted by pair.
class SymMonomial {
public:
  SymMonomial() = default;
  explicit SymMonomial(const ExponentPair& var) : factors_{{var, 1}} {}

  [[nodiscard]] const std::vector<std::pair<ExponentPair, int>>& factors() const { return factors_; }
  /// Number of indeterminate factors counted with multiplicity.
  [[nodiscard]] int degree() const;
  /// Sum of the factors' exponent pairs, with multiplicity.
  [[nodiscard]] ExponentPair weight() const;
  [[nodiscard]] std::string str(int n) const;

  friend SymMonomial operator*(const SymMonomial& a, const SymMonomial& b);
  friend std::strong_ordering operator<=>(const SymMonomial& a, const SymMonomial& b);
  friend bool operator==(const SymMonomial& a, const SymMonomial& b) = default;

private:
  std::vector<std::pair<ExponentPair, int>> factors_;
};

/// Name of the indeterminate attached to a coefficient, e.g. "h_{30}".
std::string indeterminate_name(const ExponentPair& var, int n);

class SymScalar {
public:
  using Terms = std::map<SymMonomial, GaussianRational>;

  SymScalar() = default;
  SymScalar(const GaussianRational& c);  // NOLINT(google-explicit-constructor)
  SymScalar(const Rational& c) : SymScalar(GaussianRational(c)) {}  // NOLINT
  SymScalar(long c) : SymScalar(GaussianRational(c)) {}             // NOLINT

  static SymScalar indeterminate(const ExponentPair& var);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const Terms& terms() const { return terms_; }

  /// Substitutes a value for every indeterminate.
  [[nodiscard]] GaussianRational evaluate(
      const std::function<GaussianRational(const ExponentPair&)>& value) const;

  [[nodiscard]] std::string str(int n) const;

  SymScalar& operator+=(const SymScalar& o);
  SymScalar& operator-=(const SymScalar& o);
  SymScalar& operator*=(const GaussianRational& q);
  SymScalar& operator/=(const GaussianRational& q);

  friend SymScalar operator+(SymScalar a, const SymScalar& b) { return a += b; }
  friend SymScalar operator-(SymScalar a, const SymScalar& b) { return a -= b; }
  friend SymScalar operator*(const SymScalar& a, const SymScalar& b);
  friend SymScalar operator*(SymScalar a, const GaussianRational& q) { return a *= q; }
  friend SymScalar operator/(SymScalar a, const GaussianRational& q) { return a /= q; }
  friend SymScalar operator-(SymScalar a);
  friend bool operator==(const SymScalar& a, const SymScalar& b) = default;

private:
  void accumulate(const SymMonomial& m, const GaussianRational& c);

  Terms terms_;
};

}  // namespace bnf
