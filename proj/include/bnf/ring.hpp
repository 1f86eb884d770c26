#pragma once

// The coefficient-ring contract every series algorithm is generic over.
//
// A ring K comes with a scalar field Field (Rational or GaussianRational)
// through which it is a vector space: K * Field and K / Field are exact, and
// division is only ever requested by a nonzero field element.

#include "bnf/gaussian.hpp"
#include "bnf/rational.hpp"
#include "bnf/sym_scalar.hpp"

#include <concepts>
#include <stdexcept>
#include <string>

namespace bnf {

template <class K>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  using Field = Rational;
  static Field field_from(const GaussianRational& g) {
    if (!g.is_real())
      throw std::invalid_argument("complex value " + g.str() + " in a rational coefficient ring");
    return g.re();
  }
  static std::string to_string(const Rational& v, int /*n*/) { return v.str(); }
};

template <>
struct RingTraits<GaussianRational> {
  using Field = GaussianRational;
  static Field field_from(const GaussianRational& g) { return g; }
  static std::string to_string(const GaussianRational& v, int /*n*/) { return v.str(); }
};

template <>
struct RingTraits<SymScalar> {
  using Field = GaussianRational;
  static Field field_from(const GaussianRational& g) { return g; }
  static std::string to_string(const SymScalar& v, int n) { return v.str(n); }
};

template <class K>
using FieldOf = typename RingTraits<K>::Field;

template <class K>
concept CoefficientRing =
    std::regular<K> && requires(const K a, const K b, const FieldOf<K> q) {
      { a + b } -> std::same_as<K>;
      { a - b } -> std::same_as<K>;
      { a * b } -> std::same_as<K>;
      { -a } -> std::same_as<K>;
      { a * q } -> std::same_as<K>;
      { a / q } -> std::same_as<K>;
      { a.is_zero() } -> std::same_as<bool>;
      K(q);
      { RingTraits<K>::field_from(GaussianRational()) } -> std::same_as<FieldOf<K>>;
    };

/// A rational constant as an element of K's scalar field.
template <class K>
FieldOf<K> field_const(const Rational& r) {
  return FieldOf<K>(r);
}

}  // namespace bnf
