#pragma once

// Sparse truncated power series in x_1..x_n, y_1..y_n.
//
// A PolySeries carries its dimension n and truncation order M: every stored
// term has total degree <= M, no stored coefficient is zero, and iteration
// follows the graded order of ExponentPair. Binary operations require equal
// n and M; changing M is explicit (retruncated / extended).

#include "bnf/exponents.hpp"
#include "bnf/ring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bnf {

/// Raised for dimension/order mismatches and other caller errors.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

template <CoefficientRing K>
class PolySeries {
public:
  using Terms = std::map<ExponentPair, K>;

  PolySeries(int n, int order) : n_(n), order_(order) {
    if (n < 1 || n > kMaxDim) throw UsageError("dimension must be in [1, " + std::to_string(kMaxDim) + "]");
    if (order < 0 || order > kMaxExponent) throw UsageError("truncation order out of range");
  }

  static PolySeries monomial(int n, int order, const ExponentPair& e, const K& c) {
    PolySeries p(n, order);
    p.add_term(e, c);
    return p;
  }

  /// H_2 = sum_j lambda_j x_j y_j.
  static PolySeries quadratic(int order, const std::vector<GaussianRational>& lambda) {
    PolySeries p(static_cast<int>(lambda.size()), order);
    for (int j = 0; j < p.n_; ++j) {
      ExponentPair e;
      e.set_alpha(j, 1);
      e.set_beta(j, 1);
      p.add_term(e, K(RingTraits<K>::field_from(lambda[static_cast<std::size_t>(j)])));
    }
    return p;
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] K coefficient(const ExponentPair& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K() : it->second;
  }

  /// Adds c x^alpha y^beta; terms above the truncation order are dropped.
  void add_term(const ExponentPair& e, const K& c) {
    if (c.is_zero() || e.degree() > order_) return;
    if (e.used_dim() > n_) throw UsageError("exponent pair has more variables than n");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  [[nodiscard]] int min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
  [[nodiscard]] int max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

  [[nodiscard]] bool is_homogeneous() const { return terms_.empty() || min_degree() == max_degree(); }

  /// Degree-s component, same n and M.
  [[nodiscard]] PolySeries homogeneous_part(int s) const {
    PolySeries r(n_, order_);
    for (const auto& [e, c] : terms_)
      if (e.degree() == s) r.terms_.emplace_hint(r.terms_.end(), e, c);
    return r;
  }

  /// Terms with lo <= degree <= hi.
  [[nodiscard]] PolySeries degree_range(int lo, int hi) const {
    PolySeries r(n_, order_);
    for (const auto& [e, c] : terms_) {
      int d = e.degree();
      if (d >= lo && d <= hi) r.terms_.emplace_hint(r.terms_.end(), e, c);
    }
    return r;
  }

  /// Same terms under a different truncation order (drops terms above it).
  [[nodiscard]] PolySeries with_order(int order) const {
    PolySeries r(n_, order);
    for (const auto& [e, c] : terms_)
      if (e.degree() <= order) r.terms_.emplace_hint(r.terms_.end(), e, c);
    return r;
  }

  /// Applies f(e, c) -> K termwise; zero results are dropped.
  template <class F>
  [[nodiscard]] PolySeries map_terms(F&& f) const {
    PolySeries r(n_, order_);
    for (const auto& [e, c] : terms_) {
      K v = f(e, c);
      if (!v.is_zero()) r.terms_.emplace_hint(r.terms_.end(), e, std::move(v));
    }
    return r;
  }

  [[nodiscard]] PolySeries scaled(const FieldOf<K>& q) const {
    return map_terms([&](const ExponentPair&, const K& c) { return c * q; });
  }
  [[nodiscard]] PolySeries divided(const FieldOf<K>& q) const {
    return map_terms([&](const ExponentPair&, const K& c) { return c / q; });
  }

  PolySeries& operator+=(const PolySeries& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  PolySeries& operator-=(const PolySeries& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend PolySeries operator+(PolySeries a, const PolySeries& b) { return a += b; }
  friend PolySeries operator-(PolySeries a, const PolySeries& b) { return a -= b; }
  friend PolySeries operator-(const PolySeries& a) {
    return a.map_terms([](const ExponentPair&, const K& c) { return -c; });
  }

  friend PolySeries operator*(const PolySeries& a, const PolySeries& b) {
    a.check_compatible(b);
    PolySeries r(a.n_, a.order_);
    for (const auto& [ea, ca] : a.terms_) {
      int da = ea.degree();
      for (const auto& [eb, cb] : b.terms_) {
        if (da + eb.degree() > a.order_) break;  // b iterates by increasing degree
        r.add_term(ea + eb, ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const PolySeries& a, const PolySeries& b) = default;

  void check_compatible(const PolySeries& o) const {
    if (n_ != o.n_) throw UsageError("dimension mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
    if (order_ != o.order_)
      throw UsageError("truncation order mismatch: " + std::to_string(order_) + " vs " + std::to_string(o.order_));
  }

  /// Canonical text, e.g. "x1 y1 - 3 x1^2 y1^2"; "0" when empty.
  [[nodiscard]] std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      std::string coeff = RingTraits<K>::to_string(c, n_);
      bool negative = !coeff.empty() && coeff.front() == '-' &&
                      coeff.find_first_of(" +", 1) == std::string::npos;
      if (negative) coeff.erase(0, 1);
      bool compound = coeff.find_first_of(" +-") != std::string::npos;
      if (compound) coeff = "(" + coeff + ")";
      if (s.empty()) {
        if (negative) s += "-";
      } else {
        s += negative ? " - " : " + ";
      }
      bool unit_monomial = e.degree() == 0;
      if (unit_monomial) {
        s += coeff;
      } else {
        if (coeff != "1") s += coeff + " ";
        s += e.monomial_str(n_);
      }
    }
    return s;
  }

private:
  int n_;
  int order_;
  Terms terms_;
};

/// A homogeneous degree-s slice of a series.
template <CoefficientRing K>
struct GradeView {
  PolySeries<K> series;
  int degree;
};

template <CoefficientRing K>
GradeView<K> grade(const PolySeries<K>& f, int s) {
  if (s < 0 || s > f.order()) throw UsageError("grade outside [0, M]");
  return {f.homogeneous_part(s), s};
}

/// Poisson bracket {F, G} = sum_j (dF/dy_j dG/dx_j - dF/dx_j dG/dy_j),
/// truncated at the common order M.
template <CoefficientRing K>
PolySeries<K> poisson(const PolySeries<K>& f, const PolySeries<K>& g) {
  f.check_compatible(g);
  const int n = f.n();
  const int order = f.order();
  PolySeries<K> r(n, order);
  for (const auto& [ea, ca] : f.terms()) {
    int da = ea.degree();
    for (const auto& [eb, cb] : g.terms()) {
      if (da + eb.degree() - 2 > order) break;
      ExponentPair sum;
      bool have_sum = false;
      for (int j = 0; j < n; ++j) {
        // coefficient of x^{a+c-e_j} y^{b+d-e_j}: beta_a * alpha_b - alpha_a * beta_b
        long w = static_cast<long>(ea.beta(j)) * eb.alpha(j) - static_cast<long>(ea.alpha(j)) * eb.beta(j);
        if (w == 0) continue;
        if (!have_sum) {
          sum = ea + eb;
          have_sum = true;
        }
        ExponentPair e = sum;
        e.set_alpha(j, e.alpha(j) - 1);
        e.set_beta(j, e.beta(j) - 1);
        r.add_term(e, (ca * cb) * field_const<K>(Rational(w)));
      }
    }
  }
  return r;
}

}  // namespace bnf
